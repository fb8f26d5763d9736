#include "hexprob/engine.hpp"

#include <stdexcept>

#include "hexprob/errors.hpp"

namespace hexprob {

Int total_tilings(const HexagonSpec& hex)
{
    // prod (i+j+k-1)/(i+j+k-2) over the box, collected as one exact fraction.
    Rat product = 1;
    for (int i = 1; i <= hex.a; ++i)
        for (int j = 1; j <= hex.b; ++j)
            for (int k = 1; k <= hex.c; ++k)
                product *= make_rational(i + j + k - 1, i + j + k - 2);
    if (product.get_den() != 1)
        throw std::logic_error("total_tilings: box product did not reduce to an integer");
    return product.get_num();
}

namespace {

void require_domain(const HexagonSpec& hex, const RhombusPos& pos)
{
    if (!in_theorem_domain(hex, pos))
        throw DomainError("rhombus position (" + std::to_string(pos.x) + "," + std::to_string(pos.y)
                          + ") outside the formula's domain for this hexagon");
}

Rat checked_probability(Rat p)
{
    // A value outside [0, 1] would signal a coordinate-convention bug in the
    // formula transcription, not a rounding issue (there is none).
    if (p < 0 || p > 1)
        throw std::logic_error("contains_prob: probability outside [0, 1]");
    return p;
}

Rat triple_sum_prefactor(const HexagonSpec& hex)
{
    // c! / (b+1)_c  ==  b! c! / (b+c)!
    return make_rational(factorial(hex.c), pochhammer_int(hex.b + 1, hex.c));
}

} // namespace

Rat contains_prob_serial(const HexagonSpec& hex, const RhombusPos& pos)
{
    require_domain(hex, pos);
    const long a = hex.a, b = hex.b, c = hex.c, x = pos.x, y = pos.y;

    Rat sum = 0;
    for (long i = 1; i <= a; ++i) {
        for (long j = 1; j <= a; ++j) {
            // 1/(j-i)! vanishes for j < i, killing the whole term.
            if (j < i)
                continue;
            for (long s = 1; s <= j; ++s) {
                Int numerator = binomial(Int(j - 1), s - 1);
                numerator *= binomial(Int(c + i + x - y - 2), x - 1);
                numerator *= binomial(Int(b + s - x + y - 1), b + s - x - 1);
                numerator *= pochhammer_int(Int(b + 1), s - 1);
                numerator *= pochhammer_int(Int(c + 1), i - 1);
                numerator *= pochhammer_int(Int(b + c + i), j - i);
                if ((i + s) % 2 != 0)
                    numerator = -numerator;
                Int denominator = factorial(j - i) * factorial(i - 1);
                denominator *= pochhammer_int(Int(b + c + 1), s - 1);
                sum += make_rational(numerator, denominator);
            }
        }
    }
    return checked_probability(triple_sum_prefactor(hex) * sum);
}

Rat contains_prob(const HexagonSpec& hex, const RhombusPos& pos)
{
    require_domain(hex, pos);
    const long a = hex.a, b = hex.b, c = hex.c, x = pos.x, y = pos.y;

    // Shared factor tables, indexed by the loop variables.
    std::vector<Int> fact(a + 1), poch_b1(a + 1), poch_c1(a + 1), poch_bc1(a + 1);
    fact[0] = poch_b1[0] = poch_c1[0] = poch_bc1[0] = 1;
    for (long k = 1; k <= a; ++k) {
        fact[k] = fact[k - 1] * k;
        poch_b1[k] = poch_b1[k - 1] * (b + k);
        poch_c1[k] = poch_c1[k - 1] * (c + k);
        poch_bc1[k] = poch_bc1[k - 1] * (b + c + k);
    }
    std::vector<Int> binom_x(a + 1), binom_y(a + 1);
    for (long i = 1; i <= a; ++i)
        binom_x[i] = binomial(Int(c + i + x - y - 2), x - 1);
    for (long s = 1; s <= a; ++s)
        binom_y[s] = binomial(Int(b + s - x + y - 1), b + s - x - 1);

    // The (i, j) blocks are independent; per-block partial sums are exact, so
    // any thread assignment reproduces the serial value bit for bit.
    std::vector<Rat> partial(a + 1);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 1; i <= a; ++i) {
        Rat block = 0;
        Int poch_bci = 1; // (b+c+i)_{j-i}, extended incrementally over j
        for (long j = i; j <= a; ++j) {
            const Int row_factor = poch_c1[i - 1] * poch_bci;
            for (long s = 1; s <= j; ++s) {
                Int numerator = binomial(Int(j - 1), s - 1) * binom_x[i] * binom_y[s];
                if (numerator == 0)
                    continue;
                numerator *= poch_b1[s - 1] * row_factor;
                if ((i + s) % 2 != 0)
                    numerator = -numerator;
                block += make_rational(numerator, fact[j - i] * fact[i - 1] * poch_bc1[s - 1]);
            }
            poch_bci *= b + c + j; // (b+c+i)_{j+1-i} = (b+c+i)_{j-i} * (b+c+j)
        }
        partial[i] = std::move(block);
    }

    Rat sum = 0;
    for (long i = 1; i <= a; ++i)
        sum += partial[i];
    return checked_probability(triple_sum_prefactor(hex) * sum);
}

Rat r_factor(long n)
{
    if (n < 1)
        throw std::invalid_argument("r_factor: n must be >= 1");
    const Int central = binomial(Int(2 * n), n);
    return make_rational(central * central * central, binomial(Int(6 * n + 2), 3 * n + 1));
}

Rat g_value(const FamilyOffsets& fam, long n)
{
    const FamilyInstance inst = instantiate(fam, n);
    const Rat p = contains_prob(inst.hex, inst.pos);
    return (p - make_rational(1, 3)) / r_factor(n);
}

Rat conjecture_prob(const RationalFunction& f, long n)
{
    return make_rational(1, 3) + f.eval(Rat(n)) * r_factor(n);
}

Rat single_sum_prob(long n)
{
    if (n < 1)
        throw std::invalid_argument("single_sum_prob: n must be >= 1");

    // 2n (2n+1)! / (2n+1)_{4n} * C(2n,n) C(3n,n) 2^(2n-2), shared by all terms.
    Rat prefactor = make_rational(Int(2 * n) * factorial(2 * n + 1), pochhammer_int(Int(2 * n + 1), 4 * n));
    prefactor *= binomial(Int(2 * n), n) * binomial(Int(3 * n), n);
    Int power = 1;
    power <<= static_cast<unsigned>(2 * n - 2);
    prefactor *= power;

    Rat sum = 0;
    for (long k = 0; k <= n - 1; ++k) {
        Rat term = pochhammer(make_rational(2 * n + 3, 2), k);
        term *= pochhammer_int(Int(2 * n + 1), k);
        term *= pochhammer_int(Int(n + k + 2), n - k - 1);
        term *= pochhammer_int(Int(2 * n + k + 2), n - k - 1);
        term *= pochhammer(make_rational(1, 2), n - k - 1);
        term /= factorial(n - k - 1);
        sum += term;
    }
    return prefactor * sum;
}

Rat single_sum_step(long n)
{
    if (n < 1)
        throw std::invalid_argument("single_sum_step: n must be >= 1");
    const Int f3 = factorial(3 * n - 1);
    const Int f2 = factorial(2 * n);
    const Int fn1 = factorial(n - 1);
    const Int fn = factorial(n);
    Int numerator = Int(36 * n * n * n + 60 * n * n + 29 * n + 3) * f3 * f3 * f2 * f2 * f2;
    Int denominator = Int(2) * n * n * (n + 1) * (n + 1) * (6 * n + 1) * (6 * n + 5);
    denominator *= fn1 * fn1 * fn1 * factorial(6 * n - 1) * fn * fn * fn;
    return make_rational(numerator, denominator);
}

RationalFunction single_sum_family_f()
{
    // -2(6n+1) / (3(3n+1))
    return RationalFunction(Polynomial({-2, -12}), Polynomial({3, 9}));
}

bool RecurrenceReport::all_ok() const
{
    if (!base_ok)
        return false;
    for (const RecurrenceCheck& check : checks)
        if (!check.sum_step_ok || !check.conjecture_step_ok)
            return false;
    return true;
}

RecurrenceReport check_recurrence(long n_max)
{
    RecurrenceReport report;
    if (n_max < 2)
        return report;

    const RationalFunction f = single_sum_family_f();
    const Rat base = make_rational(1, 5);
    report.base_ok = single_sum_prob(1) == base && conjecture_prob(f, 1) == base;

    Rat sum_prev = single_sum_prob(1);
    Rat conj_prev = conjecture_prob(f, 1);
    for (long n = 1; n + 1 <= n_max; ++n) {
        const Rat step = single_sum_step(n);
        const Rat sum_next = single_sum_prob(n + 1);
        const Rat conj_next = conjecture_prob(f, n + 1);
        report.checks.push_back(RecurrenceCheck{
            n,
            sum_next - sum_prev == step,
            conj_next - conj_prev == step,
        });
        sum_prev = sum_next;
        conj_prev = conj_next;
    }
    return report;
}

} // namespace hexprob
