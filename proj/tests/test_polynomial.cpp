#include <doctest.h>

#include <hexprob/errors.hpp>
#include <hexprob/polynomial.hpp>

#include <random>
#include <stdexcept>

using namespace hexprob;

namespace {

Polynomial lin(long c0, long c1) { return Polynomial({Rat(c0), Rat(c1)}); }

}  // namespace

TEST_CASE("zero polynomial canonical form") {
    const Polynomial z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeffs().empty());
    CHECK(z.eval(Rat(17)) == 0);
    CHECK(z.to_string() == "0");
    CHECK(Polynomial({Rat(0), Rat(0), Rat(0)}) == z);
    CHECK_THROWS_AS(z.leading(), std::logic_error);
}

TEST_CASE("trailing zero coefficients are stripped") {
    const Polynomial p({Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeffs().size() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(5) == 0);
}

TEST_CASE("evaluation fixtures") {
    const Polynomial p({Rat(3), Rat(29), Rat(60), Rat(36)});
    CHECK(p.eval(Rat(0)) == 3);
    CHECK(p.eval(Rat(1)) == 128);
    CHECK(p.eval(Rat(2)) == 589);
    CHECK(p.eval(make_rational(1, 2)) == make_rational(74, 2));
}

TEST_CASE("arithmetic fixtures") {
    const Polynomial n1 = lin(1, 1);
    CHECK(n1 * n1 == Polynomial({Rat(1), Rat(2), Rat(1)}));
    CHECK(n1 - n1 == Polynomial());
    CHECK(n1 + (-n1) == Polynomial());
    CHECK(n1 * Rat(0) == Polynomial());
    CHECK(n1 * make_rational(1, 2) == Polynomial({make_rational(1, 2), make_rational(1, 2)}));
    CHECK(Polynomial::variable() * Polynomial::variable() == Polynomial({Rat(0), Rat(0), Rat(1)}));
    CHECK(Polynomial::constant(Rat(5)).degree() == 0);
}

TEST_CASE("multiplication distributes over addition") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> c(-9, 9);
    auto random_poly = [&]() {
        std::vector<Rat> coeffs;
        std::uniform_int_distribution<int> deg(0, 4);
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) coeffs.emplace_back(c(rng));
        return Polynomial(coeffs);
    };
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = random_poly(), q = random_poly(), r = random_poly();
        CHECK(p * (q + r) == p * q + p * r);
        const Rat at(c(rng));
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    }
}

TEST_CASE("division with remainder") {
    const Polynomial num({Rat(-1), Rat(0), Rat(1)});  // n^2 - 1
    const Polynomial den = lin(-1, 1);                // n - 1
    const auto [q, r] = Polynomial::divmod(num, den);
    CHECK(q == lin(1, 1));
    CHECK(r.is_zero());

    const auto [q2, r2] = Polynomial::divmod(Polynomial({Rat(0), Rat(0), Rat(1)}), lin(1, 1));
    CHECK(q2 == lin(-1, 1));
    CHECK(r2 == Polynomial::constant(Rat(1)));

    CHECK_THROWS_AS(Polynomial::divmod(num, Polynomial()), std::invalid_argument);
}

TEST_CASE("divmod reconstructs the dividend") {
    std::mt19937_64 rng(78);
    std::uniform_int_distribution<long> c(-9, 9);
    auto random_poly = [&](int min_deg) {
        std::vector<Rat> coeffs;
        std::uniform_int_distribution<int> deg(min_deg, 5);
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) coeffs.emplace_back(c(rng));
        coeffs.back() = Rat(1) + abs(coeffs.back());
        return Polynomial(coeffs);
    };
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial a = random_poly(0), b = random_poly(0);
        const auto [q, r] = Polynomial::divmod(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("polynomial gcd is monic and divides both inputs") {
    const Polynomial common = lin(1, 1);
    const Polynomial g = Polynomial::gcd(common * lin(-1, 2), common * lin(3, 1));
    CHECK(g == common);

    CHECK(Polynomial::gcd(lin(4, 2), Polynomial()) == lin(2, 1));
    CHECK(Polynomial::gcd(Polynomial(), lin(4, 2)) == lin(2, 1));
    CHECK(Polynomial::gcd(lin(1, 1), lin(2, 1)).degree() == 0);

    const Polynomial big = common * common * lin(-5, 3);
    const Polynomial g2 = Polynomial::gcd(big, common * lin(7, 2));
    CHECK(g2 == common);
}

TEST_CASE("polynomial formatting") {
    CHECK(Polynomial({Rat(1), Rat(12), Rat(18), Rat(4)}).to_string() == "4n^3 + 18n^2 + 12n + 1");
    CHECK(lin(-1, -6).to_string() == "-6n - 1");
    CHECK(Polynomial({Rat(0), Rat(1)}).to_string() == "n");
    CHECK(Polynomial({Rat(0), Rat(0), Rat(-1)}).to_string() == "-n^2");
    CHECK(Polynomial::constant(make_rational(2, 3)).to_string() == "2/3");
    CHECK(Polynomial({make_rational(1, 2), Rat(1)}).to_string() == "n + 1/2");
    CHECK(Polynomial({Rat(0), make_rational(1, 2)}).to_string() == "(1/2)n");
}

TEST_CASE("rational function canonicalization cancels common factors") {
    const RationalFunction f(Polynomial({Rat(-1), Rat(0), Rat(1)}), lin(-1, 1));
    CHECK(f == RationalFunction(lin(1, 1), Polynomial::constant(Rat(1))));
    CHECK(f.den() == Polynomial::constant(Rat(1)));

    const RationalFunction g(lin(2, 2), lin(-4, 4));
    CHECK(g == RationalFunction(lin(1, 1), lin(-2, 2)));
    CHECK(g.den().leading() == 1);  // canonical denominators are monic
}

TEST_CASE("rational function rejects a zero denominator") {
    CHECK_THROWS_AS(RationalFunction(lin(1, 1), Polynomial()), std::invalid_argument);
}

TEST_CASE("rational function evaluation and poles") {
    const RationalFunction f(Polynomial::constant(Rat(1)), lin(-3, 1));
    CHECK(f.eval(Rat(4)) == 1);
    CHECK(f.eval(Rat(5)) == make_rational(1, 2));
    CHECK_THROWS_AS(f.eval(Rat(3)), PoleError);

    const RationalFunction zero;
    CHECK(zero.eval(Rat(100)) == 0);
    CHECK(zero.num().is_zero());
    CHECK(zero.den() == Polynomial::constant(Rat(1)));
}

TEST_CASE("rational function arithmetic") {
    const RationalFunction f(lin(0, 1), lin(1, 1));  // n/(n+1)
    const RationalFunction one = RationalFunction::constant(Rat(1));
    CHECK(f + (-f) == RationalFunction());
    CHECK(f - f == RationalFunction());
    CHECK(one / f == RationalFunction(lin(1, 1), lin(0, 1)));
    CHECK(f * (one / f) == one);
    CHECK(f + one == RationalFunction(lin(1, 2), lin(1, 1)));
    CHECK_THROWS_AS(f / RationalFunction(), std::invalid_argument);
}

TEST_CASE("integer-normalized display form") {
    const RationalFunction f(Polynomial({Rat(1), Rat(12), Rat(18), Rat(4)}) * make_rational(1, 6),
                             Polynomial({Rat(-1), Rat(0), Rat(3), Rat(2)}));
    const auto [num, den] = f.integer_normalized();
    CHECK(num == Polynomial({Rat(1), Rat(12), Rat(18), Rat(4)}));
    CHECK(den == Polynomial({Rat(-6), Rat(0), Rat(18), Rat(12)}));
    CHECK(f.to_string() == "(4n^3 + 18n^2 + 12n + 1)/(12n^3 + 18n^2 - 6)");
}

TEST_CASE("integer normalization fixes the sign from the denominator") {
    const RationalFunction f(lin(1, 1), lin(0, -2));
    const auto [num, den] = f.integer_normalized();
    CHECK(den.leading() > 0);
    CHECK(num == lin(-1, -1));
    CHECK(den == lin(0, 2));
}

TEST_CASE("constant rational functions display without a denominator") {
    const RationalFunction third = RationalFunction::constant(make_rational(1, 3));
    const auto [num, den] = third.integer_normalized();
    CHECK(num == Polynomial::constant(Rat(1)));
    CHECK(den == Polynomial::constant(Rat(3)));
    CHECK(third.to_string() == "(1)/(3)");
    CHECK(RationalFunction::constant(Rat(2)).to_string() == "2");
    CHECK(RationalFunction().to_string() == "0");
}

TEST_CASE("equal rational functions built along different routes compare equal") {
    const RationalFunction a(lin(2, 4), lin(6, 2));
    const RationalFunction b(lin(1, 2), lin(3, 1));
    CHECK(a == b);
    const RationalFunction c(lin(1, 2) * lin(5, 7), lin(3, 1) * lin(5, 7));
    CHECK(a == c);
}
