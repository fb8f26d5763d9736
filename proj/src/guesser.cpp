#include "hexprob/guesser.hpp"

#include <stdexcept>

#include "hexprob/engine.hpp"
#include "hexprob/errors.hpp"
#include "hexprob/nullspace.hpp"

namespace hexprob {

namespace {

// Candidate from one nullspace vector: the first dnum+1 entries are numerator
// coefficients, the rest denominator coefficients.  Returns nullopt for the
// degenerate all-zero denominator.
std::optional<RationalFunction> candidate_from(const std::vector<Rat>& vec, int dnum, int dden)
{
    std::vector<Rat> num(vec.begin(), vec.begin() + dnum + 1);
    std::vector<Rat> den(vec.begin() + dnum + 1, vec.begin() + dnum + 1 + dden + 1);
    Polynomial top{std::move(num)};
    Polynomial bottom{std::move(den)};
    if (bottom.is_zero())
        return std::nullopt;
    return RationalFunction(std::move(top), std::move(bottom));
}

} // namespace

std::optional<GuessResult> guess_rational(const std::vector<SequencePoint>& samples,
                                          int max_total_degree, int surplus)
{
    if (surplus < 0)
        throw std::invalid_argument("guess_rational: negative surplus");
    const int nsamples = static_cast<int>(samples.size());
    // Cap the degree so the fitting system always has more equations than
    // unknowns; a fit that survives it plus the holdout is then unique.
    const int budget = std::min(max_total_degree, nsamples - 2 - surplus);
    if (budget < 0)
        return std::nullopt; // too few samples for even a constant fit

    const std::vector<SequencePoint> fitting(samples.begin(), samples.end() - surplus);
    const std::vector<SequencePoint> holdout(samples.end() - surplus, samples.end());
    bool candidates_seen = false;
    bool nondegenerate_seen = false;

    for (int total = 0; total <= budget; ++total) {
        for (int dnum = 0; dnum <= total; ++dnum) {
            const int dden = total - dnum;
            // Homogeneous system P(n_k) - v_k Q(n_k) = 0 in the coefficients
            // of P (degree dnum) and Q (degree dden).
            std::vector<std::vector<Rat>> rows;
            rows.reserve(fitting.size());
            for (const SequencePoint& point : fitting) {
                std::vector<Rat> row;
                row.reserve(dnum + dden + 2);
                Rat power = 1;
                for (int e = 0; e <= dnum; ++e, power *= point.n)
                    row.push_back(power);
                power = 1;
                for (int e = 0; e <= dden; ++e, power *= point.n)
                    row.push_back(-point.value * power);
                rows.push_back(std::move(row));
            }
            for (const std::vector<Rat>& vec : nullspace_basis(std::move(rows))) {
                candidates_seen = true;
                const auto f = candidate_from(vec, dnum, dden);
                if (!f)
                    continue;
                bool degenerate = false;
                bool fits = true;
                for (const SequencePoint& point : fitting) {
                    if (f->den().eval(Rat(point.n)) == 0) {
                        degenerate = true;
                        fits = false;
                        break;
                    }
                    if (f->eval(Rat(point.n)) != point.value) {
                        fits = false;
                        break;
                    }
                }
                if (fits) {
                    for (const SequencePoint& point : holdout) {
                        if (f->den().eval(Rat(point.n)) == 0 || f->eval(Rat(point.n)) != point.value) {
                            fits = false;
                            break;
                        }
                    }
                }
                if (!degenerate)
                    nondegenerate_seen = true;
                if (fits)
                    return GuessResult{*f, samples.front().n, 0, surplus};
            }
        }
    }
    if (candidates_seen && !nondegenerate_seen)
        throw DegenerateSystem("all interpolation candidates had a denominator zero at a sample");
    return std::nullopt;
}

std::optional<GuessResult> guess_family(const FamilyOffsets& fam, long n_from, long n_to,
                                        int max_drop, int max_total_degree, int surplus)
{
    if (n_to < n_from)
        throw std::invalid_argument("guess_family: empty window");
    std::vector<SequencePoint> samples;
    samples.reserve(n_to - n_from + 1);
    for (long n = n_from; n <= n_to; ++n)
        samples.push_back(SequencePoint{n, g_value(fam, n)});

    for (int dropped = 0; dropped <= max_drop && dropped < static_cast<int>(samples.size());
         ++dropped) {
        const std::vector<SequencePoint> window(samples.begin() + dropped, samples.end());
        if (auto result = guess_rational(window, max_total_degree, surplus)) {
            result->dropped = dropped;
            return result;
        }
    }
    return std::nullopt;
}

} // namespace hexprob
