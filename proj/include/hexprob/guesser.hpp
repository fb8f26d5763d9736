#pragma once

#include <optional>
#include <vector>

#include "hexprob/hexagon.hpp"
#include "hexprob/polynomial.hpp"
#include "hexprob/rational.hpp"

namespace hexprob {

struct SequencePoint {
    long n = 0;
    Rat value;
};

struct GuessResult {
    RationalFunction f;
    long valid_from = 0;      // smallest n among the samples the fit covers
    int dropped = 0;          // leading samples discarded before fitting succeeded
    int surplus_confirmed = 0; // trailing holdout samples the fit reproduced
};

// Minimal-degree rational function interpolating the samples.  Degree splits
// (numerator, denominator) are searched in ascending total degree (ties by
// ascending numerator degree); for each split the homogeneous linear system
// P(n_k) - v_k Q(n_k) = 0 over all but the trailing `surplus` samples is
// solved exactly, and a candidate is accepted only if its denominator avoids
// every retained sample and the holdout samples confirm it.  The total degree
// is additionally capped at (#samples - 2 - surplus) so the accepted system
// is always overdetermined.
//
// Returns nullopt when no split fits within the budget; throws
// DegenerateSystem when candidates existed but all had denominators vanishing
// on a sample.
std::optional<GuessResult> guess_rational(const std::vector<SequencePoint>& samples,
                                          int max_total_degree = 8, int surplus = 3);

// Fits the g_value sequence of the family on [n_from, n_to].  When the full
// window does not fit (families whose closed form only holds past a
// threshold), up to max_drop leading samples are discarded one at a time and
// the fit is retried; `dropped` and `valid_from` record the outcome.
std::optional<GuessResult> guess_family(const FamilyOffsets& fam, long n_from, long n_to,
                                        int max_drop = 2, int max_total_degree = 8,
                                        int surplus = 3);

} // namespace hexprob
