#pragma once

#include <vector>

#include "hexprob/hexagon.hpp"
#include "hexprob/polynomial.hpp"
#include "hexprob/rational.hpp"

namespace hexprob {

// Number of rhombus tilings of the hexagon: the box product
// prod_{i<=a} prod_{j<=b} prod_{k<=c} (i+j+k-1)/(i+j+k-2).
Int total_tilings(const HexagonSpec& hex);

// Probability that a uniformly random tiling contains the horizontal rhombus
// with bottom vertex pos, by the exact triple-sum formula.  Positions outside
// the covered range (see in_theorem_domain) raise DomainError.
//
// contains_prob is the production kernel: shared factor tables, terms split
// across threads, exact rational accumulation (bit-identical to the serial
// reference, which transcribes the formula literally term by term).
Rat contains_prob(const HexagonSpec& hex, const RhombusPos& pos);
Rat contains_prob_serial(const HexagonSpec& hex, const RhombusPos& pos);

// Normalizing factor C(2n,n)^3 / C(6n+2, 3n+1) of the conjectured expansion
// p = 1/3 + f(n) * r_factor(n).
Rat r_factor(long n);

// (contains_prob(family at n) - 1/3) / r_factor(n): the sequence whose
// closed form the guesser hunts for.
Rat g_value(const FamilyOffsets& fam, long n);

// 1/3 + f(n) * r_factor(n).
Rat conjecture_prob(const RationalFunction& f, long n);

// Independent single-sum form of contains_prob(H(2n,2n,2n+1), (2n,2n)).
Rat single_sum_prob(long n);

// Closed form for single_sum_prob(n+1) - single_sum_prob(n).
Rat single_sum_step(long n);

// The conjectured f for the family behind single_sum_prob: -2(6n+1)/(3(3n+1)).
RationalFunction single_sum_family_f();

// Telescoping consistency of single_sum_prob: each step equals the closed
// form, both for the sum itself and for the conjectured probability built
// from single_sum_family_f, with the shared base value at n = 1.
struct RecurrenceCheck {
    long n = 0;
    bool sum_step_ok = false;
    bool conjecture_step_ok = false;
};
struct RecurrenceReport {
    std::vector<RecurrenceCheck> checks;
    bool base_ok = true; // single_sum_prob(1) == conjectured value == 1/5
    bool all_ok() const;
};
RecurrenceReport check_recurrence(long n_max);

} // namespace hexprob
