#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "hexprob/errors.hpp"
#include "hexprob/hexagon.hpp"
#include "hexprob/rational.hpp"

namespace hexprob {

// Brute-force ground truth for the probability engine: tilings of H(a,b,c)
// are enumerated as plane partitions in the a x b x c box, i.e. a x b height
// matrices with entries in [0, c] weakly decreasing along each row and down
// each column.  Row i runs from the wall the stacks lean against; the tiling
// is the projection of the stack surface, and the horizontal rhombus on top
// of stack (i, j) at height h has bottom vertex (x, y) = (j + a - i, h + a - i).

class PlanePartition {
public:
    PlanePartition(int rows, int cols)
        : rows_(rows), cols_(cols), heights_(static_cast<std::size_t>(rows) * cols, 0)
    {
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 1-based accessors.
    int at(int i, int j) const { return heights_[index(i, j)]; }
    void set(int i, int j, int value) { heights_[index(i, j)] = value; }

    // Row/column monotonicity and the height range [0, max_height].
    bool is_valid(int max_height) const;

    bool operator==(const PlanePartition&) const = default;

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
    }

    int rows_;
    int cols_;
    std::vector<int> heights_;
};

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

// True iff the tiling encoded by pp contains the horizontal rhombus with
// bottom vertex pos.  Any position may be queried; impossible ones are false.
bool contains_horizontal(const PlanePartition& pp, const HexagonSpec& hex, const RhombusPos& pos);

// The two tilted rhombi sharing the right-hand triangle of the horizontal
// rhombus at pos: the one leaning up to the right and the one leaning down to
// the right.  Every tiling contains exactly one of the three rhombi through
// that triangle.
bool contains_upper_mirror(const PlanePartition& pp, const HexagonSpec& hex, const RhombusPos& pos);
bool contains_lower_mirror(const PlanePartition& pp, const HexagonSpec& hex, const RhombusPos& pos);

namespace detail {

// Fills cells from row-major index `cell` onward, maintaining the weak
// decrease along rows and columns, and calls visit(pp) on each completion.
// visit returns false to abort the walk; the return value propagates that.
template <class Visitor>
bool fill_cells(const HexagonSpec& hex, PlanePartition& pp, int cell, Visitor& visit)
{
    if (cell == hex.a * hex.b)
        return visit(pp);
    const int i = cell / hex.b + 1;
    const int j = cell % hex.b + 1;
    int bound = hex.c;
    if (i > 1)
        bound = std::min(bound, pp.at(i - 1, j));
    if (j > 1)
        bound = std::min(bound, pp.at(i, j - 1));
    for (int value = bound; value >= 0; --value) {
        pp.set(i, j, value);
        if (!fill_cells(hex, pp, cell + 1, visit))
            return false;
    }
    return true;
}

// All weakly decreasing first rows, each a seed for an independent subtree of
// the enumeration; used to split work across threads.
std::vector<std::vector<int>> first_rows(const HexagonSpec& hex);

} // namespace detail

// Calls visit(pp) once per plane partition of the hexagon's box and returns
// how many there were.  Serial reference walk.  Throws LimitExceeded as soon
// as more than `limit` partitions have been generated.
template <class Visitor>
std::uint64_t enumerate_plane_partitions(const HexagonSpec& hex, Visitor&& visit,
                                         std::uint64_t limit = kEnumerationLimit)
{
    std::uint64_t count = 0;
    bool exceeded = false;
    auto counting = [&](const PlanePartition& pp) {
        if (count == limit) {
            exceeded = true;
            return false;
        }
        ++count;
        visit(pp);
        return true;
    };
    PlanePartition pp(hex.a, hex.b);
    detail::fill_cells(hex, pp, 0, counting);
    if (exceeded)
        throw LimitExceeded("enumeration exceeds limit of " + std::to_string(limit) + " tilings");
    return count;
}

// Counts all partitions and those satisfying pred.  OpenMP kernel: the walk
// is split across the partitions' first rows; per-thread tallies are exact
// integers, so the merged result is bit-identical to the serial walk.
template <class Pred>
std::pair<std::uint64_t, std::uint64_t> count_partitions(const HexagonSpec& hex, Pred&& pred,
                                                         std::uint64_t limit = kEnumerationLimit)
{
    const std::vector<std::vector<int>> seeds = detail::first_rows(hex);
    const int nseeds = static_cast<int>(seeds.size());
    std::vector<std::uint64_t> totals(nseeds, 0);
    std::vector<std::uint64_t> matches(nseeds, 0);
    std::atomic<std::uint64_t> progress{0};
    std::atomic<bool> exceeded{false};

#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (int s = 0; s < nseeds; ++s) {
        if (exceeded.load(std::memory_order_relaxed))
            continue;
        PlanePartition pp(hex.a, hex.b);
        for (int j = 1; j <= hex.b; ++j)
            pp.set(1, j, seeds[s][j - 1]);
        auto tally = [&](const PlanePartition& done) {
            if (progress.fetch_add(1, std::memory_order_relaxed) >= limit) {
                exceeded.store(true, std::memory_order_relaxed);
                return false;
            }
            ++totals[s];
            if (pred(done))
                ++matches[s];
            return true;
        };
        detail::fill_cells(hex, pp, hex.b, tally);
    }
    if (exceeded.load())
        throw LimitExceeded("enumeration exceeds limit of " + std::to_string(limit) + " tilings");

    std::uint64_t total = 0;
    std::uint64_t matching = 0;
    for (int s = 0; s < nseeds; ++s) {
        total += totals[s];
        matching += matches[s];
    }
    return {total, matching};
}

struct OracleReport {
    Int total = 0;
    Int containing = 0;
    Rat probability = 0;
};

// Containment probability by exhaustive count.  The parallel variant uses the
// OpenMP kernel above; both produce identical reports.
OracleReport oracle_prob(const HexagonSpec& hex, const RhombusPos& pos,
                         std::uint64_t limit = kEnumerationLimit);
OracleReport oracle_prob_serial(const HexagonSpec& hex, const RhombusPos& pos,
                                std::uint64_t limit = kEnumerationLimit);

// Number of plane partitions containing the horizontal rhombus at pos,
// counted by a transfer-matrix sweep over columns (states are the weakly
// decreasing column vectors).  Scales well past enumeration range; guards the
// state space size with LimitExceeded.
Int dp_count_containing(const HexagonSpec& hex, const RhombusPos& pos);

} // namespace hexprob
