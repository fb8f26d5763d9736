#include "hexprob/oracle.hpp"

#include <algorithm>

namespace hexprob {

bool PlanePartition::is_valid(int max_height) const
{
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            const int h = at(i, j);
            if (h < 0 || h > max_height)
                return false;
            if (j > 1 && at(i, j - 1) < h)
                return false;
            if (i > 1 && at(i - 1, j) < h)
                return false;
        }
    }
    return true;
}

namespace {

// Stack heights extended by the walls of the box: a virtual row 0 and column 0
// of full height c, and a virtual row a+1 and column b+1 of height 0.  The
// tilted-rhombus faces of the stack surface live on the steps of this
// extended array.
int height_ext(const PlanePartition& pp, const HexagonSpec& hex, int i, int j)
{
    if (i == 0 || j == 0)
        return hex.c;
    if (i > hex.a || j > hex.b)
        return 0;
    return pp.at(i, j);
}

} // namespace

bool contains_horizontal(const PlanePartition& pp, const HexagonSpec& hex, const RhombusPos& pos)
{
    // Top face of stack (i, j) projects to (j + a - i, h + a - i).
    for (int i = 1; i <= hex.a; ++i) {
        const long j = pos.x - hex.a + i;
        if (j < 1 || j > hex.b)
            continue;
        const long h = pos.y - hex.a + i;
        if (h < 0 || h > hex.c)
            continue;
        if (pp.at(i, static_cast<int>(j)) == static_cast<int>(h))
            return true;
    }
    return false;
}

bool contains_upper_mirror(const PlanePartition& pp, const HexagonSpec& hex, const RhombusPos& pos)
{
    // The up-right rhombus sharing the right triangle of the horizontal one at
    // (x, y) is the step face between columns j and j+1 of row i, at level
    // y+1-a+i, where j = x-a+i.
    for (int i = 1; i <= hex.a; ++i) {
        const long j = pos.x - hex.a + i;
        if (j < 0 || j > hex.b)
            continue;
        const long level = pos.y + 1 - hex.a + i;
        if (level < 1 || level > hex.c)
            continue;
        if (height_ext(pp, hex, i, static_cast<int>(j)) >= level
            && level > height_ext(pp, hex, i, static_cast<int>(j) + 1))
            return true;
    }
    return false;
}

bool contains_lower_mirror(const PlanePartition& pp, const HexagonSpec& hex, const RhombusPos& pos)
{
    // The down-right rhombus sharing that same triangle is the step face
    // between rows i and i+1 of column j, at level y+1-a+i, where j = x+1-a+i.
    for (int i = 0; i <= hex.a; ++i) {
        const long j = pos.x + 1 - hex.a + i;
        if (j < 1 || j > hex.b)
            continue;
        const long level = pos.y + 1 - hex.a + i;
        if (level < 1 || level > hex.c)
            continue;
        if (height_ext(pp, hex, i, static_cast<int>(j)) >= level
            && level > height_ext(pp, hex, i + 1, static_cast<int>(j)))
            return true;
    }
    return false;
}

namespace detail {

std::vector<std::vector<int>> first_rows(const HexagonSpec& hex)
{
    std::vector<std::vector<int>> rows;
    std::vector<int> row(hex.b, 0);
    const auto recurse = [&](auto&& self, int col, int bound) -> void {
        if (col == hex.b) {
            rows.push_back(row);
            return;
        }
        for (int value = bound; value >= 0; --value) {
            row[col] = value;
            self(self, col + 1, value);
        }
    };
    recurse(recurse, 0, hex.c);
    return rows;
}

} // namespace detail

OracleReport oracle_prob(const HexagonSpec& hex, const RhombusPos& pos, std::uint64_t limit)
{
    const auto [total, matching] = count_partitions(
        hex, [&](const PlanePartition& pp) { return contains_horizontal(pp, hex, pos); }, limit);
    OracleReport report;
    report.total = Int(static_cast<unsigned long>(total));
    report.containing = Int(static_cast<unsigned long>(matching));
    report.probability = make_rational(report.containing, report.total);
    return report;
}

OracleReport oracle_prob_serial(const HexagonSpec& hex, const RhombusPos& pos, std::uint64_t limit)
{
    std::uint64_t matching = 0;
    const std::uint64_t total = enumerate_plane_partitions(
        hex,
        [&](const PlanePartition& pp) {
            if (contains_horizontal(pp, hex, pos))
                ++matching;
        },
        limit);
    OracleReport report;
    report.total = Int(static_cast<unsigned long>(total));
    report.containing = Int(static_cast<unsigned long>(matching));
    report.probability = make_rational(report.containing, report.total);
    return report;
}

namespace {

// Weakly decreasing a-tuples with entries in [0, c]: the states of the
// column-by-column transfer sweep.
std::vector<std::vector<int>> column_states(int a, int c)
{
    std::vector<std::vector<int>> states;
    std::vector<int> state(a, 0);
    const auto recurse = [&](auto&& self, int row, int bound) -> void {
        if (row == a) {
            states.push_back(state);
            return;
        }
        for (int value = bound; value >= 0; --value) {
            state[row] = value;
            self(self, row + 1, value);
        }
    };
    recurse(recurse, 0, c);
    return states;
}

bool dominates(const std::vector<int>& high, const std::vector<int>& low)
{
    for (std::size_t k = 0; k < high.size(); ++k)
        if (high[k] < low[k])
            return false;
    return true;
}

// Partitions whose column `pin_col` has value `pin_value` in row `pin_row`
// (1-based); columns decrease entrywise left to right.
Int count_with_pin(const std::vector<std::vector<int>>& states, int b, int pin_row, int pin_col,
                   int pin_value)
{
    const std::size_t nstates = states.size();
    const auto admitted = [&](int col, std::size_t s) {
        return col != pin_col || states[s][pin_row - 1] == pin_value;
    };

    std::vector<Int> frontier(nstates);
    for (std::size_t s = 0; s < nstates; ++s)
        frontier[s] = admitted(1, s) ? 1 : 0;
    for (int col = 2; col <= b; ++col) {
        std::vector<Int> next(nstates);
        for (std::size_t t = 0; t < nstates; ++t) {
            if (!admitted(col, t))
                continue;
            Int acc = 0;
            for (std::size_t s = 0; s < nstates; ++s)
                if (frontier[s] != 0 && dominates(states[s], states[t]))
                    acc += frontier[s];
            next[t] = std::move(acc);
        }
        frontier = std::move(next);
    }

    Int result = 0;
    for (const Int& count : frontier)
        result += count;
    return result;
}

} // namespace

Int dp_count_containing(const HexagonSpec& hex, const RhombusPos& pos)
{
    const std::vector<std::vector<int>> states = column_states(hex.a, hex.c);
    const double cost = static_cast<double>(states.size()) * static_cast<double>(states.size())
        * static_cast<double>(hex.b);
    if (cost > 1e9)
        throw LimitExceeded("transfer sweep state space too large for this hexagon");

    // Sum over the diagonal cells that could carry the rhombus; a tiling can
    // satisfy the pin for at most one of them, so the counts are disjoint.
    Int result = 0;
    for (int i = 1; i <= hex.a; ++i) {
        const long j = pos.x - hex.a + i;
        const long value = pos.y - hex.a + i;
        if (j < 1 || j > hex.b || value < 0 || value > hex.c)
            continue;
        result += count_with_pin(states, hex.b, i, static_cast<int>(j), static_cast<int>(value));
    }
    return result;
}

} // namespace hexprob
