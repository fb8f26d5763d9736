#pragma once

#include "hexprob/errors.hpp"
#include "hexprob/rational.hpp"

namespace hexprob {

// Semiregular hexagon with side lengths a, b, c, a, b, c (all >= 1), whose
// rhombus tilings correspond to plane partitions in an a x b x c box.
struct HexagonSpec {
    int a = 1;
    int b = 1;
    int c = 1;

    HexagonSpec(int a_, int b_, int c_) : a(a_), b(b_), c(c_)
    {
        if (a < 1 || b < 1 || c < 1)
            throw DegenerateHexagon("hexagon sides must be >= 1");
    }
    bool operator==(const HexagonSpec&) const = default;
};

// Position of a horizontal rhombus, identified by its bottom vertex in the
// oblique coordinate system whose origin is a corner where a b-side meets a
// c-side (x-axis along the b-side, y-axis along the c-side).
struct RhombusPos {
    long x = 0;
    long y = 0;
    bool operator==(const RhombusPos&) const = default;
};

// One-parameter family of (hexagon, position) pairs: at index n the hexagon
// is H(2n+da, 2n+db, 2n+dc) and the rhombus sits at (2n+dx, 2n+dy).
struct FamilyOffsets {
    int da = 0;
    int db = 0;
    int dc = 0;
    int dx = 0;
    int dy = 0;
    bool operator==(const FamilyOffsets&) const = default;
};

struct FamilyInstance {
    HexagonSpec hex;
    RhombusPos pos;
};

// The family member at index n; throws DegenerateHexagon when a side would
// drop below 1.
FamilyInstance instantiate(const FamilyOffsets& fam, long n);

// Whether the probability formula covers this position:
// 0 <= x <= a+b-1 and 1 <= y <= a+c-1.
bool in_theorem_domain(const HexagonSpec& hex, const RhombusPos& pos);

// For a hexagon with a == b and a horizontal rhombus on its symmetry axis,
// each of the two tilted rhombi sharing the horizontal one's right-hand
// triangle has probability (1 - p)/2.  Rejects p outside [0, 1].
Rat symmetric_complement(const Rat& p);

} // namespace hexprob
