#include "hexprob/hexagon.hpp"

namespace hexprob {

FamilyInstance instantiate(const FamilyOffsets& fam, long n)
{
    const long two_n = 2 * n;
    const long a = two_n + fam.da;
    const long b = two_n + fam.db;
    const long c = two_n + fam.dc;
    if (a < 1 || b < 1 || c < 1)
        throw DegenerateHexagon("family instance has a side < 1 at n = " + std::to_string(n));
    return FamilyInstance{
        HexagonSpec(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)),
        RhombusPos{two_n + fam.dx, two_n + fam.dy},
    };
}

bool in_theorem_domain(const HexagonSpec& hex, const RhombusPos& pos)
{
    return 0 <= pos.x && pos.x <= hex.a + hex.b - 1 && 1 <= pos.y && pos.y <= hex.a + hex.c - 1;
}

Rat symmetric_complement(const Rat& p)
{
    if (p < 0 || p > 1)
        throw OutOfRange("symmetric_complement: probability outside [0, 1]");
    Rat q = (1 - p) / 2;
    q.canonicalize();
    return q;
}

} // namespace hexprob
