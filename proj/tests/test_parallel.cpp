#include <doctest.h>

#include <hexprob/engine.hpp>
#include <hexprob/oracle.hpp>

#include <cstdint>

using namespace hexprob;

// The OpenMP kernels accumulate exact rationals and integers, so their
// results must be bit-identical to the serial reference implementations,
// independent of thread count and scheduling.

TEST_CASE("probability kernel equals the serial transcription across a grid") {
    const HexagonSpec hex(4, 3, 3);
    for (long x = 0; x <= hex.a + hex.b - 1; ++x)
        for (long y = 1; y <= hex.a + hex.c - 1; ++y) {
            CAPTURE(x);
            CAPTURE(y);
            CHECK(contains_prob(hex, RhombusPos{x, y}) == contains_prob_serial(hex, RhombusPos{x, y}));
        }
}

TEST_CASE("probability kernel equals the serial transcription on larger inputs") {
    const HexagonSpec cases[] = {HexagonSpec(9, 8, 7), HexagonSpec(12, 5, 9), HexagonSpec(14, 9, 6)};
    const RhombusPos positions[] = {RhombusPos{8, 8}, RhombusPos{11, 4}, RhombusPos{10, 13}};
    for (int k = 0; k < 3; ++k) {
        const Rat kernel = contains_prob(cases[k], positions[k]);
        const Rat serial = contains_prob_serial(cases[k], positions[k]);
        CHECK(kernel == serial);
        CHECK(kernel >= 0);
        CHECK(kernel <= 1);
    }
}

TEST_CASE("counting kernel equals the serial walk for totals and matches") {
    for (const HexagonSpec& hex : {HexagonSpec(3, 3, 4), HexagonSpec(4, 2, 3), HexagonSpec(1, 5, 2)}) {
        const RhombusPos pos{hex.a, hex.a};
        const auto [total, matching] = count_partitions(
            hex, [&](const PlanePartition& pp) { return contains_horizontal(pp, hex, pos); });
        std::uint64_t serial_matching = 0;
        const std::uint64_t serial_total = enumerate_plane_partitions(hex, [&](const PlanePartition& pp) {
            serial_matching += contains_horizontal(pp, hex, pos);
        });
        CHECK(total == serial_total);
        CHECK(matching == serial_matching);
    }
}

TEST_CASE("oracle reports from both walks are identical") {
    const HexagonSpec hex(3, 4, 3);
    const RhombusPos pos{4, 3};
    const OracleReport par = oracle_prob(hex, pos);
    const OracleReport ser = oracle_prob_serial(hex, pos);
    CHECK(par.total == ser.total);
    CHECK(par.containing == ser.containing);
    CHECK(par.probability == ser.probability);
}
