#include <hexprob/engine.hpp>
#include <hexprob/oracle.hpp>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

// Wall-clock comparison of the OpenMP kernels against their serial reference
// implementations.  Both must produce identical results; the program exits
// nonzero on any mismatch.

namespace {

template <typename F>
double best_of_ms(int repeats, F&& f)
{
    double best = -1.0;
    for (int i = 0; i < repeats; ++i) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (best < 0.0 || ms < best)
            best = ms;
    }
    return best;
}

bool report(const std::string& kernel, const std::string& instance, double serial_ms,
            double parallel_ms, bool match)
{
    std::cout << std::left << std::setw(18) << kernel << std::setw(24) << instance << std::right
              << std::fixed << std::setprecision(2) << std::setw(10) << serial_ms << " ms"
              << std::setw(10) << parallel_ms << " ms" << std::setw(8) << std::setprecision(2)
              << (parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0) << "x  "
              << (match ? "ok" : "MISMATCH") << "\n";
    return match;
}

}  // namespace

int main(int argc, char** argv)
{
    int repeats = 3;
    if (argc == 3 && std::string(argv[1]) == "--repeat") {
        repeats = std::atoi(argv[2]);
        if (repeats < 1) {
            std::cerr << "--repeat must be a positive integer\n";
            return 64;
        }
    } else if (argc != 1) {
        std::cerr << "usage: " << argv[0] << " [--repeat N]\n";
        return 64;
    }

    std::cout << std::left << std::setw(18) << "kernel" << std::setw(24) << "instance" << std::right
              << std::setw(13) << "serial" << std::setw(13) << "parallel" << std::setw(9)
              << "speedup"
              << "  check\n";

    bool all_ok = true;

    // Closed-form double sum over lattice positions; the OpenMP kernel
    // parallelizes the outer summation index.
    const struct {
        hexprob::HexagonSpec hex;
        hexprob::RhombusPos pos;
    } formula_cases[] = {
        {{21, 21, 21}, {21, 21}},
        {{26, 19, 16}, {17, 20}},
        {{60, 60, 61}, {60, 60}},
    };
    for (const auto& c : formula_cases) {
        hexprob::Rat serial_value, parallel_value;
        const double serial_ms =
            best_of_ms(repeats, [&] { serial_value = hexprob::contains_prob_serial(c.hex, c.pos); });
        const double parallel_ms =
            best_of_ms(repeats, [&] { parallel_value = hexprob::contains_prob(c.hex, c.pos); });
        const std::string instance = "H(" + std::to_string(c.hex.a) + "," +
                                     std::to_string(c.hex.b) + "," + std::to_string(c.hex.c) +
                                     ")@(" + std::to_string(c.pos.x) + "," +
                                     std::to_string(c.pos.y) + ")";
        all_ok &= report("closed-form sum", instance, serial_ms, parallel_ms,
                         serial_value == parallel_value);
    }

    // Exhaustive enumeration of plane partitions; the OpenMP kernel splits the
    // work across first-row seeds.
    const struct {
        hexprob::HexagonSpec hex;
        hexprob::RhombusPos pos;
    } oracle_cases[] = {
        {{4, 4, 4}, {4, 4}},
        {{5, 4, 3}, {4, 3}},
    };
    for (const auto& c : oracle_cases) {
        hexprob::OracleReport serial_report, parallel_report;
        const double serial_ms =
            best_of_ms(repeats, [&] { serial_report = hexprob::oracle_prob_serial(c.hex, c.pos); });
        const double parallel_ms =
            best_of_ms(repeats, [&] { parallel_report = hexprob::oracle_prob(c.hex, c.pos); });
        const std::string instance = "H(" + std::to_string(c.hex.a) + "," +
                                     std::to_string(c.hex.b) + "," + std::to_string(c.hex.c) +
                                     ")@(" + std::to_string(c.pos.x) + "," +
                                     std::to_string(c.pos.y) + ")";
        const bool match = serial_report.total == parallel_report.total &&
                           serial_report.containing == parallel_report.containing &&
                           serial_report.probability == parallel_report.probability;
        all_ok &= report("enumeration", instance, serial_ms, parallel_ms, match);
    }

    if (!all_ok) {
        std::cerr << "kernel results diverge from the serial reference\n";
        return 1;
    }
    return 0;
}
