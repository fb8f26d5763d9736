#include <CLI11.hpp>
#include <json.hpp>

#include <hexprob/catalog.hpp>
#include <hexprob/engine.hpp>
#include <hexprob/errors.hpp>
#include <hexprob/guesser.hpp>
#include <hexprob/oracle.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hexprob::Rat;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // a verification or fit came back negative
constexpr int kExitDomain = 2;    // invalid hexagon, position, or value range
constexpr int kExitLimit = 3;     // enumeration or state-space budget exhausted
constexpr int kExitUsage = 64;    // malformed flags or tuple syntax

// Malformed command-line input detected after flag parsing (tuple syntax).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long> parse_tuple(const std::string& text, std::size_t count, const char* flag)
{
    std::vector<long> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string field = text.substr(pos, comma - pos);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != field.size())
            throw UsageError(std::string(flag) + ": malformed integer '" + field + "' in '" +
                             text + "'");
        values.push_back(value);
        if (comma == text.size())
            break;
        pos = comma + 1;
    }
    if (values.size() != count)
        throw UsageError(std::string(flag) + ": expected " + std::to_string(count) +
                         " comma-separated integers, got '" + text + "'");
    return values;
}

hexprob::HexagonSpec parse_hexagon(const std::string& text)
{
    const auto v = parse_tuple(text, 3, "--hexagon");
    return hexprob::HexagonSpec(static_cast<int>(v[0]), static_cast<int>(v[1]),
                                static_cast<int>(v[2]));
}

hexprob::RhombusPos parse_pos(const std::string& text)
{
    const auto v = parse_tuple(text, 2, "--pos");
    return hexprob::RhombusPos{v[0], v[1]};
}

hexprob::FamilyOffsets parse_family(const std::string& text)
{
    const auto v = parse_tuple(text, 5, "--family");
    return hexprob::FamilyOffsets{static_cast<int>(v[0]), static_cast<int>(v[1]),
                                  static_cast<int>(v[2]), static_cast<int>(v[3]),
                                  static_cast<int>(v[4])};
}

json hexagon_json(const hexprob::HexagonSpec& hex)
{
    return json{hex.a, hex.b, hex.c};
}

json pos_json(const hexprob::RhombusPos& pos)
{
    return json{pos.x, pos.y};
}

json family_json(const hexprob::FamilyOffsets& fam)
{
    return json{fam.da, fam.db, fam.dc, fam.dx, fam.dy};
}

json coeff_json(const hexprob::Polynomial& p)
{
    json out = json::array();
    for (const Rat& c : p.coeffs())
        out.push_back(hexprob::to_string(c));
    return out;
}

class Stopwatch {
public:
    long long elapsed_ms() const
    {
        const auto delta = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(delta).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit_json(const json& payload)
{
    std::cout << payload.dump(2) << "\n";
}

// ---- subcommand drivers ----

int run_prob(const std::string& hexagon, const std::string& pos, bool as_json)
{
    const hexprob::HexagonSpec hex = parse_hexagon(hexagon);
    const hexprob::RhombusPos at = parse_pos(pos);
    const Stopwatch watch;
    const Rat p = hexprob::contains_prob(hex, at);
    if (as_json) {
        emit_json(json{{"command", "prob"},
                       {"elapsed_ms", watch.elapsed_ms()},
                       {"hexagon", hexagon_json(hex)},
                       {"pos", pos_json(at)},
                       {"probability", hexprob::to_string(p)}});
    } else {
        std::cout << hexprob::to_string(p) << "\n";
    }
    return kExitOk;
}

int run_count(const std::string& hexagon, bool as_json)
{
    const hexprob::HexagonSpec hex = parse_hexagon(hexagon);
    const Stopwatch watch;
    const hexprob::Int total = hexprob::total_tilings(hex);
    if (as_json) {
        emit_json(json{{"command", "count"},
                       {"elapsed_ms", watch.elapsed_ms()},
                       {"hexagon", hexagon_json(hex)},
                       {"total", hexprob::to_string(total)}});
    } else {
        std::cout << hexprob::to_string(total) << "\n";
    }
    return kExitOk;
}

int run_oracle(const std::string& hexagon, const std::string& pos, const std::string& method,
               std::uint64_t limit, bool as_json)
{
    const hexprob::HexagonSpec hex = parse_hexagon(hexagon);
    const hexprob::RhombusPos at = parse_pos(pos);
    const Stopwatch watch;
    hexprob::OracleReport report;
    if (method == "dp") {
        report.total = hexprob::total_tilings(hex);
        report.containing = hexprob::dp_count_containing(hex, at);
        report.probability = hexprob::make_rational(report.containing, report.total);
    } else {
        report = hexprob::oracle_prob(hex, at, limit);
    }
    if (as_json) {
        emit_json(json{{"command", "oracle"},
                       {"containing", hexprob::to_string(report.containing)},
                       {"elapsed_ms", watch.elapsed_ms()},
                       {"hexagon", hexagon_json(hex)},
                       {"method", method},
                       {"pos", pos_json(at)},
                       {"probability", hexprob::to_string(report.probability)},
                       {"total", hexprob::to_string(report.total)}});
    } else {
        std::cout << hexprob::to_string(report.containing) << "/"
                  << hexprob::to_string(report.total) << " = "
                  << hexprob::to_string(report.probability) << "\n";
    }
    return kExitOk;
}

int run_gseq(const std::string& family, long n_from, long n_to, bool as_json)
{
    const hexprob::FamilyOffsets fam = parse_family(family);
    if (n_to < n_from)
        throw UsageError("--n-to must not be smaller than --n-from");
    const Stopwatch watch;
    std::vector<std::pair<long, Rat>> values;
    for (long n = n_from; n <= n_to; ++n)
        values.emplace_back(n, hexprob::g_value(fam, n));
    if (as_json) {
        json seq = json::array();
        for (const auto& [n, g] : values)
            seq.push_back(json{{"g", hexprob::to_string(g)}, {"n", n}});
        emit_json(json{{"command", "gseq"},
                       {"elapsed_ms", watch.elapsed_ms()},
                       {"family", family_json(fam)},
                       {"n_from", n_from},
                       {"n_to", n_to},
                       {"values", seq}});
    } else {
        bool first = true;
        for (const auto& [n, g] : values) {
            std::cout << (first ? "" : " ") << hexprob::to_string(g);
            first = false;
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int run_guess(const std::string& family, long n_from, long n_to, int max_drop, int max_deg,
              int surplus, bool as_json)
{
    const hexprob::FamilyOffsets fam = parse_family(family);
    const Stopwatch watch;
    const auto result = hexprob::guess_family(fam, n_from, n_to, max_drop, max_deg, surplus);
    if (as_json) {
        json payload{{"command", "guess"},
                     {"elapsed_ms", watch.elapsed_ms()},
                     {"family", family_json(fam)},
                     {"found", result.has_value()},
                     {"max_degree", max_deg},
                     {"max_drop", max_drop},
                     {"n_from", n_from},
                     {"n_to", n_to},
                     {"surplus", surplus}};
        if (result) {
            const auto [num, den] = result->f.integer_normalized();
            payload["f"] = result->f.to_string();
            payload["f_num"] = coeff_json(num);
            payload["f_den"] = coeff_json(den);
            payload["valid_from"] = result->valid_from;
            payload["dropped"] = result->dropped;
            payload["surplus_confirmed"] = result->surplus_confirmed;
        }
        emit_json(payload);
    } else if (result) {
        std::cout << "f(n) = " << result->f.to_string() << "\n";
        std::cout << "valid for n >= " << result->valid_from << "\n";
        std::cout << "dropped leading samples: " << result->dropped << "\n";
        std::cout << "confirmed on " << result->surplus_confirmed << " holdout samples\n";
    } else {
        std::cout << "no rational function fits the window n=" << n_from << ".." << n_to
                  << " (max total degree " << max_deg << ", drop <= " << max_drop << ")\n";
    }
    return result ? kExitOk : kExitFailure;
}

int run_catalog_verify(int span, bool as_json)
{
    if (span < 1)
        throw UsageError("--span must be at least 1");
    const Stopwatch watch;
    bool all_ok = true;
    json entries = json::array();
    std::ostringstream text;
    for (const hexprob::CatalogEntry& entry : hexprob::builtin_entries()) {
        const hexprob::VerifyReport report = hexprob::verify_entry(entry, span);
        all_ok = all_ok && report.ok;
        if (as_json) {
            json checks = json::array();
            for (const hexprob::EntryCheck& check : report.checks)
                checks.push_back(json{{"actual", hexprob::to_string(check.actual)},
                                      {"expected", hexprob::to_string(check.expected)},
                                      {"n", check.n},
                                      {"ok", check.ok}});
            entries.push_back(json{{"checks", checks},
                                   {"offsets", family_json(entry.offsets)},
                                   {"ok", report.ok}});
        } else {
            text << "(" << entry.offsets.da << "," << entry.offsets.db << "," << entry.offsets.dc
                 << "," << entry.offsets.dx << "," << entry.offsets.dy << ") n=" << entry.valid_from
                 << ".." << entry.valid_from + span - 1 << ": " << (report.ok ? "ok" : "FAIL")
                 << "\n";
        }
    }
    if (as_json) {
        emit_json(json{{"command", "catalog verify"},
                       {"elapsed_ms", watch.elapsed_ms()},
                       {"entries", entries},
                       {"ok", all_ok},
                       {"span", span}});
    } else {
        std::cout << text.str();
        std::cout << (all_ok ? "all entries verified" : "verification FAILED") << "\n";
    }
    return all_ok ? kExitOk : kExitFailure;
}

int run_catalog_classify(const std::string& family, bool as_json)
{
    const hexprob::FamilyOffsets fam = parse_family(family);
    const auto labels = hexprob::classify_single_sum(fam);
    if (as_json) {
        json names = json::array();
        for (const hexprob::CaseLabel& label : labels)
            names.push_back(label.to_string());
        emit_json(json{{"command", "catalog classify"},
                       {"family", family_json(fam)},
                       {"labels", names}});
    } else if (labels.empty()) {
        std::cout << "(no template case matches)\n";
    } else {
        for (const hexprob::CaseLabel& label : labels)
            std::cout << label.to_string() << "\n";
    }
    return kExitOk;
}

int run_catalog_export()
{
    std::cout << hexprob::catalog_export_json() << "\n";
    return kExitOk;
}

int run_recurrence(long n_to, bool as_json)
{
    const Stopwatch watch;
    const hexprob::RecurrenceReport report = hexprob::check_recurrence(n_to);
    if (as_json) {
        json checks = json::array();
        for (const hexprob::RecurrenceCheck& check : report.checks)
            checks.push_back(json{{"conjecture_step_ok", check.conjecture_step_ok},
                                  {"n", check.n},
                                  {"sum_step_ok", check.sum_step_ok}});
        emit_json(json{{"base_ok", report.base_ok},
                       {"checks", checks},
                       {"command", "recurrence"},
                       {"elapsed_ms", watch.elapsed_ms()},
                       {"n_to", n_to},
                       {"ok", report.all_ok()}});
    } else {
        std::cout << "base value at n=1: " << (report.base_ok ? "ok" : "FAIL") << "\n";
        for (const hexprob::RecurrenceCheck& check : report.checks)
            std::cout << "step n=" << check.n << " -> " << check.n + 1 << ": sum "
                      << (check.sum_step_ok ? "ok" : "FAIL") << ", closed form "
                      << (check.conjecture_step_ok ? "ok" : "FAIL") << "\n";
        std::cout << (report.all_ok() ? "all steps consistent" : "recurrence check FAILED") << "\n";
    }
    return report.all_ok() ? kExitOk : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact containment probabilities for random rhombus tilings of a hexagon"};
    app.require_subcommand(1);

    std::string hexagon, pos, family, method = "enumerate";
    long n_from = 1, n_to = 11, rec_n_to = 10;
    int max_drop = 2, max_deg = 8, surplus = 3, span = 3;
    std::uint64_t limit = hexprob::kEnumerationLimit;
    bool json_prob = false, json_count = false, json_oracle = false, json_gseq = false;
    bool json_guess = false, json_verify = false, json_classify = false, json_rec = false;

    CLI::App* prob = app.add_subcommand("prob", "Containment probability by the closed formula");
    prob->add_option("--hexagon", hexagon, "Side lengths A,B,C")->required();
    prob->add_option("--pos", pos, "Rhombus bottom vertex X,Y")->required();
    prob->add_flag("--json", json_prob, "Emit a JSON report");

    CLI::App* count = app.add_subcommand("count", "Total number of tilings");
    count->add_option("--hexagon", hexagon, "Side lengths A,B,C")->required();
    count->add_flag("--json", json_count, "Emit a JSON report");

    CLI::App* oracle = app.add_subcommand("oracle", "Containment probability by exhaustive count");
    oracle->add_option("--hexagon", hexagon, "Side lengths A,B,C")->required();
    oracle->add_option("--pos", pos, "Rhombus bottom vertex X,Y")->required();
    oracle->add_option("--method", method, "Counting strategy")
        ->check(CLI::IsMember({"enumerate", "dp"}))
        ->capture_default_str();
    oracle->add_option("--limit", limit, "Abort after this many enumerated tilings")
        ->capture_default_str();
    oracle->add_flag("--json", json_oracle, "Emit a JSON report");

    CLI::App* gseq = app.add_subcommand("gseq", "Reduced sequence (p - 1/3) / r(n) of a family");
    gseq->add_option("--family", family, "Offsets a,b,c,x,y of the family")->required();
    gseq->add_option("--n-from", n_from, "First index")->capture_default_str();
    gseq->add_option("--n-to", n_to, "Last index")->capture_default_str();
    gseq->add_flag("--json", json_gseq, "Emit a JSON report");

    CLI::App* guess = app.add_subcommand("guess", "Fit a rational closed form to a family");
    guess->add_option("--family", family, "Offsets a,b,c,x,y of the family")->required();
    guess->add_option("--n-from", n_from, "First index")->capture_default_str();
    long guess_n_to = 15;
    guess->add_option("--n-to", guess_n_to, "Last index")->capture_default_str();
    guess->add_option("--max-drop", max_drop, "Leading samples that may be discarded")
        ->capture_default_str();
    guess->add_option("--max-deg", max_deg, "Total degree budget")->capture_default_str();
    guess->add_option("--surplus", surplus, "Holdout samples for confirmation")
        ->capture_default_str();
    guess->add_flag("--json", json_guess, "Emit a JSON report");

    CLI::App* catalog = app.add_subcommand("catalog", "The built-in formula collection");
    catalog->require_subcommand(1);
    CLI::App* verify = catalog->add_subcommand("verify", "Recompute every entry's span");
    verify->add_option("--span", span, "Indices checked per entry")->capture_default_str();
    verify->add_flag("--json", json_verify, "Emit a JSON report");
    CLI::App* classify = catalog->add_subcommand("classify", "Template cases matching a family");
    classify->add_option("--family", family, "Offsets a,b,c,x,y of the family")->required();
    classify->add_flag("--json", json_classify, "Emit a JSON report");
    catalog->add_subcommand("export", "Print the collection as JSON");

    CLI::App* recurrence =
        app.add_subcommand("recurrence", "Telescoping consistency of the diagonal single sum");
    recurrence->add_option("--n-to", rec_n_to, "Last index")->capture_default_str();
    recurrence->add_flag("--json", json_rec, "Emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("prob"))
            return run_prob(hexagon, pos, json_prob);
        if (app.got_subcommand("count"))
            return run_count(hexagon, json_count);
        if (app.got_subcommand("oracle"))
            return run_oracle(hexagon, pos, method, limit, json_oracle);
        if (app.got_subcommand("gseq"))
            return run_gseq(family, n_from, n_to, json_gseq);
        if (app.got_subcommand("guess"))
            return run_guess(family, n_from, guess_n_to, max_drop, max_deg, surplus, json_guess);
        if (app.got_subcommand("catalog")) {
            if (catalog->got_subcommand("verify"))
                return run_catalog_verify(span, json_verify);
            if (catalog->got_subcommand("classify"))
                return run_catalog_classify(family, json_classify);
            return run_catalog_export();
        }
        if (app.got_subcommand("recurrence"))
            return run_recurrence(rec_n_to, json_rec);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hexprob::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const hexprob::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const hexprob::DegenerateHexagon& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const hexprob::OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const hexprob::PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
