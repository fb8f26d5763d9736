#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexprob/hexagon.hpp"
#include "hexprob/polynomial.hpp"
#include "hexprob/rational.hpp"

namespace hexprob {

enum class EntryStatus { proved, conjectural };

// One catalogued family together with its closed-form f: for n >= valid_from
// the containment probability is 1/3 + f(n) * r_factor(n).
struct CatalogEntry {
    FamilyOffsets offsets;
    RationalFunction f;
    long valid_from = 1;
    EntryStatus status = EntryStatus::conjectural;
    std::string provenance; // case label such as "(A), a'=-1, b'=-1"; empty if none
};

// The built-in formula collection (26 proved entries, 10 conjectural).
const std::vector<CatalogEntry>& builtin_entries();

struct EntryCheck {
    long n = 0;
    Rat expected; // 1/3 + f(n) * r_factor(n)
    Rat actual;   // contains_prob on the instantiated family
    bool ok = false;
};
struct VerifyReport {
    std::vector<EntryCheck> checks;
    bool ok = true;
};

// Recomputes the probability for n_span consecutive indices starting at the
// entry's valid_from and compares against the closed form, exactly.
VerifyReport verify_entry(const CatalogEntry& entry, int n_span);

// The reduction catalogue for families with min(a,b,c) offsets in {0,1}:
// template cases (A)-(J) with parameters a', b' and boundary-case bundles
// (C')-(J') with parameters a', x'.
enum class CaseFamily { A, B, C, D, E, F, G, H, I, J, Cp, Dp, Ep, Fp, Gp, Hp, Ip, Jp };

struct CaseLabel {
    CaseFamily family = CaseFamily::A;
    long a_param = 0;
    std::optional<long> b_param; // two-parameter template cases
    std::optional<long> x_param; // axis-position cases

    std::string to_string() const; // e.g. "(F'), a'=1, x'=0"
    bool operator==(const CaseLabel&) const = default;
};

// Every template case an offset tuple matches (families can match several).
std::vector<CaseLabel> classify_single_sum(const FamilyOffsets& fam);

// JSON rendering of the catalogue: an array of objects with fields offsets,
// f_num, f_den (integer coefficient strings, ascending), valid_from, status
// and, where present, provenance.
std::string catalog_export_json();

} // namespace hexprob
