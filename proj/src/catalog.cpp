#include "hexprob/catalog.hpp"

#include <algorithm>
#include <array>

#include <json.hpp>

#include "hexprob/engine.hpp"

namespace hexprob {

namespace {

Polynomial lin(long c0, long c1)
{
    return Polynomial({Rat(c0), Rat(c1)});
}

Polynomial sq(const Polynomial& p)
{
    return p * p;
}

RationalFunction const_f(long num, long den)
{
    return RationalFunction::constant(make_rational(num, den));
}

std::vector<CatalogEntry> build_entries()
{
    using S = EntryStatus;
    std::vector<CatalogEntry> entries;
    const auto add = [&](FamilyOffsets offsets, RationalFunction f, long valid_from, S status,
                         std::string provenance) {
        entries.push_back(
            CatalogEntry{offsets, std::move(f), valid_from, status, std::move(provenance)});
    };

    const RationalFunction zero;
    add({-1, -1, 0, -1, -1}, zero, 1, S::proved, "(A), a'=-1, b'=-1");
    add({2, 2, 1, 2, 1}, zero, 1, S::proved, "(B), a'=1, b'=1");
    add({2, 1, 1, 2, 1}, zero, 1, S::proved, "(F'), a'=1, x'=1");
    add({1, 2, 1, 2, 1}, zero, 1, S::proved, "(F'), a'=1, x'=1");
    add({2, 1, 1, 1, 1}, zero, 1, S::proved, "(F'), a'=1, x'=0");
    add({1, 2, 1, 1, 0}, zero, 1, S::proved, "(F'), a'=1, x'=0");
    add({-1, 0, 0, 0, -1}, zero, 1, S::proved, "(E'), a'=-1, x'=1");
    add({0, -1, 0, 0, 0}, zero, 1, S::proved, "(E'), a'=-1, x'=1");
    add({-1, 0, 0, -1, -1}, zero, 1, S::proved, "(E'), a'=-1, x'=0");
    add({0, -1, 0, -1, -1}, zero, 1, S::proved, "(E'), a'=-1, x'=0");

    const RationalFunction third = const_f(1, 3);
    add({1, 1, 1, 1, 1}, third, 1, S::proved, "(C), a'=0, b'=0");
    add({1, 1, 1, 1, 0}, third, 1, S::proved, "(C), a'=0, b'=0");
    add({1, 1, 0, 1, -1}, third, 1, S::proved, "(H), a'=0");
    add({1, 1, 0, 1, 1}, third, 1, S::proved, "(H), a'=0");
    add({1, 1, 1, 0, -1}, third, 1, S::proved, "(F), a'=1, x'=0");
    add({1, 1, 1, 0, 1}, third, 1, S::proved, "(J'), a'=0");
    add({0, 2, 0, 1, 0}, third, 1, S::proved, "(E'), a'=1, x'=0");
    add({2, 0, 0, 0, 1}, third, 1, S::proved, "(I'), a'=1");
    add({2, 0, 0, 1, 0}, third, 1, S::proved, "(E'), a'=1, x'=0");
    add({2, 0, 0, 1, 1}, third, 1, S::proved, "(E'), a'=1, x'=0");
    add({2, 0, 0, 2, 0}, third, 1, S::proved, "(E'), a'=1, x'=1");
    add({1, 1, 0, 0, -1}, third, 1, S::conjectural, "");
    add({1, 1, 0, 0, 0}, third, 1, S::conjectural, "");
    add({2, 0, 1, 1, 0}, third, 1, S::conjectural, "");

    const RationalFunction minus_two_thirds = const_f(-2, 3);
    add({0, 2, 1, 1, 0}, minus_two_thirds, 1, S::proved, "(B), a'=0, b'=1");
    add({1, 1, 1, 0, 0}, minus_two_thirds, 1, S::conjectural, "");

    const RationalFunction four_thirds = const_f(4, 3);
    add({1, 1, 0, 1, 0}, four_thirds, 1, S::proved, "(A), a'=0, b'=0");
    // These two families carry the constant 4/3 against the normalizing
    // factor of the *next* index: p = 1/3 + (4/3) r(n+1).  Pulled back to the
    // uniform normalization p = 1/3 + f(n) r(n) this reads
    // 4(2n+1)^2 (3n+2)(3n+4) / (3(n+1)^2 (6n+5)(6n+7)).
    const RationalFunction four_thirds_shifted(
        sq(lin(1, 2)) * lin(2, 3) * lin(4, 3) * Rat(4),
        sq(lin(1, 1)) * lin(5, 6) * lin(7, 6) * Rat(3));
    add({4, 3, 1, 3, 2}, four_thirds_shifted, 1, S::conjectural, "");
    add({4, 3, 1, 4, 2}, four_thirds_shifted, 1, S::conjectural, "");

    // -(6n+1) / (6(3n+1))
    add({0, 0, 0, 0, 0}, RationalFunction(lin(-1, -6), lin(3, 9) * Rat(2)), 1, S::proved,
        "(D), a'=0, b'=0");
    // -2(6n+1) / (3(3n+1))
    add({0, 0, 1, 0, 0}, RationalFunction(lin(-2, -12), lin(3, 9)), 1, S::proved,
        "(B), a'=0, b'=0");
    // 2(2n+1)(3n+2)(4n+5) / (3(n+1)^2 (6n+5))
    add({3, 3, 0, 3, 1},
        RationalFunction(lin(1, 2) * lin(2, 3) * lin(5, 4) * Rat(2), sq(lin(1, 1)) * lin(5, 6) * Rat(3)),
        1, S::proved, "(A), a'=1, b'=1");
    // (4n^3 + 18n^2 + 12n + 1) / (6(n+1)^2 (2n-1))
    add({2, 1, 0, 3, -1},
        RationalFunction(Polynomial({1, 12, 18, 4}), sq(lin(1, 1)) * lin(-1, 2) * Rat(6)), 2,
        S::conjectural, "");
    // (3n+2)(16n^3 + 54n^2 + 57n + 20) / (3(n+1)^2 (n+2)(6n+5))
    add({5, 1, 0, 3, 2},
        RationalFunction(lin(2, 3) * Polynomial({20, 57, 54, 16}),
                         sq(lin(1, 1)) * lin(2, 1) * lin(5, 6) * Rat(3)),
        1, S::conjectural, "");
    // (3n+2)(2n^2 + 4n + 1) / (3(n+1)^2 (n+2))
    add({-1, 5, 0, 2, -1},
        RationalFunction(lin(2, 3) * Polynomial({1, 4, 2}), sq(lin(1, 1)) * lin(2, 1) * Rat(3)), 1,
        S::conjectural, "");
    // (2n+1)(2n+3)(3n+2)(3n+4)(3n+5) (176n^9 + 3080n^8 + 21692n^7 + 74546n^6
    //  + 102578n^5 - 73279n^4 - 362598n^3 - 283977n^2 + 24762n + 55440)
    // / (6(n+1)^2 (n+2)^2 (n+3)^2 (n+4)^2 (n+5)(2n-3)(2n-1)(6n+5)(6n+7)(6n+11))
    add({10, 3, 0, 1, 4},
        RationalFunction(
            lin(1, 2) * lin(3, 2) * lin(2, 3) * lin(4, 3) * lin(5, 3)
                * Polynomial({55440, 24762, -283977, -362598, -73279, 102578, 74546, 21692, 3080, 176}),
            sq(lin(1, 1)) * sq(lin(2, 1)) * sq(lin(3, 1)) * sq(lin(4, 1)) * lin(5, 1) * lin(-3, 2)
                * lin(-1, 2) * lin(5, 6) * lin(7, 6) * lin(11, 6) * Rat(6)),
        2, S::conjectural, "");

    return entries;
}

} // namespace

const std::vector<CatalogEntry>& builtin_entries()
{
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

VerifyReport verify_entry(const CatalogEntry& entry, int n_span)
{
    VerifyReport report;
    for (long n = entry.valid_from; n < entry.valid_from + n_span; ++n) {
        const FamilyInstance inst = instantiate(entry.offsets, n);
        EntryCheck check;
        check.n = n;
        check.expected = conjecture_prob(entry.f, n);
        check.actual = contains_prob(inst.hex, inst.pos);
        check.ok = check.expected == check.actual;
        report.ok = report.ok && check.ok;
        report.checks.push_back(std::move(check));
    }
    return report;
}

// ---- template-case classification ----

namespace {

bool odd(long v)
{
    return (v & 1) != 0;
}

long half_down(long v)
{
    // (v-1)/2 for odd v, v/2 for even v; exact in both cases.
    return odd(v) ? (v - 1) / 2 : v / 2;
}

std::string family_name(CaseFamily family)
{
    switch (family) {
    case CaseFamily::A: return "A";
    case CaseFamily::B: return "B";
    case CaseFamily::C: return "C";
    case CaseFamily::D: return "D";
    case CaseFamily::E: return "E";
    case CaseFamily::F: return "F";
    case CaseFamily::G: return "G";
    case CaseFamily::H: return "H";
    case CaseFamily::I: return "I";
    case CaseFamily::J: return "J";
    case CaseFamily::Cp: return "C'";
    case CaseFamily::Dp: return "D'";
    case CaseFamily::Ep: return "E'";
    case CaseFamily::Fp: return "F'";
    case CaseFamily::Gp: return "G'";
    case CaseFamily::Hp: return "H'";
    case CaseFamily::Ip: return "I'";
    case CaseFamily::Jp: return "J'";
    }
    return "?";
}

// Boundary branches of a primed case, as offset tuples in the parameters a'
// (and x' where applicable).
using Branch = std::array<long, 5>;

void add_label(std::vector<CaseLabel>& out, CaseLabel label)
{
    if (std::find(out.begin(), out.end(), label) == out.end())
        out.push_back(std::move(label));
}

} // namespace

std::string CaseLabel::to_string() const
{
    std::string text = "(" + family_name(family) + "), a'=" + std::to_string(a_param);
    if (b_param)
        text += ", b'=" + std::to_string(*b_param);
    if (x_param)
        text += ", x'=" + std::to_string(*x_param);
    return text;
}

std::vector<CaseLabel> classify_single_sum(const FamilyOffsets& fam)
{
    const long da = fam.da, db = fam.db, dc = fam.dc, dx = fam.dx, dy = fam.dy;
    std::vector<CaseLabel> labels;

    // (A) (2a'+1, 2b'+1, 0, a'+b'+1, a')
    if (dc == 0 && odd(da) && odd(db)) {
        const long ap = half_down(da), bp = half_down(db);
        if (dx == ap + bp + 1 && dy == ap)
            add_label(labels, CaseLabel{CaseFamily::A, ap, bp, std::nullopt});
    }
    // (B) (2a', 2b', 1, a'+b', a')
    if (dc == 1 && !odd(da) && !odd(db)) {
        const long ap = da / 2, bp = db / 2;
        if (dx == ap + bp && dy == ap)
            add_label(labels, CaseLabel{CaseFamily::B, ap, bp, std::nullopt});
    }
    // (C) (2a'+1, 2b'+1, 1, a'+b'+1, a'+1 | a')
    if (dc == 1 && odd(da) && odd(db)) {
        const long ap = half_down(da), bp = half_down(db);
        if (dx == ap + bp + 1 && (dy == ap + 1 || dy == ap))
            add_label(labels, CaseLabel{CaseFamily::C, ap, bp, std::nullopt});
    }
    // (D) (2a', 2b', 0, a'+b', a' | a'-1)
    if (dc == 0 && !odd(da) && !odd(db)) {
        const long ap = da / 2, bp = db / 2;
        if (dx == ap + bp && (dy == ap || dy == ap - 1))
            add_label(labels, CaseLabel{CaseFamily::D, ap, bp, std::nullopt});
    }
    // (E) (a', a', 0, 2x'+1, x')
    if (dc == 0 && da == db && odd(dx) && dy == half_down(dx))
        add_label(labels, CaseLabel{CaseFamily::E, da, std::nullopt, dy});
    // (F) (a', a', 1, 2x', x'-1)
    if (dc == 1 && da == db && !odd(dx) && dy == dx / 2 - 1)
        add_label(labels, CaseLabel{CaseFamily::F, da, std::nullopt, dx / 2});
    // (G) (2a', 2a', 1, 2a', a'+1 | a'-1)
    if (dc == 1 && da == db && !odd(da) && dx == da) {
        const long ap = da / 2;
        if (dy == ap + 1 || dy == ap - 1)
            add_label(labels, CaseLabel{CaseFamily::G, ap, std::nullopt, std::nullopt});
    }
    // (H) (2a'+1, 2a'+1, 0, 2a'+1, a'+1 | a'-1)
    if (dc == 0 && da == db && odd(da) && dx == da) {
        const long ap = half_down(da);
        if (dy == ap + 1 || dy == ap - 1)
            add_label(labels, CaseLabel{CaseFamily::H, ap, std::nullopt, std::nullopt});
    }
    // (I) (2a', 2a', 0, 2a', a'+1 | a'-2)
    if (dc == 0 && da == db && !odd(da) && dx == da) {
        const long ap = da / 2;
        if (dy == ap + 1 || dy == ap - 2)
            add_label(labels, CaseLabel{CaseFamily::I, ap, std::nullopt, std::nullopt});
    }
    // (J) (2a'+1, 2a'+1, 1, 2a'+1, a'+2 | a'-1)
    if (dc == 1 && da == db && odd(da) && dx == da) {
        const long ap = half_down(da);
        if (dy == ap + 2 || dy == ap - 1)
            add_label(labels, CaseLabel{CaseFamily::J, ap, std::nullopt, std::nullopt});
    }

    // Primed cases: check the probe against each branch bundle; the a-side
    // branches read a' off da, the b-side ones off db.
    const auto check_branches = [&](CaseFamily family, long ap, std::optional<long> xp,
                                    const std::vector<Branch>& branches) {
        for (const Branch& branch : branches) {
            if (da == branch[0] && db == branch[1] && dc == branch[2] && dx == branch[3]
                && dy == branch[4]) {
                add_label(labels, CaseLabel{family, ap, std::nullopt, xp});
                return;
            }
        }
    };

    // (C')
    if (!odd(da)) {
        const long ap = da / 2;
        check_branches(CaseFamily::Cp, ap, std::nullopt,
                       {{2 * ap, 0, 0, ap + 1, ap},
                        {2 * ap, 0, 0, ap, ap},
                        {2 * ap, 0, 0, ap, ap - 1},
                        {2 * ap, 0, 0, ap - 1, ap - 1}});
    }
    if (!odd(db)) {
        const long ap = db / 2;
        check_branches(CaseFamily::Cp, ap, std::nullopt,
                       {{0, 2 * ap, 0, ap + 1, 0},
                        {0, 2 * ap, 0, ap, -1},
                        {0, 2 * ap, 0, ap, 0},
                        {0, 2 * ap, 0, ap - 1, -1}});
    }
    // (D')
    if (odd(da)) {
        const long ap = half_down(da);
        check_branches(CaseFamily::Dp, ap, std::nullopt,
                       {{2 * ap + 1, 1, 1, ap + 2, ap + 1},
                        {2 * ap + 1, 1, 1, ap + 1, ap + 1},
                        {2 * ap + 1, 1, 1, ap + 1, ap},
                        {2 * ap + 1, 1, 1, ap, ap}});
    }
    if (odd(db)) {
        const long ap = half_down(db);
        check_branches(CaseFamily::Dp, ap, std::nullopt,
                       {{1, 2 * ap + 1, 1, ap + 2, 1},
                        {1, 2 * ap + 1, 1, ap + 1, 0},
                        {1, 2 * ap + 1, 1, ap + 1, 1},
                        {1, 2 * ap + 1, 1, ap, 0}});
    }
    // (E'): x' = dx - a' for every branch.
    {
        const long ap_even_a = da / 2, ap_odd_a = half_down(da);
        if (!odd(da)) {
            const long xp = dx - ap_even_a;
            check_branches(CaseFamily::Ep, ap_even_a, xp,
                           {{2 * ap_even_a, 0, 0, ap_even_a + xp, ap_even_a - xp},
                            {2 * ap_even_a, 0, 0, ap_even_a + xp, ap_even_a - xp - 1}});
        } else {
            const long xp = dx - ap_odd_a;
            check_branches(CaseFamily::Ep, ap_odd_a, xp,
                           {{2 * ap_odd_a + 1, 0, 0, ap_odd_a + xp, ap_odd_a - xp},
                            {2 * ap_odd_a + 1, 0, 0, ap_odd_a + xp, ap_odd_a - xp + 1}});
        }
        const long bp_even = db / 2, bp_odd = half_down(db);
        if (!odd(db)) {
            const long xp = dx - bp_even;
            check_branches(CaseFamily::Ep, bp_even, xp,
                           {{0, 2 * bp_even, 0, bp_even + xp, 2 * xp - 1},
                            {0, 2 * bp_even, 0, bp_even + xp, 2 * xp}});
        } else {
            const long xp = dx - bp_odd;
            check_branches(CaseFamily::Ep, bp_odd, xp,
                           {{0, 2 * bp_odd + 1, 0, bp_odd + xp, 2 * xp - 2},
                            {0, 2 * bp_odd + 1, 0, bp_odd + xp, 2 * xp - 1}});
        }
    }
    // (F'): x' = dx - a' for every branch.
    {
        if (!odd(da)) {
            const long ap = da / 2, xp = dx - ap;
            check_branches(CaseFamily::Fp, ap, xp,
                           {{2 * ap, 1, 1, ap + xp, ap - xp + 1}, {2 * ap, 1, 1, ap + xp, ap - xp}});
        } else {
            const long ap = half_down(da), xp = dx - ap;
            check_branches(CaseFamily::Fp, ap, xp,
                           {{2 * ap + 1, 1, 1, ap + xp, ap - xp + 2},
                            {2 * ap + 1, 1, 1, ap + xp, ap - xp + 1}});
        }
        if (!odd(db)) {
            const long ap = db / 2, xp = dx - ap;
            check_branches(CaseFamily::Fp, ap, xp,
                           {{1, 2 * ap, 1, ap + xp, 2 * xp - 1}, {1, 2 * ap, 1, ap + xp, 2 * xp}});
        } else {
            const long ap = half_down(db), xp = dx - ap;
            check_branches(CaseFamily::Fp, ap, xp,
                           {{1, 2 * ap + 1, 1, ap + xp, 2 * xp - 2},
                            {1, 2 * ap + 1, 1, ap + xp, 2 * xp - 1}});
        }
    }
    // (G')
    if (odd(da)) {
        const long ap = half_down(da);
        check_branches(CaseFamily::Gp, ap, std::nullopt,
                       {{2 * ap + 1, 0, 0, ap + 2, ap + 2},
                        {2 * ap + 1, 0, 0, ap + 1, ap + 2},
                        {2 * ap + 1, 0, 0, ap, ap},
                        {2 * ap + 1, 0, 0, ap - 1, ap}});
    }
    if (odd(db)) {
        const long ap = half_down(db);
        check_branches(CaseFamily::Gp, ap, std::nullopt,
                       {{0, 2 * ap + 1, 0, ap + 2, 0},
                        {0, 2 * ap + 1, 0, ap + 1, -1},
                        {0, 2 * ap + 1, 0, ap, 0},
                        {0, 2 * ap + 1, 0, ap - 1, -1}});
    }
    // (H')
    if (!odd(da)) {
        const long ap = da / 2;
        check_branches(CaseFamily::Hp, ap, std::nullopt,
                       {{2 * ap, 1, 1, ap + 2, ap + 2},
                        {2 * ap, 1, 1, ap + 1, ap + 2},
                        {2 * ap, 1, 1, ap, ap},
                        {2 * ap, 1, 1, ap - 1, ap}});
    }
    if (!odd(db)) {
        const long ap = db / 2;
        check_branches(CaseFamily::Hp, ap, std::nullopt,
                       {{1, 2 * ap, 1, ap + 2, 1},
                        {1, 2 * ap, 1, ap + 1, 0},
                        {1, 2 * ap, 1, ap, 1},
                        {1, 2 * ap, 1, ap - 1, 0}});
    }
    // (I')
    if (!odd(da)) {
        const long ap = da / 2;
        check_branches(CaseFamily::Ip, ap, std::nullopt,
                       {{2 * ap, 0, 0, ap + 2, ap + 1},
                        {2 * ap, 0, 0, ap + 1, ap + 1},
                        {2 * ap, 0, 0, ap - 1, ap},
                        {2 * ap, 0, 0, ap - 2, ap}});
    }
    if (!odd(db)) {
        const long ap = db / 2;
        check_branches(CaseFamily::Ip, ap, std::nullopt,
                       {{0, 2 * ap, 0, ap + 2, 0},
                        {0, 2 * ap, 0, ap + 1, -1},
                        {0, 2 * ap, 0, ap - 1, 0},
                        {0, 2 * ap, 0, ap - 2, -1}});
    }
    // (J')
    if (odd(da)) {
        const long ap = half_down(da);
        check_branches(CaseFamily::Jp, ap, std::nullopt,
                       {{2 * ap + 1, 1, 1, ap + 3, ap + 2},
                        {2 * ap + 1, 1, 1, ap + 2, ap + 2},
                        {2 * ap + 1, 1, 1, ap, ap - 1},
                        {2 * ap + 1, 1, 1, ap - 1, ap - 1}});
    }
    if (odd(db)) {
        const long ap = half_down(db);
        check_branches(CaseFamily::Jp, ap, std::nullopt,
                       {{1, 2 * ap + 1, 1, ap + 3, 1},
                        {1, 2 * ap + 1, 1, ap + 2, 0},
                        {1, 2 * ap + 1, 1, ap, 1},
                        {1, 2 * ap + 1, 1, ap - 1, 0}});
    }

    return labels;
}

std::string catalog_export_json()
{
    nlohmann::json exported = nlohmann::json::array();
    for (const CatalogEntry& entry : builtin_entries()) {
        nlohmann::json item;
        item["offsets"] = {entry.offsets.da, entry.offsets.db, entry.offsets.dc, entry.offsets.dx,
                           entry.offsets.dy};
        const auto [num, den] = entry.f.integer_normalized();
        const auto coeff_strings = [](const Polynomial& p) {
            std::vector<std::string> out;
            out.reserve(p.coeffs().size());
            for (const Rat& c : p.coeffs())
                out.push_back(to_string(c));
            return out;
        };
        item["f_num"] = coeff_strings(num);
        item["f_den"] = coeff_strings(den);
        item["valid_from"] = entry.valid_from;
        item["status"] = entry.status == EntryStatus::proved ? "proved" : "conjectural";
        if (!entry.provenance.empty())
            item["provenance"] = entry.provenance;
        exported.push_back(std::move(item));
    }
    return exported.dump(2);
}

} // namespace hexprob
