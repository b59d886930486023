// Acceptance suite: every desk-checkable claim the construction rests on, one
// line per criterion, exact arithmetic throughout, with the runtime budget
// printed and enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "recond/emit.hpp"
#include "recond/verify.hpp"
#include "support/cyclotomic.hpp"

using namespace recond;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<bool(std::string&)> body;
};

bool expect(bool cond, const std::string& what, std::string& log) {
    if (!cond && log.empty()) log = what;
    return cond;
}

// --- criterion 1: golden example D(56,15) -----------------------------------

bool criterion1(std::string& log) {
    bool ok = true;
    auto gd = build_group_data(56, 15);

    auto series_eq = [&](const Int& (GroupData::*f)(int) const, std::vector<long> want) {
        for (int j = 2; j <= gd.e; ++j)
            if ((gd.*f)(j) != want[static_cast<size_t>(j - 2)]) return false;
        return true;
    };
    ok &= expect(series_eq(&GroupData::r, {67, 26, 11, 7, 3, 2, 1, 0}), "r-series", log);
    ok &= expect(series_eq(&GroupData::c, {1, 0, 1, 3, 5, 12, 19, 26}), "c-series", log);
    ok &= expect(series_eq(&GroupData::d, {0, 1, 1, 2, 3, 7, 11, 15}), "d-series", log);

    const BiPoly P = plus_poly(15), M = minus_poly(15);
    const BiPoly w2 = P * P, w3 = M * P;
    auto gens = invariant_generators(gd, Basis::W);
    std::vector<BiPoly> want_gens = {
        xy_pow(82),          xy_pow(67) * w2,         xy_pow(26) * w3,
        xy_pow(11) * w2 * w3, xy_pow(7) * w2.pow(3) * w3.pow(2),
        xy_pow(3) * w2.pow(5) * w3.pow(3), xy_pow(2) * w2.pow(12) * w3.pow(7),
        xy_pow(1) * w2.pow(19) * w3.pow(11), w2.pow(26) * w3.pow(15)};
    ok &= expect(gens.items.size() == 9, "nine generators", log);
    for (size_t k = 0; k < want_gens.size() && ok; ++k)
        ok &= expect(gens.items[k].poly == want_gens[k], "generator " + std::to_string(k), log);

    auto lq = label_arrows(gd, Presentation::Moduli);
    auto label_is = [&](const char* id, const BiPoly& p) { return lq.label(id) == p; };
    ok &= expect(label_is("c0+", P) && label_is("c+1", P), "labels (+)", log);
    ok &= expect(label_is("c0-", M) && label_is("c-1", M), "labels (-)", log);
    ok &= expect(label_is("a1+", xy_pow(26) * M) && label_is("a+0", xy_pow(26) * M),
                 "labels f-", log);
    ok &= expect(label_is("a1-", xy_pow(26) * P) && label_is("a-0", xy_pow(26) * P),
                 "labels f+", log);
    ok &= expect(label_is("k2", xy_pow(11) * P * M), "k2", log);
    ok &= expect(label_is("k3", xy_pow(7) * P.pow(3) * M), "k3", log);
    ok &= expect(label_is("k4", xy_pow(3) * P.pow(8) * M.pow(2)), "k4", log);
    ok &= expect(label_is("k5", xy_pow(2) * P.pow(13) * M.pow(3)), "k5", log);
    ok &= expect(label_is("k6", xy_pow(1) * P.pow(31) * M.pow(7)), "k6", log);
    ok &= expect(label_is("c1_2", P.pow(3) * M), "c1_2", log);
    ok &= expect(label_is("c2_3", P.pow(13) * M.pow(3)), "c2_3", log);
    ok &= expect(label_is("c3_0", P.pow(49) * M.pow(11)), "c3_0", log);
    ok &= expect(label_is("a2_1", xy_pow(11)) && label_is("a3_2", xy_pow(3)) &&
                     label_is("a0_3", xy_pow(1)),
                 "chain a labels", log);

    auto cs = charts(gd);
    auto eq_str = [&](const char* id) {
        const auto& ch = chart_by_id(cs, id);
        return equation_string(ch.equation, ch.shape);
    };
    ok &= expect(eq_str("U0") == "a*(1-4*b^4*c^15)-b^7*c^26", "U0 equation", log);
    ok &= expect(eq_str("U1") == "a*(1-4*b*c^4)-b^2*c^7", "U1 equation", log);
    ok &= expect(eq_str("U2") == "a*(1-4*c)-b*c^2", "U2 equation", log);
    ok &= expect(eq_str("U3") == "a*(c-4)-b*c", "U3 equation", log);
    ok &= expect(eq_str("U+") == "b*(a^2*c+4)-a*c", "U+ equation", log);
    ok &= expect(eq_str("U-") == "b*(a^2*c-4)-a*c", "U- equation", log);

    auto ratio_is = [&](const char* id, int k, const RatFunc& want) {
        return chart_by_id(cs, id).ratios[static_cast<size_t>(k)] == want;
    };
    const BiPoly one(Rat(1));
    ok &= expect(ratio_is("U0", 0, RatFunc(xy_pow(26) * P.pow(3), M)) &&
                     ratio_is("U0", 1, RatFunc(P.pow(67) * M.pow(15), one)) &&
                     ratio_is("U0", 2, RatFunc(xy_pow(1), P.pow(18) * M.pow(4))),
                 "U0 ratios", log);
    ok &= expect(ratio_is("U1", 0, RatFunc(xy_pow(26) * P.pow(3), M)) &&
                     ratio_is("U1", 1, RatFunc(P.pow(18) * M.pow(4), xy_pow(1))) &&
                     ratio_is("U1", 2, RatFunc(xy_pow(4), P.pow(5) * M)),
                 "U1 ratios", log);
    ok &= expect(ratio_is("U2", 1, RatFunc(P.pow(5) * M, xy_pow(4))) &&
                     ratio_is("U2", 2, RatFunc(xy_pow(15), P * P)),
                 "U2 ratios", log);
    ok &= expect(ratio_is("U3", 0, RatFunc(xy_pow(41) * P, M)) &&
                     ratio_is("U3", 1, RatFunc(xy_pow(41) * M, P)) &&
                     ratio_is("U3", 2, RatFunc(P * P, xy_pow(15))),
                 "U3 ratios", log);
    ok &= expect(ratio_is("U+", 0, RatFunc(M, xy_pow(41) * P)) &&
                     ratio_is("U+", 2, RatFunc(xy_pow(67) * P * P, one)),
                 "U+ ratios", log);
    ok &= expect(ratio_is("U-", 0, RatFunc(P, xy_pow(41) * M)) &&
                     ratio_is("U-", 2, RatFunc(xy_pow(67) * M * M, one)),
                 "U- ratios", log);

    auto glues = glue_maps_list(gd);
    auto im = [&](size_t g, int k) { return glues[g].transform.image[static_cast<size_t>(k)]; };
    ok &= expect(glues.size() == 5, "glue count", log);
    ok &= expect(im(0, 0) == LMono{Rat(1), {1, 0, 0}} && im(0, 1) == LMono{Rat(1), {0, 0, -1}} &&
                     im(0, 2) == LMono{Rat(1), {0, 1, 4}},
                 "glue U0-U1", log);
    ok &= expect(im(1, 1) == LMono{Rat(1), {0, 0, -1}} && im(1, 2) == LMono{Rat(1), {0, 1, 4}},
                 "glue U1-U2", log);
    ok &= expect(im(2, 0) == LMono{Rat(1), {1, 0, 1}} && im(2, 1) == LMono{Rat(1), {0, 1, 3}} &&
                     im(2, 2) == LMono{Rat(1), {0, 0, -1}},
                 "glue U2-U3 (ca,c^3b,c^-1)", log);
    ok &= expect(glues[3].source_uses_d && im(3, 0) == LMono{Rat(1), {-1, 0, 0}} &&
                     im(3, 1) == LMono{Rat(1), {0, 1, 0}} && im(3, 2) == LMono{Rat(1), {2, 0, 1}},
                 "glue U3-U+ (a^-1,b,a^2 d)", log);
    ok &= expect(im(4, 0) == LMono{Rat(1), {0, -1, 0}} && im(4, 1) == LMono{Rat(1), {1, 0, 0}} &&
                     im(4, 2) == LMono{Rat(1), {0, 2, 1}},
                 "glue U3-U- (b^-1,a,b^2 c)", log);
    return ok;
}

// --- criterion 2: relation lists of D(18,5) and D(52,11) --------------------

std::multiset<std::string> rel_strings(const GroupData& gd, Presentation pres) {
    Quiver qv = build_quiver(gd);
    std::multiset<std::string> out;
    for (const auto& rel : relations(gd, pres)) {
        auto side = [&](const std::vector<PathTerm>& terms) {
            std::vector<std::string> parts;
            for (const auto& t : terms) {
                std::string s;
                if (t.coeff != 1) s += rat_str(t.coeff) + "*";
                for (size_t a = 0; a < t.arrows.size(); ++a) {
                    if (a) s += ".";
                    s += qv.arrows[static_cast<size_t>(t.arrows[a])].id;
                }
                parts.push_back(s);
            }
            std::sort(parts.begin(), parts.end());
            std::string joined;
            for (size_t k = 0; k < parts.size(); ++k) {
                if (k) joined += " + ";
                joined += parts[k];
            }
            return joined;
        };
        std::string l = side(rel.lhs), r = side(rel.rhs);
        if (r < l) std::swap(l, r);
        out.insert(l + " = " + r);
    }
    return out;
}

std::multiset<std::string> golden_rels(std::initializer_list<const char*> raw) {
    std::multiset<std::string> out;
    for (const char* s : raw) {
        std::string str(s);
        auto eq = str.find(" = ");
        std::vector<std::string> sides{str.substr(0, eq), str.substr(eq + 3)};
        for (auto& side : sides) {
            std::vector<std::string> parts;
            size_t pos = 0;
            while (true) {
                size_t next = side.find(" + ", pos);
                if (next == std::string::npos) {
                    parts.push_back(side.substr(pos));
                    break;
                }
                parts.push_back(side.substr(pos, next - pos));
                pos = next + 3;
            }
            std::sort(parts.begin(), parts.end());
            side.clear();
            for (size_t k = 0; k < parts.size(); ++k) {
                if (k) side += " + ";
                side += parts[k];
            }
        }
        if (sides[1] < sides[0]) std::swap(sides[0], sides[1]);
        out.insert(sides[0] + " = " + sides[1]);
    }
    return out;
}

bool criterion2(std::string& log) {
    bool ok = true;
    {
        auto gd = build_group_data(18, 5);
        auto got = rel_strings(gd, Presentation::Symmetric);
        auto want = golden_rels({
            "c0+.c+1 + -1/1*c0-.c-1 = 4/1*a0_3.a3_2.a2_1",
            "c0+.a+0 = c0-.a-0",
            "a-0.c0- = c-1.a1-",
            "a1+.c+1 = a1-.c-1",
            "a+0.c0+ = c+1.a1+",
            "a1+.c+1 = k2.a0_3.a3_2.a2_1",
            "a0_3.a3_2.a2_1.k2 = c0+.a+0",
            "1/2*k2.c0+.c+1 + 1/2*k2.c0-.c-1 = c1_2.a2_1",
            "a2_1.c1_2 = k3.a0_3.a3_2",
            "a0_3.a3_2.k3 = 1/2*c0+.c+1.k2 + 1/2*c0-.c-1.k2",
            "1/2*k3.c0+.c+1.c1_2 + 1/2*k3.c0-.c-1.c1_2 = c2_3.a3_2",
            "c3_0.a0_3 = a3_2.c2_3",
            "1/2*c0+.c+1.c1_2.k3 + 1/2*c0-.c-1.c1_2.k3 = a0_3.c3_0",
        });
        ok &= expect(got.size() == 13, "D(18,5) has 13 relations", log);
        ok &= expect(got == want, "D(18,5) symmetric relation list", log);
        auto counts = ext2_expected(gd);
        std::map<std::pair<int, int>, long> seen;
        for (const auto& rel : relations(gd, Presentation::Symmetric))
            ++seen[{rel.tail, rel.head}];
        ok &= expect(seen == counts, "D(18,5) Ext^2 counts", log);
    }
    {
        auto gd = build_group_data(52, 11);
        auto got = rel_strings(gd, Presentation::Moduli);
        auto want = golden_rels({
            "c0+.c+1 + -1/1*c0-.c-1 = 4/1*a0_3.a3_2.a2_1",
            "c0+.a+0 = c0-.a-0",
            "a-0.c0- = c-1.a1-",
            "a1+.c+1 = a1-.c-1",
            "a+0.c0+ = c+1.a1+",
            "a1+.c+1 = k2.a0_3.a3_2.a2_1",
            "a0_3.a3_2.a2_1.k2 = c0+.a+0",
            "k2.c0+.c+1 = k3.a0_3.a3_2.a2_1",
            "a0_3.a3_2.a2_1.k3 = c0+.c+1.k2",
            "k3.c0+.c+1 = c1_2.a2_1",
            "a2_1.c1_2 = k4.a0_3.a3_2",
            "a0_3.a3_2.k4 = c0+.c+1.k3",
            "k4.c0+.c+1.c1_2 = k5.a0_3.a3_2",
            "a0_3.a3_2.k5 = c0+.c+1.c1_2.k4",
            "k5.c0+.c+1.c1_2 = c2_3.a3_2",
            "a3_2.c2_3 = k6.a0_3",
            "a0_3.k6 = c0+.c+1.c1_2.k5",
            "k6.c0+.c+1.c1_2.c2_3 = c3_0.a0_3",
            "a0_3.c3_0 = c0+.c+1.c1_2.c2_3.k6",
        });
        ok &= expect(got.size() == 19, "D(52,11) has 19 relations", log);
        ok &= expect(got == want, "D(52,11) moduli relation list", log);
        auto counts = ext2_expected(gd);
        std::map<std::pair<int, int>, long> seen;
        for (const auto& rel : relations(gd, Presentation::Moduli))
            ++seen[{rel.tail, rel.head}];
        ok &= expect(seen == counts, "D(52,11) Ext^2 counts", log);
    }
    return ok;
}

// --- criterion 3: the family D(2s+1,s), s = 2..6 ----------------------------

bool criterion3(std::string& log) {
    bool ok = true;
    for (long s = 2; s <= 6; ++s) {
        auto gd = build_group_data(2 * s + 1, s);
        const int si = static_cast<int>(s);
        const BiPoly P = plus_poly(si), M = minus_poly(si);
        BiPoly v2 = BiPoly::monomial(2 * si, 0);
        v2.add_term(0, 2 * si, Rat(1));
        BiPoly v3 = BiPoly::monomial(2 * si, 0);
        v3.add_term(0, 2 * si, Rat(-1));

        auto gens = invariant_generators(gd, Basis::V);
        ok &= expect(gens.items.size() == 4, "family generator count", log);
        ok &= expect(gens.items[0].poly == xy_pow(2 * (si + 1)), "family (xy)^{2(s+1)}", log);
        ok &= expect(gens.items[1].poly == xy_pow(si + 2) * v2, "family (xy)^{s+2} v2", log);
        ok &= expect(gens.items[2].poly == xy_pow(1) * v3, "family xy v3", log);
        ok &= expect(gens.items[3].poly == v2 * v3.pow(si), "family v2 v3^s", log);

        auto lq = label_arrows(gd, Presentation::Moduli);
        ok &= expect(lq.label("c0+") == P && lq.label("c+1") == P, "family (+) labels", log);
        ok &= expect(lq.label("a1-") == xy_pow(1) * P && lq.label("a-0") == xy_pow(1) * P,
                     "family xy(+) labels", log);
        ok &= expect(lq.label("a1+") == xy_pow(1) * M && lq.label("a+0") == xy_pow(1) * M,
                     "family xy(-) labels", log);
        bool chain_ok = true;
        for (int t = 1; t <= gd.N; ++t) chain_ok &= lq.label(lq.quiver.chain_c_id(t)) == P * M;
        for (int t = 1; t <= gd.N; ++t) chain_ok &= lq.label(lq.quiver.chain_a_id(t)) == xy_pow(1);
        ok &= expect(chain_ok, "family chain labels (+)(-) and xy", log);
        // moduli and symmetric presentations coincide here
        ok &= expect(rel_strings(gd, Presentation::Moduli) ==
                         rel_strings(gd, Presentation::Symmetric),
                     "family presentations coincide", log);

        auto cs = charts(gd);
        ok &= expect(cs.size() == static_cast<size_t>(gd.N + 3), "family chart count", log);
        for (int t = 0; t <= gd.N - 1; ++t) {
            const auto& ch = chart_by_id(cs, "U" + std::to_string(t));
            TriPoly want = TriPoly::monomial(1, 0, 0) -
                           TriPoly::monomial(1, si - (t + 1), si - t, Rat(4)) -
                           TriPoly::monomial(0, 1, 1);
            ok &= expect(ch.equation == want, "family U" + std::to_string(t) + " equation", log);
        }
        auto glues = glue_maps_list(gd);
        for (int t = 0; t <= gd.N - 2; ++t) {
            const auto& tr = glues[static_cast<size_t>(t)].transform;
            ok &= expect(tr.image[0] == LMono{Rat(1), {1, 0, 0}} &&
                             tr.image[1] == LMono{Rat(1), {0, 0, -1}} &&
                             tr.image[2] == LMono{Rat(1), {0, 1, 2}},
                         "family glue (a,c^-1,c^2 b)", log);
        }
    }
    return ok;
}

// --- criterion 4: combinatorial sweep to n = 200 ----------------------------

bool criterion4(std::string& log) {
    auto pairs = pairs_up_to(200, false);
    auto lines = parallel_map(pairs, [](const std::pair<long, long>& pq) {
        auto rep = run_series_checks(pq.first, pq.second);
        for (const auto& c : rep.checks)
            if (!c.pass) return c.name;
        return std::string();
    });
    for (const auto& l : lines)
        if (!l.empty()) return expect(false, l, log);
    return true;
}

// --- criterion 5: relation verification sweep -------------------------------

bool criterion5(std::string& log) {
    auto pairs = pairs_up_to(40, true);
    auto lines = parallel_map(pairs, [](const std::pair<long, long>& pq) {
        auto gd = build_group_data(pq.first, pq.second);
        for (Presentation pres : {Presentation::Moduli, Presentation::Symmetric}) {
            auto rep = verify_relations(gd, pres);
            if (!rep.pass) return "relations (" + std::to_string(pq.first) + "," +
                                  std::to_string(pq.second) + ") " + presentation_name(pres);
            if (pq.first <= 25) {
                for (Rat lambda : {Rat(1), Rat(-4), Rat(8)}) {
                    auto [rels, lrep] = lambda_variant(gd, pres, lambda);
                    (void)rels;
                    if (!lrep.pass)
                        return "lambda " + lambda.get_str() + " (" + std::to_string(pq.first) +
                               "," + std::to_string(pq.second) + ")";
                }
            }
        }
        return std::string();
    });
    for (const auto& l : lines)
        if (!l.empty()) return expect(false, l, log);
    return true;
}

// --- criterion 6: chart verification sweep ----------------------------------

bool criterion6(std::string& log) {
    auto pairs = pairs_up_to(40, true);
    auto lines = parallel_map(pairs, [](const std::pair<long, long>& pq) {
        auto gd = build_group_data(pq.first, pq.second);
        std::string tag = "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ") ";
        auto cs = charts(gd);
        if (cs.size() != static_cast<size_t>(gd.N + 3)) return tag + "chart count";
        for (const auto& ch : cs) {
            if (!verify_chart_on_ratios(gd, ch).pass) return tag + "ratios " + ch.id;
            if (!smoothness_check(ch.equation).smooth) return tag + "smoothness " + ch.id;
        }
        auto [glues, grep] = glue_maps(gd);
        (void)glues;
        if (!grep.pass) return tag + "glues: " + grep.failures.front();
        return std::string();
    });
    for (const auto& l : lines)
        if (!l.empty()) return expect(false, l, log);
    return true;
}

// --- criterion 7: generation certification with mutations, n <= 12 ----------

bool criterion7(std::string& log) {
    auto pairs = pairs_up_to(12, false);
    auto lines = parallel_map(pairs, [](const std::pair<long, long>& pq) {
        auto gd = build_group_data(pq.first, pq.second);
        int deg = default_generation_degree(gd);
        std::string tag = "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ") ";
        auto rep = run_invariants_suite(gd, deg);
        if (!rep.pass()) return tag + "generation";
        auto mut = run_invariants_mutations(gd, deg);
        if (!mut.pass()) return tag + "mutation not caught";
        return std::string();
    });
    for (const auto& l : lines)
        if (!l.empty()) return expect(false, l, log);
    return true;
}

// --- criterion 8: specials certification ------------------------------------

bool criterion8(std::string& log) {
    {
        auto pairs = pairs_up_to(20, true);
        auto lines = parallel_map(pairs, [](const std::pair<long, long>& pq) {
            auto gd = build_group_data(pq.first, pq.second);
            auto table = special_generators(gd, Basis::W);
            for (const auto& en : table.entries) {
                auto rep =
                    verify_two_generation_entry(gd, en, default_two_generation_degree(gd, en));
                if (!rep.pass)
                    return "two-generation (" + std::to_string(pq.first) + "," +
                           std::to_string(pq.second) + ") " + en.id.name(gd) + ": " + rep.detail;
            }
            return std::string();
        });
        for (const auto& l : lines)
            if (!l.empty()) return expect(false, l, log);
    }
    {
        std::vector<std::pair<long, long>> pairs;
        for (auto pq : pairs_up_to(40, false)) {
            auto gd = build_group_data(pq.first, pq.second);
            if (gd.nu < gd.N - 1) pairs.push_back(pq);
        }
        auto lines = parallel_map(pairs, [](const std::pair<long, long>& pq) {
            auto gd = build_group_data(pq.first, pq.second);
            for (Basis basis : {Basis::W, Basis::V}) {
                auto rep = verify_cycle_realization(gd, basis);
                if (!rep.pass)
                    return "cycles (" + std::to_string(pq.first) + "," +
                           std::to_string(pq.second) + ") " + basis_name(basis) + ": " +
                           rep.detail;
            }
            return std::string();
        });
        for (const auto& l : lines)
            if (!l.empty()) return expect(false, l, log);
    }
    return true;
}

// --- criterion 9: oracle agreement -------------------------------------------

bool criterion9(std::string& log) {
    std::vector<std::pair<long, long>> groups;
    for (auto pq : pairs_up_to(40, false)) {
        long order = 4 * (pq.first - pq.second) * pq.second;
        if (order <= 60) groups.push_back(pq);
    }
    auto lines = parallel_map(groups, [](const std::pair<long, long>& pq) {
        auto gd = build_group_data(pq.first, pq.second);
        testsupport::AveragingOracle oracle(gd);
        std::vector<Character> chars = {character_of(gd, ModuleId::trivial()),
                                        character_of(gd, ModuleId::Wplus()),
                                        character_of(gd, ModuleId::Wminus())};
        for (Int t = 1; t <= gd.n - gd.q; ++t) chars.push_back(character_of(gd, ModuleId::W(t)));
        for (const auto& chi : chars)
            for (int d = 0; d <= 30; ++d)
                if (relative_invariant_dim(gd, chi, d) != oracle.dim(chi, d))
                    return "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                           ") degree " + std::to_string(d);
        return std::string();
    });
    for (const auto& l : lines)
        if (!l.empty()) return expect(false, l, log);
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "golden example D(56,15): series, generators, labels, charts, ratios, glues", 5.0,
         criterion1},
        {2, "golden relation lists D(18,5) symmetric and D(52,11) moduli + Ext^2 counts", 5.0,
         criterion2},
        {3, "golden family D(2s+1,s) s=2..6: invariants, labels, charts, glues", 10.0, criterion3},
        {4, "combinatorial lemma sweep over all coprime 1 < q < n <= 200", 60.0, criterion4},
        {5, "relation verification sweep: nu=0, n <= 40, both presentations; lambda on n <= 25",
         300.0, criterion5},
        {6, "chart verification sweep: ratios, glues, smoothness for nu=0, n <= 40", 300.0,
         criterion6},
        {7, "generation certification with single-drop mutations, n <= 12, both bases", 600.0,
         criterion7},
        {8, "specials: two-generation (nu=0, n <= 20) and cycle realization (nu < N-1, n <= 40)",
         600.0, criterion8},
        {9, "pairing count equals the averaging projector rank, degrees <= 30, order <= 60",
         600.0, criterion9},
    };

    int failures = 0;
    for (auto& cr : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string log;
        bool ok = false;
        try {
            ok = cr.body(log);
        } catch (const std::exception& err) {
            log = std::string("exception: ") + err.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs < cr.limit_seconds;
        if (!(ok && in_time)) ++failures;
        std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)%s%s\n",
                    ok && in_time ? "PASS" : "FAIL", cr.number, cr.title.c_str(), secs,
                    cr.limit_seconds, log.empty() ? "" : " -- ", log.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
