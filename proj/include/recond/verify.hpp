#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "recond/moduli.hpp"
#include "recond/reconalg.hpp"
#include "recond/specials.hpp"

namespace recond {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    }
    void merge(const SuiteReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
};

inline int worker_count(size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RECOND_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && cap < static_cast<long>(hw)) hw = static_cast<unsigned>(cap);
    }
    if (static_cast<size_t>(hw) > jobs) hw = static_cast<unsigned>(jobs);
    return static_cast<int>(hw == 0 ? 1 : hw);
}

/// Order-preserving parallel map; results land at their input index.
template <typename In, typename F>
auto parallel_map(const std::vector<In>& items, F fn)
    -> std::vector<decltype(fn(items.front()))> {
    using Out = decltype(fn(items.front()));
    std::vector<Out> results(items.size());
    if (items.empty()) return results;
    const int workers = worker_count(items.size());
    if (workers <= 1) {
        for (size_t k = 0; k < items.size(); ++k) results[k] = fn(items[k]);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                size_t k = next.fetch_add(1);
                if (k >= items.size()) return;
                results[k] = fn(items[k]);
            }
        });
    for (auto& th : pool) th.join();
    return results;
}

// ---------------------------------------------------------------------------
// the combinatorial lemma battery (series suite)
// ---------------------------------------------------------------------------

/// All desk-checkable combinatorial identities for one pair (n,q).
inline SuiteReport run_series_checks(long n, long q) {
    SuiteReport rep;
    auto gd = build_group_data(n, q);
    std::ostringstream tagos;
    tagos << "(" << n << "," << q << ") ";
    const std::string tag = tagos.str();

    rep.add(tag + "order", gd.order == 4 * (gd.n - gd.q) * gd.q);
    rep.add(tag + "r tail", gd.r(gd.e) == 0 && gd.r(gd.e - 1) == 1);

    {  // Riemenschneider duality e-2 = 1 + sum(alpha_i - 2)
        Int excess = 0;
        for (int i = 1; i <= gd.N; ++i) excess += gd.alpha(i) - 2;
        rep.add(tag + "duality length", Int(gd.e - 2) == 1 + excess);
    }
    {  // a_2 = nu+2; q = i_{nu+1} + nu(n-q); r_2, r_3 identities
        const Int nmq = gd.n - gd.q;
        bool ok = gd.a(2) == gd.nu + 2;
        ok = ok && gd.q == gd.i(gd.nu + 1) + gd.nu * nmq;
        ok = ok && gd.r(2) == 2 * nmq - gd.i(gd.nu + 1);
        ok = ok && gd.r(3) == nmq - gd.i(gd.nu + 1);
        ok = ok && gd.r(3) == gd.i(gd.nu) - 2 * gd.i(gd.nu + 1);
        ok = ok && gd.r(2) == 2 * gd.r(3) + gd.i(gd.nu + 1);
        rep.add(tag + "a2/q/r2/r3", ok);
    }
    if (gd.e >= 4) {  // r series is the i-series of [a_3+1, a_4, ..., a_{e-1}]
        std::vector<Int> data{gd.a(3) + 1};
        for (int j = 4; j <= gd.e - 1; ++j) data.push_back(gd.a(j));
        Rat value = cf_value(data);
        CFExpansion cf;
        cf.numerator = value.get_num();
        cf.denominator = value.get_den();
        cf.coeffs = data;
        auto s = compute_series(cf);
        bool ok = true;
        for (int k = 2; k <= gd.e; ++k) ok = ok && gd.r(k) == s.i(k - 2);
        rep.add(tag + "r = I-series", ok);
    }
    {  // r_{t+1} = r_{t+2} + i_{b_t}
        bool ok = true;
        for (int t = 2; t <= gd.e - 2; ++t) ok = ok && gd.r(t + 1) == gd.r(t + 2) + gd.i(gd.b_i(t));
        rep.add(tag + "r butt", ok);
    }
    {  // r_{l_t} = i_t - i_{t+1}
        bool ok = true;
        for (int t = gd.nu + 1; t <= gd.N; ++t)
            ok = ok && gd.r(gd.l_i(t)) == gd.i(t) - gd.i(t + 1);
        rep.add(tag + "r at l", ok);
    }
    {  // c_{t+2} = c_{t+1} + Delta_{b_t} and d likewise
        bool ok = true;
        for (int t = 2; t <= gd.e - 2; ++t) {
            ok = ok && gd.c(t + 2) == gd.c(t + 1) + gd.Delta(gd.b_i(t));
            ok = ok && gd.d(t + 2) == gd.d(t + 1) + gd.Gamma(gd.b_i(t));
        }
        rep.add(tag + "c and d", ok);
    }
    {  // the dual-series identities on (n,q)
        auto cf = gd.alpha_cf;
        auto dcf = dual_expand(cf);
        auto S = gd.alpha_series;
        auto D = compute_series(dcf);
        const int LX = S.lX(), LY = D.lX();
        bool ok = true;
        for (int t = 1; t <= LX - 1; ++t) ok = ok && S.b(t) == D.l(t) - 1;
        for (int t = 0; t <= LX - 1; ++t) ok = ok && D.i(t) == D.i(t + 1) + S.i(S.b_i(t));
        for (int t = 0; t <= LY - 1; ++t) ok = ok && S.j(t + 1) - S.j(t) == D.j(D.b_i(t));
        for (int t = 1; t <= LX - 1; ++t) ok = ok && D.j(t + 1) - D.j(t) == S.j(D.l_i(t) - 1);
        for (int t = 1; t <= LY - 1; ++t) {
            Int sum = 1;
            for (int p = 1; p <= D.b_i(t) - 1; ++p) sum += S.j(D.l_i(p) - 1);
            ok = ok && D.j(D.b_i(t)) == sum;
        }
        rep.add(tag + "dual i-series lemma", ok);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// per-group suites
// ---------------------------------------------------------------------------

inline SuiteReport run_invariants_suite(const GroupData& gd, int max_degree) {
    SuiteReport rep;
    for (Basis basis : {Basis::W, Basis::V}) {
        auto r = verify_generation(gd, basis, max_degree);
        std::ostringstream name;
        name << "generation " << basis_name(basis) << "-basis up to " << max_degree;
        rep.add(name.str(), r.pass, r.detail);
    }
    return rep;
}

inline SuiteReport run_invariants_mutations(const GroupData& gd, int max_degree) {
    SuiteReport rep;
    for (Basis basis : {Basis::W, Basis::V}) {
        auto gens = invariant_generators(gd, basis);
        for (size_t drop = 0; drop < gens.items.size(); ++drop) {
            GeneratorList mutated;
            mutated.basis = basis;
            for (size_t k = 0; k < gens.items.size(); ++k)
                if (k != drop) mutated.items.push_back(gens.items[k]);
            auto r = verify_generation_list(gd, mutated, max_degree);
            std::ostringstream name;
            name << "mutation " << basis_name(basis) << " drop " << gens.items[drop].tag();
            rep.add(name.str(), !r.pass, r.pass ? "dropped generator not detected" : "");
        }
    }
    return rep;
}

inline SuiteReport run_specials_suite(const GroupData& gd, bool with_two_generation = true) {
    SuiteReport rep;
    for (Basis basis : {Basis::W, Basis::V}) {
        auto table = special_generators(gd, basis);
        bool inv_ok = true;
        for (const auto& en : table.entries)
            inv_ok = inv_ok && is_relative_invariant(en.gen1, gd, en.chi) &&
                     is_relative_invariant(en.gen2, gd, en.chi);
        rep.add(std::string("special generators invariant, ") + basis_name(basis), inv_ok);
    }
    {
        auto table = special_generators(gd, Basis::W);
        bool distinct = true;
        for (size_t a = 0; a < table.entries.size(); ++a)
            for (size_t b = a + 1; b < table.entries.size(); ++b)
                if (table.entries[a].chi == table.entries[b].chi) distinct = false;
        rep.add("characters pairwise distinct", distinct);
        if (with_two_generation) {
            for (const auto& en : table.entries) {
                auto r = verify_two_generation_entry(gd, en, default_two_generation_degree(gd, en));
                rep.add("two-generation " + en.id.name(gd), r.pass, r.detail);
            }
        }
    }
    if (gd.nu < gd.N - 1) {
        for (Basis basis : {Basis::W, Basis::V}) {
            auto r = verify_cycle_realization(gd, basis);
            rep.add(std::string("cycle realization ") + basis_name(basis), r.pass, r.detail);
        }
    }
    if (gd.nu == 0)
        rep.add("vertex assignment",
                assign_vertices(gd).size() == static_cast<size_t>(gd.N) + 2);
    return rep;
}

inline SuiteReport run_relations_suite(const GroupData& gd, bool with_lambda = true) {
    SuiteReport rep;
    for (Presentation pres : {Presentation::Moduli, Presentation::Symmetric}) {
        auto r = verify_relations(gd, pres);
        rep.add(std::string("relations ") + presentation_name(pres), r.pass, r.detail);
        if (with_lambda) {
            for (Rat lambda : {Rat(1), Rat(-4), Rat(8)}) {
                auto [rels, lrep] = lambda_variant(gd, pres, lambda);
                (void)rels;
                rep.add(std::string("lambda ") + lambda.get_str() + " " +
                            presentation_name(pres),
                        lrep.pass, lrep.detail);
            }
        }
    }
    return rep;
}

inline SuiteReport run_charts_suite(const GroupData& gd) {
    SuiteReport rep;
    auto cs = charts(gd);
    rep.add("chart count N+3", cs.size() == static_cast<size_t>(gd.N + 3));
    for (const auto& ch : cs) {
        auto r = verify_chart_on_ratios(gd, ch);
        rep.add("ratios " + ch.id, r.pass, r.detail);
        auto s = smoothness_check(ch.equation);
        rep.add("smooth " + ch.id, s.smooth, s.reason);
    }
    auto [glues, grep] = glue_maps(gd);
    (void)glues;
    rep.add("glue maps", grep.pass, grep.failures.empty() ? "" : grep.failures.front());
    return rep;
}

// ---------------------------------------------------------------------------
// dispatch + sweeps
// ---------------------------------------------------------------------------

inline bool valid_pair(long n, long q) { return 1 < q && q < n && std::gcd(n, q) == 1; }

inline bool reduced_pair(long n, long q) { return valid_pair(n, q) && n > 2 * q; }

inline std::vector<std::pair<long, long>> pairs_up_to(long n_max, bool reduced_only) {
    std::vector<std::pair<long, long>> out;
    for (long n = 3; n <= n_max; ++n)
        for (long q = 2; q < n; ++q) {
            if (!valid_pair(n, q)) continue;
            if (reduced_only && !reduced_pair(n, q)) continue;
            out.push_back({n, q});
        }
    return out;
}

inline SuiteReport run_suite(const std::string& suite, long n, long q, int max_degree) {
    auto gd = build_group_data(n, q);
    SuiteReport rep;
    if (suite == "series" || suite == "all") rep.merge(run_series_checks(n, q));
    if (suite == "invariants" || suite == "all") {
        int deg = max_degree > 0 ? max_degree : default_generation_degree(gd);
        rep.merge(run_invariants_suite(gd, deg));
    }
    if (suite == "specials" || suite == "all") rep.merge(run_specials_suite(gd));
    if (suite == "relations" || suite == "all") {
        if (gd.nu == 0)
            rep.merge(run_relations_suite(gd));
        else if (suite == "relations")
            throw std::domain_error("relations suite requires nu = 0 (companion-paper case)");
    }
    if (suite == "charts" || suite == "all") {
        if (gd.nu == 0)
            rep.merge(run_charts_suite(gd));
        else if (suite == "charts")
            throw std::domain_error("charts suite requires nu = 0 (companion-paper case)");
    }
    return rep;
}

struct SweepLine {
    long n = 0, q = 0;
    bool pass = true;
    std::string detail;
};

/// Fan the suite out over all applicable (n,q); results merge in input order.
inline std::vector<SweepLine> run_sweep(const std::string& suite, long n_max, int max_degree) {
    bool reduced_only = suite == "relations" || suite == "charts";
    auto pairs = pairs_up_to(n_max, reduced_only);
    return parallel_map(pairs, [&](const std::pair<long, long>& pq) {
        SweepLine line;
        line.n = pq.first;
        line.q = pq.second;
        SuiteReport rep;
        try {
            if (suite == "specials") {
                auto gd = build_group_data(pq.first, pq.second);
                // sweep policy: two-generation on reduced pairs, cycle
                // realization whenever the auxiliary quiver exists
                rep = run_specials_suite(gd, gd.nu == 0);
            } else {
                rep = run_suite(suite, pq.first, pq.second, max_degree);
            }
        } catch (const std::exception& err) {
            line.pass = false;
            line.detail = err.what();
            return line;
        }
        line.pass = rep.pass();
        for (const auto& c : rep.checks)
            if (!c.pass) {
                line.detail = c.name + (c.detail.empty() ? "" : (": " + c.detail));
                break;
            }
        return line;
    });
}

}  // namespace recond
