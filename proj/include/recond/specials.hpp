#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "recond/action.hpp"
#include "recond/invgen.hpp"
#include "recond/linalg.hpp"

namespace recond {

/// Identity of a non-free rank 1 special CM module.
struct SpecialId {
    enum class Kind { WPlus, WMinus, Wit };
    Kind kind = Kind::WPlus;
    int t = 0;  // chain index nu+1..N for Kind::Wit

    static SpecialId plus() { return {Kind::WPlus, 0}; }
    static SpecialId minus() { return {Kind::WMinus, 0}; }
    static SpecialId wit(int t) { return {Kind::Wit, t}; }

    std::string name(const GroupData& gd) const {
        switch (kind) {
            case Kind::WPlus: return "W+";
            case Kind::WMinus: return "W-";
            default: {
                std::ostringstream os;
                os << "W" << gd.i(t);  // the module is W_{i_t}
                return os.str();
            }
        }
    }

    friend bool operator<(const SpecialId& a, const SpecialId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.t < b.t;
    }
};

struct SpecialEntry {
    SpecialId id;
    BiPoly gen1, gen2;  // ordered as in the two-column table
    Character chi;
};

struct SpecialTable {
    Basis basis = Basis::W;
    std::vector<SpecialEntry> entries;  // W+, W-, W_{i_{nu+1}}..W_{i_N}

    const SpecialEntry& at(const SpecialId& id) const {
        for (const auto& en : entries)
            if (!(en.id < id) && !(id < en.id)) return en;
        throw std::out_of_range("SpecialTable::at");
    }
};

inline Character special_character(const GroupData& gd, const SpecialId& id) {
    switch (id.kind) {
        case SpecialId::Kind::WPlus: return character_of(gd, ModuleId::Wplus());
        case SpecialId::Kind::WMinus: return character_of(gd, ModuleId::Wminus());
        default: return character_of(gd, ModuleId::W(gd.i(id.t)));
    }
}

/// Generator table of the N+2-nu non-free rank 1 specials:
///   W+      x^q+y^q        (xy)^{n-q}(x^q-y^q)
///   W-      x^q-y^q        (xy)^{n-q}(x^q+y^q)
///   W_{i_t} (xy)^{i_t}     g2^{Delta_t} g3^{Gamma_t}      (nu+1 <= t <= N)
inline SpecialTable special_generators(const GroupData& gd, Basis basis) {
    const int q = gd.q_i(), nmq = gd.nmq_i();
    auto [g2, g3] = basis_polys(gd, basis);
    SpecialTable table;
    table.basis = basis;
    table.entries.push_back({SpecialId::plus(), plus_poly(q), xy_pow(nmq) * minus_poly(q),
                             special_character(gd, SpecialId::plus())});
    table.entries.push_back({SpecialId::minus(), minus_poly(q), xy_pow(nmq) * plus_poly(q),
                             special_character(gd, SpecialId::minus())});
    for (int t = gd.nu + 1; t <= gd.N; ++t) {
        SpecialId id = SpecialId::wit(t);
        table.entries.push_back({id, xy_pow(gd.i_i(t)), g2.pow(gd.Delta_i(t)) * g3.pow(gd.Gamma_i(t)),
                                 special_character(gd, id)});
    }
    return table;
}

struct TwoGenReport {
    bool pass = true;
    int first_failure = -1;
    std::string detail;
};

/// Check that R.gen1 + R.gen2 fills the chi-isotypic module degree by degree:
/// rows are basis invariants times the generators, compared against the
/// relative-invariant dimension by exact row reduction.
inline TwoGenReport verify_two_generation_entry(const GroupData& gd, const SpecialEntry& entry,
                                                int max_degree) {
    TwoGenReport rep;
    Character triv = character_of(gd, ModuleId::trivial());
    const int d1 = entry.gen1.degree(), d2 = entry.gen2.degree();
    if (max_degree < std::max(d1, d2))
        throw std::domain_error("verify_two_generation: degree bound below generator degree");
    for (int d = 0; d <= max_degree; ++d) {
        auto isotypic = relative_invariant_basis(gd, entry.chi, d);
        PolySpan span;
        long got = 0;
        for (const BiPoly* gen : {&entry.gen1, &entry.gen2}) {
            int rem = d - gen->degree();
            if (rem < 0) continue;
            for (const auto& inv : relative_invariant_basis(gd, triv, rem))
                if (span.insert(inv * *gen)) ++got;
        }
        bool covers = got == static_cast<long>(isotypic.size());
        for (const auto& vec : isotypic)
            if (covers && !span.contains(vec)) covers = false;
        if (!covers) {
            rep.pass = false;
            rep.first_failure = d;
            std::ostringstream os;
            os << "degree " << d << ": module span (rank " << got
               << ") does not equal the isotypic space (dim " << isotypic.size() << ")";
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

inline TwoGenReport verify_two_generation(const GroupData& gd, const SpecialId& id, Basis basis,
                                          int max_degree) {
    return verify_two_generation_entry(gd, special_generators(gd, basis).at(id), max_degree);
}

/// Default bound: larger generator degree plus 4q, covering the first
/// nontrivial syzygy range.
inline int default_two_generation_degree(const GroupData& gd, const SpecialEntry& entry) {
    return std::max(entry.gen1.degree(), entry.gen2.degree()) + 4 * gd.q_i();
}

// --- the auxiliary quivers D1/D2 --------------------------------------------

/// Arrow of the auxiliary quiver, labelled by the exponent triple
/// (p, e2, e3) standing for (xy)^p g2^{e2} g3^{e3}.
struct AuxArrow {
    int from, to;  // vertices: 0 is R, t in nu+1..N is W_{i_t}
    std::array<int, 3> expo;
    std::string label;
};

struct AuxQuiver {
    Basis basis = Basis::W;
    int nu = 0, N = 0;
    std::vector<int> vertices;  // {0, nu+1, .., N}
    std::vector<AuxArrow> arrows;
};

namespace detail {

inline std::string aux_label(const std::array<int, 3>& e, Basis basis) {
    std::ostringstream os;
    bool any = false;
    const char* g2 = basis == Basis::W ? "w2" : "v2";
    const char* g3 = basis == Basis::W ? "w3" : "v3";
    if (e[0] > 0) {
        os << "(xy)";
        if (e[0] > 1) os << "^" << e[0];
        any = true;
    }
    if (e[1] > 0) {
        if (any) os << "*";
        os << g2;
        if (e[1] > 1) os << "^" << e[1];
        any = true;
    }
    if (e[2] > 0) {
        if (any) os << "*";
        os << g3;
        if (e[2] > 1) os << "^" << e[2];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

}  // namespace detail

/// The quiver D1 (w-basis) or D2 (v-basis) from the two-generation argument.
/// Only the paper's Case 1 is a quiver: nu < N-1 is required.
inline AuxQuiver build_aux_quiver(const GroupData& gd, Basis basis) {
    if (gd.nu >= gd.N - 1)
        throw std::domain_error("build_aux_quiver: nu = N-1 has no auxiliary quiver");
    AuxQuiver qv;
    qv.basis = basis;
    qv.nu = gd.nu;
    qv.N = gd.N;
    qv.vertices.push_back(0);
    for (int t = gd.nu + 1; t <= gd.N; ++t) qv.vertices.push_back(t);

    auto add = [&](int from, int to, std::array<int, 3> e) {
        qv.arrows.push_back({from, to, e, detail::aux_label(e, basis)});
    };

    const int nu = gd.nu, N = gd.N;
    // anticlockwise chain W_{i_{t+1}} -> W_{i_t} and R -> W_{i_N}
    for (int t = nu + 1; t <= N - 1; ++t) add(t + 1, t, {gd.i_i(t) - gd.i_i(t + 1), 0, 0});
    add(0, N, {1, 0, 0});
    // w2 up, (xy)^{r_2} and g = (xy)^{2 r_3} w2 down
    add(0, nu + 1, {0, 1, 0});
    add(nu + 1, 0, {gd.r_i(2), 0, 0});
    add(nu + 1, 0, {2 * gd.r_i(3), 1, 0});
    // clockwise chain W_{i_t} -> W_{i_{t+1}} and W_{i_N} -> R
    for (int t = nu + 1; t <= N - 1; ++t) add(t, t + 1, {0, gd.c_i(gd.l_i(t)), gd.d_i(gd.l_i(t))});
    add(N, 0, {0, gd.c_i(gd.l_i(N)), gd.d_i(gd.l_i(N))});
    // extra maps out of W_{i_{nu+1}} when alpha_{nu+1} > 3
    if (gd.alpha_i(nu + 1) > 3)
        for (int t = 2; t <= gd.alpha_i(nu + 1) - 2; ++t)
            add(nu + 1, 0, {gd.r_i(t + 2), gd.c_i(t + 1), gd.d_i(t + 1)});
    // extra maps out of W_{i_s} for later alpha_s > 2
    for (int s = nu + 2; s <= N; ++s) {
        if (gd.alpha_i(s) <= 2) continue;
        for (int t = 1; t <= gd.alpha_i(s) - 2; ++t) {
            int base = gd.l_i(s - 1);
            add(s, 0, {gd.r_i(t + base), gd.c_i(t - 1 + base), gd.d_i(t - 1 + base)});
        }
    }
    return qv;
}

struct CycleReport {
    bool pass = true;
    std::vector<std::string> failures;  // "(vertex, generator)" with no product cycle
    std::string detail;
};

namespace detail {

/// Bounded search for a closed path at `vertex` whose exponent triple sums to
/// `target`. All arrow exponents are nonnegative, so the budget prunes.
inline std::optional<std::vector<int>> find_product_cycle(const AuxQuiver& qv, int vertex,
                                                          const std::array<int, 3>& target) {
    struct State {
        int at;
        std::array<int, 3> used;
        std::vector<int> path;
    };
    std::set<std::pair<int, std::array<int, 3>>> seen;
    std::vector<State> stack{{vertex, {0, 0, 0}, {}}};
    seen.insert({vertex, {0, 0, 0}});
    while (!stack.empty()) {
        State s = stack.back();
        stack.pop_back();
        if (s.at == vertex && s.used == target && !s.path.empty()) return s.path;
        for (size_t ai = 0; ai < qv.arrows.size(); ++ai) {
            const auto& ar = qv.arrows[ai];
            if (ar.from != s.at) continue;
            std::array<int, 3> nu = {s.used[0] + ar.expo[0], s.used[1] + ar.expo[1],
                                     s.used[2] + ar.expo[2]};
            if (nu[0] > target[0] || nu[1] > target[1] || nu[2] > target[2]) continue;
            if (!seen.insert({ar.to, nu}).second) continue;
            State next{ar.to, nu, s.path};
            next.path.push_back(static_cast<int>(ai));
            if (next.at == vertex && nu == target) return next.path;
            stack.push_back(std::move(next));
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// For every vertex and every invariant generator, find a closed path whose
/// product of labels is that generator. Single products only; a miss is
/// reported, not escalated to sums of paths. Five found cycles are re-expanded
/// as polynomials against the generator as a guard on the symbol bookkeeping.
inline CycleReport verify_cycle_realization(const GroupData& gd, Basis basis) {
    AuxQuiver qv = build_aux_quiver(gd, basis);
    CycleReport rep;

    std::vector<std::pair<std::string, std::array<int, 3>>> targets;
    targets.push_back({"w1^{2(n-q)}", {2 * gd.nmq_i(), 0, 0}});
    for (int t = 2; t <= gd.e; ++t) {
        std::ostringstream os;
        os << "t=" << t;
        targets.push_back({os.str(), {gd.r_i(t), gd.c_i(t), gd.d_i(t)}});
    }

    std::vector<std::pair<std::vector<int>, std::array<int, 3>>> found;
    for (int v : qv.vertices) {
        for (const auto& [name, target] : targets) {
            auto cyc = detail::find_product_cycle(qv, v, target);
            if (!cyc) {
                rep.pass = false;
                std::ostringstream os;
                os << "no product cycle at vertex " << v << " for generator " << name;
                rep.failures.push_back(os.str());
            } else {
                found.push_back({*cyc, target});
            }
        }
    }

    // spot-check: expand a sample of found cycles into actual polynomials
    std::mt19937 rng(2654435769u);
    std::shuffle(found.begin(), found.end(), rng);
    auto [g2, g3] = basis_polys(gd, basis);
    for (size_t k = 0; k < found.size() && k < 5; ++k) {
        BiPoly prod(Rat(1));
        for (int ai : found[k].first) {
            const auto& e = qv.arrows[static_cast<size_t>(ai)].expo;
            prod = prod * xy_pow(e[0]) * g2.pow(e[1]) * g3.pow(e[2]);
        }
        const auto& e = found[k].second;
        BiPoly expect = xy_pow(e[0]) * g2.pow(e[1]) * g3.pow(e[2]);
        if (prod != expect) {
            rep.pass = false;
            rep.failures.push_back("cycle product expansion mismatch");
        }
    }
    if (!rep.pass && rep.detail.empty()) rep.detail = rep.failures.front();
    return rep;
}

/// nu = 0 only: W- sits on the top horn, W+ on the left horn, W_{i_t} on chain
/// vertex t. Keys match DualGraph::vertex_names.
inline std::map<std::string, std::string> assign_vertices(const GroupData& gd) {
    if (gd.nu != 0)
        throw std::domain_error("assign_vertices: only the reduced fundamental cycle case");
    std::map<std::string, std::string> out;
    out["W+"] = "+";
    out["W-"] = "-";
    for (int t = 1; t <= gd.N; ++t) {
        std::ostringstream key;
        key << "W" << gd.i(t);
        out[key.str()] = std::to_string(t);
    }
    return out;
}

}  // namespace recond
