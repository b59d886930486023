#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "recond/action.hpp"
#include "recond/bipoly.hpp"
#include "recond/groupdata.hpp"
#include "recond/linalg.hpp"

namespace recond {

enum class Basis { W, V };

inline const char* basis_name(Basis b) { return b == Basis::W ? "w" : "v"; }

/// The degree-2q building blocks. With a_2 = nu+2:
///   w2 = (x^q+y^q)(x^q+(-1)^{a2} y^q)   w3 = (x^q-y^q)(x^q+(-1)^{a2} y^q)
///   v2 = x^{2q}+(-1)^{a2} y^{2q}        v3 = x^{2q}+(-1)^{a2-1} y^{2q}
inline std::pair<BiPoly, BiPoly> basis_polys(const GroupData& gd, Basis basis) {
    const int q = gd.q_i();
    const int a2 = to_int(gd.a(2));
    const Rat sign = (a2 % 2 == 0) ? Rat(1) : Rat(-1);
    if (basis == Basis::W) {
        BiPoly mixed = BiPoly::monomial(q, 0);
        mixed.add_term(0, q, sign);
        return {plus_poly(q) * mixed, minus_poly(q) * mixed};
    }
    BiPoly v2 = BiPoly::monomial(2 * q, 0);
    v2.add_term(0, 2 * q, sign);
    BiPoly v3 = BiPoly::monomial(2 * q, 0);
    v3.add_term(0, 2 * q, -sign);
    return {v2, v3};
}

struct GeneratorItem {
    std::optional<int> t;  // index in 2..e, or nullopt for the w1 power
    BiPoly poly;

    std::string tag() const {
        if (!t) return "w1^{2(n-q)}";
        std::ostringstream os;
        os << "t=" << *t;
        return os.str();
    }
};

struct GeneratorList {
    Basis basis = Basis::W;
    std::vector<GeneratorItem> items;  // exactly e of them
};

/// The generating set of the invariant ring: (xy)^{2(n-q)} together with
/// (xy)^{r_t} g2^{c_t} g3^{d_t} for 2 <= t <= e.
inline GeneratorList invariant_generators(const GroupData& gd, Basis basis) {
    auto [g2, g3] = basis_polys(gd, basis);
    GeneratorList out;
    out.basis = basis;
    out.items.push_back({std::nullopt, xy_pow(2 * gd.nmq_i())});
    for (int t = 2; t <= gd.e; ++t) {
        BiPoly p = xy_pow(gd.r_i(t)) * g2.pow(gd.c_i(t)) * g3.pow(gd.d_i(t));
        out.items.push_back({t, p});
    }
    return out;
}

/// Dimensions, per degree, of the span of all monomials in the generators of
/// total degree <= max_degree, by exact row reduction.
inline std::map<int, long> subalgebra_hilbert(const GeneratorList& gens, int max_degree) {
    std::map<int, std::vector<BiPoly>> products;
    products[0].push_back(BiPoly(Rat(1)));

    std::vector<int> degs;
    for (const auto& item : gens.items) degs.push_back(item.poly.degree());

    // Multisets of generators, enumerated by non-decreasing generator index.
    struct Frame {
        size_t idx;
        int deg;
        BiPoly value;
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, BiPoly(Rat(1))});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (size_t k = f.idx; k < gens.items.size(); ++k) {
            int nd = f.deg + degs[k];
            if (nd > max_degree) continue;
            BiPoly nv = f.value * gens.items[k].poly;
            products[nd].push_back(nv);
            stack.push_back({k, nd, std::move(nv)});
        }
    }

    std::map<int, long> dims;
    for (int d = 0; d <= max_degree; ++d) {
        auto it = products.find(d);
        if (it == products.end()) {
            dims[d] = 0;
            continue;
        }
        PolySpan span;
        for (const auto& p : it->second) span.insert(p);
        dims[d] = span.rank();
    }
    return dims;
}

struct GenerationReport {
    bool pass = true;
    int first_discrepancy = -1;
    long expected = 0, got = 0;
    std::string detail;
};

/// Certify, degree by degree up to max_degree, that the generator list spans
/// the full trivial-character invariant ring. Failure is a report, not an
/// exception.
inline GenerationReport verify_generation_list(const GroupData& gd, const GeneratorList& gens,
                                               int max_degree) {
    GenerationReport rep;
    auto sub = subalgebra_hilbert(gens, max_degree);
    Character triv = character_of(gd, ModuleId::trivial());
    for (int d = 0; d <= max_degree; ++d) {
        long want = relative_invariant_dim(gd, triv, d);
        long got = sub.count(d) ? sub[d] : 0;
        if (want != got) {
            rep.pass = false;
            rep.first_discrepancy = d;
            rep.expected = want;
            rep.got = got;
            std::ostringstream os;
            os << "degree " << d << ": subalgebra dim " << got << " != invariant dim " << want;
            rep.detail = os.str();
            return rep;
        }
    }
    return rep;
}

inline GenerationReport verify_generation(const GroupData& gd, Basis basis, int max_degree) {
    return verify_generation_list(gd, invariant_generators(gd, basis), max_degree);
}

/// Default certification bound: the group order, capped at 200.
inline int default_generation_degree(const GroupData& gd) {
    Int cap = gd.order < 200 ? gd.order : Int(200);
    return to_int(cap);
}

}  // namespace recond
