#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "recond/action.hpp"
#include "recond/invgen.hpp"
#include "recond/specials.hpp"

namespace recond {

// Vertex encoding of the doubled-up quiver: 0 is the extended vertex (star),
// -1 is +, -2 is -, and 1..N are the chain vertices.
constexpr int kStar = 0;
constexpr int kPlus = -1;
constexpr int kMinus = -2;

inline std::string vertex_name(int v) {
    switch (v) {
        case kStar: return "*";
        case kPlus: return "+";
        case kMinus: return "-";
        default: return std::to_string(v);
    }
}

struct Arrow {
    std::string id;
    int tail = 0, head = 0;
    char kind = 'c';  // 'c', 'a' or 'k'
};

enum class Presentation { Moduli, Symmetric };

inline const char* presentation_name(Presentation p) {
    return p == Presentation::Moduli ? "moduli" : "symmetric";
}

/// The quiver Q of the reconstruction algebra (nu = 0 only), with the
/// bookkeeping attached to the k-arrow walk: the butt series B_r, the
/// u_i/v_i extremes, and the W_i/V_i "closest k to the left" data.
struct Quiver {
    int N = 0, e = 0;
    std::vector<Arrow> arrows;

    // B_r for 1 <= r <= e-2; B_1 = + (kPlus), otherwise the chain vertex b_r.
    std::vector<int> butt;
    // u_i/v_i where defined (chain vertices owning k-arrows; includes i = N
    // through the k_{e-2} = cN_0 convention).
    std::map<int, int> u, v;
    // W_i ("closest vertex to the left with a k leaving it", kPlus fallback)
    // and V_i = u_{W_i}, for 1 <= i <= N.
    std::vector<int> W, V;

    int arrow_index(const std::string& id) const {
        for (size_t k = 0; k < arrows.size(); ++k)
            if (arrows[k].id == id) return static_cast<int>(k);
        throw std::out_of_range("Quiver::arrow_index: " + id);
    }

    int B(int r) const {
        if (r < 1 || r > e - 2) throw std::out_of_range("Quiver::B index");
        return butt[static_cast<size_t>(r - 1)];
    }

    /// Arrow playing the role of k_r: a+0 for r = 1, cN_0 for r = e-2,
    /// a genuine k-arrow in between.
    std::string k_id(int r) const {
        if (r == 1) return "a+0";
        if (r == e - 2) return chain_c_id(N);
        if (r < 1 || r > e - 2) throw std::out_of_range("Quiver::k_id index");
        return "k" + std::to_string(r);
    }

    std::string chain_c_id(int t) const {  // c_{t,t+1}, with c_{N,N+1} = cN_0
        std::ostringstream os;
        os << "c" << t << "_" << (t == N ? 0 : t + 1);
        return os.str();
    }
    std::string chain_a_id(int t) const {  // a_{t+1,t}, with a_{N+1,N} = a0_N
        std::ostringstream os;
        if (t == N)
            os << "a0_" << N;
        else
            os << "a" << t + 1 << "_" << t;
        return os.str();
    }
};

inline void require_reduced_cycle(const GroupData& gd, const char* what) {
    if (gd.nu != 0)
        throw std::domain_error(std::string(what) +
                                ": nu > 0 (non-reduced fundamental cycle) is handled by the "
                                "companion construction and is out of scope here");
}

inline Quiver build_quiver(const GroupData& gd) {
    require_reduced_cycle(gd, "build_quiver");
    Quiver qv;
    qv.N = gd.N;
    qv.e = gd.e;
    const int N = gd.N, e = gd.e;

    auto add = [&qv](std::string id, int tail, int head, char kind) {
        qv.arrows.push_back({std::move(id), tail, head, kind});
    };
    add("c0+", kStar, kPlus, 'c');
    add("c+1", kPlus, 1, 'c');
    add("c0-", kStar, kMinus, 'c');
    add("c-1", kMinus, 1, 'c');
    add("a+0", kPlus, kStar, 'a');
    add("a-0", kMinus, kStar, 'a');
    add("a1+", 1, kPlus, 'a');
    add("a1-", 1, kMinus, 'a');
    for (int t = 1; t <= N; ++t) add(qv.chain_c_id(t), t, t == N ? kStar : t + 1, 'c');
    add(qv.chain_a_id(N), kStar, N, 'a');
    for (int t = N - 1; t >= 1; --t) add(qv.chain_a_id(t), t + 1, t, 'a');

    // butt: B_1 = +, B_r = b_r for 2 <= r <= e-2
    qv.butt.assign(static_cast<size_t>(e - 2), kPlus);
    for (int r = 2; r <= e - 2; ++r) qv.butt[static_cast<size_t>(r - 1)] = gd.b_i(r);

    // genuine k-arrows k_2..k_{e-3} leave vertex b_r
    for (int r = 2; r <= e - 3; ++r) add("k" + std::to_string(r), gd.b_i(r), kStar, 'k');

    // sanity against the alpha description of the extra arrows
    std::map<int, int> per_vertex;
    for (int r = 2; r <= e - 3; ++r) ++per_vertex[gd.b_i(r)];
    for (int i = 1; i <= N; ++i) {
        int expect = i == 1 ? std::max(0, gd.alpha_i(1) - 3) : std::max(0, gd.alpha_i(i) - 2);
        if (i == N && gd.alpha_i(N) > 2) expect = gd.alpha_i(N) - 2;
        if (per_vertex[i] != expect)
            throw std::logic_error("build_quiver: k-arrow count mismatch at vertex " +
                                   std::to_string(i));
    }

    for (int r = 2; r <= e - 2; ++r) {
        int i = gd.b_i(r);
        auto it = qv.v.find(i);
        if (it == qv.v.end()) qv.v[i] = r;
        qv.u[i] = r;
    }

    qv.W.assign(static_cast<size_t>(N + 1), kPlus);  // index = chain vertex, [0] unused
    qv.V.assign(static_cast<size_t>(N + 1), 1);
    auto vertex_has_extra = [&per_vertex](int j) { return per_vertex[j] > 0; };
    for (int i = 1; i <= N; ++i) {
        int w = kPlus;
        for (int j = 1; j < i; ++j)
            if (vertex_has_extra(j)) w = j;
        qv.W[static_cast<size_t>(i)] = w;
        qv.V[static_cast<size_t>(i)] = (w == kPlus) ? 1 : qv.u.at(w);
    }
    return qv;
}

struct PathTerm {
    Rat coeff;
    std::vector<int> arrows;  // indices into Quiver::arrows, composition left to right
};

struct Relation {
    std::string name;
    int tail = 0, head = 0;
    std::vector<PathTerm> lhs, rhs;
};

namespace detail {

using TermList = std::vector<PathTerm>;

inline TermList concat(const TermList& a, const TermList& b) {
    TermList out;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            PathTerm t;
            t.coeff = ta.coeff * tb.coeff;
            t.arrows = ta.arrows;
            t.arrows.insert(t.arrows.end(), tb.arrows.begin(), tb.arrows.end());
            out.push_back(std::move(t));
        }
    return out;
}

inline TermList single(const Quiver& qv, std::initializer_list<const char*> ids, Rat coeff = Rat(1)) {
    PathTerm t;
    t.coeff = coeff;
    for (const char* id : ids) t.arrows.push_back(qv.arrow_index(id));
    return {t};
}

inline TermList single_ids(const Quiver& qv, const std::vector<std::string>& ids,
                           Rat coeff = Rat(1)) {
    PathTerm t;
    t.coeff = coeff;
    for (const auto& id : ids) t.arrows.push_back(qv.arrow_index(id));
    return {t};
}

/// A_{0,t} = a0_N a_{N,N-1} ... a_{t+1,t}.
inline TermList A_path(const Quiver& qv, int t) {
    std::vector<std::string> ids{qv.chain_a_id(qv.N)};
    for (int s = qv.N - 1; s >= t; --s) ids.push_back(qv.chain_a_id(s));
    return single_ids(qv, ids);
}

/// C_{0,1} is the presentation-dependent composite hop past the horns.
inline TermList C01(const Quiver& qv, Presentation pres) {
    if (pres == Presentation::Moduli) return single(qv, {"c0+", "c+1"});
    TermList out = single(qv, {"c0+", "c+1"}, make_rat(1, 2));
    TermList minus = single(qv, {"c0-", "c-1"}, make_rat(1, 2));
    out.push_back(minus[0]);
    return out;
}

/// C_{0,t}; t may also be kPlus for C_{0,+} = c0+.
inline TermList C_path(const Quiver& qv, Presentation pres, int t) {
    if (t == kPlus) return single(qv, {"c0+"});
    TermList out = C01(qv, pres);
    for (int s = 1; s < t; ++s) out = concat(out, single_ids(qv, {qv.chain_c_id(s)}));
    return out;
}

}  // namespace detail

/// The defining relations: the four horn relations plus the Step 0..N
/// algorithm of the construction.
inline std::vector<Relation> relations_for(const GroupData& gd, const Quiver& qv,
                                           Presentation pres, const Rat& lambda) {
    using detail::A_path;
    using detail::C_path;
    using detail::concat;
    using detail::single;
    using detail::single_ids;
    if (lambda == 0) throw std::domain_error("relations: lambda must be nonzero");

    std::vector<Relation> rels;
    auto push = [&rels](std::string name, int tail, int head, detail::TermList lhs,
                        detail::TermList rhs) {
        rels.push_back({std::move(name), tail, head, std::move(lhs), std::move(rhs)});
    };

    const int N = qv.N, e = qv.e;

    {
        detail::TermList lhs = single(qv, {"c0+", "c+1"});
        detail::TermList m = single(qv, {"c0-", "c-1"}, Rat(-1));
        lhs.push_back(m[0]);
        detail::TermList rhs = A_path(qv, 1);
        rhs[0].coeff = lambda;
        push("1", kStar, 1, std::move(lhs), std::move(rhs));
    }
    push("2", kStar, kStar, single(qv, {"c0+", "a+0"}), single(qv, {"c0-", "a-0"}));
    push("3", kMinus, kMinus, single(qv, {"a-0", "c0-"}), single(qv, {"c-1", "a1-"}));
    push("4", 1, 1, single(qv, {"a1+", "c+1"}), single(qv, {"a1-", "c-1"}));
    push("step0", kPlus, kPlus, single(qv, {"a+0", "c0+"}), single(qv, {"c+1", "a1+"}));

    auto prev_cycle = [&](int i) {
        if (i == 1) return single(qv, {"a1+", "c+1"});
        return single_ids(qv, {qv.chain_a_id(i - 1), qv.chain_c_id(i - 1)});
    };
    auto k_term = [&](int r) { return single_ids(qv, {qv.k_id(r)}); };

    for (int i = 1; i <= N; ++i) {
        bool has_k = qv.v.count(i) && !(i == N && qv.v.at(i) == e - 2 && gd.alpha_i(N) == 2);
        std::string step = "step" + std::to_string(i);
        if (!has_k) {
            if (i < N) {
                push(step, i, i, single_ids(qv, {qv.chain_c_id(i), qv.chain_a_id(i)}),
                     prev_cycle(i));
            } else {
                push(step + ".a", N, N, single_ids(qv, {qv.chain_c_id(N), qv.chain_a_id(N)}),
                     prev_cycle(N));
                int VN = qv.V[static_cast<size_t>(N)];
                push(step + ".b", kStar, kStar, concat(C_path(qv, pres, qv.B(VN)), k_term(VN)),
                     single_ids(qv, {qv.chain_a_id(N), qv.chain_c_id(N)}));
            }
            continue;
        }
        const int vi = qv.v.at(i), ui = qv.u.at(i);
        push(step + ".in", i, i, concat(k_term(vi), A_path(qv, i)), prev_cycle(i));
        int Vi = qv.V[static_cast<size_t>(i)];
        push(step + ".in*", kStar, kStar, concat(A_path(qv, i), k_term(vi)),
             concat(C_path(qv, pres, qv.B(Vi)), k_term(Vi)));
        for (int t = vi; t < ui; ++t) {
            push(step + ".k" + std::to_string(t), i, i, concat(k_term(t), C_path(qv, pres, i)),
                 concat(k_term(t + 1), A_path(qv, i)));
            push(step + ".k" + std::to_string(t) + "*", kStar, kStar,
                 concat(C_path(qv, pres, i), k_term(t)), concat(A_path(qv, i), k_term(t + 1)));
        }
        if (i < N)
            push(step + ".out", i, i, concat(k_term(ui), C_path(qv, pres, i)),
                 single_ids(qv, {qv.chain_c_id(i), qv.chain_a_id(i)}));
    }
    return rels;
}

inline std::vector<Relation> relations(const GroupData& gd, Presentation pres) {
    require_reduced_cycle(gd, "relations");
    Quiver qv = build_quiver(gd);
    return relations_for(gd, qv, pres, Rat(4));
}

/// Ext^2 dimension table between the simples; the relation counts must match
/// it pair by pair.
inline std::map<std::pair<int, int>, long> ext2_expected(const GroupData& gd) {
    require_reduced_cycle(gd, "ext2_expected");
    std::map<std::pair<int, int>, long> out;
    out[{kPlus, kPlus}] = 1;
    out[{kMinus, kMinus}] = 1;
    long star = 1;
    for (int i = 1; i <= gd.N; ++i) {
        out[{i, i}] = gd.alpha_i(i) - 1;
        star += gd.alpha_i(i) - 2;
    }
    out[{kStar, kStar}] = star;
    out[{kStar, 1}] = 1;
    return out;
}

struct LabeledQuiver {
    Quiver quiver;
    Presentation presentation = Presentation::Moduli;
    std::vector<BiPoly> labels;  // parallel to quiver.arrows

    const BiPoly& label(const std::string& id) const {
        return labels[static_cast<size_t>(quiver.arrow_index(id))];
    }
};

/// Polynomial representatives of the irreducible maps:
///   c0+ = c+1 = x^q+y^q            c0- = c-1 = x^q-y^q
///   a1+ = a+0 = (xy)^{r_3}(x^q-y^q)  a1- = a-0 = (xy)^{r_3}(x^q+y^q)
///   a0N = xy   a_{t+1,t} = (xy)^{i_t - i_{t+1}}   c_{t,t+1} = g2^{c_{l_t}} g3^{d_{l_t}}
///   k_t = (xy)^{r_{t+2}} g2^{c_{t+1}} g3^{d_{t+1}}
/// with (g2,g3) = (w2,w3) in the moduli presentation, (v2,v3) in the symmetric.
inline LabeledQuiver label_arrows(const GroupData& gd, Presentation pres) {
    require_reduced_cycle(gd, "label_arrows");
    LabeledQuiver lq;
    lq.quiver = build_quiver(gd);
    lq.presentation = pres;
    const int q = gd.q_i();
    auto [g2, g3] = basis_polys(gd, pres == Presentation::Moduli ? Basis::W : Basis::V);

    lq.labels.resize(lq.quiver.arrows.size());
    auto set = [&](const std::string& id, const BiPoly& p) {
        lq.labels[static_cast<size_t>(lq.quiver.arrow_index(id))] = p;
    };
    set("c0+", plus_poly(q));
    set("c+1", plus_poly(q));
    set("c0-", minus_poly(q));
    set("c-1", minus_poly(q));
    set("a1+", xy_pow(gd.r_i(3)) * minus_poly(q));
    set("a+0", xy_pow(gd.r_i(3)) * minus_poly(q));
    set("a1-", xy_pow(gd.r_i(3)) * plus_poly(q));
    set("a-0", xy_pow(gd.r_i(3)) * plus_poly(q));
    set(lq.quiver.chain_a_id(gd.N), xy_pow(1));
    for (int t = 1; t <= gd.N - 1; ++t)
        set(lq.quiver.chain_a_id(t), xy_pow(gd.i_i(t) - gd.i_i(t + 1)));
    for (int t = 1; t <= gd.N; ++t)
        set(lq.quiver.chain_c_id(t), g2.pow(gd.c_i(gd.l_i(t))) * g3.pow(gd.d_i(gd.l_i(t))));
    for (int r = 2; r <= gd.e - 3; ++r)
        set("k" + std::to_string(r),
            xy_pow(gd.r_i(r + 2)) * g2.pow(gd.c_i(r + 1)) * g3.pow(gd.d_i(r + 1)));
    return lq;
}

inline BiPoly eval_terms(const LabeledQuiver& lq, const std::vector<PathTerm>& terms) {
    BiPoly out;
    for (const auto& t : terms) {
        BiPoly prod(t.coeff);
        for (int ai : t.arrows) prod = prod * lq.labels[static_cast<size_t>(ai)];
        out = out + prod;
    }
    return out;
}

struct RelationReport {
    bool pass = true;
    std::vector<std::string> failed_relations;
    bool counts_ok = true;
    bool characters_ok = true;
    bool well_formed = true;
    std::string detail;
};

inline Character vertex_character(const GroupData& gd, int v) {
    switch (v) {
        case kStar: return character_of(gd, ModuleId::trivial());
        case kPlus: return character_of(gd, ModuleId::Wplus());
        case kMinus: return character_of(gd, ModuleId::Wminus());
        default: return character_of(gd, ModuleId::W(gd.i(v)));
    }
}

/// Every path in a relation must compose and share the relation's endpoints.
inline bool relation_well_formed(const Quiver& qv, const Relation& rel) {
    auto check_terms = [&](const std::vector<PathTerm>& terms) {
        for (const auto& t : terms) {
            if (t.arrows.empty()) return false;
            int at = rel.tail;
            for (int ai : t.arrows) {
                const Arrow& ar = qv.arrows[static_cast<size_t>(ai)];
                if (ar.tail != at) return false;
                at = ar.head;
            }
            if (at != rel.head) return false;
        }
        return true;
    };
    return check_terms(rel.lhs) && check_terms(rel.rhs);
}

/// Substitute the polynomial labels into every relation and check lhs = rhs in
/// the polynomial ring; also check the per-vertex-pair relation counts against
/// the Ext^2 table and every label against its Hom-character.
inline RelationReport verify_relations(const GroupData& gd, Presentation pres) {
    RelationReport rep;
    LabeledQuiver lq = label_arrows(gd, pres);
    auto rels = relations(gd, pres);

    std::map<std::pair<int, int>, long> counts;
    for (const auto& rel : rels) {
        if (!relation_well_formed(lq.quiver, rel)) {
            rep.pass = rep.well_formed = false;
            rep.failed_relations.push_back(rel.name + " (ill-formed)");
            continue;
        }
        ++counts[{rel.tail, rel.head}];
        BiPoly diff = eval_terms(lq, rel.lhs) - eval_terms(lq, rel.rhs);
        if (!diff.is_zero()) {
            rep.pass = false;
            rep.failed_relations.push_back(rel.name);
        }
    }

    auto expect = ext2_expected(gd);
    if (counts != expect) {
        rep.pass = rep.counts_ok = false;
        std::ostringstream os;
        os << "relation counts differ from the Ext^2 table;";
        for (const auto& [k, v] : counts) {
            long want = expect.count(k) ? expect[k] : 0;
            if (v != want)
                os << " (" << vertex_name(k.first) << "," << vertex_name(k.second) << "): " << v
                   << " vs " << want;
        }
        rep.detail += os.str();
    }

    for (size_t k = 0; k < lq.quiver.arrows.size(); ++k) {
        const Arrow& ar = lq.quiver.arrows[k];
        Character want = char_hom(vertex_character(gd, ar.tail), vertex_character(gd, ar.head));
        if (!is_relative_invariant(lq.labels[k], gd, want)) {
            rep.pass = rep.characters_ok = false;
            rep.failed_relations.push_back("label-character:" + ar.id);
        }
    }
    if (!rep.pass && rep.detail.empty() && !rep.failed_relations.empty())
        rep.detail = "failed: " + rep.failed_relations.front();
    return rep;
}

struct LambdaReport {
    bool pass = true;
    std::map<std::string, Rat> kappa;  // arrow id -> rescaling (new = old / kappa)
    std::vector<std::string> failed_relations;
    std::string detail;
};

/// Relations with the 4 replaced by lambda, together with the constructive
/// rescaling witness: multipliers walk down the chain picking up powers of
/// 4/lambda at each k-arrow, and the rescaled labels must satisfy every
/// D(lambda) relation.
inline std::pair<std::vector<Relation>, LambdaReport> lambda_variant(const GroupData& gd,
                                                                     Presentation pres,
                                                                     const Rat& lambda) {
    require_reduced_cycle(gd, "lambda_variant");
    if (lambda == 0) throw std::domain_error("lambda_variant: lambda must be nonzero");
    Quiver qv = build_quiver(gd);
    auto rels = relations_for(gd, qv, pres, lambda);

    LabeledQuiver lq = label_arrows(gd, pres);
    const Rat lo4 = lambda / 4;  // lambda/4
    const Rat inv = 4 / lambda;  // 4/lambda

    // multipliers m (new label = m * old label); kappa = 1/m matches the
    // paper's convention new = old / kappa.
    std::map<std::string, Rat> m;
    for (const auto& ar : qv.arrows) m[ar.id] = Rat(1);
    m[qv.chain_a_id(qv.N)] = inv;  // a0N picks up 4/lambda

    Rat mc_accum(1);  // product of multipliers of the arrows of C_{0,i}
    Rat cur_c(1);     // multiplier of c_{i-1,i} (1 when i = 1)
    for (int i = 1; i <= qv.N; ++i) {
        bool has_k = qv.v.count(i) && !(i == qv.N && qv.v.at(i) == qv.e - 2 && gd.alpha_i(qv.N) == 2);
        if (!has_k) {
            m[qv.chain_c_id(i)] = (i == qv.N) ? cur_c * lo4 : cur_c;
        } else {
            const int vi = qv.v.at(i), ui = qv.u.at(i);
            m[qv.k_id(vi)] = cur_c * lo4;
            for (int t = vi; t < ui; ++t) m[qv.k_id(t + 1)] = m[qv.k_id(t)] * mc_accum * lo4;
            if (i < qv.N) m[qv.chain_c_id(i)] = m[qv.k_id(ui)] * mc_accum;
            // i == N: the loop already set the multiplier of cN_0 = k_{e-2}
        }
        mc_accum *= m[qv.chain_c_id(i)];
        cur_c = m[qv.chain_c_id(i)];
    }

    LambdaReport rep;
    LabeledQuiver scaled = lq;
    for (size_t k = 0; k < scaled.labels.size(); ++k) {
        const std::string& id = qv.arrows[k].id;
        scaled.labels[k] = m[id] * scaled.labels[k];
        rep.kappa[id] = 1 / m[id];
    }
    for (const auto& rel : rels) {
        BiPoly diff = eval_terms(scaled, rel.lhs) - eval_terms(scaled, rel.rhs);
        if (!diff.is_zero()) {
            rep.pass = false;
            rep.failed_relations.push_back(rel.name);
        }
    }
    if (!rep.pass) rep.detail = "rescaled labels fail: " + rep.failed_relations.front();
    return {std::move(rels), std::move(rep)};
}

}  // namespace recond
