#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "recond/moduli.hpp"
#include "recond/reconalg.hpp"
#include "recond/specials.hpp"

namespace recond {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// polynomial serialization (graded-lex record list, "num/den" coefficients)
// ---------------------------------------------------------------------------

inline json poly_json(const BiPoly& p) {
    json out = json::array();
    for (const auto& rec : serialize_poly(p))
        out.push_back(json{{"a", rec.a}, {"b", rec.b}, {"coeff", rec.coeff}});
    return out;
}

inline BiPoly poly_from_json(const json& j) {
    std::vector<PolyRecord> recs;
    for (const auto& item : j)
        recs.push_back({item.at("a").get<int>(), item.at("b").get<int>(),
                        item.at("coeff").get<std::string>()});
    return deserialize_poly(recs);
}

inline json ratfunc_json(const RatFunc& f) {
    return json{{"num", poly_json(f.num)}, {"den", poly_json(f.den)}};
}

// ---------------------------------------------------------------------------
// info
// ---------------------------------------------------------------------------

namespace emit_detail {

inline std::string int_list(const std::vector<Int>& v) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += v[k].get_str();
    }
    return out;
}

template <typename F>
std::string series_list(int lo, int hi, F f) {
    std::string out;
    for (int j = lo; j <= hi; ++j) {
        if (j > lo) out += ",";
        out += f(j).get_str();
    }
    return out;
}

}  // namespace emit_detail

inline std::string info_text(const GroupData& gd) {
    using emit_detail::int_list;
    using emit_detail::series_list;
    std::ostringstream os;
    os << "D(" << gd.n.get_str() << "," << gd.q.get_str() << ")  order " << gd.order.get_str()
       << "  nu " << gd.nu << "  (n-q " << (gd.nq_odd ? "odd" : "even") << ")\n";
    os << "n/q = " << gd.n.get_str() << "/" << gd.q.get_str() << " = ["
       << int_list(gd.alpha_cf.coeffs) << "]\n";
    os << "n/(n-q) = " << gd.n.get_str() << "/" << Int(gd.n - gd.q).get_str() << " = ["
       << int_list(gd.a_cf.coeffs) << "]\n";
    os << "i[0.." << gd.N + 1 << "] = " << int_list(gd.alpha_series.i_vals) << "\n";
    os << "j[0.." << gd.N + 1 << "] = " << int_list(gd.alpha_series.j_vals) << "\n";
    os << "l[1.." << gd.N << "] = " << int_list(gd.alpha_series.l_vals) << "\n";
    os << "b[0.." << gd.alpha_series.lX() - 1 << "] = " << int_list(gd.alpha_series.b_vals)
       << "\n";
    os << "c[2.." << gd.e << "] = " << series_list(2, gd.e, [&](int j) { return gd.c(j); })
       << "\n";
    os << "d[2.." << gd.e << "] = " << series_list(2, gd.e, [&](int j) { return gd.d(j); })
       << "\n";
    os << "t[2.." << gd.e << "] = " << series_list(2, gd.e, [&](int j) { return gd.t(j); })
       << "\n";
    os << "r[2.." << gd.e << "] = " << series_list(2, gd.e, [&](int j) { return gd.r(j); })
       << "\n";
    os << "Delta[" << gd.nu + 1 << ".." << gd.N + 1 << "] = "
       << series_list(gd.nu + 1, gd.N + 1, [&](int k) { return gd.Delta(k); }) << "\n";
    os << "Gamma[" << gd.nu + 1 << ".." << gd.N + 1 << "] = "
       << series_list(gd.nu + 1, gd.N + 1, [&](int k) { return gd.Gamma(k); }) << "\n";
    auto dg = dual_graph(gd);
    os << "dual graph: ";
    for (size_t k = 0; k < dg.vertex_names.size(); ++k) {
        if (k) os << " ";
        os << dg.vertex_names[k] << "(" << dg.self_intersection[k].get_str() << ")";
    }
    os << "\nfundamental cycle: ";
    for (size_t k = 0; k < dg.vertex_names.size(); ++k) {
        if (k) os << " ";
        os << dg.vertex_names[k] << ":" << dg.fundamental_cycle[k].get_str();
    }
    os << "\n";
    return os.str();
}

inline json info_json(const GroupData& gd) {
    json j;
    j["n"] = gd.n.get_str();
    j["q"] = gd.q.get_str();
    j["order"] = gd.order.get_str();
    j["nu"] = gd.nu;
    j["nq_parity"] = gd.nq_odd ? "odd" : "even";
    auto ints = [](const std::vector<Int>& v) {
        json out = json::array();
        for (const auto& x : v) out.push_back(x.get_str());
        return out;
    };
    j["alpha"] = ints(gd.alpha_cf.coeffs);
    j["a"] = ints(gd.a_cf.coeffs);
    j["series"] = json{{"i", ints(gd.alpha_series.i_vals)},
                       {"j", ints(gd.alpha_series.j_vals)},
                       {"l", ints(gd.alpha_series.l_vals)},
                       {"b", ints(gd.alpha_series.b_vals)},
                       {"c", ints(gd.c_vals)},
                       {"d", ints(gd.d_vals)},
                       {"t", ints(gd.t_vals)},
                       {"r", ints(gd.r_vals)},
                       {"delta", ints(gd.delta_vals)},
                       {"gamma", ints(gd.gamma_vals)}};
    auto dg = dual_graph(gd);
    json graph;
    graph["vertices"] = dg.vertex_names;
    graph["self_intersection"] = ints(dg.self_intersection);
    json edges = json::array();
    for (auto [aa, bb] : dg.edges) edges.push_back(json::array({aa, bb}));
    graph["edges"] = edges;
    graph["fundamental_cycle"] = ints(dg.fundamental_cycle);
    j["dual_graph"] = graph;
    return j;
}

// ---------------------------------------------------------------------------
// invariants / specials
// ---------------------------------------------------------------------------

inline std::string invariants_text(const GroupData& gd, Basis basis) {
    auto gens = invariant_generators(gd, basis);
    std::ostringstream os;
    os << "invariant generators of D(" << gd.n.get_str() << "," << gd.q.get_str() << "), "
       << basis_name(basis) << "-basis, " << gens.items.size() << " items\n";
    for (const auto& item : gens.items)
        os << "  [" << item.tag() << "] deg " << item.poly.degree() << ": " << item.poly.str()
           << "\n";
    return os.str();
}

inline json invariants_json(const GroupData& gd, Basis basis) {
    auto gens = invariant_generators(gd, basis);
    json items = json::array();
    for (const auto& item : gens.items)
        items.push_back(json{{"tag", item.tag()},
                             {"degree", item.poly.degree()},
                             {"poly", poly_json(item.poly)}});
    return json{{"n", gd.n.get_str()},
                {"q", gd.q.get_str()},
                {"basis", basis_name(basis)},
                {"items", items}};
}

inline std::string specials_text(const GroupData& gd, Basis basis) {
    auto table = special_generators(gd, basis);
    std::ostringstream os;
    os << "special CM modules of D(" << gd.n.get_str() << "," << gd.q.get_str() << "), "
       << basis_name(basis) << "-choice\n";
    for (const auto& en : table.entries)
        os << "  " << en.id.name(gd) << ": " << en.gen1.str() << "  |  " << en.gen2.str() << "\n";
    if (gd.nu == 0) {
        os << "vertex assignment:";
        for (const auto& [mod, vtx] : assign_vertices(gd)) os << " " << mod << "->" << vtx;
        os << "\n";
    }
    return os.str();
}

inline json specials_json(const GroupData& gd, Basis basis) {
    auto table = special_generators(gd, basis);
    json entries = json::array();
    for (const auto& en : table.entries)
        entries.push_back(json{{"module", en.id.name(gd)},
                               {"gen1", poly_json(en.gen1)},
                               {"gen2", poly_json(en.gen2)}});
    json j{{"n", gd.n.get_str()},
           {"q", gd.q.get_str()},
           {"basis", basis_name(basis)},
           {"entries", entries}};
    if (gd.nu == 0) j["vertex_assignment"] = assign_vertices(gd);
    return j;
}

// ---------------------------------------------------------------------------
// quiver / relations / labels
// ---------------------------------------------------------------------------

inline std::string dot_vertex(int v) { return v == kStar ? "\xE2\x8B\x86" : vertex_name(v); }

inline std::string quiver_dot(const Quiver& qv, const LabeledQuiver* labels = nullptr) {
    std::ostringstream os;
    os << "digraph quiver {\n  rankdir=LR;\n";
    os << "  \"" << dot_vertex(kMinus) << "\";\n";
    os << "  \"" << dot_vertex(kPlus) << "\";\n";
    for (int t = 1; t <= qv.N; ++t) os << "  \"" << t << "\";\n";
    os << "  \"" << dot_vertex(kStar) << "\";\n";
    for (size_t k = 0; k < qv.arrows.size(); ++k) {
        const Arrow& ar = qv.arrows[k];
        os << "  \"" << dot_vertex(ar.tail) << "\" -> \"" << dot_vertex(ar.head) << "\" [label=\"";
        if (labels) {
            os << labels->labels[k].str();
        } else {
            os << ar.id;
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string quiver_text(const Quiver& qv) {
    std::ostringstream os;
    os << "quiver with N = " << qv.N << ", e = " << qv.e << "\n";
    for (const auto& ar : qv.arrows)
        os << "  " << ar.id << ": " << vertex_name(ar.tail) << " -> " << vertex_name(ar.head)
           << " [" << ar.kind << "]\n";
    os << "butt B[1.." << qv.e - 2 << "]:";
    for (int r = 1; r <= qv.e - 2; ++r) os << " " << vertex_name(qv.B(r));
    os << "\n";
    return os.str();
}

inline json quiver_json(const Quiver& qv) {
    json arrows = json::array();
    for (const auto& ar : qv.arrows)
        arrows.push_back(json{{"id", ar.id},
                              {"tail", vertex_name(ar.tail)},
                              {"head", vertex_name(ar.head)},
                              {"kind", std::string(1, ar.kind)}});
    json butt = json::array();
    for (int r = 1; r <= qv.e - 2; ++r) butt.push_back(vertex_name(qv.B(r)));
    return json{{"N", qv.N}, {"e", qv.e}, {"arrows", arrows}, {"butt", butt}};
}

inline json relation_json(const Quiver& qv, const Relation& rel) {
    auto side = [&](const std::vector<PathTerm>& terms) {
        json out = json::array();
        for (const auto& t : terms) {
            json paths = json::array();
            for (int ai : t.arrows) paths.push_back(qv.arrows[static_cast<size_t>(ai)].id);
            out.push_back(json{{"coeff", rat_str(t.coeff)}, {"path", paths}});
        }
        return out;
    };
    return json{{"name", rel.name},
                {"tail", vertex_name(rel.tail)},
                {"head", vertex_name(rel.head)},
                {"lhs", side(rel.lhs)},
                {"rhs", side(rel.rhs)}};
}

inline std::string relation_text(const Quiver& qv, const Relation& rel) {
    auto side = [&](const std::vector<PathTerm>& terms) {
        std::string out;
        for (size_t k = 0; k < terms.size(); ++k) {
            if (k) out += " + ";
            if (terms[k].coeff != 1) out += rat_str(terms[k].coeff) + "*";
            for (size_t a = 0; a < terms[k].arrows.size(); ++a) {
                if (a) out += ".";
                out += qv.arrows[static_cast<size_t>(terms[k].arrows[a])].id;
            }
        }
        return out;
    };
    return rel.name + ": " + side(rel.lhs) + " = " + side(rel.rhs);
}

inline std::string relations_text(const GroupData& gd, Presentation pres) {
    Quiver qv = build_quiver(gd);
    auto rels = relations(gd, pres);
    std::ostringstream os;
    os << "relations of D(" << gd.n.get_str() << "," << gd.q.get_str() << "), "
       << presentation_name(pres) << " presentation, " << rels.size() << " relations\n";
    for (const auto& rel : rels) os << "  " << relation_text(qv, rel) << "\n";
    return os.str();
}

inline json relations_json(const GroupData& gd, Presentation pres) {
    Quiver qv = build_quiver(gd);
    json rels = json::array();
    for (const auto& rel : relations(gd, pres)) rels.push_back(relation_json(qv, rel));
    return json{{"n", gd.n.get_str()},
                {"q", gd.q.get_str()},
                {"presentation", presentation_name(pres)},
                {"relations", rels}};
}

inline std::string labels_text(const GroupData& gd, Presentation pres) {
    auto lq = label_arrows(gd, pres);
    std::ostringstream os;
    os << "arrow labels of D(" << gd.n.get_str() << "," << gd.q.get_str() << "), "
       << presentation_name(pres) << " presentation\n";
    for (size_t k = 0; k < lq.quiver.arrows.size(); ++k)
        os << "  " << lq.quiver.arrows[k].id << " = " << lq.labels[k].str() << "\n";
    return os.str();
}

inline json labels_json(const GroupData& gd, Presentation pres) {
    auto lq = label_arrows(gd, pres);
    json labels = json::array();
    for (size_t k = 0; k < lq.quiver.arrows.size(); ++k)
        labels.push_back(
            json{{"arrow", lq.quiver.arrows[k].id}, {"poly", poly_json(lq.labels[k])}});
    return json{{"n", gd.n.get_str()},
                {"q", gd.q.get_str()},
                {"presentation", presentation_name(pres)},
                {"labels", labels}};
}

// ---------------------------------------------------------------------------
// charts
// ---------------------------------------------------------------------------

namespace emit_detail {

inline std::string bc_mono(int eb, int ec) {
    std::string out;
    if (eb > 0) {
        out += "b";
        if (eb > 1) out += "^" + std::to_string(eb);
    }
    if (ec > 0) {
        if (!out.empty()) out += "*";
        out += "c";
        if (ec > 1) out += "^" + std::to_string(ec);
    }
    return out;
}

}  // namespace emit_detail

/// Shape-aware equation rendering, e.g. "a*(1-4*b^4*c^15)-b^7*c^26".
inline std::string equation_string(const TriPoly& eq, const ShapeInfo& info) {
    using emit_detail::bc_mono;
    switch (info.shape) {
        case ChartShape::TypeA: {
            std::string u = "a*(1-4";
            std::string bc = bc_mono(info.E, info.F);
            if (!bc.empty()) u += "*" + bc;
            u += ")";
            return u + "-" + bc_mono(info.eta, info.theta);
        }
        case ChartShape::TypeN: return "a*(c-4)-b*c";
        case ChartShape::TypePlus: return "b*(a^2*c+4)-a*c";
        case ChartShape::TypeMinus: return "b*(a^2*c-4)-a*c";
        default: return eq.str();
    }
}

inline json chart_json(const Chart& ch, const std::vector<GlueMap>& glues) {
    json j;
    j["id"] = ch.id;
    j["equation"] = equation_string(ch.equation, ch.shape);
    j["open_conditions"] = ch.open_conditions;
    j["coordinate_arrows"] = ch.coordinate_arrows;
    if (ch.exponents) {
        j["exponents"] = json{{"eta_plus", ch.exponents->eta_plus},
                              {"theta_plus", ch.exponents->theta_plus},
                              {"eta_sum", ch.exponents->eta_sum},
                              {"theta_sum", ch.exponents->theta_sum}};
    } else {
        j["exponents"] = nullptr;
    }
    json ratios = json::array();
    for (const auto& r : ch.ratios) ratios.push_back(ratfunc_json(r));
    j["ratios"] = ratios;
    if (ch.alt_ratio) {
        j["alt_ratio"] = ratfunc_json(*ch.alt_ratio);
        j["alt_equation"] = ch.alt_equation->str({"a", "b", "d"});
    }
    json gl = json::array();
    for (const auto& g : glues) {
        if (g.source != ch.id) continue;
        json transform = json::array();
        for (const auto& im : g.transform.image) transform.push_back(im.str());
        gl.push_back(json{{"target", g.target}, {"transform", transform}, {"via_d", g.source_uses_d}});
    }
    j["glues"] = gl;
    return j;
}

inline json charts_json(const GroupData& gd) {
    auto cs = charts(gd);
    auto glues = glue_maps_list(gd);
    json arr = json::array();
    for (const auto& ch : cs) arr.push_back(chart_json(ch, glues));
    return json{{"n", gd.n.get_str()}, {"q", gd.q.get_str()}, {"charts", arr}};
}

inline std::string charts_text(const GroupData& gd) {
    auto cs = charts(gd);
    auto glues = glue_maps_list(gd);
    std::ostringstream os;
    os << "charts of the minimal resolution of C^2/D(" << gd.n.get_str() << ","
       << gd.q.get_str() << "): " << cs.size() << " open sets\n";
    for (const auto& ch : cs) {
        os << "  " << ch.id << ": " << equation_string(ch.equation, ch.shape) << " = 0";
        os << "  [" << ch.coordinate_arrows[0] << "," << ch.coordinate_arrows[1] << ","
           << ch.coordinate_arrows[2] << "]\n";
    }
    os << "glues:\n";
    for (const auto& g : glues) {
        os << "  " << g.source << " <-> " << g.target << ": (a,b,"
           << (g.source_uses_d ? "d" : "c") << ") -> (";
        for (int k = 0; k < 3; ++k) {
            if (k) os << ",";
            os << g.transform.image[static_cast<size_t>(k)].str(
                {"a", "b", g.source_uses_d ? "d" : "c"});
        }
        os << ")\n";
    }
    return os.str();
}

}  // namespace recond
