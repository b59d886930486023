#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "recond/reconalg.hpp"
#include "recond/tripoly.hpp"

namespace recond {

enum class ChartShape { TypeA, TypeN, TypePlus, TypeMinus, Binomial, Unknown };

struct ShapeInfo {
    ChartShape shape = ChartShape::Unknown;
    int E = 0, F = 0;      // u = 1 - 4 b^E c^F (TypeA)
    int eta = 0, theta = 0;  // right hand side b^eta c^theta (TypeA)
};

/// Match the normalized equation against the documented shapes; also fixes the
/// canonical sign (returned polynomial may be the negation of the input).
inline std::optional<std::pair<TriPoly, ShapeInfo>> classify_equation(const TriPoly& eq_in) {
    for (int sgn = 0; sgn < 2; ++sgn) {
        TriPoly eq = sgn == 0 ? eq_in : Rat(-1) * eq_in;
        const auto& ts = eq.terms();
        // TypeA: a - 4 a b^E c^F - b^eta c^theta
        if (ts.size() == 3 && eq.terms().count(Mon3{{1, 0, 0}}) &&
            eq.terms().at(Mon3{{1, 0, 0}}) == 1) {
            std::optional<std::pair<int, int>> u_part, m_part;
            bool ok = true;
            for (const auto& [m, c] : ts) {
                if (m == Mon3{{1, 0, 0}}) continue;
                if (m.e[0] == 1 && c == -4) {
                    u_part = {m.e[1], m.e[2]};
                } else if (m.e[0] == 0 && c == -1) {
                    m_part = {m.e[1], m.e[2]};
                } else {
                    ok = false;
                }
            }
            if (ok && u_part && m_part) {
                ShapeInfo info;
                info.shape = ChartShape::TypeA;
                info.E = u_part->first;
                info.F = u_part->second;
                info.eta = m_part->first;
                info.theta = m_part->second;
                return {{eq, info}};
            }
        }
        // TypeN: ac - 4a - bc
        if (ts.size() == 3 && ts.count(Mon3{{1, 0, 1}}) && ts.at(Mon3{{1, 0, 1}}) == 1 &&
            ts.count(Mon3{{1, 0, 0}}) && ts.at(Mon3{{1, 0, 0}}) == -4 &&
            ts.count(Mon3{{0, 1, 1}}) && ts.at(Mon3{{0, 1, 1}}) == -1) {
            ShapeInfo info;
            info.shape = ChartShape::TypeN;
            return {{eq, info}};
        }
        // Type+-: a^2 b c +- 4b - ac
        if (ts.size() == 3 && ts.count(Mon3{{2, 1, 1}}) && ts.at(Mon3{{2, 1, 1}}) == 1 &&
            ts.count(Mon3{{0, 1, 0}}) && ts.count(Mon3{{1, 0, 1}}) &&
            ts.at(Mon3{{1, 0, 1}}) == -1) {
            const Rat& cb = ts.at(Mon3{{0, 1, 0}});
            if (cb == 4 || cb == -4) {
                ShapeInfo info;
                info.shape = cb == 4 ? ChartShape::TypePlus : ChartShape::TypeMinus;
                return {{eq, info}};
            }
        }
        if (ts.size() == 2) {
            ShapeInfo info;
            info.shape = ChartShape::Binomial;
            return {{eq, info}};
        }
    }
    return std::nullopt;
}

struct SmoothReport {
    bool smooth = true;
    ChartShape shape = ChartShape::Unknown;
    std::string reason;
};

/// Shape-specific smoothness decision, executed exactly.
///
/// TypeA f = a u - m with u = 1 - 4 b^E c^F, m = b^eta c^theta: a singular
/// point needs u = 0 and m = 0; m = 0 forces b = 0 or c = 0. When both E,F
/// are positive u = 1 there; when u survives on such a locus the remaining
/// partials decide (singular exactly when the vanishing branch keeps every
/// partial zero, which happens iff the exponent on the vanishing variable
/// exceeds 1). TypeN and Type+- reduce to finite contradictions.
inline SmoothReport smoothness_check(const TriPoly& equation) {
    auto cls = classify_equation(equation);
    if (!cls) throw std::domain_error("smoothness_check: unrecognized equation shape");
    const auto& [eq, info] = *cls;
    SmoothReport rep;
    rep.shape = info.shape;
    switch (info.shape) {
        case ChartShape::TypeA: {
            if (info.E == 0 && info.F == 0) {
                rep.smooth = true;  // u = -3 never vanishes
                rep.reason = "u is the nonzero constant -3";
            } else if (info.E >= 1 && info.F >= 1) {
                rep.smooth = true;
                rep.reason = "m = 0 forces b = 0 or c = 0, where u = 1";
            } else if (info.E == 0) {
                rep.smooth = info.eta <= 1;
                rep.reason = rep.smooth ? "b = 0 branch has d/db = -c^theta != 0"
                                        : "singular along b = 0, u = 0 (eta > 1)";
            } else {  // F == 0
                rep.smooth = info.theta <= 1;
                rep.reason = rep.smooth ? "c = 0 branch has d/dc = -b^eta != 0"
                                        : "singular along c = 0, u = 0 (theta > 1)";
            }
            break;
        }
        case ChartShape::TypeN:
            rep.smooth = true;
            rep.reason = "df/da = c - 4 and f force c = 4 and c = 0 at once";
            break;
        case ChartShape::TypePlus:
        case ChartShape::TypeMinus:
            rep.smooth = true;
            rep.reason = "a^2 c = -+4 forces a,c != 0, then df/dc and df/da cannot both vanish";
            break;
        case ChartShape::Binomial: {
            int d1 = eq.terms().begin()->first.degree();
            int d2 = eq.terms().rbegin()->first.degree();
            rep.smooth = !(d1 >= 2 && d2 >= 2);
            rep.reason = rep.smooth ? "a monomial of degree <= 1 keeps the gradient nonzero"
                                    : "singular at the origin";
            break;
        }
        default: throw std::domain_error("smoothness_check: unrecognized equation shape");
    }
    return rep;
}

struct ChartExponents {
    int eta_plus = 0, theta_plus = 0;
    int eta_sum = 0, theta_sum = 0;
};

struct GlueMap {
    std::string source, target;
    bool source_uses_d = false;  // U_N glues to U_+ through the d coordinate
    MonoMap transform;
};

struct Chart {
    std::string id;
    std::vector<std::string> open_conditions;       // arrow words required nonzero
    std::array<std::string, 3> coordinate_arrows;
    TriPoly equation;                               // normalized c-form
    ShapeInfo shape;
    std::optional<ChartExponents> exponents;        // U_0..U_{N-1}
    std::array<RatFunc, 3> ratios;
    std::optional<RatFunc> alt_ratio;               // U_N: the d choice
    std::optional<TriPoly> alt_equation;            // U_N in (a,b,d)
};

namespace detail {

struct ChartSpec {
    std::string id;
    std::vector<std::string> ones;
    std::array<std::string, 3> coords;
    std::vector<std::vector<std::string>> open_words;
};

inline std::vector<ChartSpec> chart_specs(const GroupData& gd, const Quiver& qv) {
    const int N = gd.N;
    std::vector<ChartSpec> specs;

    auto C_word = [&](int upto) {  // C_{0,upto} arrow ids
        std::vector<std::string> w{"c0+", "c+1"};
        for (int s = 1; s < upto; ++s) w.push_back(qv.chain_c_id(s));
        return w;
    };
    auto A_word = [&](int downto) {  // A_{0,downto} arrow ids
        std::vector<std::string> w{qv.chain_a_id(N)};
        for (int s = N - 1; s >= downto; --s) w.push_back(qv.chain_a_id(s));
        return w;
    };

    {
        ChartSpec s;
        s.id = "U0";
        s.ones = C_word(N);
        s.ones.push_back("c0-");
        s.coords = {"a1-", qv.chain_c_id(N), qv.chain_a_id(N)};
        s.open_words = {C_word(N), {"c0-"}};
        specs.push_back(std::move(s));
    }
    for (int t = 1; t <= N - 1; ++t) {
        ChartSpec s;
        s.id = "U" + std::to_string(t);
        s.ones = C_word(N - t);
        s.ones.push_back("c0-");
        auto aw = A_word(N - t + 1);
        s.ones.insert(s.ones.end(), aw.begin(), aw.end());
        s.coords = {"a1-", qv.chain_c_id(N - t), qv.chain_a_id(N - t)};
        s.open_words = {C_word(N - t), {"c0-"}, aw};
        specs.push_back(std::move(s));
    }
    {
        ChartSpec s;
        s.id = "U" + std::to_string(N);
        s.ones = {"c0+", "c0-"};
        auto aw = A_word(1);
        s.ones.insert(s.ones.end(), aw.begin(), aw.end());
        s.coords = {"a1-", "a1+", "c+1"};
        s.open_words = {{"c0+"}, {"c0-"}, aw};
        specs.push_back(std::move(s));
    }
    {
        ChartSpec s;
        s.id = "U+";
        s.ones = {"c0+", "a1-"};
        auto aw = A_word(1);
        s.ones.insert(s.ones.end(), aw.begin(), aw.end());
        s.coords = {"c0-", "a1+", "a-0"};
        s.open_words = {{"c0+"}, aw, {"a1-"}};
        specs.push_back(std::move(s));
    }
    {
        ChartSpec s;
        s.id = "U-";
        s.ones = {"c0-", "a1+"};
        auto aw = A_word(1);
        s.ones.insert(s.ones.end(), aw.begin(), aw.end());
        s.coords = {"c0+", "a1-", "a+0"};
        s.open_words = {{"c0-"}, aw, {"a1+"}};
        specs.push_back(std::move(s));
    }
    return specs;
}

struct EliminationResult {
    std::vector<RatFunc3> values;  // value per arrow
    TriPoly equation;              // normalized minimal residual
};

inline std::string join_word(const std::vector<std::string>& ids) {
    std::string out;
    for (size_t k = 0; k < ids.size(); ++k) {
        if (k) out += ".";
        out += ids[k];
    }
    return out;
}

/// Generic constraint propagation: the chart's distinguished arrows become 1,
/// the coordinates become the variables, and every relation with exactly one
/// unknown occurrence gets solved by exact division in the fraction field.
/// Residual relations must all be multiples of a single hypersurface equation.
///
/// Passes sweep the relation list backwards (Step N first, the horn relations
/// last) so the k-arrow cascade fills the chain with monomial values before
/// the non-monomial horn values enter.
inline EliminationResult eliminate_chart(const Quiver& qv, const std::vector<Relation>& rels,
                                         const ChartSpec& spec) {
    const size_t n_arrows = qv.arrows.size();
    std::vector<std::optional<RatFunc3>> val(n_arrows);
    for (const auto& id : spec.ones)
        val[static_cast<size_t>(qv.arrow_index(id))] = RatFunc3(TriPoly(Rat(1)));
    for (int k = 0; k < 3; ++k)
        val[static_cast<size_t>(qv.arrow_index(spec.coords[static_cast<size_t>(k)]))] =
            RatFunc3(TriPoly::var(k));

    struct STerm {
        Rat coeff;
        std::vector<int> arrows;
    };
    std::vector<std::vector<STerm>> eqs;
    for (const auto& rel : rels) {
        std::vector<STerm> terms;
        for (const auto& t : rel.lhs) terms.push_back({t.coeff, t.arrows});
        for (const auto& t : rel.rhs) terms.push_back({-t.coeff, t.arrows});
        eqs.push_back(std::move(terms));
    }

    std::vector<bool> done(eqs.size(), false);
    std::vector<TriPoly> residuals;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t rev = eqs.size(); rev > 0; --rev) {
            const size_t ei = rev - 1;
            if (done[ei]) continue;
            int unknown_arrow = -1, unknown_term = -1;
            long occurrences = 0;
            for (size_t ti = 0; ti < eqs[ei].size(); ++ti)
                for (int ai : eqs[ei][ti].arrows)
                    if (!val[static_cast<size_t>(ai)]) {
                        ++occurrences;
                        unknown_arrow = ai;
                        unknown_term = static_cast<int>(ti);
                    }
            if (occurrences == 0) {
                RatFunc3 sum{TriPoly()};
                for (const auto& t : eqs[ei]) {
                    RatFunc3 prod{TriPoly(t.coeff)};
                    for (int ai : t.arrows) prod = prod * *val[static_cast<size_t>(ai)];
                    sum = sum + prod;
                }
                if (!sum.is_zero()) residuals.push_back(sum.num.primitive_part());
                done[ei] = true;
                progress = true;
            } else if (occurrences == 1) {
                RatFunc3 rest{TriPoly()};
                RatFunc3 factor{TriPoly(eqs[ei][static_cast<size_t>(unknown_term)].coeff)};
                for (size_t ti = 0; ti < eqs[ei].size(); ++ti) {
                    if (static_cast<int>(ti) == unknown_term) {
                        for (int ai : eqs[ei][ti].arrows)
                            if (ai != unknown_arrow) factor = factor * *val[static_cast<size_t>(ai)];
                        continue;
                    }
                    RatFunc3 prod{TriPoly(eqs[ei][ti].coeff)};
                    for (int ai : eqs[ei][ti].arrows) prod = prod * *val[static_cast<size_t>(ai)];
                    rest = rest + prod;
                }
                if (factor.is_zero())
                    throw std::logic_error("eliminate_chart: zero pivot for " +
                                           qv.arrows[static_cast<size_t>(unknown_arrow)].id);
                val[static_cast<size_t>(unknown_arrow)] =
                    (RatFunc3{TriPoly()} - rest) / factor;
                done[ei] = true;
                progress = true;
            }
        }
    }

    for (size_t ai = 0; ai < n_arrows; ++ai)
        if (!val[ai])
            throw std::logic_error("eliminate_chart(" + spec.id + "): elimination stalled on " +
                                   qv.arrows[ai].id);
    if (residuals.empty())
        throw std::logic_error("eliminate_chart(" + spec.id + "): no residual relation");

    auto better = [](const TriPoly& x, const TriPoly& y) {
        int dx = x.terms().rbegin()->first.degree(), dy = y.terms().rbegin()->first.degree();
        if (dx != dy) return dx < dy;
        return x.term_count() < y.term_count();
    };
    TriPoly eq = residuals.front();
    for (const auto& r : residuals)
        if (better(r, eq)) eq = r;
    for (const auto& r : residuals) (void)exact_div3(r, eq);  // throws if not a multiple

    EliminationResult out;
    out.values.reserve(n_arrows);
    for (auto& v : val) out.values.push_back(std::move(*v));
    out.equation = eq;
    return out;
}

inline RatFunc rf(const BiPoly& num, const BiPoly& den) { return RatFunc(num, den); }

}  // namespace detail

/// The proof-read ratio coordinate tables (nu = 0; w2 = (+)^2, w3 = (+)(-)).
inline std::array<RatFunc, 3> coordinate_ratios_for(const GroupData& gd, const std::string& id) {
    const int q = gd.q_i(), nmq = gd.nmq_i(), N = gd.N;
    const BiPoly P = plus_poly(q), M = minus_poly(q);
    auto wpow = [&](int D, int G) {  // w2^D w3^G = (+)^{2D+G} (-)^{G}
        return P.pow(2 * D + G) * M.pow(G);
    };
    if (id == "U0")
        return {detail::rf(xy_pow(gd.r_i(3)) * P.pow(3), M),
                detail::rf(wpow(gd.Delta_i(N + 1), gd.Gamma_i(N + 1)), BiPoly(Rat(1))),
                detail::rf(xy_pow(1), wpow(gd.Delta_i(N), gd.Gamma_i(N)))};
    if (id == "U+")
        return {detail::rf(M, xy_pow(nmq) * P), detail::rf(xy_pow(nmq) * M, P),
                detail::rf(xy_pow(gd.r_i(2)) * P * P, BiPoly(Rat(1)))};
    if (id == "U-")
        return {detail::rf(P, xy_pow(nmq) * M), detail::rf(xy_pow(nmq) * P, M),
                detail::rf(xy_pow(gd.r_i(2)) * M * M, BiPoly(Rat(1)))};
    if (id == "U" + std::to_string(N))
        return {detail::rf(xy_pow(nmq) * P, M), detail::rf(xy_pow(nmq) * M, P),
                detail::rf(P * P, xy_pow(q))};
    // middle charts U_t, 1 <= t <= N-1
    int t = std::stoi(id.substr(1));
    if (t < 1 || t > N - 1) throw std::domain_error("coordinate_ratios: unknown chart id " + id);
    return {detail::rf(xy_pow(gd.r_i(3)) * P.pow(3), M),
            detail::rf(wpow(gd.Delta_i(N + 1 - t), gd.Gamma_i(N + 1 - t)), xy_pow(gd.i_i(N + 1 - t))),
            detail::rf(xy_pow(gd.i_i(N - t)), wpow(gd.Delta_i(N - t), gd.Gamma_i(N - t)))};
}

/// All N+3 charts by binomial elimination from the moduli presentation.
inline std::vector<Chart> charts(const GroupData& gd) {
    require_reduced_cycle(gd, "charts");
    Quiver qv = build_quiver(gd);
    auto rels = relations_for(gd, qv, Presentation::Moduli, Rat(4));
    auto specs = detail::chart_specs(gd, qv);

    std::vector<Chart> out;
    for (const auto& spec : specs) {
        auto elim = detail::eliminate_chart(qv, rels, spec);
        Chart ch;
        ch.id = spec.id;
        for (const auto& w : spec.open_words) ch.open_conditions.push_back(detail::join_word(w));
        ch.coordinate_arrows = spec.coords;

        auto cls = classify_equation(elim.equation);
        if (!cls)
            throw std::logic_error("charts: equation of " + spec.id +
                                   " does not match a documented shape: " + elim.equation.str());
        ch.equation = cls->first;
        ch.shape = cls->second;

        if (ch.shape.shape == ChartShape::TypeA) {
            // exponents read off the eliminated monomials
            const RatFunc3& a1p = elim.values[static_cast<size_t>(qv.arrow_index("a1+"))];
            RatFunc3 A01{TriPoly(Rat(1))};
            A01 = A01 * elim.values[static_cast<size_t>(qv.arrow_index(qv.chain_a_id(gd.N)))];
            for (int s = gd.N - 1; s >= 1; --s)
                A01 = A01 * elim.values[static_cast<size_t>(qv.arrow_index(qv.chain_a_id(s)))];
            auto as_mono = [](const RatFunc3& v) -> Mon3 {
                if (v.den != TriPoly(Rat(1)) || v.num.term_count() != 1 ||
                    v.num.terms().begin()->second != 1)
                    throw std::logic_error("charts: expected a monomial value");
                return v.num.terms().begin()->first;
            };
            Mon3 pm = as_mono(a1p), am = as_mono(A01);
            ChartExponents ex;
            ex.eta_plus = pm.e[1];
            ex.theta_plus = pm.e[2];
            ex.eta_sum = am.e[1];
            ex.theta_sum = am.e[2];
            if (ex.eta_plus != ch.shape.eta || ex.theta_plus != ch.shape.theta ||
                ex.eta_sum != ch.shape.E || ex.theta_sum != ch.shape.F)
                throw std::logic_error("charts: exponents disagree with the emitted equation");
            ch.exponents = ex;
        }

        ch.ratios = coordinate_ratios_for(gd, spec.id);
        if (spec.id == "U" + std::to_string(gd.N)) {
            ch.alt_ratio = detail::rf(minus_poly(gd.q_i()) * minus_poly(gd.q_i()), xy_pow(gd.q_i()));
            // substitute c = d + 4 into the equation: a d - b(d + 4)
            TriPoly alt;
            for (const auto& [m, c] : ch.equation.terms()) {
                TriPoly term = TriPoly::monomial(m.e[0], m.e[1], 0, c);
                TriPoly cc = TriPoly::var(2) + TriPoly(Rat(4));
                alt = alt + term * cc.pow(m.e[2]);
            }
            ch.alt_equation = alt.primitive_part();
        }
        out.push_back(std::move(ch));
    }
    return out;
}

inline Chart chart_by_id(const std::vector<Chart>& cs, const std::string& id) {
    for (const auto& c : cs)
        if (c.id == id) return c;
    throw std::out_of_range("chart " + id);
}

inline ChartExponents chart_exponents(const GroupData& gd, int t) {
    if (t < 0 || t > gd.N - 1) throw std::domain_error("chart_exponents: need 0 <= t <= N-1");
    auto cs = charts(gd);
    return *chart_by_id(cs, "U" + std::to_string(t)).exponents;
}

inline std::array<RatFunc, 3> coordinate_ratios(const GroupData& gd, const std::string& id) {
    require_reduced_cycle(gd, "coordinate_ratios");
    return coordinate_ratios_for(gd, id);
}

struct ChartReport {
    bool pass = true;
    std::string detail;
};

/// Substitute the ratio coordinates into the chart equation and verify the
/// rational function vanishes identically.
inline ChartReport verify_chart_on_ratios(const GroupData& gd, const Chart& chart) {
    (void)gd;
    ChartReport rep;
    auto eval = [&](const TriPoly& eq, const std::array<RatFunc, 3>& coords) {
        RatFunc sum{BiPoly()};
        for (const auto& [m, c] : eq.terms()) {
            RatFunc prod{BiPoly(c)};
            for (int k = 0; k < 3; ++k)
                prod = prod * coords[static_cast<size_t>(k)].pow(m.e[static_cast<size_t>(k)]);
            sum = sum + prod;
        }
        return sum.is_zero();
    };
    if (!eval(chart.equation, chart.ratios)) {
        rep.pass = false;
        rep.detail = chart.id + ": ratios do not satisfy the equation";
        return rep;
    }
    if (chart.alt_equation) {
        auto alt_coords = chart.ratios;
        alt_coords[2] = *chart.alt_ratio;
        if (!eval(*chart.alt_equation, alt_coords)) {
            rep.pass = false;
            rep.detail = chart.id + ": d-coordinate equation fails on the ratios";
        }
    }
    return rep;
}

namespace detail {

inline LMono lm(const Rat& c, int ea, int eb, int ec) { return LMono{c, {ea, eb, ec}}; }

}  // namespace detail

/// The N+2 glue maps in chart order.
inline std::vector<GlueMap> glue_maps_list(const GroupData& gd) {
    require_reduced_cycle(gd, "glue_maps");
    std::vector<GlueMap> glues;
    const int N = gd.N;
    using detail::lm;
    for (int t = 0; t <= N - 2; ++t) {
        GlueMap g;
        g.source = "U" + std::to_string(t);
        g.target = "U" + std::to_string(t + 1);
        g.transform.image = {lm(Rat(1), 1, 0, 0), lm(Rat(1), 0, 0, -1),
                             lm(Rat(1), 0, 1, gd.alpha_i(N - t))};
        glues.push_back(std::move(g));
    }
    {
        GlueMap g;
        g.source = "U" + std::to_string(N - 1);
        g.target = "U" + std::to_string(N);
        g.transform.image = {lm(Rat(1), 1, 0, 1), lm(Rat(1), 0, 1, gd.alpha_i(1) - 1),
                             lm(Rat(1), 0, 0, -1)};
        glues.push_back(std::move(g));
    }
    {
        GlueMap g;  // through the d coordinate
        g.source = "U" + std::to_string(N);
        g.target = "U+";
        g.source_uses_d = true;
        g.transform.image = {lm(Rat(1), -1, 0, 0), lm(Rat(1), 0, 1, 0), lm(Rat(1), 2, 0, 1)};
        glues.push_back(std::move(g));
    }
    {
        GlueMap g;
        g.source = "U" + std::to_string(N);
        g.target = "U-";
        g.transform.image = {lm(Rat(1), 0, -1, 0), lm(Rat(1), 1, 0, 0), lm(Rat(1), 0, 2, 1)};
        glues.push_back(std::move(g));
    }
    return glues;
}

struct GlueReport {
    bool pass = true;
    std::vector<std::string> failures;
};

/// Verify every glue: monomial round trip, equation pullback up to a Laurent
/// unit, and compatibility with the ratio coordinates as rational functions.
inline std::pair<std::vector<GlueMap>, GlueReport> glue_maps(const GroupData& gd) {
    auto cs = charts(gd);
    auto glues = glue_maps_list(gd);
    GlueReport rep;
    auto fail = [&rep](const std::string& what) {
        rep.pass = false;
        rep.failures.push_back(what);
    };

    for (const auto& g : glues) {
        MonoMap inv = g.transform.inverse();
        if (!g.transform.compose(inv).is_identity() || !inv.compose(g.transform).is_identity())
            fail(g.source + "<->" + g.target + ": round trip is not the identity");

        Chart src = chart_by_id(cs, g.source), dst = chart_by_id(cs, g.target);
        const TriPoly& src_eq = g.source_uses_d ? *src.alt_equation : src.equation;
        TriPoly pulled = g.transform.apply(dst.equation);
        // pulled must equal (Laurent unit) * src_eq
        if (pulled.is_zero() || src_eq.is_zero()) {
            fail(g.source + "->" + g.target + ": degenerate pullback");
            continue;
        }
        TriPoly p_prim = pulled.primitive_part(), s_prim = src_eq.primitive_part();
        bool match = p_prim == s_prim || p_prim == Rat(-1) * s_prim;
        if (!match) fail(g.source + "->" + g.target + ": pullback is not a unit multiple");

        // ratio compatibility: target coordinate functions = transform(source ones)
        std::array<RatFunc, 3> src_ratios = src.ratios;
        if (g.source_uses_d) src_ratios[2] = *src.alt_ratio;
        for (int k = 0; k < 3; ++k) {
            const LMono& im = g.transform.image[static_cast<size_t>(k)];
            RatFunc v{BiPoly(im.coeff)};
            for (int j = 0; j < 3; ++j)
                v = v * src_ratios[static_cast<size_t>(j)].pow(im.e[static_cast<size_t>(j)]);
            if (v != dst.ratios[static_cast<size_t>(k)]) {
                fail(g.source + "->" + g.target + ": ratio coordinate " + std::to_string(k) +
                     " does not transform correctly");
            }
        }
    }
    return {std::move(glues), std::move(rep)};
}

}  // namespace recond
