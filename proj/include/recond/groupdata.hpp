#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "recond/contfrac.hpp"
#include "recond/rational.hpp"

namespace recond {

/// One-dimensional character of D_{n,q}, stored as rotation numbers: the
/// rational r in an entry means the root of unity e^{2*pi*i*r}.
///
/// Generator order follows the presentation: n-q odd -> (psi_2q, tau,
/// phi_2(n-q)); n-q even -> (psi_2q, tau*phi_4(n-q)). The two cases are kept
/// as a tagged variant and never mixed.
struct Character {
    bool nq_odd = true;
    Int q = 0, nmq = 0;  // group identity, to reject cross-group arithmetic
    std::vector<Rat> rot;

    int arity() const { return nq_odd ? 3 : 2; }

    bool operator==(const Character& o) const {
        return nq_odd == o.nq_odd && q == o.q && nmq == o.nmq && rot == o.rot;
    }
};

struct ModuleId {
    enum class Kind { Trivial, W, WPlus, WMinus };
    Kind kind = Kind::Trivial;
    Int t = 0;  // only for Kind::W

    static ModuleId trivial() { return {Kind::Trivial, 0}; }
    static ModuleId W(const Int& t) { return {Kind::W, t}; }
    static ModuleId Wplus() { return {Kind::WPlus, 0}; }
    static ModuleId Wminus() { return {Kind::WMinus, 0}; }
};

/// Dual graph of the minimal resolution: a D-shaped tree. Vertices are kept
/// in the order [-, +, 1..N]; both horns attach to chain vertex 1.
struct DualGraph {
    std::vector<std::string> vertex_names;
    std::vector<Int> self_intersection;
    std::vector<std::pair<int, int>> edges;  // indices into vertex_names
    std::vector<Int> fundamental_cycle;
};

/// Everything the construction derives from the pair (n,q).
///
/// Series indices follow the paper exactly: c/d/t/r live on 2..e, the
/// i/j-series of n/q on 0..N+1, l on 1..N, b on 0..e-2, Delta/Gamma on
/// nu+1..N+1.
struct GroupData {
    Int n, q;
    Int order;     // 4(n-q)q
    bool nq_odd;   // parity of n-q decides the presentation
    int N;         // length of n/q = [alpha_1..alpha_N]
    int e;         // n/(n-q) = [a_2..a_{e-1}]
    int nu;        // leading 2s in the alpha string (nu < N)

    CFExpansion alpha_cf;        // n/q
    SeriesBundle alpha_series;   // i/j/l/b of n/q
    CFExpansion a_cf;            // n/(n-q)

    std::vector<Int> c_vals, d_vals, t_vals, r_vals;  // index 2..e
    std::vector<Int> delta_vals, gamma_vals;          // index nu+1..N+1

    const Int& alpha(int i) const { return alpha_cf.beta(i); }
    int alpha_i(int i) const { return to_int(alpha(i)); }

    /// a_j for 2 <= j <= e-1.
    const Int& a(int j) const {
        if (j < 2 || j > e - 1) throw std::out_of_range("a-series index");
        return a_cf.coeffs[static_cast<size_t>(j - 2)];
    }

    const Int& c(int j) const { return series_at(c_vals, j); }
    const Int& d(int j) const { return series_at(d_vals, j); }
    const Int& t(int j) const { return series_at(t_vals, j); }
    const Int& r(int j) const { return series_at(r_vals, j); }

    const Int& i(int t_) const { return alpha_series.i(t_); }
    const Int& l(int t_) const { return alpha_series.l(t_); }
    const Int& b(int t_) const { return alpha_series.b(t_); }
    int i_i(int t_) const { return to_int(i(t_)); }
    int l_i(int t_) const { return to_int(l(t_)); }
    int b_i(int t_) const { return to_int(b(t_)); }

    const Int& Delta(int k) const {
        if (k < nu + 1 || k > N + 1) throw std::out_of_range("Delta index");
        return delta_vals[static_cast<size_t>(k - nu - 1)];
    }
    const Int& Gamma(int k) const {
        if (k < nu + 1 || k > N + 1) throw std::out_of_range("Gamma index");
        return gamma_vals[static_cast<size_t>(k - nu - 1)];
    }

    Int nmq() const { return n - q; }
    int q_i() const { return to_int(q); }
    int nmq_i() const { return to_int(n - q); }
    int r_i(int j) const { return to_int(r(j)); }
    int c_i(int j) const { return to_int(c(j)); }
    int d_i(int j) const { return to_int(d(j)); }
    int Delta_i(int k) const { return to_int(Delta(k)); }
    int Gamma_i(int k) const { return to_int(Gamma(k)); }

  private:
    const Int& series_at(const std::vector<Int>& v, int j) const {
        if (j < 2 || j > e) throw std::out_of_range("c/d/t/r series index");
        return v[static_cast<size_t>(j - 2)];
    }
};

inline GroupData build_group_data(const Int& n, const Int& q) {
    if (!(1 < q && q < n)) throw std::domain_error("build_group_data: need 1 < q < n");
    Int g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw std::domain_error("build_group_data: n and q not coprime");

    GroupData gd;
    gd.n = n;
    gd.q = q;
    gd.order = 4 * (n - q) * q;
    gd.nq_odd = mpz_odd_p(Int(n - q).get_mpz_t()) != 0;

    gd.alpha_cf = hj_expand(n, q);
    gd.alpha_series = compute_series(gd.alpha_cf);
    gd.a_cf = hj_expand(n, n - q);
    gd.N = gd.alpha_cf.length();
    gd.e = gd.a_cf.length() + 2;

    int lead2 = 0;
    while (lead2 < gd.N && gd.alpha_cf.beta(lead2 + 1) == 2) ++lead2;
    gd.nu = (lead2 == gd.N) ? gd.N - 1 : lead2;

    const int e = gd.e;
    auto& c = gd.c_vals;
    auto& d = gd.d_vals;
    auto& t = gd.t_vals;
    auto& r = gd.r_vals;
    c.resize(static_cast<size_t>(e - 1));
    d.resize(static_cast<size_t>(e - 1));
    t.resize(static_cast<size_t>(e - 1));
    r.resize(static_cast<size_t>(e - 1));
    auto set = [](std::vector<Int>& v, int j, const Int& val) { v[static_cast<size_t>(j - 2)] = val; };
    auto get = [](const std::vector<Int>& v, int j) -> const Int& { return v[static_cast<size_t>(j - 2)]; };

    set(c, 2, 1);
    set(d, 2, 0);
    set(t, 2, gd.a(2));
    if (e >= 3) {
        set(c, 3, 0);
        set(d, 3, 1);
        set(t, 3, gd.a(2) - 1);
    }
    if (e >= 4) {
        set(c, 4, 1);
        set(d, 4, gd.a(3) - 1);
        set(t, 4, gd.a(3) * (gd.a(2) - 1) - 1);
    }
    for (int j = 5; j <= e; ++j) {
        set(c, j, gd.a(j - 1) * get(c, j - 1) - get(c, j - 2));
        set(d, j, gd.a(j - 1) * get(d, j - 1) - get(d, j - 2));
        set(t, j, gd.a(j - 1) * get(t, j - 1) - get(t, j - 2));
    }
    for (int j = 2; j <= e; ++j) set(r, j, (n - q) * get(t, j) - q * (get(c, j) + get(d, j)));

    if (get(r, e) != 0 || get(r, e - 1) != 1)
        throw std::logic_error("r-series sanity failed: r_e != 0 or r_{e-1} != 1");

    gd.delta_vals.resize(static_cast<size_t>(gd.N + 1 - gd.nu));
    gd.gamma_vals.resize(static_cast<size_t>(gd.N + 1 - gd.nu));
    Int dsum = 1, gsum = 0;
    gd.delta_vals[0] = dsum;  // k = nu+1: empty sums
    gd.gamma_vals[0] = gsum;
    for (int k = gd.nu + 2; k <= gd.N + 1; ++k) {
        int lt = gd.l_i(k - 1);
        dsum += get(c, lt);
        gsum += get(d, lt);
        gd.delta_vals[static_cast<size_t>(k - gd.nu - 1)] = dsum;
        gd.gamma_vals[static_cast<size_t>(k - gd.nu - 1)] = gsum;
    }
    return gd;
}

inline DualGraph dual_graph(const GroupData& gd) {
    DualGraph dg;
    dg.vertex_names.push_back("-");
    dg.vertex_names.push_back("+");
    dg.self_intersection.push_back(-2);
    dg.self_intersection.push_back(-2);
    for (int i = 1; i <= gd.N; ++i) {
        dg.vertex_names.push_back(std::to_string(i));
        dg.self_intersection.push_back(-gd.alpha(i));
    }
    dg.edges.emplace_back(0, 2);  // - attaches to vertex 1
    dg.edges.emplace_back(1, 2);  // + attaches to vertex 1
    for (int i = 1; i < gd.N; ++i) dg.edges.emplace_back(i + 1, i + 2);

    dg.fundamental_cycle.assign(dg.vertex_names.size(), 1);
    for (int i = 1; i <= gd.nu; ++i) dg.fundamental_cycle[static_cast<size_t>(i + 1)] = 2;
    return dg;
}

// ---------------------------------------------------------------------------
// Characters of the rank 1 modules.
//
// The rotation values are the action factors of the generators on the
// defining polynomial of the module, with the substitution convention
// f |-> f(M x).  Note psi_2q multiplies both x^q + y^q and x^q - y^q by -1;
// the sign that separates W_+ from W_- sits on the tau column.
// ---------------------------------------------------------------------------

inline Character character_of(const GroupData& gd, const ModuleId& id) {
    Character ch;
    ch.nq_odd = gd.nq_odd;
    ch.q = gd.q;
    ch.nmq = gd.n - gd.q;
    const Int nmq = gd.n - gd.q;

    switch (id.kind) {
        case ModuleId::Kind::Trivial:
            ch.rot.assign(static_cast<size_t>(ch.arity()), Rat(0));
            break;
        case ModuleId::Kind::W: {
            if (id.t < 1 || id.t > nmq)
                throw std::domain_error("character_of: W_t requires 1 <= t <= n-q");
            if (gd.nq_odd) {
                ch.rot = {Rat(0), mod1(make_rat(id.t, 2)), mod1(make_rat(id.t, nmq))};
            } else {
                ch.rot = {Rat(0), mod1(make_rat(id.t * (nmq + 1), 2 * nmq))};
            }
            break;
        }
        case ModuleId::Kind::WPlus:
        case ModuleId::Kind::WMinus: {
            Rat half = make_rat(1, 2);
            Rat shift = (id.kind == ModuleId::Kind::WMinus) ? half : Rat(0);
            if (gd.nq_odd) {
                ch.rot = {half, mod1(make_rat(gd.q, 4) + shift), mod1(make_rat(gd.q, 2 * nmq))};
            } else {
                ch.rot = {half, mod1(make_rat(gd.q * (nmq + 1), 4 * nmq) + shift)};
            }
            break;
        }
    }
    return ch;
}

inline void require_same_group(const Character& x, const Character& y) {
    if (x.nq_odd != y.nq_odd || x.q != y.q || x.nmq != y.nmq)
        throw std::domain_error("character arithmetic across different groups");
}

inline Character char_mul(const Character& x, const Character& y) {
    require_same_group(x, y);
    Character out = x;
    for (size_t k = 0; k < out.rot.size(); ++k) out.rot[k] = mod1(out.rot[k] + y.rot[k]);
    return out;
}

inline Character char_inv(const Character& x) {
    Character out = x;
    for (auto& r : out.rot) r = mod1(-r);
    return out;
}

/// Hom(S_rho, S_sigma) = S_{sigma (x) rho*}.
inline Character char_hom(const Character& rho, const Character& sigma) {
    return char_mul(sigma, char_inv(rho));
}

}  // namespace recond
