#pragma once

#include <stdexcept>
#include <vector>

#include "recond/rational.hpp"

namespace recond {

/// Hirzebruch-Jung continued fraction m2/m1 = [b1,...,bX] with the minus-sign
/// convention b1 - 1/(b2 - 1/(...)), every coefficient >= 2.
///
/// Index discipline: accessors take the paper's indices throughout this
/// library (beta(1)..beta(X) here), never zero-based ones.
struct CFExpansion {
    Int numerator;            // m2
    Int denominator;          // m1
    std::vector<Int> coeffs;  // beta_1..beta_X

    int length() const { return static_cast<int>(coeffs.size()); }

    /// beta_t for 1 <= t <= X.
    const Int& beta(int t) const {
        if (t < 1 || t > length()) throw std::out_of_range("CFExpansion::beta index");
        return coeffs[static_cast<size_t>(t - 1)];
    }

    int beta_i(int t) const { return to_int(beta(t)); }
};

/// Evaluate [b1,...,bX] back to a rational.
inline Rat cf_value(const std::vector<Int>& coeffs) {
    if (coeffs.empty()) throw std::domain_error("cf_value: empty expansion");
    Rat v(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) {
        if (v == 0) throw std::domain_error("cf_value: division by zero tail");
        v = Rat(*it) - 1 / v;
    }
    return v;
}

/// HJ expansion of m2/m1 by the ceiling recursion m2/m1 = ceil(m2/m1) - r/m1.
inline CFExpansion hj_expand(const Int& m2, const Int& m1) {
    if (m1 < 1 || m1 >= m2) throw std::domain_error("hj_expand: need 1 <= m1 < m2");
    Int g;
    mpz_gcd(g.get_mpz_t(), m2.get_mpz_t(), m1.get_mpz_t());
    if (g != 1) throw std::domain_error("hj_expand: arguments not coprime");

    CFExpansion cf;
    cf.numerator = m2;
    cf.denominator = m1;
    Int num = m2, den = m1;
    while (den != 0) {
        Int b;
        mpz_cdiv_q(b.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        cf.coeffs.push_back(b);
        Int next = b * den - num;  // 0 <= next < den
        num = den;
        den = next;
    }
    return cf;
}

/// The dual continued fraction: the expansion of m2/(m2-m1).
inline CFExpansion dual_expand(const CFExpansion& cf) {
    return hj_expand(cf.numerator, cf.numerator - cf.denominator);
}

/// The four combinatorial series attached to an expansion.
///
/// i,j run over 0..X+1; l over 1..X; b over 0..l_X-1, all in the paper's
/// indexing.
struct SeriesBundle {
    std::vector<Int> i_vals;  // index 0..X+1
    std::vector<Int> j_vals;  // index 0..X+1
    std::vector<Int> l_vals;  // index 1..X
    std::vector<Int> b_vals;  // index 0..l_X-1

    const Int& i(int t) const {
        if (t < 0 || t >= static_cast<int>(i_vals.size())) throw std::out_of_range("i-series index");
        return i_vals[static_cast<size_t>(t)];
    }
    const Int& j(int t) const {
        if (t < 0 || t >= static_cast<int>(j_vals.size())) throw std::out_of_range("j-series index");
        return j_vals[static_cast<size_t>(t)];
    }
    const Int& l(int t) const {
        if (t < 1 || t > static_cast<int>(l_vals.size())) throw std::out_of_range("l-series index");
        return l_vals[static_cast<size_t>(t - 1)];
    }
    const Int& b(int t) const {
        if (t < 0 || t >= static_cast<int>(b_vals.size())) throw std::out_of_range("b-series index");
        return b_vals[static_cast<size_t>(t)];
    }

    int l_i(int t) const { return to_int(l(t)); }
    int b_i(int t) const { return to_int(b(t)); }

    /// l_X, the number of b-series entries.
    int lX() const { return to_int(l_vals.back()); }
};

inline SeriesBundle compute_series(const CFExpansion& cf) {
    const int X = cf.length();
    SeriesBundle s;

    s.i_vals.resize(static_cast<size_t>(X) + 2);
    s.j_vals.resize(static_cast<size_t>(X) + 2);
    s.i_vals[0] = cf.numerator;
    s.i_vals[1] = cf.denominator;
    s.j_vals[0] = 0;
    s.j_vals[1] = 1;
    for (int t = 2; t <= X + 1; ++t) {
        s.i_vals[t] = cf.beta(t - 1) * s.i_vals[t - 1] - s.i_vals[t - 2];
        s.j_vals[t] = cf.beta(t - 1) * s.j_vals[t - 1] - s.j_vals[t - 2];
    }
    if (s.i_vals[static_cast<size_t>(X) + 1] != 0)
        throw std::logic_error("i-series does not terminate at 0");
    for (int t = 1; t <= X + 1; ++t) {
        if (s.i_vals[t] >= s.i_vals[t - 1]) throw std::logic_error("i-series not strictly decreasing");
        if (s.j_vals[t] <= s.j_vals[t - 1]) throw std::logic_error("j-series not strictly increasing");
    }

    s.l_vals.resize(static_cast<size_t>(X));
    Int acc = 2;
    for (int j = 1; j <= X; ++j) {
        acc += cf.beta(j) - 2;
        s.l_vals[static_cast<size_t>(j - 1)] = acc;
    }

    const int lX = s.lX();
    s.b_vals.resize(static_cast<size_t>(lX));
    s.b_vals[0] = 1;
    s.b_vals[static_cast<size_t>(lX - 1)] = X;
    for (int t = 1; t <= lX - 2; ++t) {
        Int sum = 0;
        int bt = 0;
        for (int p = 1; p <= X; ++p) {
            sum += cf.beta(p) - 2;
            if (sum >= t) {
                bt = p;
                break;
            }
        }
        if (bt == 0) throw std::logic_error("b-series: no admissible index");
        s.b_vals[static_cast<size_t>(t)] = bt;
    }
    return s;
}

}  // namespace recond
