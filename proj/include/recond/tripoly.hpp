#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "recond/bipoly.hpp"

namespace recond {

/// Exponent triple over the chart variables (a,b,c); negative entries are
/// allowed so the same type carries Laurent data during glue checks.
struct Mon3 {
    std::array<int, 3> e{0, 0, 0};
    int degree() const { return e[0] + e[1] + e[2]; }
    friend bool operator<(const Mon3& l, const Mon3& r) {
        if (l.degree() != r.degree()) return l.degree() < r.degree();
        return l.e < r.e;
    }
    friend bool operator==(const Mon3& l, const Mon3& r) { return l.e == r.e; }
};

class TriPoly {
  public:
    using Terms = std::map<Mon3, Rat>;

    TriPoly() = default;
    explicit TriPoly(const Rat& c) {
        if (c != 0) terms_[Mon3{}] = c;
    }
    static TriPoly monomial(int ea, int eb, int ec, const Rat& c = Rat(1)) {
        TriPoly p;
        if (c != 0) p.terms_[Mon3{{ea, eb, ec}}] = c;
        return p;
    }
    static TriPoly var(int k) {
        Mon3 m;
        m.e[static_cast<size_t>(k)] = 1;
        TriPoly p;
        p.terms_[m] = 1;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Mon3& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend TriPoly operator+(const TriPoly& l, const TriPoly& r) {
        TriPoly out = l;
        for (const auto& [m, c] : r.terms_) out.add_term(m, c);
        return out;
    }
    friend TriPoly operator-(const TriPoly& l, const TriPoly& r) {
        TriPoly out = l;
        for (const auto& [m, c] : r.terms_) out.add_term(m, -c);
        return out;
    }
    friend TriPoly operator*(const TriPoly& l, const TriPoly& r) {
        TriPoly out;
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_)
                out.add_term(Mon3{{ml.e[0] + mr.e[0], ml.e[1] + mr.e[1], ml.e[2] + mr.e[2]}},
                             cl * cr);
        return out;
    }
    friend TriPoly operator*(const Rat& c, const TriPoly& p) {
        TriPoly out;
        if (c == 0) return out;
        for (const auto& [m, pc] : p.terms_) out.terms_[m] = c * pc;
        return out;
    }
    friend bool operator==(const TriPoly& l, const TriPoly& r) { return l.terms_ == r.terms_; }
    friend bool operator!=(const TriPoly& l, const TriPoly& r) { return !(l == r); }

    TriPoly pow(long e) const {
        if (e < 0) throw std::domain_error("TriPoly::pow: negative exponent");
        TriPoly result(Rat(1));
        TriPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    bool is_laurent_free() const {
        for (const auto& [m, c] : terms_) {
            (void)c;
            if (m.e[0] < 0 || m.e[1] < 0 || m.e[2] < 0) return false;
        }
        return true;
    }

    /// Divide out the monomial and rational content (shifts Laurent terms back
    /// to an effective polynomial with content 1; the sign is untouched).
    TriPoly primitive_part() const {
        if (terms_.empty()) return {};
        std::array<int, 3> mins = terms_.begin()->first.e;
        Int num_gcd = 0, den_lcm = 1;
        for (const auto& [m, c] : terms_) {
            for (int k = 0; k < 3; ++k) mins[static_cast<size_t>(k)] =
                std::min(mins[static_cast<size_t>(k)], m.e[static_cast<size_t>(k)]);
            Int num = c.get_num() < 0 ? Int(-c.get_num()) : c.get_num();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        }
        Rat scale = make_rat(den_lcm, num_gcd);
        TriPoly out;
        for (const auto& [m, c] : terms_)
            out.terms_[Mon3{{m.e[0] - mins[0], m.e[1] - mins[1], m.e[2] - mins[2]}}] = c * scale;
        return out;
    }

    std::string str(const std::array<std::string, 3>& vars = {"a", "b", "c"}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Rat& c = it->second;
            Rat abs = c < 0 ? Rat(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool has_var = it->first.e[0] != 0 || it->first.e[1] != 0 || it->first.e[2] != 0;
            if (abs != 1 || !has_var) {
                os << abs.get_str();
                if (has_var) os << "*";
            }
            bool started = false;
            for (int k = 0; k < 3; ++k) {
                int e = it->first.e[static_cast<size_t>(k)];
                if (e == 0) continue;
                if (started) os << "*";
                os << vars[static_cast<size_t>(k)];
                if (e != 1) os << "^" << e;
                started = true;
            }
        }
        return os.str();
    }

  private:
    Terms terms_;
};

/// Exact division of effective trivariate polynomials; throws on remainder.
inline TriPoly exact_div3(const TriPoly& p, const TriPoly& q) {
    if (q.is_zero()) throw std::domain_error("exact_div3: zero divisor");
    TriPoly rem = p, quot;
    const Mon3 qlead = q.terms().rbegin()->first;
    const Rat qlc = q.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const Mon3 rlead = rem.terms().rbegin()->first;
        Mon3 m{{rlead.e[0] - qlead.e[0], rlead.e[1] - qlead.e[1], rlead.e[2] - qlead.e[2]}};
        if (m.e[0] < 0 || m.e[1] < 0 || m.e[2] < 0)
            throw DivisionRemainderError(rem.str());
        Rat c = rem.terms().rbegin()->second / qlc;
        quot.add_term(m, c);
        rem = rem - TriPoly::monomial(m.e[0], m.e[1], m.e[2], c) * q;
    }
    return quot;
}

/// Rational function in the chart variables. Denominators stay monomial-free
/// of content; full cancellation is attempted (cheap at these sizes) so that
/// solved arrow values collapse to polynomials whenever they are polynomials.
struct RatFunc3 {
    TriPoly num, den;

    RatFunc3() : num(), den(Rat(1)) {}
    explicit RatFunc3(const TriPoly& n) : num(n), den(TriPoly(Rat(1))) {}
    RatFunc3(TriPoly n, TriPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFunc3: zero denominator");
        simplify();
    }

    bool is_zero() const { return num.is_zero(); }

    void simplify() {
        if (num.is_zero()) {
            den = TriPoly(Rat(1));
            return;
        }
        try {
            num = exact_div3(num, den);
            den = TriPoly(Rat(1));
        } catch (const DivisionRemainderError&) {
            try {
                TriPoly q = exact_div3(den, num);
                den = q;
                num = TriPoly(Rat(1));
            } catch (const DivisionRemainderError&) {
            }
        }
    }

    friend RatFunc3 operator+(const RatFunc3& l, const RatFunc3& r) {
        return RatFunc3(l.num * r.den + r.num * l.den, l.den * r.den);
    }
    friend RatFunc3 operator-(const RatFunc3& l, const RatFunc3& r) {
        return RatFunc3(l.num * r.den - r.num * l.den, l.den * r.den);
    }
    friend RatFunc3 operator*(const RatFunc3& l, const RatFunc3& r) {
        return RatFunc3(l.num * r.num, l.den * r.den);
    }
    friend RatFunc3 operator/(const RatFunc3& l, const RatFunc3& r) {
        if (r.num.is_zero()) throw std::domain_error("RatFunc3: division by zero");
        return RatFunc3(l.num * r.den, l.den * r.num);
    }
    friend bool operator==(const RatFunc3& l, const RatFunc3& r) {
        return l.num * r.den == r.num * l.den;
    }
    friend bool operator!=(const RatFunc3& l, const RatFunc3& r) { return !(l == r); }
};

/// Signed Laurent monomial coeff * a^{e0} b^{e1} c^{e2}.
struct LMono {
    Rat coeff = Rat(1);
    std::array<int, 3> e{0, 0, 0};

    std::string str(const std::array<std::string, 3>& vars = {"a", "b", "c"}) const {
        std::ostringstream os;
        bool started = false;
        if (coeff != 1) {
            if (coeff == -1) {
                os << "-";
            } else {
                os << coeff.get_str();
                started = true;
            }
        }
        for (int k = 0; k < 3; ++k) {
            if (e[static_cast<size_t>(k)] == 0) continue;
            if (started) os << "*";
            os << vars[static_cast<size_t>(k)];
            if (e[static_cast<size_t>(k)] != 1) os << "^" << e[static_cast<size_t>(k)];
            started = true;
        }
        if (!started && (coeff == 1 || coeff == -1)) os << "1";
        return os.str();
    }

    friend bool operator==(const LMono& l, const LMono& r) {
        return l.coeff == r.coeff && l.e == r.e;
    }
};

/// Monomial coordinate change (a,b,c) -> (images). Invertible when the
/// exponent matrix is in GL_3(Z) and the coefficients are units.
struct MonoMap {
    std::array<LMono, 3> image;

    /// Apply to a polynomial, yielding Laurent data in general.
    TriPoly apply(const TriPoly& p) const {
        TriPoly out;
        for (const auto& [m, c] : p.terms()) {
            Rat coeff = c;
            std::array<int, 3> e{0, 0, 0};
            for (int k = 0; k < 3; ++k) {
                int pw = m.e[static_cast<size_t>(k)];
                if (pw == 0) continue;
                const LMono& im = image[static_cast<size_t>(k)];
                if (im.coeff == 1) {
                } else if (im.coeff == -1) {
                    if (pw % 2 != 0) coeff = -coeff;
                } else {
                    Rat base = im.coeff;
                    for (int i = 0; i < std::abs(pw); ++i)
                        coeff = pw > 0 ? Rat(coeff * base) : Rat(coeff / base);
                }
                for (int j = 0; j < 3; ++j) e[static_cast<size_t>(j)] += pw * im.e[static_cast<size_t>(j)];
            }
            out.add_term(Mon3{e}, coeff);
        }
        return out;
    }

    MonoMap compose(const MonoMap& inner) const {
        // (this o inner): apply inner first, then this... the convention here:
        // result.image[k] = image of variable k under "inner then this", i.e.
        // substitute this->image into inner's formulas.
        MonoMap out;
        for (int k = 0; k < 3; ++k) {
            const LMono& f = inner.image[static_cast<size_t>(k)];
            LMono acc;
            acc.coeff = f.coeff;
            for (int j = 0; j < 3; ++j) {
                int pw = f.e[static_cast<size_t>(j)];
                if (pw == 0) continue;
                const LMono& g = image[static_cast<size_t>(j)];
                if (g.coeff == -1 && pw % 2 != 0) acc.coeff = -acc.coeff;
                else if (g.coeff != 1 && g.coeff != -1)
                    throw std::domain_error("MonoMap::compose: non-unit coefficient");
                for (int i = 0; i < 3; ++i) acc.e[static_cast<size_t>(i)] += pw * g.e[static_cast<size_t>(i)];
            }
            out.image[static_cast<size_t>(k)] = acc;
        }
        return out;
    }

    bool is_identity() const {
        for (int k = 0; k < 3; ++k) {
            const LMono& im = image[static_cast<size_t>(k)];
            if (im.coeff != 1) return false;
            for (int j = 0; j < 3; ++j)
                if (im.e[static_cast<size_t>(j)] != (j == k ? 1 : 0)) return false;
        }
        return true;
    }

    MonoMap inverse() const {
        // integer 3x3 inverse; determinant must be +-1
        long M[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M[i][j] = image[static_cast<size_t>(i)].e[static_cast<size_t>(j)];
        long det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                   M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                   M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        if (det != 1 && det != -1)
            throw std::domain_error("MonoMap::inverse: exponent matrix not unimodular");
        long adj[3][3];
        adj[0][0] = M[1][1] * M[2][2] - M[1][2] * M[2][1];
        adj[0][1] = -(M[0][1] * M[2][2] - M[0][2] * M[2][1]);
        adj[0][2] = M[0][1] * M[1][2] - M[0][2] * M[1][1];
        adj[1][0] = -(M[1][0] * M[2][2] - M[1][2] * M[2][0]);
        adj[1][1] = M[0][0] * M[2][2] - M[0][2] * M[2][0];
        adj[1][2] = -(M[0][0] * M[1][2] - M[0][2] * M[1][0]);
        adj[2][0] = M[1][0] * M[2][1] - M[1][1] * M[2][0];
        adj[2][1] = -(M[0][0] * M[2][1] - M[0][1] * M[2][0]);
        adj[2][2] = M[0][0] * M[1][1] - M[0][1] * M[1][0];
        MonoMap inv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                inv.image[static_cast<size_t>(i)].e[static_cast<size_t>(j)] =
                    static_cast<int>(det * adj[i][j]);
        // coefficients: x_j = d_j prod y_i^{N_ji} with d_j = prod c_i^{-N_ji};
        // all our coefficients are +-1
        for (int j = 0; j < 3; ++j) {
            Rat d(1);
            for (int i = 0; i < 3; ++i) {
                const Rat& ci = image[static_cast<size_t>(i)].coeff;
                if (ci == 1) continue;
                if (ci != -1) throw std::domain_error("MonoMap::inverse: non-unit coefficient");
                if (inv.image[static_cast<size_t>(j)].e[static_cast<size_t>(i)] % 2 != 0) d = -d;
            }
            inv.image[static_cast<size_t>(j)].coeff = d;
        }
        return inv;
    }
};

}  // namespace recond
