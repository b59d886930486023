#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "recond/rational.hpp"

namespace recond {

/// Exponent pair with graded-lex ordering (total degree first, then x-power).
struct Mon2 {
    int a = 0, b = 0;
    int degree() const { return a + b; }
    friend bool operator<(const Mon2& l, const Mon2& r) {
        if (l.degree() != r.degree()) return l.degree() < r.degree();
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    }
    friend bool operator==(const Mon2& l, const Mon2& r) { return l.a == r.a && l.b == r.b; }
};

struct DivisionRemainderError : std::runtime_error {
    std::string remainder_repr;
    explicit DivisionRemainderError(std::string rem)
        : std::runtime_error("exact_div: nonzero remainder " + rem), remainder_repr(std::move(rem)) {}
};

/// Sparse bivariate polynomial over Q. Canonical: no zero coefficients stored.
class BiPoly {
  public:
    using Terms = std::map<Mon2, Rat>;

    BiPoly() = default;
    explicit BiPoly(const Rat& c) {
        if (c != 0) terms_[Mon2{0, 0}] = c;
    }

    static BiPoly monomial(int a, int b, const Rat& c = Rat(1)) {
        BiPoly p;
        if (c != 0) p.terms_[Mon2{a, b}] = c;
        return p;
    }
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    Rat coeff(int a, int b) const {
        auto it = terms_.find(Mon2{a, b});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(int a, int b, const Rat& c) {
        if (c == 0) return;
        Mon2 m{a, b};
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend BiPoly operator+(const BiPoly& l, const BiPoly& r) {
        BiPoly out = l;
        for (const auto& [m, c] : r.terms_) out.add_term(m.a, m.b, c);
        return out;
    }
    friend BiPoly operator-(const BiPoly& l, const BiPoly& r) {
        BiPoly out = l;
        for (const auto& [m, c] : r.terms_) out.add_term(m.a, m.b, -c);
        return out;
    }
    friend BiPoly operator-(const BiPoly& p) { return BiPoly() - p; }
    friend BiPoly operator*(const BiPoly& l, const BiPoly& r) {
        BiPoly out;
        for (const auto& [ml, cl] : l.terms_)
            for (const auto& [mr, cr] : r.terms_) out.add_term(ml.a + mr.a, ml.b + mr.b, cl * cr);
        return out;
    }
    friend BiPoly operator*(const Rat& c, const BiPoly& p) {
        BiPoly out;
        if (c == 0) return out;
        for (const auto& [m, pc] : p.terms_) out.terms_[m] = c * pc;
        return out;
    }
    friend bool operator==(const BiPoly& l, const BiPoly& r) { return l.terms_ == r.terms_; }
    friend bool operator!=(const BiPoly& l, const BiPoly& r) { return !(l == r); }

    BiPoly pow(long e) const {
        if (e < 0) throw std::domain_error("BiPoly::pow: negative exponent");
        BiPoly result(Rat(1));
        BiPoly base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    std::string str() const {
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
            bool has_var = it->first.a > 0 || it->first.b > 0;
            if (abs != 1 || !has_var) {
                os << abs.get_str();
                if (has_var) os << "*";
            }
            if (it->first.a > 0) {
                os << "x";
                if (it->first.a > 1) os << "^" << it->first.a;
                if (it->first.b > 0) os << "*";
            }
            if (it->first.b > 0) {
                os << "y";
                if (it->first.b > 1) os << "^" << it->first.b;
            }
        }
        return os.str();
    }

  private:
    Terms terms_;
};

inline BiPoly xy_pow(long e) { return BiPoly::monomial(static_cast<int>(e), static_cast<int>(e)); }

/// x^q + y^q, written (+) in the construction.
inline BiPoly plus_poly(int q) {
    BiPoly p = BiPoly::monomial(q, 0);
    p.add_term(0, q, Rat(1));
    return p;
}

/// x^q - y^q, written (-).
inline BiPoly minus_poly(int q) {
    BiPoly p = BiPoly::monomial(q, 0);
    p.add_term(0, q, Rat(-1));
    return p;
}

/// Exact sparse division: returns p/q or throws DivisionRemainderError.
inline BiPoly exact_div(const BiPoly& p, const BiPoly& q) {
    if (q.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    BiPoly rem = p;
    BiPoly quot;
    const Mon2 qlead = q.terms().rbegin()->first;
    const Rat qlc = q.terms().rbegin()->second;
    while (!rem.is_zero()) {
        const Mon2 rlead = rem.terms().rbegin()->first;
        const Rat rlc = rem.terms().rbegin()->second;
        if (rlead.a < qlead.a || rlead.b < qlead.b) throw DivisionRemainderError(rem.str());
        Mon2 m{rlead.a - qlead.a, rlead.b - qlead.b};
        Rat c = rlc / qlc;
        quot.add_term(m.a, m.b, c);
        rem = rem - BiPoly::monomial(m.a, m.b, c) * q;
    }
    return quot;
}

inline bool divides(const BiPoly& q, const BiPoly& p) {
    try {
        exact_div(p, q);
        return true;
    } catch (const DivisionRemainderError&) {
        return false;
    }
}

/// Rational function in x,y as a num/den pair; equality by cross-multiplication.
struct RatFunc {
    BiPoly num, den;

    RatFunc() : num(), den(Rat(1)) {}
    RatFunc(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    }
    explicit RatFunc(const BiPoly& n) : num(n), den(Rat(1)) {}

    bool is_zero() const { return num.is_zero(); }

    friend RatFunc operator+(const RatFunc& l, const RatFunc& r) {
        return RatFunc(l.num * r.den + r.num * l.den, l.den * r.den);
    }
    friend RatFunc operator-(const RatFunc& l, const RatFunc& r) {
        return RatFunc(l.num * r.den - r.num * l.den, l.den * r.den);
    }
    friend RatFunc operator*(const RatFunc& l, const RatFunc& r) {
        return RatFunc(l.num * r.num, l.den * r.den);
    }
    friend RatFunc operator/(const RatFunc& l, const RatFunc& r) {
        if (r.num.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(l.num * r.den, l.den * r.num);
    }
    friend bool operator==(const RatFunc& l, const RatFunc& r) { return l.num * r.den == r.num * l.den; }
    friend bool operator!=(const RatFunc& l, const RatFunc& r) { return !(l == r); }

    RatFunc pow(long e) const {
        if (e >= 0) return RatFunc(num.pow(e), den.pow(e));
        if (num.is_zero()) throw std::domain_error("RatFunc: negative power of zero");
        return RatFunc(den.pow(-e), num.pow(-e));
    }
};

// --- serialization ----------------------------------------------------------
// Record list {a, b, coeff "num/den"}, sorted graded-lex ascending; round-trips
// bit-exactly.

struct PolyRecord {
    int a, b;
    std::string coeff;
};

inline std::vector<PolyRecord> serialize_poly(const BiPoly& p) {
    std::vector<PolyRecord> out;
    out.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) out.push_back({m.a, m.b, rat_str(c)});
    return out;
}

inline BiPoly deserialize_poly(const std::vector<PolyRecord>& records) {
    BiPoly p;
    for (const auto& r : records) {
        if (r.a < 0 || r.b < 0) throw std::domain_error("deserialize_poly: negative exponent");
        p.add_term(r.a, r.b, parse_rat(r.coeff));
    }
    return p;
}

}  // namespace recond
