#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recond {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

/// Reduce a rotation to the half-open interval [0,1).
inline Rat mod1(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return r - Rat(fl);
}

inline bool fits_int(const Int& v) {
    return v.fits_slong_p();
}

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer too large for index use");
    return v.get_si();
}

inline int to_int(const Int& v) {
    long l = to_long(v);
    if (l > INT32_MAX || l < INT32_MIN) throw std::overflow_error("integer too large for index use");
    return static_cast<int>(l);
}

/// Serialize as "num/den", denominator always present.
inline std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    Int num, den;
    if (slash == std::string::npos) {
        num = Int(s);
        den = 1;
    } else {
        num = Int(s.substr(0, slash));
        den = Int(s.substr(slash + 1));
    }
    return make_rat(num, den);
}

}  // namespace recond
