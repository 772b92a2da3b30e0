#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace thetaprod {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// floor(r) as a long; r must fit
inline long rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("rat_floor overflow");
    return q.get_si();
}

inline long rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("rat_ceil overflow");
    return q.get_si();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long isqrt_floor(long n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    Int s;
    mpz_sqrt(s.get_mpz_t(), Int(n).get_mpz_t());
    return s.get_si();
}

inline long lcm_long(long a, long b) {
    long g = std::gcd(a, b);
    long l = a / g * b;
    if (l <= 0) throw std::overflow_error("lcm overflow");
    return l;
}

// Parse "n" or "n/d" into a canonical rational.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rat(Int(s), Int(1));
    return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

}  // namespace thetaprod
