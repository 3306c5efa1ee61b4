#ifndef HMSING_RATIONAL_HPP
#define HMSING_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hmsing {

// Exact rational arithmetic. mpq_class keeps values canonicalized
// (lowest terms, positive denominator), which is exactly the invariant
// we need everywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    r.canonicalize();
    return r;
}

// "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_int(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline long floor_long(const Rat& r) {
    Int q = floor_int(r);
    if (!q.fits_slong_p()) throw std::overflow_error("floor out of range");
    return q.get_si();
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

inline Rat binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

}  // namespace hmsing

#endif
