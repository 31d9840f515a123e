#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace strangedual {

// All arithmetic in this library is exact: arbitrary-precision integers
// (GMP mpz) and rationals (GMP mpq). No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Quotient a/b, throwing if b does not divide a exactly.
inline Int div_exact(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::logic_error("div_exact: " + a.get_str() + " not divisible by " + b.get_str());
    return q;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p())
        throw std::overflow_error("integer too large for machine word: " + a.get_str());
    return a.get_si();
}

}  // namespace strangedual
