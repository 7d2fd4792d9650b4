#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sto {

using Int = mpz_class;
using Rat = mpq_class;

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline Int binom(const Int& n, unsigned long k) {
    if (n < 0) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "num/den" (or just "num" when integral)
std::string rat_to_string(const Rat& r);

// fixed-point decimal with the given number of digits after the point,
// correct for magnitudes far beyond double (digit-by-digit long division)
std::string rat_to_decimal(const Rat& r, int digits = 6);

}  // namespace sto
