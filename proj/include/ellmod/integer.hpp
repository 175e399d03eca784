#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ellmod {

// Arbitrary-precision signed integer. GMP does the heavy lifting; the
// helpers below are the handful of operations the rest of the library
// needs beyond the operator set mpz_class already provides.
using BigInt = mpz_class;

inline BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt abs(const BigInt& x) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& x) {
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline BigInt isqrt(const BigInt& x) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// x mod m as a residue in [0, m) for small m.
inline std::uint64_t mod_u64(const BigInt& x, std::uint64_t m) {
    BigInt r = x % BigInt(static_cast<unsigned long>(m));
    if (r < 0) r += BigInt(static_cast<unsigned long>(m));
    return r.get_ui();
}

inline bool fits_u64(const BigInt& x) {
    return x >= 0 && mpz_fits_ulong_p(x.get_mpz_t()) != 0;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }

} // namespace ellmod
