#pragma once

#include <cstdint>
#include <vector>

#include "ellmod/errors.hpp"
#include "ellmod/integer.hpp"

namespace ellmod {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin. The witness set certifies every n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Primality for BigInt inputs: deterministic below 2^64, rejected above
// (throws InvalidModulus) -- nothing in this library needs larger moduli.
bool is_prime_checked(const BigInt& n);

// Legendre symbol (a | ell) for an odd prime ell: 0 if ell | a, +1 for a
// nonzero square, -1 otherwise. Throws InvalidModulus unless ell is an odd
// prime.
int legendre(std::int64_t a, std::uint64_t ell);
int legendre(const BigInt& a, std::uint64_t ell);

// Unchecked core used in hot loops where the modulus was validated once.
inline int legendre_unchecked(std::uint64_t a_mod, std::uint64_t ell) {
    if (a_mod == 0) return 0;
    std::uint64_t e = powmod_u64(a_mod, (ell - 1) / 2, ell);
    return e == 1 ? 1 : -1;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

} // namespace ellmod
