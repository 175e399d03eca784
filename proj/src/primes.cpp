#include "ellmod/primes.hpp"

namespace ellmod {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This witness set is deterministic for all n < 2^64 (Sorenson-Webster).
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime_checked(const BigInt& n) {
    if (n < 0) return false;
    if (!fits_u64(n))
        throw InvalidModulus("primality check limited to moduli < 2^64");
    return is_prime_u64(n.get_ui());
}

int legendre(std::int64_t a, std::uint64_t ell) {
    if (ell == 2 || !is_prime_u64(ell))
        throw InvalidModulus("legendre requires an odd prime modulus");
    std::int64_t m = a % static_cast<std::int64_t>(ell);
    if (m < 0) m += static_cast<std::int64_t>(ell);
    return legendre_unchecked(static_cast<std::uint64_t>(m), ell);
}

int legendre(const BigInt& a, std::uint64_t ell) {
    if (ell == 2 || !is_prime_u64(ell))
        throw InvalidModulus("legendre requires an odd prime modulus");
    return legendre_unchecked(mod_u64(a, ell), ell);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

} // namespace ellmod
