#pragma once

#include <cstdint>
#include <iosfwd>
#include <ostream>

#include "ellmod/errors.hpp"
#include "ellmod/integer.hpp"
#include "ellmod/primes.hpp"

namespace ellmod {

// Prime-field element with runtime modulus. The modulus is validated by a
// deterministic primality check on first use and memoized, so tight loops
// constructing many elements over one field pay the check once.
class Fp {
public:
    Fp() : r_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
        check_modulus(p);
        r_ = value % p;
    }
    Fp(const BigInt& value, std::uint64_t p) : p_(p) {
        check_modulus(p);
        r_ = mod_u64(value, p);
    }
    static Fp from_int(std::int64_t value, std::uint64_t p) {
        check_modulus(p);
        std::int64_t m = value % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        return Fp(static_cast<std::uint64_t>(m), p);
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }

    Fp operator-() const { return raw(r_ == 0 ? 0 : p_ - r_, p_); }
    Fp& operator+=(const Fp& o) { same_field(o); r_ += o.r_; if (r_ >= p_) r_ -= p_; return *this; }
    Fp& operator-=(const Fp& o) { same_field(o); r_ += p_ - o.r_; if (r_ >= p_) r_ -= p_; return *this; }
    Fp& operator*=(const Fp& o) { same_field(o); r_ = mulmod_u64(r_, o.r_, p_); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.r_ == b.r_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (r_ == 0) throw ZeroDenominator("inverse of zero in prime field");
        return raw(powmod_u64(r_, p_ - 2, p_), p_);
    }
    Fp pow(std::uint64_t e) const { return raw(powmod_u64(r_, e, p_), p_); }

private:
    static Fp raw(std::uint64_t r, std::uint64_t p) {
        Fp x;
        x.r_ = r;
        x.p_ = p;
        return x;
    }
    static void check_modulus(std::uint64_t p) {
        thread_local std::uint64_t last_ok = 0;
        if (p == last_ok) return;
        if (!is_prime_u64(p)) throw InvalidModulus("prime-field modulus must be prime");
        last_ok = p;
    }
    void same_field(const Fp& o) const {
        if (p_ != o.p_) throw InvalidInput("mixed prime-field moduli");
    }

    std::uint64_t r_;
    std::uint64_t p_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) {
    return os << x.residue();
}

} // namespace ellmod
