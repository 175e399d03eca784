#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ellmod/errors.hpp"
#include "ellmod/heights.hpp"
#include "ellmod/integer.hpp"
#include "ellmod/rational.hpp"

namespace ellmod {

// Exact quantity of the form base * sqrt(radicand) with base, radicand >= 0
// rational. Powers g^{3/2} = g * sqrt(g) live here; comparisons square both
// sides instead of rounding. A perfect-square radicand is folded into the
// base on construction, so is_exact()/exact_value() report integral results
// like 4^{3/2} = 8 exactly.
class SqrtQuantity {
public:
    static SqrtQuantity exact(Rational v) {
        if (v < Rational(0)) throw InvalidInput("negative quantity");
        SqrtQuantity q;
        q.base_ = std::move(v);
        q.radicand_ = Rational(1);
        return q;
    }
    static SqrtQuantity make(Rational base, Rational radicand) {
        if (base < Rational(0) || radicand < Rational(0))
            throw InvalidInput("negative quantity");
        SqrtQuantity q;
        q.base_ = std::move(base);
        q.radicand_ = std::move(radicand);
        q.fold();
        return q;
    }
    // x^{3/2} = x * sqrt(x)
    static SqrtQuantity pow_3_2(const Rational& x) { return make(x, x); }

    bool is_exact() const { return radicand_ == Rational(1) || base_.is_zero(); }
    Rational exact_value() const {
        if (!is_exact()) throw InvalidInput("irrational quantity");
        return base_.is_zero() ? Rational(0) : base_;
    }
    const Rational& base() const { return base_; }
    const Rational& radicand() const { return radicand_; }

    // value^2, always rational
    Rational squared() const { return base_ * base_ * radicand_; }

    friend bool operator==(const SqrtQuantity& a, const SqrtQuantity& b) {
        return a.squared() == b.squared();
    }
    friend bool operator<(const SqrtQuantity& a, const SqrtQuantity& b) {
        return a.squared() < b.squared();
    }
    friend bool operator<=(const SqrtQuantity& a, const SqrtQuantity& b) {
        return a.squared() <= b.squared();
    }
    friend bool operator>(const SqrtQuantity& a, const SqrtQuantity& b) { return b < a; }
    friend bool operator>=(const SqrtQuantity& a, const SqrtQuantity& b) { return b <= a; }

    double approx() const;
    std::string str() const;

private:
    void fold();
    Rational base_ = Rational(0);
    Rational radicand_ = Rational(1);
};

// Sign constants of the one-dimensional effective threshold.
inline int e2(std::uint64_t q) { return q % 4 == 1 ? 1 : -1; }
inline int e3(std::uint64_t q) { return q % 3 == 1 ? 1 : -1; }

// Effective single-curve threshold: literal value of
//   2 + max{q prime : (q - (6 + 3 e2(q) + 4 e3(q))) / 12 <= g},
// together with the conservative variant max(literal, 17). The literal
// formula gives 15 at g = 0 while 17 is the documented floor; downstream
// consumers use the conservative value. See the constants table docs.
struct CofG {
    long literal;
    long conservative;
};
CofG c_of_g(long g);

// 3176523 * max{1, g^{3/2}}, exact.
SqrtQuantity C_of_g(long g);

// c(g) for n = 1 (conservative), C(g) for n >= 2.
SqrtQuantity C_tilde(long g, long n);

// max{c(g), 27 * (max pairwise product of modular heights)^{3/2}}.
// Heights must be degree-valued (function-field); needs >= 2 factors.
SqrtQuantity C_prime(long g, const std::vector<HeightValue>& hmods);

// Isogeny degree bounds: elliptic-curve and abelian-surface versions, in
// the genus and modular-height parametrizations.
inline BigInt isogeny_bound_ec_genus(long g) {
    return BigInt(49) * std::max(1L, g);
}
inline BigInt isogeny_bound_surface_genus(long g) {
    const BigInt g2 = BigInt(g) * g;
    return BigInt(9) * 49 * 49 * std::max(BigInt(1), g2);
}
inline Rational isogeny_bound_ec_hmod(long Ldeg, const Rational& h1, const Rational& h2) {
    if (Ldeg < 1) throw InvalidInput("extension degree must be >= 1");
    return Rational(Ldeg) * std::min(h1, h2);
}
inline Rational isogeny_bound_surface_hmod(long Ldeg, const Rational& h1, const Rational& h2) {
    if (Ldeg < 1) throw InvalidInput("extension degree must be >= 1");
    return Rational(9) * Rational(Ldeg) * Rational(Ldeg) * h1 * h2;
}

// Degree calculus for isogenies of n-dimensional abelian varieties.
inline BigInt mult_degree(const BigInt& m, unsigned dim) {
    if (m < 1 || dim < 1) throw InvalidInput("positive arguments required");
    return ipow(m, 2ul * dim);
}
inline BigInt tilde_degree(const BigInt& d, unsigned n) {
    if (d < 1 || n < 1) throw InvalidInput("positive arguments required");
    return ipow(d, 2ul * n - 1);
}
inline bool is_biseparable_degree(const BigInt& d, std::uint64_t p) {
    if (d < 1) throw InvalidInput("positive degree required");
    if (p == 0) return true; // characteristic 0: every isogeny is separable
    return gcd(d, BigInt(static_cast<unsigned long>(p))) == 1;
}

// One row of the constants table.
struct BoundReport {
    long g = 0;
    long n = 2;
    std::map<std::string, std::string> values;
};
BoundReport make_bound_report(long g, long n);

} // namespace ellmod
