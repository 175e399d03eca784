#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ellmod/errors.hpp"
#include "ellmod/fp.hpp"
#include "ellmod/integer.hpp"
#include "ellmod/rational.hpp"

namespace ellmod {

// Coefficient-domain customization points. A "model" element supplies the
// runtime context (the prime-field modulus); for context-free domains the
// model is ignored.
inline BigInt zero_like(const BigInt&) { return BigInt(0); }
inline BigInt one_like(const BigInt&) { return BigInt(1); }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Fp zero_like(const Fp& m) { return Fp(0, m.modulus()); }
inline Fp one_like(const Fp& m) { return Fp(1, m.modulus()); }

inline bool coeff_is_zero(const BigInt& x) { return x == 0; }
inline bool coeff_is_zero(const Rational& x) { return x.is_zero(); }
inline bool coeff_is_zero(const Fp& x) { return x.is_zero(); }

template <typename T>
concept ring_element = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { coeff_is_zero(a) } -> std::convertible_to<bool>;
};

// BigInt carries a truncating operator/ which must never masquerade as
// field division, so field status is an explicit trait rather than a
// syntactic check. Polynomial division, gcd and rational functions are
// field-only; over the integers no division is exposed.
template <typename T>
inline constexpr bool division_is_exact = requires(T a, T b) {
    { a / b } -> std::convertible_to<T>;
};
template <>
inline constexpr bool division_is_exact<BigInt> = false;

template <typename T>
concept field_element = ring_element<T> && division_is_exact<T>;

// Dense univariate polynomial, coefficients lowest degree first, trailing
// zeros trimmed. The zero polynomial is the empty list. Dense storage is
// adequate at the degrees this library works with (< 100).
template <ring_element T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial reported as -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& leading() const { return c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const auto& longer = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
        const auto& shorter = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
        std::vector<T> out = longer;
        for (std::size_t i = 0; i < shorter.size(); ++i) out[i] = out[i] + shorter[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<T> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(-x);
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const T& s, const Poly& p) {
        std::vector<T> out;
        out.reserve(p.c_.size());
        for (const auto& x : p.c_) out.push_back(s * x);
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ",";
            os << c_[i];
        }
        os << "]";
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

// Horner evaluation; the zero polynomial evaluates to the zero of x's domain.
template <ring_element T>
T poly_eval(const Poly<T>& f, const T& x) {
    if (f.is_zero()) return zero_like(x);
    T acc = zero_like(x);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + f.coeffs()[i];
    return acc;
}

// Evaluate an integer-coefficient polynomial at a rational or prime-field
// point (family specializations use both paths constantly).
inline Rational poly_eval(const Poly<BigInt>& f, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + Rational(f.coeffs()[i]);
    return acc;
}
inline Fp poly_eval(const Poly<BigInt>& f, const Fp& x) {
    Fp acc = zero_like(x);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + Fp(f.coeffs()[i], x.modulus());
    return acc;
}

template <ring_element T>
Poly<T> reduce_mod_p(const Poly<BigInt>& f, std::uint64_t p)
    requires std::same_as<T, Fp>
{
    std::vector<Fp> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.emplace_back(c, p);
    return Poly<Fp>(std::move(out));
}

inline Poly<Rational> to_rational_poly(const Poly<BigInt>& f) {
    std::vector<Rational> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.emplace_back(c);
    return Poly<Rational>(std::move(out));
}

// Division with remainder over a field; divisor must be nonzero.
template <field_element F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> rem(a.coeffs());
    std::vector<F> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                        zero_like(b.leading()));
    const F lead_inv = one_like(b.leading()) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        F q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        if (coeff_is_zero(q)) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] =
                rem[static_cast<std::size_t>(k + j)] - q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <field_element F>
Poly<F> make_monic(const Poly<F>& f) {
    if (f.is_zero() || f.leading() == one_like(f.leading())) return f;
    return (one_like(f.leading()) / f.leading()) * f;
}

// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
template <field_element F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <ring_element T>
std::ostream& operator<<(std::ostream& os, const Poly<T>& p) {
    return os << p.str();
}

} // namespace ellmod
