#pragma once

#include <cstdint>

#include "ellmod/errors.hpp"
#include "ellmod/fp.hpp"
#include "ellmod/poly.hpp"
#include "ellmod/ratfunc.hpp"
#include "ellmod/rational.hpp"

namespace ellmod {

// Short Weierstrass model y^2 = x^3 + a4 x + a6 over a coefficient domain C.
// Characteristic 2 and 3 are rejected wherever a prime-field base appears;
// general Weierstrass models are out of scope by design.
template <typename C>
struct WeierstrassCurve {
    C a4;
    C a6;
};

using CurveQ = WeierstrassCurve<Rational>;
using CurveFp = WeierstrassCurve<Fp>;
using CurveQt = WeierstrassCurve<RationalFunction<Rational>>;
template <field_element F>
using CurveFt = WeierstrassCurve<RationalFunction<F>>;

template <typename C>
C from_small_int(const C& model, long k);
inline Rational from_small_int(const Rational&, long k) { return Rational(k); }
inline BigInt from_small_int(const BigInt&, long k) { return BigInt(k); }
inline Fp from_small_int(const Fp& m, long k) { return Fp::from_int(k, m.modulus()); }
template <field_element F>
RationalFunction<F> from_small_int(const RationalFunction<F>& m, long k) {
    return RationalFunction<F>::constant(from_small_int(m.field_model(), k));
}

// disc = -16 (4 a4^3 + 27 a6^2); returned as-is even when zero, the
// validity check is separate.
template <typename C>
C discriminant(const WeierstrassCurve<C>& c) {
    const C four = from_small_int(c.a4, 4);
    const C t27 = from_small_int(c.a4, 27);
    const C m16 = from_small_int(c.a4, -16);
    return m16 * (four * c.a4 * c.a4 * c.a4 + t27 * c.a6 * c.a6);
}

template <typename C>
bool is_nonsingular(const WeierstrassCurve<C>& c) {
    return !coeff_is_zero(discriminant(c));
}

template <typename C>
void require_nonsingular(const WeierstrassCurve<C>& c) {
    if (!is_nonsingular(c)) throw SingularCurve("curve has vanishing discriminant");
}

// j = 1728 * 4 a4^3 / (4 a4^3 + 27 a6^2)
template <typename C>
C j_invariant(const WeierstrassCurve<C>& c) {
    const C four = from_small_int(c.a4, 4);
    const C t27 = from_small_int(c.a4, 27);
    const C num = from_small_int(c.a4, 6912) * c.a4 * c.a4 * c.a4;
    const C den = four * c.a4 * c.a4 * c.a4 + t27 * c.a6 * c.a6;
    if (coeff_is_zero(den)) throw SingularCurve("j-invariant of a singular curve");
    return num / den;
}

// A curve over k(t) is isotrivial exactly when its j-invariant is constant.
template <field_element F>
bool is_isotrivial(const WeierstrassCurve<RationalFunction<F>>& c) {
    return j_invariant(c).is_constant();
}

// Specialization t -> t0. Throws PoleAtPoint if a coefficient has a pole at
// t0 and BadReduction if the specialized discriminant vanishes; no invalid
// curve value is ever constructed.
template <field_element F>
WeierstrassCurve<F> specialize(const WeierstrassCurve<RationalFunction<F>>& c, const F& t0) {
    WeierstrassCurve<F> s{c.a4.eval(t0), c.a6.eval(t0)};
    if (!is_nonsingular(s)) throw BadReduction("discriminant vanishes at specialization point");
    return s;
}

// Quadratic twist by d: (a4, a6) -> (d^2 a4, d^3 a6). Over F_p this
// realizes a_p(twist) = legendre(d, p) * a_p.
template <typename C>
WeierstrassCurve<C> quadratic_twist(const WeierstrassCurve<C>& c, const C& d) {
    if (coeff_is_zero(d)) throw InvalidInput("twist by zero");
    require_nonsingular(c);
    return WeierstrassCurve<C>{d * d * c.a4, d * d * d * c.a6};
}

inline void require_odd_characteristic(std::uint64_t p) {
    if (p == 2 || p == 3)
        throw UnsupportedCharacteristic("characteristic 2 and 3 are not supported");
}

// Reduce an integer-coefficient curve over Q(t) to F_p(t).
inline CurveFt<Fp> reduce_family_curve(const Poly<BigInt>& A, const Poly<BigInt>& B,
                                       std::uint64_t p) {
    require_odd_characteristic(p);
    const Fp model(0, p);
    return CurveFt<Fp>{
        RationalFunction<Fp>::from_poly(reduce_mod_p<Fp>(A, p), model),
        RationalFunction<Fp>::from_poly(reduce_mod_p<Fp>(B, p), model)};
}

} // namespace ellmod
