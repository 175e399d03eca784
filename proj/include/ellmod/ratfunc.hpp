#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "ellmod/errors.hpp"
#include "ellmod/poly.hpp"

namespace ellmod {

// Element of F(t): numerator/denominator coprime, denominator monic and
// nonzero (the zero element keeps denominator 1, so every value carries its
// field context).
template <field_element F>
class RationalFunction {
public:
    static RationalFunction reduce(Poly<F> num, Poly<F> den) {
        if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
        RationalFunction r(Poly<F>(), Poly<F>::constant(one_like(den.leading())));
        if (num.is_zero()) return r;
        Poly<F> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = poly_divmod(num, g).first;
            den = poly_divmod(den, g).first;
        }
        const F scale = one_like(den.leading()) / den.leading();
        r.num_ = scale * num;
        r.den_ = scale * den;
        return r;
    }
    static RationalFunction from_poly(Poly<F> p, const F& model) {
        return RationalFunction(std::move(p), Poly<F>::constant(one_like(model)));
    }
    static RationalFunction constant(const F& v) { return from_poly(Poly<F>::constant(v), v); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    F field_model() const { return den_.leading(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return zero_of(a);
        return reduce(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw ZeroDenominator("division by zero rational function");
        if (a.is_zero()) return zero_of(a);
        return reduce(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

    // Evaluation at a point of F; throws PoleAtPoint when the (reduced)
    // denominator vanishes there.
    F eval(const F& x) const {
        F d = poly_eval(den_, x);
        if (coeff_is_zero(d)) throw PoleAtPoint("pole at evaluation point");
        if (is_zero()) return zero_like(x);
        return poly_eval(num_, x) / d;
    }

    std::string str() const {
        if (den_.is_constant()) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    RationalFunction(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {}
    static RationalFunction zero_of(const RationalFunction& m) {
        return RationalFunction(Poly<F>(), Poly<F>::constant(one_like(m.field_model())));
    }

    Poly<F> num_;
    Poly<F> den_;
};

// Canonical reduced form of num/den.
template <field_element F>
RationalFunction<F> rat_reduce(const Poly<F>& num, const Poly<F>& den) {
    return RationalFunction<F>::reduce(num, den);
}

template <field_element F>
RationalFunction<F> zero_like(const RationalFunction<F>& m) {
    return RationalFunction<F>::constant(zero_like(m.field_model()));
}
template <field_element F>
RationalFunction<F> one_like(const RationalFunction<F>& m) {
    return RationalFunction<F>::constant(one_like(m.field_model()));
}
template <field_element F>
bool coeff_is_zero(const RationalFunction<F>& x) { return x.is_zero(); }

template <field_element F>
std::ostream& operator<<(std::ostream& os, const RationalFunction<F>& f) {
    return os << f.str();
}

} // namespace ellmod
