#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "ellmod/errors.hpp"
#include "ellmod/integer.hpp"
#include "ellmod/rational.hpp"
#include "ellmod/ratfunc.hpp"
#include "ellmod/weierstrass.hpp"

namespace ellmod {

// Exact height value. Over Q the height of m/n is log max(|m|, n) and the
// integer argument is stored so comparisons never touch floating point;
// over a function field heights are in degree units (h(t) = 1), which makes
// modular heights integer-valued.
class HeightValue {
public:
    enum class Base { Q, FunctionField };

    static HeightValue log_of(BigInt arg) {
        HeightValue h;
        h.base_ = Base::Q;
        h.log_arg_ = std::move(arg);
        return h;
    }
    static HeightValue degrees(Rational v) {
        if (v < Rational(0)) throw InvalidInput("negative height");
        HeightValue h;
        h.base_ = Base::FunctionField;
        h.deg_ = std::move(v);
        return h;
    }

    Base base() const { return base_; }
    bool is_degree_valued() const { return base_ == Base::FunctionField; }
    // log argument M >= 1 such that the height equals log M (Q base only)
    const BigInt& log_argument() const {
        if (base_ != Base::Q) throw UnsupportedBase("not a log-valued height");
        return log_arg_;
    }
    const Rational& degree_value() const {
        if (base_ != Base::FunctionField) throw UnsupportedBase("not a degree-valued height");
        return deg_;
    }

    bool is_zero() const {
        return base_ == Base::Q ? log_arg_ == 1 : deg_.is_zero();
    }

    double approx() const {
        if (base_ == Base::Q) {
            signed long exp = 0;
            const double d = mpz_get_d_2exp(&exp, log_arg_.get_mpz_t());
            return std::log(d) + static_cast<double>(exp) * std::log(2.0);
        }
        return deg_.approx();
    }

    // Exact comparisons are only meaningful within one base.
    friend bool operator==(const HeightValue& a, const HeightValue& b) {
        if (a.base_ != b.base_) throw UnsupportedBase("comparing heights over different bases");
        return a.base_ == Base::Q ? a.log_arg_ == b.log_arg_ : a.deg_ == b.deg_;
    }
    friend bool operator<(const HeightValue& a, const HeightValue& b) {
        if (a.base_ != b.base_) throw UnsupportedBase("comparing heights over different bases");
        return a.base_ == Base::Q ? a.log_arg_ < b.log_arg_ : a.deg_ < b.deg_;
    }

    std::string str() const {
        if (base_ == Base::Q) {
            if (log_arg_ == 1) return "0";
            return "log(" + log_arg_.get_str() + ")";
        }
        return deg_.str();
    }

private:
    Base base_ = Base::Q;
    BigInt log_arg_ = 1;
    Rational deg_ = Rational(0);
};

// h(m/n) = log max(|m|, n) for a reduced fraction.
inline HeightValue weil_height_Q(const Rational& x) {
    return HeightValue::log_of(std::max(abs(x.num()), x.den()));
}

// Degree-unit Weil height over k(t): max(deg num, deg den) of the reduced
// form; constants have height 0.
template <field_element F>
HeightValue weil_height_fft(const RationalFunction<F>& f) {
    const long d = std::max<long>(std::max(f.num().degree(), f.den().degree()), 0);
    return HeightValue::degrees(Rational(d));
}

// Modular height h_mod(E) = h(j(E)) in the base-appropriate normalization.
inline HeightValue modular_height(const CurveQ& c) {
    return weil_height_Q(j_invariant(c));
}
template <field_element F>
HeightValue modular_height(const WeierstrassCurve<RationalFunction<F>>& c) {
    return weil_height_fft(j_invariant(c));
}
inline HeightValue modular_height(const CurveFp&) {
    throw UnsupportedBase("heights are defined over Q and function-field bases only");
}

} // namespace ellmod
