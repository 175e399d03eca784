#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "ellmod/errors.hpp"
#include "ellmod/integer.hpp"

namespace ellmod {

// Exact rational number, always stored fully reduced with positive
// denominator (mpq_class canonical form matches that invariant).
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                      // NOLINT: implicit by design
    Rational(const BigInt& n) : q_(n) {}             // NOLINT
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw ZeroDenominator("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDenominator("division by zero rational");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw ZeroDenominator("inverse of zero");
        return Rational(den(), num());
    }

    double approx() const { return q_.get_d(); }
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

private:
    struct raw_tag {};
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}
    mpq_class q_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace ellmod

#include <ostream>
namespace ellmod {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
} // namespace ellmod
