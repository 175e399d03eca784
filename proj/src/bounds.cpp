#include "ellmod/bounds.hpp"

#include <cmath>

#include "ellmod/primes.hpp"

namespace ellmod {

void SqrtQuantity::fold() {
    if (base_.is_zero()) {
        radicand_ = Rational(1);
        return;
    }
    if (radicand_.is_zero()) {
        base_ = Rational(0);
        radicand_ = Rational(1);
        return;
    }
    if (is_perfect_square(radicand_.num()) && is_perfect_square(radicand_.den())) {
        base_ = base_ * Rational(isqrt(radicand_.num()), isqrt(radicand_.den()));
        radicand_ = Rational(1);
    }
}

double SqrtQuantity::approx() const {
    return base_.approx() * std::sqrt(radicand_.approx());
}

std::string SqrtQuantity::str() const {
    if (is_exact()) return exact_value().str();
    return base_.str() + "*sqrt(" + radicand_.str() + ")";
}

CofG c_of_g(long g) {
    if (g < 0) throw InvalidInput("genus must be nonnegative");
    // q - (6 + 3 e2 + 4 e3) <= 12 g; the parenthesized term is at most 13,
    // so q <= 12 g + 13 and scanning primes to 12 g + 14 is exhaustive.
    long best = 0;
    for (std::uint32_t q : primes_up_to(static_cast<std::uint32_t>(12 * g + 14))) {
        const long s = 6 + 3 * e2(q) + 4 * e3(q);
        if (static_cast<long>(q) - s <= 12 * g) best = std::max(best, static_cast<long>(q));
    }
    const long literal = 2 + best;
    return CofG{literal, std::max(literal, 17L)};
}

SqrtQuantity C_of_g(long g) {
    if (g < 0) throw InvalidInput("genus must be nonnegative");
    if (g <= 1) return SqrtQuantity::exact(Rational(3176523));
    return SqrtQuantity::make(Rational(3176523) * Rational(g), Rational(g));
}

SqrtQuantity C_tilde(long g, long n) {
    if (n < 1) throw InvalidInput("n must be >= 1");
    if (n == 1) return SqrtQuantity::exact(Rational(c_of_g(g).conservative));
    return C_of_g(g);
}

SqrtQuantity C_prime(long g, const std::vector<HeightValue>& hmods) {
    if (hmods.size() < 2) throw TooFewFactors("C' needs at least two factors");
    Rational best(0);
    for (std::size_t i = 0; i < hmods.size(); ++i) {
        if (!hmods[i].is_degree_valued())
            throw UnsupportedBase("C' takes degree-valued (function-field) heights");
        for (std::size_t j = i + 1; j < hmods.size(); ++j) {
            const Rational prod = hmods[i].degree_value() * hmods[j].degree_value();
            if (prod > best) best = prod;
        }
    }
    const SqrtQuantity second = SqrtQuantity::make(Rational(27) * best, best);
    const SqrtQuantity first = SqrtQuantity::exact(Rational(c_of_g(g).conservative));
    return first >= second ? first : second;
}

BoundReport make_bound_report(long g, long n) {
    BoundReport r;
    r.g = g;
    r.n = n;
    const CofG c = c_of_g(g);
    r.values["c_literal"] = std::to_string(c.literal);
    r.values["c_conservative"] = std::to_string(c.conservative);
    r.values["C"] = C_of_g(g).str();
    r.values["C_tilde"] = C_tilde(g, n).str();
    r.values["isogeny_bound_ec_genus"] = isogeny_bound_ec_genus(g).get_str();
    r.values["isogeny_bound_surface_genus"] = isogeny_bound_surface_genus(g).get_str();
    return r;
}

} // namespace ellmod
