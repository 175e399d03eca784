#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellmod/integer.hpp"
#include "ellmod/poly.hpp"
#include "ellmod/rational.hpp"
#include "ellmod/weierstrass.hpp"

namespace ellmod {

// Family of elliptic curves E_i : y^2 = x^3 + A_i(t) x + B_i(t) over Q(t)
// with integer polynomial coefficients. Validation enforces n >= 2,
// nonzero discriminant polynomials and non-isotriviality of every factor.
struct FamilySpec {
    std::vector<Poly<BigInt>> A;
    std::vector<Poly<BigInt>> B;

    std::size_t n() const { return A.size(); }
    Poly<BigInt> discriminant_poly(std::size_t i) const;
    CurveQt curve_over_Qt(std::size_t i) const;
    CurveQ specialize_at(std::size_t i, const Rational& t0) const; // unchecked reduction
};

void validate_family(const FamilySpec& family);

// Parse "[a0,a1,...];[b0,b1,...]" (coefficients lowest degree first) into
// one curve of a family; single-entry lists denote constant curves over Q.
std::pair<Poly<BigInt>, Poly<BigInt>> parse_curve_line(const std::string& line);
FamilySpec parse_family_lines(const std::vector<std::string>& lines);

// The thirteen rational CM j-invariants (class number one); any
// specialization hitting one of them lands in the excluded set S.
const std::array<BigInt, 13>& rational_cm_j_invariants();

enum class BadReason { BadReduction, CMFactor, IsogenousPair };

struct BadSetEntry {
    BadReason kind = BadReason::BadReduction;
    int i = -1;
    int j = -1; // set for IsogenousPair
    bool heuristic = false;
    std::string str() const;
};

struct BadSetReason {
    Rational t0;
    std::vector<BadSetEntry> reasons;
};

// Membership test for the excluded set S at t0. BadReduction and CMFactor
// are exact; IsogenousPair is the twist-insensitive necessary condition
// a_p(E_i)^2 = a_p(E_j)^2 at every good prime p <= isogeny_prime_bound and
// is labeled heuristic in all outputs.
std::optional<BadSetReason> s_membership(const FamilySpec& family, const Rational& t0,
                                         std::uint64_t isogeny_prime_bound = 100);

// All reduced m/n with gcd(m, n) = 1, n >= 1, max(|m|, n) <= T, in
// ascending order.
std::vector<Rational> enumerate_rationals(long T);

// enumerate_rationals(T) minus S.
std::vector<Rational> enumerate_F(long T, const FamilySpec& family,
                                  std::uint64_t isogeny_prime_bound = 100,
                                  std::vector<BadSetReason>* excluded = nullptr);

} // namespace ellmod
