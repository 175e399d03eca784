#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ellmod/errors.hpp"
#include "ellmod/fp.hpp"
#include "ellmod/weierstrass.hpp"

namespace ellmod {

// One Frobenius datum: N = p + 1 - a with |a| <= 2 sqrt(p).
struct FrobeniusDatum {
    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::uint64_t N = 0;
};

// Exact point count of y^2 = x^3 + a4 x + a6 over F_p (projective, i.e.
// including the point at infinity). Exhaustive x-scan for p <= 2^16,
// baby-step giant-step above; BSGS falls back to the exhaustive scan when
// the Hasse window does not pin the order down uniquely.
FrobeniusDatum count_points(const CurveFp& c);
FrobeniusDatum count_points_exhaustive(const CurveFp& c);
FrobeniusDatum count_points_bsgs(const CurveFp& c);

// Square root mod an odd prime, deterministic (smallest-nonresidue
// Tonelli-Shanks); empty when a is a nonresidue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

// Quadratic-residue indicator table: table[x] = 1 iff x is a nonzero
// square mod p. Shared by the exhaustive counter and the family scans.
std::vector<std::uint8_t> square_table(std::uint64_t p);

} // namespace ellmod
