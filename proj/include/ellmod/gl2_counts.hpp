#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ellmod/integer.hpp"
#include "ellmod/mat2.hpp"

namespace ellmod {

// #{M in GL2(Z/ell) : tr M = tau, det M = d} for all (tau, d), computed by
// one exhaustive pass over the ell^4 matrices. Cached per ell. The counts
// exhibit the closed form ell*(ell + e) with e in {-1, 0, +1} the square
// class of tau^2 - 4d; enumeration, not that form, is the source of truth
// here and the form is asserted as a derived property in the tests.
class TraceDetTable {
public:
    explicit TraceDetTable(std::uint32_t ell, int threads = 1);

    std::uint32_t ell() const { return ell_; }
    std::uint64_t count(std::uint32_t tau, std::uint32_t d) const {
        return counts_[static_cast<std::size_t>(tau) * ell_ + d];
    }

private:
    std::uint32_t ell_;
    std::vector<std::uint64_t> counts_; // [tau * ell + d]
};

// Cached table lookup (ell must be prime).
const TraceDetTable& trace_det_table(std::uint32_t ell, int threads = 1);

// Single count; throws InvalidInput when d = 0 mod ell.
std::uint64_t count_by_trace_det(std::uint32_t ell, std::uint32_t tau, std::uint32_t d);

// |G_ell^p| = |SL2(Z/ell)|^n = ell^n (ell^2 - 1)^n.
BigInt det_fiber_size(std::uint32_t ell, unsigned n);

// Product class size: prod_i count_by_trace_det(ell, tau_i, d).
BigInt class_count_product(std::uint32_t ell, std::uint32_t d,
                           std::span<const std::uint32_t> taus);

} // namespace ellmod
