#pragma once

#include <cstdint>
#include <vector>

#include "ellmod/family.hpp"

namespace ellmod {

// Exact count table T_p(tau_1, ..., tau_n) for a family over F_p at level
// ell: one exhaustive pass over t0 in F_p fills all ell^n cells. The
// heuristic prediction is p / ell^n per cell.
struct TraceCountTable {
    std::uint64_t p = 0;
    std::uint32_t ell = 0;
    std::size_t n = 0;
    std::vector<std::uint64_t> counts; // mixed radix, index = sum tau_i * ell^i
    std::uint64_t good_count = 0;      // #{t0 : all Delta_i(t0) != 0}

    std::size_t index_of(const std::vector<std::uint32_t>& taus) const;
    std::uint64_t count(const std::vector<std::uint32_t>& taus) const {
        return counts[index_of(taus)];
    }
    std::vector<std::uint32_t> taus_of(std::size_t index) const;
};

TraceCountTable chebotarev_table(const FamilySpec& family, std::uint64_t p, std::uint32_t ell,
                                 int threads = 1);

// Single entry, by the same exhaustive pass.
std::uint64_t chebotarev_count(const FamilySpec& family, std::uint64_t p, std::uint32_t ell,
                               const std::vector<std::int64_t>& taus);

} // namespace ellmod
