#pragma once

#include <cstdint>
#include <vector>

namespace ellmod {

// Genus of the modular curve X0(N), from the index / elliptic-point / cusp
// formula with the standard multiplicative ingredient expressions:
//   mu   = N * prod_{p | N} (1 + 1/p)
//   nu2  = 0 if 4 | N, else prod_{p | N} (1 + (-1|p))
//   nu3  = 0 if 9 | N, else prod_{p | N} (1 + (-3|p))
//   nuoo = sum_{d | N} phi(gcd(d, N/d))
//   g    = 1 + mu/12 - nu2/4 - nu3/3 - nuoo/2
long genus_x0(std::uint64_t N);

// Ingredients exposed for the table output.
struct X0Data {
    std::uint64_t N = 1;
    std::uint64_t index = 1;
    std::uint64_t nu2 = 1;
    std::uint64_t nu3 = 1;
    std::uint64_t cusps = 1;
    long genus = 0;
};
X0Data x0_data(std::uint64_t N);

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

} // namespace ellmod
