#include "ellmod/genus_x0.hpp"

#include <numeric>

#include "ellmod/errors.hpp"

namespace ellmod {

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint64_t e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

X0Data x0_data(std::uint64_t N) {
    if (N < 1) throw InvalidInput("level must be positive");
    X0Data d;
    d.N = N;

    std::uint64_t mu = N;
    for (const auto& [p, e] : factorize(N)) mu += mu / p;
    d.index = mu;

    const auto chi_m1 = [](std::uint64_t p) -> long {
        if (p == 2) return 0;
        return p % 4 == 1 ? 1 : -1;
    };
    const auto chi_m3 = [](std::uint64_t p) -> long {
        if (p == 3) return 0;
        return p % 3 == 1 ? 1 : -1;
    };

    std::uint64_t nu2 = 1;
    if (N % 4 == 0) nu2 = 0;
    else
        for (const auto& [p, e] : factorize(N)) nu2 *= static_cast<std::uint64_t>(1 + chi_m1(p));
    std::uint64_t nu3 = 1;
    if (N % 9 == 0) nu3 = 0;
    else
        for (const auto& [p, e] : factorize(N)) nu3 *= static_cast<std::uint64_t>(1 + chi_m3(p));
    d.nu2 = nu2;
    d.nu3 = nu3;

    std::uint64_t cusps = 0;
    for (std::uint64_t div = 1; div <= N; ++div)
        if (N % div == 0) cusps += euler_phi(std::gcd(div, N / div));
    d.cusps = cusps;

    // 12 g = 12 + mu - 3 nu2 - 4 nu3 - 6 nuoo, always divisible by 12
    const long twelve_g = static_cast<long>(12 + mu) - 3 * static_cast<long>(nu2) -
                          4 * static_cast<long>(nu3) - 6 * static_cast<long>(cusps);
    if (twelve_g % 12 != 0) throw InvalidInput("genus formula did not produce an integer");
    d.genus = twelve_g / 12;
    return d;
}

long genus_x0(std::uint64_t N) { return x0_data(N).genus; }

} // namespace ellmod
