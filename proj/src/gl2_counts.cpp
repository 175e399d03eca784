#include "ellmod/gl2_counts.hpp"

#include <map>
#include <mutex>

#include "ellmod/errors.hpp"
#include "ellmod/parallel.hpp"
#include "ellmod/primes.hpp"

namespace ellmod {

TraceDetTable::TraceDetTable(std::uint32_t ell, int threads) : ell_(ell) {
    if (!is_prime_u64(ell)) throw InvalidModulus("ell must be prime");
    const std::size_t cells = static_cast<std::size_t>(ell) * ell;
    // Partial tables per a-row, merged in index order.
    std::vector<std::vector<std::uint64_t>> partial(ell, std::vector<std::uint64_t>(cells, 0));
    parallel_for(ell, threads, [&](std::size_t a) {
        auto& tab = partial[a];
        const std::uint64_t L = ell;
        for (std::uint64_t b = 0; b < L; ++b)
            for (std::uint64_t c = 0; c < L; ++c) {
                const std::uint64_t bc = b * c % L;
                for (std::uint64_t d = 0; d < L; ++d) {
                    const std::uint64_t det = (a * d % L + L - bc) % L;
                    if (det == 0) continue;
                    const std::uint64_t tau = (a + d) % L;
                    ++tab[tau * L + det];
                }
            }
    });
    counts_.assign(cells, 0);
    for (const auto& tab : partial)
        for (std::size_t i = 0; i < cells; ++i) counts_[i] += tab[i];
}

const TraceDetTable& trace_det_table(std::uint32_t ell, int threads) {
    static std::mutex mu;
    static std::map<std::uint32_t, TraceDetTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ell);
    if (it == cache.end()) it = cache.emplace(ell, TraceDetTable(ell, threads)).first;
    return it->second;
}

std::uint64_t count_by_trace_det(std::uint32_t ell, std::uint32_t tau, std::uint32_t d) {
    if (d % ell == 0) throw InvalidInput("determinant must be nonzero mod ell");
    return trace_det_table(ell).count(tau % ell, d % ell);
}

BigInt det_fiber_size(std::uint32_t ell, unsigned n) {
    if (!is_prime_u64(ell)) throw InvalidModulus("ell must be prime");
    if (n < 1) throw InvalidInput("n must be >= 1");
    const BigInt sl2 = BigInt(ell) * (BigInt(ell) * ell - 1);
    return ipow(sl2, n);
}

BigInt class_count_product(std::uint32_t ell, std::uint32_t d,
                           std::span<const std::uint32_t> taus) {
    if (taus.empty()) throw InvalidInput("need at least one trace");
    BigInt acc = 1;
    for (std::uint32_t tau : taus) acc *= BigInt(count_by_trace_det(ell, tau, d));
    return acc;
}

} // namespace ellmod
