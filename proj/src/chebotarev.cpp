#include "ellmod/chebotarev.hpp"

#include "ellmod/parallel.hpp"
#include "ellmod/point_count.hpp"
#include "ellmod/primes.hpp"

namespace ellmod {

std::size_t TraceCountTable::index_of(const std::vector<std::uint32_t>& taus) const {
    if (taus.size() != n) throw InvalidInput("trace tuple has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = n; i-- > 0;) idx = idx * ell + taus[i] % ell;
    return idx;
}

std::vector<std::uint32_t> TraceCountTable::taus_of(std::size_t index) const {
    std::vector<std::uint32_t> taus(n);
    for (std::size_t i = 0; i < n; ++i) {
        taus[i] = static_cast<std::uint32_t>(index % ell);
        index /= ell;
    }
    return taus;
}

TraceCountTable chebotarev_table(const FamilySpec& family, std::uint64_t p, std::uint32_t ell,
                                 int threads) {
    require_odd_characteristic(p);
    if (!is_prime_u64(p)) throw InvalidInput("p must be prime");
    if (!is_prime_u64(ell)) throw InvalidLevel("ell must be prime");
    if (ell == p) throw InvalidLevel("ell must differ from the characteristic p");
    validate_family(family);

    // Reduced family must stay non-isotrivial mod p.
    std::vector<CurveFt<Fp>> reduced;
    for (std::size_t i = 0; i < family.n(); ++i) {
        CurveFt<Fp> c = reduce_family_curve(family.A[i], family.B[i], p);
        if (!is_nonsingular(c))
            throw BadReduction("family discriminant vanishes identically mod p");
        if (is_isotrivial(c))
            throw InvalidInput("factor " + std::to_string(i) + " is isotrivial mod p");
        reduced.push_back(std::move(c));
    }

    TraceCountTable table;
    table.p = p;
    table.ell = ell;
    table.n = family.n();
    std::size_t cells = 1;
    for (std::size_t i = 0; i < table.n; ++i) cells *= ell;
    table.counts.assign(cells, 0);

    // Per-t0 cell index (or npos for a bad specialization), computed in
    // parallel, folded sequentially.
    constexpr std::size_t kBad = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cell_of(p, kBad);
    parallel_for(p, threads, [&](std::size_t t0_raw) {
        const Fp t0(static_cast<std::uint64_t>(t0_raw), p);
        std::size_t idx = 0;
        std::size_t weight = 1;
        for (const auto& c : reduced) {
            CurveFp spec{};
            try {
                spec = specialize(c, t0);
            } catch (const BadReduction&) {
                return;
            } catch (const PoleAtPoint&) {
                return;
            }
            const std::int64_t a = count_points(spec).a;
            std::int64_t m = a % static_cast<std::int64_t>(ell);
            if (m < 0) m += ell;
            idx += static_cast<std::size_t>(m) * weight;
            weight *= ell;
        }
        cell_of[t0_raw] = idx;
    });
    for (std::size_t t0 = 0; t0 < p; ++t0) {
        if (cell_of[t0] == kBad) continue;
        ++table.counts[cell_of[t0]];
        ++table.good_count;
    }
    return table;
}

std::uint64_t chebotarev_count(const FamilySpec& family, std::uint64_t p, std::uint32_t ell,
                               const std::vector<std::int64_t>& taus) {
    const TraceCountTable table = chebotarev_table(family, p, ell);
    std::vector<std::uint32_t> reduced;
    reduced.reserve(taus.size());
    for (std::int64_t t : taus) {
        std::int64_t m = t % static_cast<std::int64_t>(ell);
        if (m < 0) m += ell;
        reduced.push_back(static_cast<std::uint32_t>(m));
    }
    return table.count(reduced);
}

} // namespace ellmod
