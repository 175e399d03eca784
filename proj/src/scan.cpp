#include "ellmod/scan.hpp"

#include <algorithm>
#include <set>

#include "ellmod/parallel.hpp"
#include "ellmod/point_count.hpp"
#include "ellmod/primes.hpp"

namespace ellmod {

std::uint64_t ScanReport::candidates_at(std::uint32_t ell) const {
    std::uint64_t k = 0;
    for (const auto& row : rows)
        for (const auto& cell : row.cells)
            if (cell.ell == ell && cell.status != CertStatus::Certified) ++k;
    return k;
}

std::uint64_t ScanReport::union_candidates() const {
    std::uint64_t k = 0;
    for (const auto& row : rows) {
        const bool candidate =
            std::any_of(row.cells.begin(), row.cells.end(), [](const ScanCell& c) {
                return c.status != CertStatus::Certified;
            });
        if (candidate) ++k;
    }
    return k;
}

ScanReport scan_exceptional(const FamilySpec& family, const ScanConfig& config) {
    validate_family(family);
    if (config.p_max < 30) throw InvalidInput("p_max must be at least 30");
    if (config.ells.empty()) throw InvalidInput("empty ell range");
    for (std::uint32_t ell : config.ells)
        if (!is_prime_u64(ell) || ell <= 5)
            throw InvalidLevel("scan levels must be primes > 5");
    std::vector<std::uint32_t> ells = config.ells;
    std::sort(ells.begin(), ells.end());

    ScanReport report;
    report.config = config;
    report.config.ells = ells;
    for (std::size_t i = 0; i < family.n(); ++i)
        report.family_lines.push_back(family.A[i].str() + ";" + family.B[i].str());

    const std::vector<Rational> F =
        enumerate_F(config.T, family, config.isogeny_prime_bound, &report.excluded);

    std::vector<ScanRow> rows(F.size());
    bool partial = false;
    parallel_for(F.size(), config.threads, [&](std::size_t idx) {
        const Rational& t0 = F[idx];
        ScanRow row;
        row.t0 = t0;
        std::vector<CurveQ> curves;
        for (std::size_t i = 0; i < family.n(); ++i)
            curves.push_back(family.specialize_at(i, t0));
        SampleLog log;
        std::vector<RawTraceData> raw;
        std::optional<std::string> sample_error;
        try {
            raw = sample_traces_Q(curves, config.p_max, &log, 1);
        } catch (const std::exception& e) {
            sample_error = e.what();
        }
        row.skipped_places = log.skipped.size();
        for (std::uint32_t ell : ells) {
            ScanCell cell;
            cell.ell = ell;
            if (sample_error) {
                cell.error = sample_error;
                cell.status = CertStatus::Inconclusive;
            } else {
                try {
                    cell.certificate = certify_product(reduce_samples(raw, ell), ell,
                                                       /*geometric=*/false);
                    cell.status = cell.certificate.status;
                } catch (const std::exception& e) {
                    cell.error = e.what();
                    cell.status = CertStatus::Inconclusive;
                }
            }
            row.cells.push_back(std::move(cell));
        }
        rows[idx] = std::move(row);
    });
    for (const auto& row : rows)
        for (const auto& cell : row.cells)
            if (cell.error) partial = true;
    report.rows = std::move(rows);
    report.partial = partial;
    return report;
}

namespace {

bool reverify_sample(const std::vector<CurveQ>& curves, const TraceSample& s,
                     std::uint32_t ell) {
    if (s.place.t0) return false; // scan witnesses live over Q
    const std::uint64_t p = s.place.p;
    if (p % ell == 0 || s.det != p % ell) return false;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const IntegralCurve m = integral_model(curves[i]);
        if (mod_u64(m.disc, p) == 0) return false;
        const CurveFp cp{Fp(m.a4, p), Fp(m.a6, p)};
        // Independent route: force the BSGS counter regardless of size.
        const std::int64_t a = count_points_bsgs(cp).a;
        std::int64_t r = a % static_cast<std::int64_t>(ell);
        if (r < 0) r += ell;
        if (static_cast<std::uint32_t>(r) != s.traces.at(i)) return false;
    }
    return true;
}

} // namespace

bool reverify_certificate(const FamilySpec& family, const Rational& t0,
                          const SurjectivityCertificate& cert) {
    std::vector<CurveQ> curves;
    for (std::size_t i = 0; i < family.n(); ++i) curves.push_back(family.specialize_at(i, t0));
    for (const auto& s : cert.singles) {
        for (const auto& w : {s.w1, s.w2, s.w3}) {
            if (!w) continue;
            if (!reverify_sample(curves, *w, cert.ell)) return false;
        }
    }
    for (const auto& p : cert.pairs) {
        if (!p.witness) continue;
        if (!reverify_sample(curves, *p.witness, cert.ell)) return false;
    }
    return true;
}

} // namespace ellmod
