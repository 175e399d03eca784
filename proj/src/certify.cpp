#include "ellmod/certify.hpp"

#include <algorithm>

#include "ellmod/primes.hpp"

namespace ellmod {

namespace {

std::vector<TraceSample> sorted_samples(std::span<const TraceSample> samples) {
    std::vector<TraceSample> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end(),
              [](const TraceSample& a, const TraceSample& b) { return a.place < b.place; });
    return s;
}

} // namespace

WitnessScan scan_witness_classes(std::span<const TraceSample> samples, int factor,
                                 std::uint32_t ell) {
    if (ell < 5 || !is_prime_u64(ell)) throw InvalidLevel("ell must be a prime >= 5");
    WitnessScan scan;
    for (const auto& s : sorted_samples(samples)) {
        if (s.det % ell == 0) throw InvalidInput("sample with vanishing determinant");
        const std::uint32_t tr = s.traces.at(static_cast<std::size_t>(factor)) % ell;
        const std::uint64_t tr2 = static_cast<std::uint64_t>(tr) * tr % ell;
        const std::uint64_t delta = (tr2 + 4ull * ell - 4ull * s.det) % ell;
        const int cls = legendre_unchecked(delta, ell);
        if (tr != 0 && cls == 1 && !scan.w1) scan.w1 = s;
        if (tr != 0 && cls == -1 && !scan.w2) scan.w2 = s;
        if (!scan.w3) {
            const std::uint64_t u = tr2 * powmod_u64(s.det, ell - 2, ell) % ell;
            const bool low_order = u == 0 || u == 1 || u == 2 || u == 4;
            // u^2 - 3u + 1 mod ell
            const std::uint64_t poly = (u * u % ell + (3ull * (ell - u)) % ell + 1) % ell;
            if (!low_order && poly != 0) scan.w3 = s;
        }
        if (scan.w1 && scan.w2 && scan.w3) break;
    }
    return scan;
}

SingleCertificate certify_single(std::span<const TraceSample> samples, int factor,
                                 std::uint32_t ell, CertifyMode mode) {
    if (!is_prime_u64(ell) || ell <= 5) throw InvalidLevel("ell must be a prime > 5");
    const bool small = ell < 17;
    if (small && mode == CertifyMode::Certifying)
        throw InvalidLevel("certifying mode requires ell >= 17; small ell routes through "
                           "the brute-force-validated mode");

    SingleCertificate cert;
    cert.factor = factor;
    cert.ell = ell;
    cert.small_ell_mode = small;

    const WitnessScan scan = scan_witness_classes(samples, factor, ell);
    cert.w1 = scan.w1;
    cert.w2 = scan.w2;
    cert.w3 = scan.w3;
    if (!cert.w1) cert.missing.push_back("W1");
    if (!cert.w2) cert.missing.push_back("W2");
    if (!cert.w3) cert.missing.push_back("W3");
    cert.status = cert.missing.empty() ? CertStatus::Certified : CertStatus::Inconclusive;
    return cert;
}

PairCertificate certify_pair(std::span<const TraceSample> samples, int i, int j,
                             std::uint32_t ell, const SingleCertificate& cert_i,
                             const SingleCertificate& cert_j) {
    if (cert_i.status != CertStatus::Certified || cert_j.status != CertStatus::Certified)
        throw PreconditionFailed("pair test requires both single certificates");
    PairCertificate cert;
    cert.i = i;
    cert.j = j;
    cert.ell = ell;
    for (const auto& s : sorted_samples(samples)) {
        const std::uint64_t ti = s.traces.at(static_cast<std::size_t>(i)) % ell;
        const std::uint64_t tj = s.traces.at(static_cast<std::size_t>(j)) % ell;
        if (ti * ti % ell != tj * tj % ell) {
            cert.witness = s;
            cert.status = CertStatus::Certified;
            break;
        }
    }
    return cert;
}

SurjectivityCertificate certify_product(std::span<const TraceSample> samples,
                                        std::uint32_t ell, bool geometric,
                                        CertifyMode mode) {
    if (!is_prime_u64(ell) || ell <= 5) throw InvalidLevel("ell must be a prime > 5");
    SurjectivityCertificate cert;
    cert.ell = ell;
    cert.geometric = geometric;

    const std::size_t n = samples.empty() ? 1 : samples.front().traces.size();
    bool all_single = true;
    for (std::size_t f = 0; f < n; ++f) {
        cert.singles.push_back(certify_single(samples, static_cast<int>(f), ell, mode));
        all_single = all_single && cert.singles.back().status == CertStatus::Certified;
        if (cert.singles.back().small_ell_mode &&
            std::find(cert.notes.begin(), cert.notes.end(), std::string("small-ell mode")) ==
                cert.notes.end())
            cert.notes.push_back("small-ell mode");
    }

    bool all_pairs = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            PairCertificate pc;
            const auto& ci = cert.singles[i];
            const auto& cj = cert.singles[j];
            if (ci.status != CertStatus::Certified || cj.status != CertStatus::Certified) {
                pc.i = static_cast<int>(i);
                pc.j = static_cast<int>(j);
                pc.ell = ell;
                pc.blocked_on_singles = true;
            } else {
                pc = certify_pair(samples, static_cast<int>(i), static_cast<int>(j), ell, ci, cj);
            }
            all_pairs = all_pairs && pc.status == CertStatus::Certified;
            cert.pairs.push_back(std::move(pc));
        }
    }

    cert.status = (all_single && all_pairs) ? CertStatus::Certified : CertStatus::Inconclusive;
    if (geometric)
        cert.notes.push_back("function-field mode: geometric statement only "
                             "(determinant image observed is {p mod ell})");
    return cert;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>
brute_force_image(const CurveFt<Fp>& curve, std::uint32_t ell) {
    const std::uint64_t p = curve.a4.field_model().modulus();
    if (ell != 5 && ell != 7) throw UnsupportedParameters("oracle supports ell in {5, 7}");
    if (p > 50) throw UnsupportedParameters("oracle supports p <= 50");
    if (p == ell) throw UnsupportedParameters("ell equal to the characteristic");
    if (is_isotrivial(curve)) throw UnsupportedParameters("isotrivial curve");

    const auto raw = sample_traces_Fpt({curve}, nullptr);
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> multiset;
    for (const auto& s : reduce_samples(raw, ell)) ++multiset[{s.traces.at(0), s.det}];
    return multiset;
}

} // namespace ellmod
