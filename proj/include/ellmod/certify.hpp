#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ellmod/trace_sampling.hpp"
#include "ellmod/weierstrass.hpp"

namespace ellmod {

enum class CertStatus { Certified, Inconclusive };

inline const char* to_string(CertStatus s) {
    return s == CertStatus::Certified ? "Certified" : "InconclusiveCandidate";
}

// Per-factor witness conditions. A sample (tr, det) with delta = tr^2 - 4 det:
//   W1: delta a nonzero square and tr != 0   (rules out the nonsplit-Cartan normalizer)
//   W2: delta a nonsquare and tr != 0        (rules out Borel / split-Cartan normalizer)
//   W3: u = tr^2/det not in {0,1,2,4} and u^2 - 3u + 1 != 0
//                                            (rules out the exceptional groups)
// All three present certifies image >= SL2 for the factor, by the
// classification of maximal subgroups of GL2(F_ell).
enum class CertifyMode { Auto, Certifying, SmallEll };

struct SingleCertificate {
    int factor = 0;
    std::uint32_t ell = 0;
    CertStatus status = CertStatus::Inconclusive;
    // Witness samples are embedded whole so certificates re-verify from
    // scratch by recounting points at the recorded places.
    std::optional<TraceSample> w1, w2, w3;
    bool small_ell_mode = false;
    std::vector<std::string> missing; // names of absent witness classes
};

// Pair obstruction: a place with tr_i^2 != tr_j^2 mod ell refutes every
// relation b' = chi f b f^{-1}, hence (with both singles certified) the
// pair image is the full fiber product.
struct PairCertificate {
    int i = 0;
    int j = 0;
    std::uint32_t ell = 0;
    CertStatus status = CertStatus::Inconclusive;
    std::optional<TraceSample> witness;
    bool blocked_on_singles = false;
};

struct SurjectivityCertificate {
    std::uint32_t ell = 0;
    CertStatus status = CertStatus::Inconclusive;
    std::vector<SingleCertificate> singles;
    std::vector<PairCertificate> pairs;
    // Function-field mode: only degree-1 places are sampled, the observed
    // determinant image is {p mod ell}, and only the geometric statement
    // (image of SL2^n type) is certified. Over Q the determinant is
    // automatically surjective and full determinant-locus surjectivity is
    // reported.
    bool geometric = false;
    std::vector<std::string> notes;
};

// Witness-class scan over a sorted sample stream, valid for any odd prime
// ell >= 5. Used by certify_single and by the soundness harness, which
// exercises it against explicitly constructed proper subgroups.
struct WitnessScan {
    std::optional<TraceSample> w1, w2, w3;
};
WitnessScan scan_witness_classes(std::span<const TraceSample> samples, int factor,
                                 std::uint32_t ell);

SingleCertificate certify_single(std::span<const TraceSample> samples, int factor,
                                 std::uint32_t ell, CertifyMode mode = CertifyMode::Auto);

PairCertificate certify_pair(std::span<const TraceSample> samples, int i, int j,
                             std::uint32_t ell, const SingleCertificate& cert_i,
                             const SingleCertificate& cert_j);

SurjectivityCertificate certify_product(std::span<const TraceSample> samples,
                                        std::uint32_t ell, bool geometric,
                                        CertifyMode mode = CertifyMode::Auto);

// Statistical oracle for small ell over F_p(t): the multiset of
// (trace mod ell, det mod ell) realized by Frobenius at all good degree-1
// places. Cross-validated in tests against the determinant-fiber class
// sizes of SL2; this is not a literal image computation.
std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t>
brute_force_image(const CurveFt<Fp>& curve, std::uint32_t ell);

} // namespace ellmod
