#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellmod/certify.hpp"
#include "ellmod/family.hpp"

namespace ellmod {

struct ScanConfig {
    long T = 10;
    std::vector<std::uint32_t> ells; // primes > 5, ascending
    std::uint64_t p_max = 500;
    std::uint64_t isogeny_prime_bound = 100;
    int threads = 1; // execution detail; never echoed into reports
};

struct ScanCell {
    std::uint32_t ell = 0;
    CertStatus status = CertStatus::Inconclusive;
    SurjectivityCertificate certificate;
    std::optional<std::string> error;
};

struct ScanRow {
    Rational t0;
    std::size_t skipped_places = 0; // bad-reduction primes dropped while sampling
    std::vector<ScanCell> cells;    // one per ell, ascending
};

// The theoretical union regime starts at this prime; every desk-scale ell
// range lies far below it and reports must say so rather than pretend.
inline constexpr std::uint64_t kUnionThreshold = 3176533;

struct ScanReport {
    ScanConfig config;
    std::vector<std::string> family_lines; // config echo of the curve list
    std::vector<BadSetReason> excluded;    // S-members among enumerate_rationals(T)
    std::vector<ScanRow> rows;             // one per t0 in F(T), ascending
    bool partial = false;

    std::uint64_t candidates_at(std::uint32_t ell) const;
    std::uint64_t union_candidates() const;
    std::size_t F_size() const { return rows.size(); }
};

ScanReport scan_exceptional(const FamilySpec& family, const ScanConfig& config);

// Independent witness re-verification: recount points (baby-step
// giant-step path) at every witness place embedded in a Certified
// certificate and compare against the recorded trace residues.
bool reverify_certificate(const FamilySpec& family, const Rational& t0,
                          const SurjectivityCertificate& cert);

} // namespace ellmod
