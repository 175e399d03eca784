#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellmod/integer.hpp"
#include "ellmod/point_count.hpp"
#include "ellmod/rational.hpp"
#include "ellmod/weierstrass.hpp"

namespace ellmod {

// A place of the base: a rational prime p over Q, or a degree-1 place
// (p, t0) of F_p(t).
struct Place {
    std::uint64_t p = 0;
    std::optional<std::uint64_t> t0;

    friend bool operator==(const Place& a, const Place& b) {
        return a.p == b.p && a.t0 == b.t0;
    }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.t0 < b.t0;
    }
    std::string str() const {
        if (t0) return "p=" + std::to_string(p) + ",t0=" + std::to_string(*t0);
        return "p=" + std::to_string(p);
    }
};

// Frobenius traces at one place, before reduction mod ell. Kept
// ell-independent so one sampling pass serves a whole ell-range.
struct RawTraceData {
    Place place;
    std::vector<std::int64_t> traces;
};

// One Frobenius datum mod ell: per-factor trace residues plus the shared
// determinant residue (p mod ell, nonzero).
struct TraceSample {
    Place place;
    std::vector<std::uint32_t> traces;
    std::uint32_t det = 0;
};

struct SkippedPlace {
    Place place;
    std::string reason;
};

struct SampleLog {
    std::vector<SkippedPlace> skipped;
};

// Integral model of a curve over Q obtained by the (u^2, u^3) coefficient
// scaling that clears denominators. Non-minimal models may over-report bad
// primes; skipped primes only shrink the sample.
struct IntegralCurve {
    BigInt a4;
    BigInt a6;
    BigInt disc;
};
IntegralCurve integral_model(const CurveQ& c);

// Frobenius data for a list of curves over Q at every prime 3 < p <= p_max
// with p not dividing any curve discriminant. Characteristic 2 and 3 are
// always skipped. Output ordered by p; sampling may run on several threads.
std::vector<RawTraceData> sample_traces_Q(const std::vector<CurveQ>& curves,
                                          std::uint64_t p_max, SampleLog* log = nullptr,
                                          int threads = 1);

// Frobenius data for curves over F_p(t) at all good degree-1 places t0 in
// F_p (the determinant of Frobenius there is p).
std::vector<RawTraceData> sample_traces_Fpt(const std::vector<CurveFt<Fp>>& curves,
                                            SampleLog* log = nullptr);

// Reduce raw data mod ell; places with p = ell are dropped (det must be a
// unit mod ell).
std::vector<TraceSample> reduce_samples(const std::vector<RawTraceData>& raw,
                                        std::uint32_t ell);

// Convenience wrapper: samples for curves over Q at one ell.
std::vector<TraceSample> trace_samples(const std::vector<CurveQ>& curves, std::uint64_t p_max,
                                       std::uint32_t ell, SampleLog* log = nullptr,
                                       int threads = 1);

} // namespace ellmod
