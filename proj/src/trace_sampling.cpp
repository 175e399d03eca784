#include "ellmod/trace_sampling.hpp"

#include "ellmod/parallel.hpp"
#include "ellmod/primes.hpp"

namespace ellmod {

IntegralCurve integral_model(const CurveQ& c) {
    require_nonsingular(c);
    const BigInt u = lcm(c.a4.den(), c.a6.den());
    const Rational a4 = c.a4 * Rational(ipow(u, 4));
    const Rational a6 = c.a6 * Rational(ipow(u, 6));
    IntegralCurve m;
    m.a4 = a4.num();
    m.a6 = a6.num();
    m.disc = BigInt(-16) * (BigInt(4) * ipow(m.a4, 3) + BigInt(27) * m.a6 * m.a6);
    return m;
}

std::vector<RawTraceData> sample_traces_Q(const std::vector<CurveQ>& curves,
                                          std::uint64_t p_max, SampleLog* log, int threads) {
    std::vector<IntegralCurve> models;
    models.reserve(curves.size());
    for (const auto& c : curves) models.push_back(integral_model(c));

    const auto primes = primes_up_to(static_cast<std::uint32_t>(p_max));
    std::vector<std::optional<RawTraceData>> slots(primes.size());
    std::vector<std::optional<SkippedPlace>> skip_slots(primes.size());

    parallel_for(primes.size(), threads, [&](std::size_t idx) {
        const std::uint64_t p = primes[idx];
        if (p <= 3) {
            skip_slots[idx] = SkippedPlace{Place{p, {}}, "characteristic <= 3"};
            return;
        }
        for (std::size_t i = 0; i < models.size(); ++i) {
            if (mod_u64(models[i].disc, p) == 0) {
                skip_slots[idx] = SkippedPlace{
                    Place{p, {}}, "bad reduction of factor " + std::to_string(i)};
                return;
            }
        }
        RawTraceData d;
        d.place = Place{p, {}};
        d.traces.reserve(models.size());
        for (const auto& m : models) {
            const CurveFp cp{Fp(m.a4, p), Fp(m.a6, p)};
            d.traces.push_back(count_points(cp).a);
        }
        slots[idx] = std::move(d);
    });

    std::vector<RawTraceData> out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i]) out.push_back(std::move(*slots[i]));
        if (log && skip_slots[i]) log->skipped.push_back(std::move(*skip_slots[i]));
    }
    return out;
}

std::vector<RawTraceData> sample_traces_Fpt(const std::vector<CurveFt<Fp>>& curves,
                                            SampleLog* log) {
    if (curves.empty()) return {};
    const std::uint64_t p = curves.front().a4.field_model().modulus();
    require_odd_characteristic(p);
    for (const auto& c : curves) {
        if (c.a4.field_model().modulus() != p) throw InvalidInput("mixed characteristics");
        if (is_isotrivial(c)) throw InvalidInput("isotrivial factor over F_p(t)");
    }

    std::vector<RawTraceData> out;
    for (std::uint64_t t0 = 0; t0 < p; ++t0) {
        const Fp t(t0, p);
        RawTraceData d;
        d.place = Place{p, t0};
        bool good = true;
        std::string reason;
        for (const auto& c : curves) {
            try {
                const CurveFp spec = specialize(c, t);
                d.traces.push_back(count_points(spec).a);
            } catch (const BadReduction&) {
                good = false;
                reason = "bad reduction";
                break;
            } catch (const PoleAtPoint&) {
                good = false;
                reason = "pole";
                break;
            }
        }
        if (good) out.push_back(std::move(d));
        else if (log) log->skipped.push_back({Place{p, t0}, reason});
    }
    return out;
}

std::vector<TraceSample> reduce_samples(const std::vector<RawTraceData>& raw,
                                        std::uint32_t ell) {
    std::vector<TraceSample> out;
    out.reserve(raw.size());
    for (const auto& r : raw) {
        if (r.place.p % ell == 0) continue; // p = ell: det would vanish
        TraceSample s;
        s.place = r.place;
        s.det = static_cast<std::uint32_t>(r.place.p % ell);
        s.traces.reserve(r.traces.size());
        for (std::int64_t a : r.traces) {
            std::int64_t m = a % static_cast<std::int64_t>(ell);
            if (m < 0) m += ell;
            s.traces.push_back(static_cast<std::uint32_t>(m));
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<TraceSample> trace_samples(const std::vector<CurveQ>& curves, std::uint64_t p_max,
                                       std::uint32_t ell, SampleLog* log, int threads) {
    if (!is_prime_u64(ell)) throw InvalidLevel("ell must be prime");
    return reduce_samples(sample_traces_Q(curves, p_max, log, threads), ell);
}

} // namespace ellmod
