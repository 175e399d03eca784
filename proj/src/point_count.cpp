#include "ellmod/point_count.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "ellmod/primes.hpp"

namespace ellmod {

namespace {

struct CurveRaw {
    std::uint64_t p, a4, a6;
};

CurveRaw unpack(const CurveFp& c) {
    if (c.a4.modulus() != c.a6.modulus()) throw InvalidInput("mixed curve moduli");
    const std::uint64_t p = c.a4.modulus();
    require_odd_characteristic(p);
    require_nonsingular(c);
    return {p, c.a4.residue(), c.a6.residue()};
}

std::uint64_t rhs(const CurveRaw& c, std::uint64_t x) {
    std::uint64_t v = mulmod_u64(x, x, c.p);
    v = mulmod_u64(v, x, c.p);
    v = (v + mulmod_u64(c.a4, x, c.p)) % c.p;
    return (v + c.a6) % c.p;
}

// Affine point; (0,0,true) is the identity.
struct Pt {
    std::uint64_t x = 0, y = 0;
    bool inf = true;
};

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

Pt ec_add(const CurveRaw& c, const Pt& P, const Pt& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    const std::uint64_t p = c.p;
    if (P.x == Q.x) {
        if ((P.y + Q.y) % p == 0) return Pt{};
        // doubling
        std::uint64_t num = (3 * mulmod_u64(P.x, P.x, p) + c.a4) % p;
        std::uint64_t lam = mulmod_u64(num, inv_mod((2 * P.y) % p, p), p);
        std::uint64_t x3 = (mulmod_u64(lam, lam, p) + 2 * (p - P.x)) % p;
        std::uint64_t y3 = (mulmod_u64(lam, (P.x + p - x3) % p, p) + p - P.y) % p;
        return Pt{x3, y3, false};
    }
    std::uint64_t num = (Q.y + p - P.y) % p;
    std::uint64_t den = (Q.x + p - P.x) % p;
    std::uint64_t lam = mulmod_u64(num, inv_mod(den, p), p);
    std::uint64_t x3 = (mulmod_u64(lam, lam, p) + (p - P.x) + (p - Q.x)) % p;
    std::uint64_t y3 = (mulmod_u64(lam, (P.x + p - x3) % p, p) + p - P.y) % p;
    return Pt{x3, y3, false};
}

Pt ec_neg(const CurveRaw& c, const Pt& P) {
    if (P.inf) return P;
    return Pt{P.x, P.y == 0 ? 0 : c.p - P.y, false};
}

Pt ec_mul(const CurveRaw& c, std::uint64_t k, Pt P) {
    Pt R{};
    while (k) {
        if (k & 1) R = ec_add(c, R, P);
        P = ec_add(c, P, P);
        k >>= 1;
    }
    return R;
}

std::uint64_t key_of(const Pt& P) { return P.inf ? ~0ull : P.x * 2 + (P.y & 1 ? 1 : 0); }

// All m in [lo, hi] with m*P = identity, by baby-step giant-step.
std::vector<std::uint64_t> kill_multiples(const CurveRaw& c, const Pt& P, std::uint64_t lo,
                                          std::uint64_t hi) {
    const std::uint64_t L = hi - lo + 1;
    const std::uint64_t s = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(L))));
    // baby table: v*P for v in [0, s)
    std::unordered_map<std::uint64_t, std::vector<std::pair<Pt, std::uint64_t>>> baby;
    Pt B{};
    for (std::uint64_t v = 0; v < s; ++v) {
        baby[key_of(B)].push_back({B, v});
        B = ec_add(c, B, P);
    }
    const Pt G = ec_mul(c, s, P);
    // m*P = O  <=>  (lo + u*s + v)*P = O  <=>  v*P = -(lo + u*s)*P
    std::vector<std::uint64_t> out;
    Pt target = ec_neg(c, ec_mul(c, lo, P));
    for (std::uint64_t u = 0; u * s < L + s; ++u) {
        auto it = baby.find(key_of(target));
        if (it != baby.end()) {
            for (const auto& [pt, v] : it->second) {
                if (pt.inf == target.inf && pt.x == target.x && pt.y == target.y) {
                    const std::uint64_t m = lo + u * s + v;
                    if (m >= lo && m <= hi) out.push_back(m);
                }
            }
        }
        target = ec_add(c, target, ec_neg(c, G));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FrobeniusDatum datum_from_count(std::uint64_t p, std::uint64_t N) {
    FrobeniusDatum d;
    d.p = p;
    d.N = N;
    d.a = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(N);
    return d;
}

} // namespace

std::vector<std::uint8_t> square_table(std::uint64_t p) {
    std::vector<std::uint8_t> table(p, 0);
    for (std::uint64_t y = 1; y <= (p - 1) / 2; ++y) table[mulmod_u64(y, y, p)] = 1;
    return table;
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (legendre_unchecked(a, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod_u64(a, (p + 1) / 4, p);
    // Tonelli-Shanks with the smallest nonresidue as the auxiliary element.
    std::uint64_t q = p - 1;
    std::uint64_t s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    std::uint64_t z = 2;
    while (legendre_unchecked(z, p) != -1) ++z;
    std::uint64_t m = s;
    std::uint64_t cc = powmod_u64(z, q, p);
    std::uint64_t t = powmod_u64(a, q, p);
    std::uint64_t r = powmod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t t2 = t;
        while (t2 != 1) { t2 = mulmod_u64(t2, t2, p); ++i; }
        std::uint64_t b = cc;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
        m = i;
        cc = mulmod_u64(b, b, p);
        t = mulmod_u64(t, cc, p);
        r = mulmod_u64(r, b, p);
    }
    return r;
}

FrobeniusDatum count_points_exhaustive(const CurveFp& c) {
    const CurveRaw raw = unpack(c);
    const auto sq = square_table(raw.p);
    std::uint64_t N = 1; // point at infinity
    for (std::uint64_t x = 0; x < raw.p; ++x) {
        const std::uint64_t v = rhs(raw, x);
        if (v == 0) N += 1;
        else if (sq[v]) N += 2;
    }
    return datum_from_count(raw.p, N);
}

FrobeniusDatum count_points_bsgs(const CurveFp& c) {
    const CurveRaw raw = unpack(c);
    const std::uint64_t p = raw.p;
    const auto h = static_cast<std::uint64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(p))));
    const std::uint64_t lo = p + 1 - h;
    const std::uint64_t hi = p + 1 + h;

    std::vector<std::uint64_t> candidates;
    bool have = false;
    int points_used = 0;
    for (std::uint64_t x = 0; x < p && points_used < 8; ++x) {
        const std::uint64_t v = rhs(raw, x);
        if (v == 0) continue; // a 2-torsion point only constrains the parity of m
        auto y = sqrt_mod(v, p);
        if (!y) continue;
        Pt P{x, *y, false};
        auto ms = kill_multiples(raw, P, lo, hi);
        ++points_used;
        if (!have) {
            candidates = std::move(ms);
            have = true;
        } else {
            std::vector<std::uint64_t> merged;
            std::set_intersection(candidates.begin(), candidates.end(), ms.begin(), ms.end(),
                                  std::back_inserter(merged));
            candidates = std::move(merged);
        }
        if (have && candidates.size() == 1) return datum_from_count(p, candidates.front());
        if (have && candidates.empty()) break; // inconsistent, fall through
    }
    // Ambiguous group exponent (or no usable point): correctness over speed.
    return count_points_exhaustive(c);
}

FrobeniusDatum count_points(const CurveFp& c) {
    const std::uint64_t p = c.a4.modulus();
    if (p <= (1u << 16)) return count_points_exhaustive(c);
    return count_points_bsgs(c);
}

} // namespace ellmod
