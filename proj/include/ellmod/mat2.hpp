#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ellmod/errors.hpp"
#include "ellmod/primes.hpp"

namespace ellmod {

// 2x2 matrix over Z/ell, row-major [[a, b], [c, d]]. Arithmetic is plain
// u32/u64 modular arithmetic; ell is assumed small (the enumeration cores
// stay below ell = 100).
struct Mat2 {
    std::uint32_t a = 0, b = 0, c = 0, d = 0;
    std::uint32_t ell = 0;

    static Mat2 identity(std::uint32_t ell) { return Mat2{1 % ell, 0, 0, 1 % ell, ell}; }
    static Mat2 scalar(std::uint32_t s, std::uint32_t ell) {
        return Mat2{s % ell, 0, 0, s % ell, ell};
    }

    std::uint32_t tr() const { return (a + d) % ell; }
    std::uint32_t det() const {
        const std::uint64_t pos = static_cast<std::uint64_t>(a) * d % ell;
        const std::uint64_t neg = static_cast<std::uint64_t>(b) * c % ell;
        return static_cast<std::uint32_t>((pos + ell - neg) % ell);
    }
    bool invertible() const { return det() != 0; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        const std::uint64_t L = x.ell;
        return Mat2{
            static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.a) * y.a + static_cast<std::uint64_t>(x.b) * y.c) % L),
            static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.a) * y.b + static_cast<std::uint64_t>(x.b) * y.d) % L),
            static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.c) * y.a + static_cast<std::uint64_t>(x.d) * y.c) % L),
            static_cast<std::uint32_t>((static_cast<std::uint64_t>(x.c) * y.b + static_cast<std::uint64_t>(x.d) * y.d) % L),
            x.ell};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.ell == y.ell;
    }

    Mat2 inverse() const {
        const std::uint32_t dt = det();
        if (dt == 0) throw InvalidInput("singular matrix");
        const std::uint64_t di = powmod_u64(dt, ell - 2, ell);
        const auto mul = [&](std::uint32_t v) {
            return static_cast<std::uint32_t>(di * v % ell);
        };
        return Mat2{mul(d), mul((ell - b) % ell), mul((ell - c) % ell), mul(a), ell};
    }
    Mat2 negated() const {
        return Mat2{(ell - a) % ell, (ell - b) % ell, (ell - c) % ell, (ell - d) % ell, ell};
    }

    // Canonical dense code in [0, ell^4): row-major mixed radix.
    std::uint64_t code() const {
        return ((static_cast<std::uint64_t>(a) * ell + b) * ell + c) * ell + d;
    }
    static Mat2 from_code(std::uint64_t code, std::uint32_t ell) {
        Mat2 m;
        m.ell = ell;
        m.d = static_cast<std::uint32_t>(code % ell); code /= ell;
        m.c = static_cast<std::uint32_t>(code % ell); code /= ell;
        m.b = static_cast<std::uint32_t>(code % ell); code /= ell;
        m.a = static_cast<std::uint32_t>(code % ell);
        return m;
    }

    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
               std::to_string(c) + "," + std::to_string(d) + "]]";
    }
};

// Tuple of invertible matrices sharing ell with equal determinants.
struct DetLocusElement {
    std::vector<Mat2> mats;

    bool valid() const {
        if (mats.empty()) return false;
        const std::uint32_t d0 = mats.front().det();
        if (d0 == 0) return false;
        for (const auto& m : mats) {
            if (m.ell != mats.front().ell || m.det() != d0) return false;
        }
        return true;
    }
    std::uint32_t ell() const { return mats.front().ell; }
    std::size_t n() const { return mats.size(); }

    friend DetLocusElement operator*(const DetLocusElement& x, const DetLocusElement& y) {
        DetLocusElement r;
        r.mats.reserve(x.mats.size());
        for (std::size_t i = 0; i < x.mats.size(); ++i) r.mats.push_back(x.mats[i] * y.mats[i]);
        return r;
    }
    DetLocusElement inverse() const {
        DetLocusElement r;
        r.mats.reserve(mats.size());
        for (const auto& m : mats) r.mats.push_back(m.inverse());
        return r;
    }

    // Mixed-radix code over ell^4 per component; fits 128 bits for every
    // enumeration this library performs (n <= 4 at ell <= 97, n <= 9 at
    // ell <= 11).
    unsigned __int128 code() const {
        const std::uint64_t base =
            static_cast<std::uint64_t>(ell()) * ell() * ell() * ell();
        unsigned __int128 acc = 0;
        for (const auto& m : mats) {
            acc = acc * base + m.code();
        }
        return acc;
    }
    static DetLocusElement from_code(unsigned __int128 code, std::uint32_t ell, std::size_t n) {
        const std::uint64_t base = static_cast<std::uint64_t>(ell) * ell * ell * ell;
        std::vector<Mat2> mats(n);
        for (std::size_t i = n; i-- > 0;) {
            mats[i] = Mat2::from_code(static_cast<std::uint64_t>(code % base), ell);
            code /= base;
        }
        DetLocusElement r;
        r.mats = std::move(mats);
        return r;
    }
};

struct U128Hash {
    std::size_t operator()(unsigned __int128 x) const {
        const std::uint64_t lo = static_cast<std::uint64_t>(x);
        const std::uint64_t hi = static_cast<std::uint64_t>(x >> 64);
        std::uint64_t h = hi * 0x9e3779b97f4a7c15ull ^ lo;
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

} // namespace ellmod
