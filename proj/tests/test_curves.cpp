#include <doctest.h>

#include <random>

#include "ellmod/point_count.hpp"
#include "ellmod/primes.hpp"
#include "ellmod/trace_sampling.hpp"
#include "ellmod/weierstrass.hpp"
#include "support/oracles.hpp"

using namespace ellmod;

namespace {

RationalFunction<Rational> qt(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return RationalFunction<Rational>::from_poly(Poly<Rational>(std::move(v)), Rational(0));
}

} // namespace

TEST_CASE("discriminant examples") {
    CHECK(coeff_is_zero(discriminant(CurveQ{Rational(0), Rational(0)})));
    CHECK(discriminant(CurveQ{Rational(-1), Rational(0)}) == Rational(64));
    // a4 = t, a6 = 1 over Q(t): -16(4t^3 + 27)
    const CurveQt c{qt({0, 1}), qt({1})};
    const auto expected = rat_reduce(Poly<Rational>({Rational(-432), Rational(0), Rational(0),
                                                     Rational(-64)}),
                                     Poly<Rational>({Rational(1)}));
    CHECK(discriminant(c) == expected);
}

TEST_CASE("j-invariant examples") {
    CHECK(j_invariant(CurveQ{Rational(1), Rational(0)}) == Rational(1728));
    CHECK(j_invariant(CurveQ{Rational(0), Rational(1)}) == Rational(0));
    CHECK_THROWS_AS(j_invariant(CurveQ{Rational(0), Rational(0)}), SingularCurve);
    // symbolic oracle: j(a4=t, a6=1) = 6912 t^3 / (4 t^3 + 27) as a reduced form
    const CurveQt c{qt({0, 1}), qt({1})};
    const auto expected = rat_reduce(
        Poly<Rational>({Rational(0), Rational(0), Rational(0), Rational(6912)}),
        Poly<Rational>({Rational(27), Rational(0), Rational(0), Rational(4)}));
    CHECK(j_invariant(c) == expected);
}

TEST_CASE("isotriviality") {
    CHECK_FALSE(is_isotrivial(CurveQt{qt({0, 1}), qt({1})}));
    CHECK(is_isotrivial(CurveQt{qt({1}), qt({1})}));
    // a4 = t^2, a6 = t^3: j = 6912/31, constant (symbolic oracle below)
    const CurveQt c{qt({0, 0, 1}), qt({0, 0, 0, 1})};
    CHECK(is_isotrivial(c));
    CHECK(j_invariant(c) == RationalFunction<Rational>::constant(Rational(6912, 31)));
}

TEST_CASE("specialization") {
    const CurveQt c{qt({0, 1}), qt({1})};
    const CurveQ s = specialize(c, Rational(0));
    CHECK(s.a4 == Rational(0));
    CHECK(s.a6 == Rational(1));

    // a4 = t, a6 = 0 has discriminant -64 t^3: bad reduction at 0
    CHECK_THROWS_AS(specialize(CurveQt{qt({0, 1}), qt({})}, Rational(0)), BadReduction);

    // a4 = 1/(t-1), a6 = 0: pole at 1
    const CurveQt pole{
        rat_reduce(Poly<Rational>({Rational(1)}), Poly<Rational>({Rational(-1), Rational(1)})),
        qt({})};
    CHECK_THROWS_AS(specialize(pole, Rational(1)), PoleAtPoint);

    // specialize and j-invariant commute at good points (F_7 family a4 = t, a6 = 1)
    const auto fam = reduce_family_curve(Poly<BigInt>({BigInt(0), BigInt(1)}),
                                         Poly<BigInt>({BigInt(1)}), 7);
    const auto j_fam = j_invariant(fam);
    for (std::uint64_t v = 0; v < 7; ++v) {
        const Fp t0(v, 7);
        try {
            const CurveFp s7 = specialize(fam, t0);
            CHECK(j_invariant(s7) == j_fam.eval(t0));
        } catch (const BadReduction&) {
            // skipped place
        }
    }
}

TEST_CASE("point counting examples") {
    const CurveFp c{Fp(1, 5), Fp(1, 5)};
    const auto d1 = count_points_exhaustive(c);
    const auto d2 = count_points_bsgs(c);
    CHECK(d1.N == 9);
    CHECK(d1.a == -3);
    CHECK(d2.N == 9);
    CHECK(d2.a == -3);
    // oracle: full (x, y) grid scan
    CHECK(oracles::count_points_grid(5, 1, 1) == 9);

    // supersingular at p = 3 mod 4: y^2 = x^3 - x over F_7
    CHECK(count_points(CurveFp{Fp::from_int(-1, 7), Fp(0, 7)}).a == 0);

    CHECK_THROWS_AS(count_points(CurveFp{Fp(1, 3), Fp(1, 3)}), UnsupportedCharacteristic);
    CHECK_THROWS_AS(count_points(CurveFp{Fp(0, 5), Fp(0, 5)}), SingularCurve);
}

TEST_CASE("counting identity and Hasse bound on random curves") {
    std::mt19937 rng(919);
    const auto primes = primes_up_to(500);
    for (int iter = 0; iter < 30; ++iter) {
        const std::uint64_t p = primes[3 + rng() % (primes.size() - 3)];
        const std::uint64_t a4 = rng() % p, a6 = rng() % p;
        const CurveFp c{Fp(a4, p), Fp(a6, p)};
        if (!is_nonsingular(c)) continue;
        const auto d = count_points(c);
        CHECK(d.N == oracles::count_points_grid(p, a4, a6));
        CHECK(d.a * d.a <= static_cast<std::int64_t>(4 * p));
        CHECK(d.N == p + 1 - d.a);
    }
}

TEST_CASE("quadratic twists") {
    const CurveFp c{Fp(1, 5), Fp(1, 5)};
    // twist by the nonsquare 2 flips the trace: legendre(2,5) = -1
    CHECK(count_points(quadratic_twist(c, Fp(2, 5))).a == 3);
    // twist by a square keeps it
    CHECK(count_points(quadratic_twist(c, Fp(4, 5))).a == -3);
    // twisting twice by the same d returns the original trace
    CHECK(count_points(quadratic_twist(quadratic_twist(c, Fp(2, 5)), Fp(2, 5))).a == -3);
    CHECK_THROWS_AS(quadratic_twist(c, Fp(0, 5)), InvalidInput);

    std::mt19937 rng(555);
    const auto primes = primes_up_to(200);
    for (int iter = 0; iter < 25; ++iter) {
        const std::uint64_t p = primes[3 + rng() % (primes.size() - 3)];
        const CurveFp cc{Fp(rng() % p, p), Fp(rng() % p, p)};
        const std::uint64_t d = 1 + rng() % (p - 1);
        if (!is_nonsingular(cc)) continue;
        const auto tw = quadratic_twist(cc, Fp(d, p));
        CHECK(count_points(tw).a == legendre(static_cast<std::int64_t>(d), p) *
                                        count_points(cc).a);
    }
}

TEST_CASE("trace sampling over Q") {
    // p_max < 5: no admissible primes
    CHECK(trace_samples({CurveQ{Rational(1), Rational(1)}}, 4, 7).empty());

    // single curve, p_max = 5, ell = 7: [(p=5, a = -3 = 4 mod 7, det = 5)]
    const auto s = trace_samples({CurveQ{Rational(1), Rational(1)}}, 5, 7);
    REQUIRE(s.size() == 1);
    CHECK(s[0].place.p == 5);
    CHECK(s[0].traces == std::vector<std::uint32_t>{4});
    CHECK(s[0].det == 5);

    // primes dividing the discriminant are skipped: disc(1,1) = -496 = -16*31
    SampleLog log;
    const auto s2 = trace_samples({CurveQ{Rational(1), Rational(1)}}, 40, 7, &log);
    for (const auto& smp : s2) CHECK(smp.place.p != 31);
    bool logged31 = false;
    for (const auto& sk : log.skipped) logged31 = logged31 || sk.place.p == 31;
    CHECK(logged31);

    // ordered by p
    for (std::size_t i = 1; i < s2.size(); ++i) CHECK(s2[i - 1].place.p < s2[i].place.p);

    // p = ell dropped in reduction
    for (const auto& smp : trace_samples({CurveQ{Rational(1), Rational(1)}}, 100, 7))
        CHECK(smp.place.p != 7);

    // rational coefficients go through the integral model
    const auto s3 = trace_samples({CurveQ{Rational(1, 4), Rational(1, 8)}}, 30, 7);
    CHECK(!s3.empty());
}

TEST_CASE("integral model clears denominators") {
    const auto m = integral_model(CurveQ{Rational(1, 4), Rational(1, 8)});
    // u = lcm(4, 8) = 8: a4 -> 8^4/4 = 1024, a6 -> 8^6/8 = 32768
    CHECK(m.a4 == 1024);
    CHECK(m.a6 == 32768);
    CHECK(m.disc != 0);
}

TEST_CASE("function-field trace sampling") {
    const auto c = reduce_family_curve(Poly<BigInt>({BigInt(0), BigInt(1)}),
                                       Poly<BigInt>({BigInt(1)}), 11);
    SampleLog log;
    const auto raw = sample_traces_Fpt({c}, &log);
    // disc = -16(4t^3+27) vanishes at exactly one t0 in F_11 (t0 = 6)
    CHECK(raw.size() == 10);
    REQUIRE(log.skipped.size() == 1);
    CHECK(log.skipped[0].place.t0 == 6);
    // det of every reduced sample is p mod ell
    for (const auto& smp : reduce_samples(raw, 5)) CHECK(smp.det == 11 % 5);
    // isotrivial input rejected
    const auto iso = reduce_family_curve(Poly<BigInt>({BigInt(1)}), Poly<BigInt>({BigInt(1)}), 11);
    CHECK_THROWS_AS(sample_traces_Fpt({iso}, nullptr), InvalidInput);
}
