#include <doctest.h>

#include <random>
#include <unordered_set>

#include "ellmod/closure.hpp"
#include "ellmod/gl2_counts.hpp"
#include "ellmod/mw_harness.hpp"
#include "ellmod/primes.hpp"
#include "support/oracles.hpp"

using namespace ellmod;

TEST_CASE("matrix arithmetic and codes") {
    const Mat2 m{1, 2, 3, 4, 7};
    CHECK(m.det() == (4 + 7 - 6) % 7);
    CHECK(m.tr() == 5);
    CHECK(m * m.inverse() == Mat2::identity(7));
    CHECK(Mat2::from_code(m.code(), 7) == m);
    const DetLocusElement e{{m, m}};
    CHECK(e.valid());
    CHECK(DetLocusElement::from_code(e.code(), 7, 2).mats[0] == m);
    CHECK_FALSE(DetLocusElement{{Mat2{1, 0, 0, 1, 7}, Mat2{2, 0, 0, 1, 7}}}.valid());
}

TEST_CASE("count_by_trace_det") {
    // hand count: trace 0, det 1 over F_3 has the six matrices [[a,b],[c,-a]]
    // with -a^2 - bc = 1
    CHECK(count_by_trace_det(3, 0, 1) == 6);
    CHECK_THROWS_AS(count_by_trace_det(5, 1, 0), InvalidInput);

    // det fiber partitions into trace classes: sum = |SL2| = ell(ell^2 - 1)
    for (std::uint32_t ell : {5u, 7u, 11u}) {
        for (std::uint32_t d = 1; d < ell; ++d) {
            std::uint64_t sum = 0;
            for (std::uint32_t tau = 0; tau < ell; ++tau)
                sum += count_by_trace_det(ell, tau, d);
            CHECK(sum == static_cast<std::uint64_t>(ell) * (ell * ell - 1));
        }
    }
}

TEST_CASE("counts depend only on the square class of tau^2 - 4d") {
    // the enumerated counts collapse to ell(ell + e), e the square class
    for (std::uint32_t ell : {5u, 7u}) {
        for (std::uint32_t tau = 0; tau < ell; ++tau)
            for (std::uint32_t d = 1; d < ell; ++d) {
                const std::int64_t delta =
                    static_cast<std::int64_t>(tau) * tau - 4 * static_cast<std::int64_t>(d);
                const int e = oracles::legendre_by_enumeration(delta, ell);
                CHECK(count_by_trace_det(ell, tau, d) ==
                      static_cast<std::uint64_t>(ell) * (ell + e));
            }
    }
    // symmetry under tau -> -tau
    for (std::uint32_t ell : {5u, 7u, 11u})
        for (std::uint32_t tau = 0; tau < ell; ++tau)
            for (std::uint32_t d = 1; d < ell; ++d)
                CHECK(count_by_trace_det(ell, tau, d) ==
                      count_by_trace_det(ell, (ell - tau) % ell, d));
}

TEST_CASE("det fiber sizes") {
    CHECK(det_fiber_size(5, 1) == 120);
    CHECK(det_fiber_size(5, 2) == 14400);
    CHECK(det_fiber_size(7, 1) == 336);
    // exhaustive enumeration oracle for ell = 7, n = 1: all invertible
    // matrices of determinant d
    std::uint64_t fiber = 0;
    for (const auto& m : all_gl2(7))
        if (m.det() == 3) ++fiber;
    CHECK(fiber == 336);
    // and for n = 2: count the equal-determinant pairs at a fixed d
    std::uint64_t pairs = 0;
    for (const auto& m1 : all_gl2(7))
        if (m1.det() == 3)
            for (const auto& m2 : all_gl2(7))
                if (m2.det() == 3) ++pairs;
    CHECK(det_fiber_size(7, 2) == pairs);
}

TEST_CASE("class count products") {
    const std::vector<std::uint32_t> single{2};
    CHECK(class_count_product(5, 1, single) == count_by_trace_det(5, 2, 1));
    const std::vector<std::uint32_t> pair{0, 0};
    CHECK(class_count_product(5, 1, pair) ==
          BigInt(count_by_trace_det(5, 0, 1)) * count_by_trace_det(5, 0, 1));
    // partition of the fiber: sum over all tuples equals the fiber size
    BigInt sum = 0;
    for (std::uint32_t t1 = 0; t1 < 5; ++t1)
        for (std::uint32_t t2 = 0; t2 < 5; ++t2) {
            const std::vector<std::uint32_t> taus{t1, t2};
            sum += class_count_product(5, 1, taus);
        }
    CHECK(sum == det_fiber_size(5, 2));
}

TEST_CASE("closure basics") {
    const std::uint32_t L = 5;
    // identity generator: trivial group
    DetLocusElement id{{Mat2::identity(L), Mat2::identity(L)}};
    CHECK(closure({id}).size() == 1);

    // diagonally embedded SL2 generators: graph subgroup of size |SL2| = 120
    const Mat2 e12{1, 1, 0, 1, L}, e21{1, 0, 1, 1, L};
    auto H = closure({DetLocusElement{{e12, e12}}, DetLocusElement{{e21, e21}}});
    CHECK(H.size() == 120);
    CHECK(H.complete);

    // cap exceeded: partial set, complete = false
    auto capped = closure({DetLocusElement{{e12, e12}}, DetLocusElement{{e21, e21}}}, 10);
    CHECK_FALSE(capped.complete);
    CHECK(capped.size() <= 10);

    // literal closedness: a * b^{-1} stays inside (full check, |H| = 120)
    for (std::size_t i = 0; i < H.size(); ++i)
        for (std::size_t j = 0; j < H.size(); ++j)
            CHECK(H.contains(H.element(i) * H.element(j).inverse()));
}

TEST_CASE("three generators close to the full determinant locus at ell 5") {
    const std::uint32_t L = 5;
    const Mat2 e12{1, 1, 0, 1, L}, e21{1, 0, 1, 1, L};
    const Mat2 d2{2, 0, 0, 1, L};
    auto H = closure({DetLocusElement{{e12, e21}}, DetLocusElement{{e21, e12}},
                      DetLocusElement{{d2, d2}}});
    CHECK(H.complete);
    CHECK(H.size() == 57600); // 120^2 * 4
    // closedness spot check on the large closure
    std::mt19937 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        const auto a = H.element(rng() % H.size());
        const auto b = H.element(rng() % H.size());
        CHECK(H.contains(a * b.inverse()));
    }
}

TEST_CASE("masser-wustholz harness") {
    const std::uint32_t L = 5;
    const Mat2 f0{1, 2, 3, 4, L};
    REQUIRE(f0.invertible());

    SUBCASE("graph subgroup yields a witness with trivial character") {
        auto H = closure(graph_subgroup(f0));
        CHECK(H.size() == 480);
        const auto res = verify_mw_instance(H, all_units(L));
        REQUIRE_FALSE(res.full);
        CHECK_FALSE(res.witness.chi_nontrivial);
        // the recovered conjugator must satisfy b' = f b f^{-1} on all of H
        const Mat2 f = res.witness.f;
        const Mat2 fi = f.inverse();
        for (std::size_t i = 0; i < H.size(); ++i) {
            const auto h = H.element(i);
            CHECK(h.mats[1] == f * h.mats[0] * fi);
        }
    }

    SUBCASE("twisted graph yields a nontrivial quadratic character") {
        auto H = closure(twisted_graph_subgroup(f0));
        CHECK(H.size() == 480);
        const auto res = verify_mw_instance(H, all_units(L));
        REQUIRE_FALSE(res.full);
        CHECK(res.witness.chi_nontrivial);
        // chi^2 = 1 everywhere and chi is multiplicative
        const auto& chi = res.witness.chi;
        for (const auto& [code, value] : chi) CHECK(value * value == 1);
        std::mt19937 rng(99);
        for (int iter = 0; iter < 200; ++iter) {
            const auto a = H.element(rng() % H.size());
            const auto b = H.element(rng() % H.size());
            const auto ab = a * b;
            CHECK(chi.at(static_cast<std::uint64_t>(ab.code())) ==
                  chi.at(static_cast<std::uint64_t>(a.code())) *
                      chi.at(static_cast<std::uint64_t>(b.code())));
        }
    }

    SUBCASE("full fiber product detected") {
        const Mat2 e12{1, 1, 0, 1, L}, e21{1, 0, 1, 1, L};
        const Mat2 d2{2, 0, 0, 1, L};
        auto D = closure({DetLocusElement{{e12, e21}}, DetLocusElement{{e21, e12}},
                          DetLocusElement{{d2, d2}}});
        CHECK(verify_mw_instance(D, all_units(L)).full);
    }

    SUBCASE("non-surjective projections rejected") {
        // SL2-diagonal graph inside the full-determinant D: projections
        // cover SL2 only
        const Mat2 e12{1, 1, 0, 1, L}, e21{1, 0, 1, 1, L};
        auto H = closure({DetLocusElement{{e12, e12}}, DetLocusElement{{e21, e21}}});
        CHECK_THROWS_AS(verify_mw_instance(H, all_units(L)), PreconditionFailed);
    }

    SUBCASE("det-restricted variant") {
        // B = matrices with determinant in <4> = {1, 4}: the graph over
        // that subgroup must pass the projection check and stay proper
        std::vector<DetLocusElement> gens;
        const Mat2 e12{1, 1, 0, 1, L}, e21{1, 0, 1, 1, L};
        const Mat2 d4{4, 0, 0, 1, L};
        const Mat2 fi = f0.inverse();
        for (const Mat2& b : {e12, e21, d4}) gens.push_back(DetLocusElement{{b, f0 * b * fi}});
        auto H = closure(gens);
        const auto sub = cyclic_subgroup(L, 4);
        CHECK(sub == std::vector<std::uint32_t>{1, 4});
        const auto res = verify_mw_instance(H, sub);
        CHECK_FALSE(res.full);
    }
}

TEST_CASE("closure and harness input validation") {
    CHECK_THROWS_AS(closure({}), InvalidInput);
    // generators must share ell
    CHECK_THROWS_AS(closure({DetLocusElement{{Mat2::identity(5)}},
                             DetLocusElement{{Mat2::identity(7)}}}),
                    InvalidInput);
    // determinant-locus invariants enforced on generators
    CHECK_THROWS_AS(closure({DetLocusElement{{Mat2{1, 0, 0, 1, 5}, Mat2{2, 0, 0, 1, 5}}}}),
                    InvalidInput);
    // the lemma harness is two-factor only
    auto H1 = closure({DetLocusElement{{Mat2{1, 1, 0, 1, 5}}},
                       DetLocusElement{{Mat2{1, 0, 1, 1, 5}}}});
    CHECK_THROWS_AS(verify_mw_instance(H1, all_units(5)), PreconditionFailed);
    // incomplete closures are rejected
    auto capped = closure({DetLocusElement{{Mat2{1, 1, 0, 1, 5}, Mat2{1, 1, 0, 1, 5}}},
                           DetLocusElement{{Mat2{1, 0, 1, 1, 5}, Mat2{1, 0, 1, 1, 5}}}},
                          5);
    CHECK_THROWS_AS(verify_mw_instance(capped, all_units(5)), PreconditionFailed);
}

TEST_CASE("standard subgroup constructions have the right sizes") {
    for (std::uint32_t ell : {5u, 7u, 11u}) {
        CHECK(all_gl2(ell).size() ==
              static_cast<std::size_t>((ell * ell - 1) * (ell * ell - ell)));
        CHECK(all_sl2(ell).size() == static_cast<std::size_t>(ell * (ell * ell - 1)));
        CHECK(borel_subgroup(ell).size() == static_cast<std::size_t>(ell * (ell - 1) * (ell - 1)));
        CHECK(split_cartan_normalizer(ell).size() ==
              static_cast<std::size_t>(2 * (ell - 1) * (ell - 1)));
        CHECK(nonsplit_cartan_normalizer(ell).size() ==
              static_cast<std::size_t>(2 * (ell * ell - 1)));
        // every member is invertible
        for (const auto& m : nonsplit_cartan_normalizer(ell)) CHECK(m.invertible());
    }
}

TEST_CASE("exceptional projective subgroups") {
    // preimages carry (ell - 1) scalars per projective element
    CHECK(exceptional_preimage(5, 12).size() == 48);
    CHECK(exceptional_preimage(5, 24).size() == 96);
    CHECK(exceptional_preimage(5, 60).size() == 240);
    CHECK(exceptional_preimage(7, 12).size() == 72);
    CHECK(exceptional_preimage(7, 24).size() == 144);
    CHECK(exceptional_preimage(7, 60).empty()); // A5 needs ell = 5 or ell = +-1 mod 5
    CHECK(exceptional_preimage(11, 60).size() == 600);
    // closed under multiplication (spot check for ell = 7, S4 preimage)
    const auto s4 = exceptional_preimage(7, 24);
    std::unordered_set<std::uint64_t> codes;
    for (const auto& m : s4) codes.insert(m.code());
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        const auto& a = s4[rng() % s4.size()];
        const auto& b = s4[rng() % s4.size()];
        CHECK(codes.count((a * b).code()) == 1);
    }
}
