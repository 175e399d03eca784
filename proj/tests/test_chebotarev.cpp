#include <doctest.h>

#include "ellmod/chebotarev.hpp"
#include "ellmod/point_count.hpp"

using namespace ellmod;

namespace {

Poly<BigInt> zpoly(std::initializer_list<long> coeffs) {
    std::vector<BigInt> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly<BigInt>(std::move(v));
}

FamilySpec standard_family() {
    FamilySpec fam;
    fam.A = {zpoly({0, 1}), zpoly({1})};
    fam.B = {zpoly({1}), zpoly({0, 1})};
    return fam;
}

} // namespace

TEST_CASE("partition identity at p = 101") {
    const auto fam = standard_family();
    const auto table = chebotarev_table(fam, 101, 5);
    CHECK(table.counts.size() == 25);
    std::uint64_t sum = 0;
    for (auto c : table.counts) sum += c;
    CHECK(sum == table.good_count);
    CHECK(table.good_count <= 101);
    // single-entry variant agrees with the full pass
    CHECK(chebotarev_count(fam, 101, 5, {0, 0}) == table.count({0, 0}));
    CHECK(chebotarev_count(fam, 101, 5, {-1, 3}) == table.count({4, 3}));
}

TEST_CASE("every cell is well-defined, including Hasse-incompatible residues") {
    // at p = 11 and ell = 7 the trace residues 5 and 6 are only reachable
    // through negative traces; the table must still carry the full 7 x 7 grid
    const auto table = chebotarev_table(standard_family(), 11, 7);
    CHECK(table.counts.size() == 49);
    std::uint64_t sum = 0;
    for (auto c : table.counts) sum += c;
    CHECK(sum == table.good_count);
}

TEST_CASE("twist symmetry flips the sign of every trace tuple") {
    const auto fam = standard_family();
    // twist the whole family by d = 2, a nonsquare mod 11
    FamilySpec twisted;
    twisted.A = {Poly<BigInt>(std::vector<BigInt>{BigInt(0), BigInt(4)}),
                 Poly<BigInt>(std::vector<BigInt>{BigInt(4)})};
    twisted.B = {Poly<BigInt>(std::vector<BigInt>{BigInt(8)}),
                 Poly<BigInt>(std::vector<BigInt>{BigInt(0), BigInt(8)})};
    REQUIRE(legendre(2, 11) == -1);
    const auto base = chebotarev_table(fam, 11, 5);
    const auto flip = chebotarev_table(twisted, 11, 5);
    CHECK(base.good_count == flip.good_count);
    for (std::uint32_t t1 = 0; t1 < 5; ++t1)
        for (std::uint32_t t2 = 0; t2 < 5; ++t2)
            CHECK(base.count({t1, t2}) == flip.count({(5 - t1) % 5, (5 - t2) % 5}));
}

TEST_CASE("input validation") {
    const auto fam = standard_family();
    CHECK_THROWS_AS(chebotarev_table(fam, 101, 101), InvalidLevel);
    CHECK_THROWS_AS(chebotarev_table(fam, 3, 5), UnsupportedCharacteristic);
    CHECK_THROWS_AS(chebotarev_table(fam, 100, 5), InvalidInput);
    // a factor that collapses to constant j mod p is rejected
    FamilySpec collapsing;
    collapsing.A = {zpoly({0, 11}), zpoly({1})}; // 11 t = 0 mod 11
    collapsing.B = {zpoly({1}), zpoly({0, 1})};
    CHECK_THROWS_AS(chebotarev_table(collapsing, 11, 5), InvalidInput);
}

TEST_CASE("thread count does not change the table") {
    const auto fam = standard_family();
    const auto t1 = chebotarev_table(fam, 101, 5, 1);
    const auto t4 = chebotarev_table(fam, 101, 5, 4);
    CHECK(t1.counts == t4.counts);
    CHECK(t1.good_count == t4.good_count);
}
