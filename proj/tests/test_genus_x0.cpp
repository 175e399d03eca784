#include <doctest.h>

#include "ellmod/genus_x0.hpp"
#include "support/oracles.hpp"

using namespace ellmod;

TEST_CASE("genus formula matches the counting oracle ingredient by ingredient") {
    for (std::uint64_t N = 1; N <= 100; ++N) {
        const auto d = x0_data(N);
        const auto o = oracles::x0_oracle(N);
        CHECK(d.index == o.index);
        CHECK(d.nu2 == o.nu2);
        CHECK(d.nu3 == o.nu3);
        CHECK(d.cusps == o.cusps);
        CHECK(d.genus == o.genus);
    }
}

TEST_CASE("known small genus values") {
    CHECK(genus_x0(1) == 0);
    CHECK(genus_x0(11) == 1);
    CHECK(genus_x0(13) == 0);
    for (std::uint64_t N : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 13}) CHECK(genus_x0(N) == 0);
    for (std::uint64_t N : {11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49})
        CHECK(genus_x0(N) == 1);
}

TEST_CASE("genus is nonnegative through N = 1000") {
    for (std::uint64_t N = 1; N <= 1000; ++N) CHECK(genus_x0(N) >= 0);
}

TEST_CASE("euler phi and factorization helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(97) == 96);
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, std::uint64_t>{2, 3});
    CHECK(f[1] == std::pair<std::uint64_t, std::uint64_t>{3, 2});
    CHECK(f[2] == std::pair<std::uint64_t, std::uint64_t>{5, 1});
}
