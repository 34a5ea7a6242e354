#include <doctest.h>

#include <cmath>
#include <set>

#include "resetsde/rng.hpp"

using resetsde::RngStream;
using resetsde::philox4x32_10;

TEST_CASE("philox known answers") {
    using A4 = std::array<std::uint32_t, 4>;
    CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == A4{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          A4{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          A4{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
    RngStream a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    std::set<std::uint32_t> firsts;
    for (int i = 0; i < 100; ++i) {
        const auto x = a();
        CHECK(x == b());
        firsts.insert(x);
    }
    CHECK(firsts.size() > 95);
    RngStream a2(7, 3);
    CHECK(a2() != c());
    RngStream a3(7, 3);
    CHECK(a3() != d());
    CHECK(a.seed() == 7);
    CHECK(a.stream_id() == 3);
}

TEST_CASE("uniform stays in the open unit interval") {
    RngStream rng(1, 0);
    double sum = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("normal and exponential moments") {
    RngStream rng(2, 0);
    const int n = 200000;
    double s1 = 0, s2 = 0, s4 = 0, e1 = 0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        s1 += z;
        s2 += z * z;
        s4 += z * z * z * z;
        e1 += rng.exponential();
    }
    CHECK(std::abs(s1 / n) < 5.0 / std::sqrt(n));
    CHECK(std::abs(s2 / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
    CHECK(std::abs(s4 / n - 3.0) < 5.0 * std::sqrt(96.0 / n));
    CHECK(std::abs(e1 / n - 1.0) < 5.0 / std::sqrt(n));
}
