#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "steerkit/errors.hpp"
#include "steerkit/hemisphere.hpp"

using namespace steerkit;

TEST_CASE("smallest construction: n=2, P=1") {
    HemisphereConfig cfg;
    cfg.n_bands = 2;
    cfg.density = 1.0;
    cfg.azimuth_offset = 0.3;
    const HemisphereSet hs = build_hemisphere_set(cfg);
    CHECK(hs.set.size() == 1);
    REQUIRE(hs.points_per_band.size() == 1);
    CHECK(hs.points_per_band[0] == 1);
    CHECK(hs.band_angles[0] == doctest::Approx(M_PI / 4.0));
    const Vec3& v = hs.set[0];
    const double s = std::sin(M_PI / 4.0);
    CHECK(v.x == doctest::Approx(s * std::cos(0.3)).epsilon(1e-14));
    CHECK(v.y == doctest::Approx(s * std::sin(0.3)).epsilon(1e-14));
    CHECK(v.z == doctest::Approx(std::cos(M_PI / 4.0)).epsilon(1e-14));
    CHECK(all_ones_bound(hs) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("band populations follow max(1, round(P sin(k alpha)))") {
    HemisphereConfig cfg;
    cfg.n_bands = 4;
    cfg.density = 4.0;
    const HemisphereSet hs = build_hemisphere_set(cfg);
    CHECK(hs.points_per_band == std::vector<int>{2, 3, 4});
    CHECK(hs.set.size() == 9);
    // Band sums point along z, so the bound reduces to sum p_k cos(k alpha) / N.
    double axial = 0.0;
    for (int k = 1; k <= 3; ++k) {
        axial += hs.points_per_band[static_cast<size_t>(k - 1)] * std::cos(k * M_PI / 8.0);
    }
    CHECK(all_ones_bound(hs) == doctest::Approx(axial / 9.0).epsilon(1e-14));
}

TEST_CASE("every direction lies strictly in the northern hemisphere") {
    for (int n : {2, 3, 5, 9}) {
        for (double p : {1.0, 3.5, 12.0}) {
            const HemisphereSet hs = build_hemisphere_set({n, p, 0.11});
            for (const Vec3& v : hs.set.directions()) CHECK(v.z > 0.0);
        }
    }
}

TEST_CASE("dense construction approaches 1/2") {
    const HemisphereSet hs = build_hemisphere_set({50, 200.0, 0.0});
    CHECK(std::abs(all_ones_bound(hs) - 0.5) < 0.01);
}

TEST_CASE("rounded sets with P = 20n stay within 0.02 of 1/2") {
    for (int n : {20, 60, 120, 200}) {
        const HemisphereSet hs = build_hemisphere_set({n, 20.0 * n, 0.0});
        CHECK(std::abs(all_ones_bound(hs) - 0.5) <= 0.02);
    }
}

TEST_CASE("azimuth offset does not move the bound") {
    const double a = all_ones_bound(build_hemisphere_set({7, 9.0, 0.0}));
    const double b = all_ones_bound(build_hemisphere_set({7, 9.0, 1.234}));
    CHECK(std::abs(a - b) <= 1e-10);
}

TEST_CASE("analytic bound: one-term case, limit, monotonicity") {
    CHECK(analytic_bound(2) == doctest::Approx(std::cos(M_PI / 4.0)).epsilon(1e-15));
    CHECK(std::abs(analytic_bound(1000000) - 0.5) <= 1e-6);
    double prev = analytic_bound(2);
    for (long n = 3; n <= 2000; ++n) {
        const double cur = analytic_bound(n);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS((void)analytic_bound(1), ValidationError);
}

TEST_CASE("exact enumeration confirms the all-ones value on the n=4, P=4 set") {
    const HemisphereSet hs = build_hemisphere_set({4, 4.0, 0.0});
    const HemisphereExactCheck check = exact_bound_small(hs);
    CHECK(std::abs(check.result.value - check.all_ones_value) <= 1e-12);
    CHECK(check.all_ones_maximizing);
}

TEST_CASE("sparse bands can beat the all-ones assignment") {
    // At n=3, P=3 the first band rounds down to a single point
    // (3 sin(pi/6) = 1.4999999999999998 in doubles), and a flipped
    // assignment wins the enumeration.
    const HemisphereSet hs = build_hemisphere_set({3, 3.0, 0.0});
    CHECK(hs.points_per_band == std::vector<int>{1, 3});
    const HemisphereExactCheck check = exact_bound_small(hs);
    CHECK(check.all_ones_value == doctest::Approx(0.6045698993578678).epsilon(1e-12));
    CHECK(check.result.value == doctest::Approx(0.6114557837432358).epsilon(1e-12));
    CHECK_FALSE(check.all_ones_maximizing);
}

TEST_CASE("all-ones is maximizing across the dense small grid") {
    for (int n = 2; n <= 4; ++n) {
        for (double p : {4.0, 6.0, 8.0}) {
            for (double off : {0.0, 0.7}) {
                const HemisphereSet hs = build_hemisphere_set({n, p, off});
                if (hs.set.size() > 20) continue;
                const HemisphereExactCheck check = exact_bound_small(hs);
                CHECK(std::abs(check.result.value - check.all_ones_value) <= 1e-12);
                CHECK(check.all_ones_maximizing);
            }
        }
    }
}

TEST_CASE("convergence table rows") {
    const auto rows = convergence_table(6, 5.0);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        const HemisphereSet hs = build_hemisphere_set({static_cast<int>(row.n), 5.0, 0.0});
        CHECK(row.total_settings == hs.set.size());
        CHECK(row.all_ones == doctest::Approx(all_ones_bound(hs)).epsilon(1e-15));
        CHECK(row.analytic == doctest::Approx(analytic_bound(row.n)).epsilon(1e-15));
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS((void)build_hemisphere_set({1, 5.0, 0.0}), ValidationError);
    CHECK_THROWS_AS((void)build_hemisphere_set({3, 0.0, 0.0}), ValidationError);
    CHECK_THROWS_AS((void)exact_bound_small(build_hemisphere_set({20, 30.0, 0.0})), CapacityError);
}
