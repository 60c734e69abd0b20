#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "steerkit/errors.hpp"
#include "steerkit/golden.hpp"
#include "steerkit/lhs_bound.hpp"
#include "steerkit/rng.hpp"
#include "test_util.hpp"

using namespace steerkit;
using testlib::make_set;
using testlib::random_directions;
using testlib::rotate;

TEST_CASE("three orthogonal axes give 1/sqrt(3)") {
    const auto r = lhs_bound(make_set({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(r.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("single direction") {
    const auto r = lhs_bound(make_set({{0, 0, 1}}));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
    REQUIRE(r.signs.size() == 1);
    CHECK(r.signs[0] == 1);
    CHECK(r.resultant.z == doctest::Approx(1.0));
}

TEST_CASE("optimal N=6 set: bound and all-ones maximizer") {
    const auto set = golden_set("optimal-n6").renormalized();
    const auto r = lhs_bound(set);
    CHECK(r.value == doctest::Approx(std::sqrt(10.0) / 6.0).epsilon(1e-12));
    CHECK(std::all_of(r.signs.begin(), r.signs.end(), [](int s) { return s == 1; }));
}

TEST_CASE("SJWP N=10 set") {
    const auto r = lhs_bound(golden_set("sjwp-n10").renormalized());
    CHECK(r.value == doctest::Approx((3.0 + std::sqrt(5.0)) / 10.0).epsilon(1e-12));
}

TEST_CASE("value always equals resultant norm") {
    Rng rng(7001);
    for (int trial = 0; trial < 20; ++trial) {
        const auto set = random_directions(1 + static_cast<int>(rng.below(14)), rng);
        const auto r = lhs_bound(set);
        CHECK(std::abs(r.value - r.resultant.norm()) <= 1e-12);
        CHECK(r.signs[0] == 1);
    }
}

TEST_CASE("eigenvalue oracle agrees on a seeded 20-direction set") {
    Rng rng(424242);
    const auto set = random_directions(20, rng);
    const double via_norm = lhs_bound(set).value;
    const double via_eig = lhs_bound_eig(set);
    CHECK(std::abs(via_norm - via_eig) <= 1e-10);
}

TEST_CASE("eigenvalue oracle basics") {
    CHECK(lhs_bound_eig(make_set({{0, 0, 1}})) == doctest::Approx(1.0).epsilon(1e-12));
    const auto t2n4 = golden_set("optimal-n4").renormalized();
    CHECK(lhs_bound_eig(t2n4) == doctest::Approx(std::sqrt(5.0) / 4.0).epsilon(1e-10));
}

TEST_CASE("oracle equivalence on random sets up to N=12") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        const auto set = random_directions(n, rng);
        CHECK(std::abs(lhs_bound(set).value - lhs_bound_eig(set)) <= 1e-10);
    }
}

TEST_CASE("capacity guards") {
    Rng rng(5);
    CHECK_THROWS_AS((void)lhs_bound(random_directions(31, rng)), CapacityError);
    CHECK_THROWS_AS((void)lhs_bound_eig(random_directions(21, rng)), CapacityError);
}

TEST_CASE("invalid sets are rejected") {
    CHECK_THROWS_AS(make_set({{1, 0, 0}, {0.5, 0, 0}}), ValidationError);
    CHECK_THROWS_AS(make_set({}), ValidationError);
}

TEST_CASE("bound range: 1/sqrt(N) <= C <= 1, equality only for parallel sets") {
    Rng rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(11));
        const auto r = lhs_bound(random_directions(n, rng));
        CHECK(r.value >= 1.0 / std::sqrt(static_cast<double>(n)) - 1e-12);
        CHECK(r.value <= 1.0 + 1e-12);
        CHECK(r.value < 1.0);  // random sets are never exactly parallel
    }
    // Parallel up to sign: the bound saturates at 1.
    const auto r = lhs_bound(make_set({{0, 0, 1}, {0, 0, 1}, {0, 0, -1}}));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gauge invariance under rotations and sign flips") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const auto set = random_directions(n, rng);
        const double reference = lhs_bound(set).value;

        const Vec3 axis = rng.unit_vector();
        const double angle = 2.0 * M_PI * rng.uniform();
        std::vector<Vec3> transformed;
        for (const Vec3& v : set.directions()) {
            const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
            transformed.push_back(rotate(v, axis, angle).normalized() * sign);
        }
        const double mapped = lhs_bound(make_set(std::move(transformed))).value;
        CHECK(std::abs(mapped - reference) <= 1e-12);
    }
}

TEST_CASE("tie-break picks the lexicographically smallest maximizer") {
    // {x, y} has two maximizers, (+,+) and (+,-); +1 < -1 picks (+,+).
    const auto r = lhs_bound(make_set({{1, 0, 0}, {0, 1, 0}}));
    CHECK(r.value == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(r.signs == std::vector<int>{1, 1});
}

TEST_CASE("multi-threaded scan matches the sequential result") {
    Rng rng(808);
    const auto set = random_directions(16, rng);
    const auto seq = lhs_bound(set);
    const auto par = lhs_bound(set, 4);
    CHECK(par.value == seq.value);
    CHECK(par.signs == seq.signs);
}

TEST_CASE("canonicalize rotates SJWP N=2 onto the optimal N=2 form") {
    const auto canon = canonicalize(make_set({{1, 0, 0}, {0, 1, 0}}));
    const double inv_s2 = 1.0 / std::sqrt(2.0);
    for (const Vec3& v : canon.directions()) {
        CHECK(v.z == doctest::Approx(inv_s2).epsilon(1e-10));
    }
    // Same pairwise geometry as Table II's boxed N=2 pair.
    CHECK(canon[0].dot(canon[1]) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("canonicalize fixes the resultant on +z and preserves the bound") {
    const auto set = golden_set("optimal-n6").renormalized();
    const double before = lhs_bound(set).value;
    const auto canon = canonicalize(set);
    const auto r = lhs_bound(canon);
    CHECK(std::abs(r.value - before) <= 1e-12);
    CHECK(std::all_of(r.signs.begin(), r.signs.end(), [](int s) { return s == 1; }));
    CHECK(std::abs(r.resultant.x) <= 1e-10);
    CHECK(std::abs(r.resultant.y) <= 1e-10);
    CHECK(r.resultant.z == doctest::Approx(std::sqrt(10.0) / 6.0).epsilon(1e-10));
    // Already canonical: z-components are untouched by the residual z-rotation.
    std::vector<double> before_z, after_z;
    for (int j = 0; j < set.size(); ++j) {
        before_z.push_back(set[j].z);
        after_z.push_back(canon[j].z);
    }
    for (size_t j = 0; j < before_z.size(); ++j) {
        CHECK(after_z[j] == doctest::Approx(before_z[j]).epsilon(1e-9));
    }
}

TEST_CASE("canonicalize maps {v, -v} to {z, z}") {
    const Vec3 v = Vec3{0.3, -0.5, 0.2}.normalized();
    const auto canon = canonicalize(make_set({v, -1.0 * v}));
    for (const Vec3& d : canon.directions()) {
        CHECK(d.z == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("canonicalized random sets have all-ones maximizers") {
    Rng rng(515);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const auto set = random_directions(n, rng);
        const double before = lhs_bound(set).value;
        const auto r = lhs_bound(canonicalize(set));
        CHECK(std::abs(r.value - before) <= 1e-12);
        CHECK(std::all_of(r.signs.begin(), r.signs.end(), [](int s) { return s == 1; }));
        CHECK(std::abs(r.resultant.x) <= 1e-10);
        CHECK(std::abs(r.resultant.y) <= 1e-10);
    }
}

TEST_CASE("BoundResult JSON carries value, signs and resultant") {
    const auto r = lhs_bound(make_set({{0, 0, 1}, {1, 0, 0}}));
    const std::string j = to_json(r);
    CHECK(j.find("\"value\"") != std::string::npos);
    CHECK(j.find("\"signs\"") != std::string::npos);
    CHECK(j.find("\"resultant\"") != std::string::npos);
}
