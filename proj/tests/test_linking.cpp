#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "genus2/errors.hpp"
#include "genus2/linking.hpp"

using namespace genus2;

namespace {

// Planar unit square and a loop threading it once; signed crossing count
// of the z-projection gives lk = -1 (worked by hand).
PolyLoop square_a() { return PolyLoop{{{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}}}; }
PolyLoop thread_b() { return PolyLoop{{{2, 0, 0}, {1, 0, 1}, {0, 0, 0}, {1, 0, -1}}}; }
PolyLoop far_c() { return PolyLoop{{{5, 1, 0}, {4, 1, 1}, {3, 1, 0}, {4, 1, -1}}}; }

std::mt19937 rng(99);

Similarity random_similarity() {
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    std::uniform_real_distribution<double> sc(0.5, 2.0);
    std::uniform_real_distribution<double> tr(-4.0, 4.0);
    const Vec3 axis = Vec3{tr(rng), tr(rng), tr(rng) + 9.0}.normalized();
    const Similarity rot{sc(rng), Mat3::rotation(axis, ang(rng)), Vec3{tr(rng), tr(rng), tr(rng)}};
    return rot;
}

}  // namespace

TEST_CASE("hand-verified hopf pair, all oracles") {
    const PolyLoop a = square_a();
    const PolyLoop b = thread_b();

    const LinkReport g = gauss_linking_number(a, b);
    CHECK(g.lk == -1);
    CHECK(g.gauss_residual < 1e-12);

    int crossings = 0;
    const LinkReport c = crossing_linking_number(a, b, {0, 0, 1}, &crossings);
    CHECK(c.lk == -1);
    CHECK(crossings == 2);

    CHECK(crossing_linking_number_auto(a, b).lk == -1);
    CHECK(is_hopf_pair(a, b));

    // orientation reversal flips the sign
    CHECK(gauss_linking_number(a.reversed(), b).lk == 1);
    CHECK(gauss_linking_number(a, b.reversed()).lk == 1);
    CHECK(gauss_linking_number(a.reversed(), b.reversed()).lk == -1);
}

TEST_CASE("unlinked pairs") {
    CHECK(gauss_linking_number(square_a(), far_c()).lk == 0);
    CHECK(crossing_linking_number_auto(square_a(), far_c()).lk == 0);
    CHECK(!is_hopf_pair(square_a(), far_c()));

    // a loop beside the square, not through it
    const PolyLoop beside{{{3, 0, 0}, {2.5, 0, 1}, {2, 0, 0}, {2.5, 0, -1}}};
    CHECK(gauss_linking_number(square_a(), beside).lk == 0);
}

TEST_CASE("contact and degeneracy are refused") {
    const PolyLoop touching{{{1, 0, 0}, {0.5, 0, 1}, {0, 0, 1e-13}, {0.5, 0, -1}}};
    CHECK_THROWS_AS(gauss_linking_number(square_a(), touching), LoopsTooCloseError);

    // projection along x flattens thread_b into a segment
    CHECK_THROWS_AS(crossing_linking_number(square_a(), thread_b(), {0, 1, 0}),
                    DegenerateDirectionError);
    CHECK_THROWS_AS(crossing_linking_number(square_a(), thread_b(), {0, 0, 0}),
                    DegenerateDirectionError);
}

TEST_CASE("oracle agreement under random similarities") {
    int hopf_checked = 0, unlink_checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Similarity s = random_similarity();
        const PolyLoop a = apply_similarity(s, square_a());
        const PolyLoop b = apply_similarity(s, thread_b());
        const PolyLoop c = apply_similarity(s, far_c());

        const LinkReport g = gauss_linking_number(a, b);
        const LinkReport x = crossing_linking_number_auto(a, b);
        CHECK(g.lk == x.lk);
        CHECK(std::abs(g.lk) == 1);
        ++hopf_checked;

        const LinkReport g0 = gauss_linking_number(a, c);
        const LinkReport x0 = crossing_linking_number_auto(a, c);
        CHECK(g0.lk == x0.lk);
        CHECK(g0.lk == 0);
        ++unlink_checked;
    }
    CHECK(hopf_checked + unlink_checked >= 100);
}

TEST_CASE("filling disk and piercings") {
    const PlanarDisk d = canonical_filling_disk(square_a());
    CHECK(std::fabs(d.normal().dot({0, 0, 1})) == doctest::Approx(1.0));
    CHECK(std::fabs(d.e1.dot(d.e2)) < 1e-12);

    const auto p = disk_piercings(d, thread_b());
    REQUIRE(p.size() == 1);
    CHECK(signed_piercing_count(p) == gauss_linking_number(square_a(), thread_b()).lk);
    // the in-plane vertex of the thread is the piercing point
    CHECK(distance(p[0].point, {0, 0, 0}) < 1e-12);

    CHECK(disk_piercings(d, far_c()).empty());

    const PolyLoop nonplanar{{{1, 1, 0}, {-1, 1, 0.3}, {-1, -1, 0}, {1, -1, 0}}};
    CHECK_THROWS_AS(canonical_filling_disk(nonplanar), std::invalid_argument);

    // loop lying in the disk plane is non-generic
    const PolyLoop inplane{{{3, 0, 0}, {2, 1, 0}, {1, 0, 0}, {2, -1, 0}}};
    CHECK_THROWS_AS(disk_piercings(d, inplane), NonGenericPositionError);
}

TEST_CASE("piercing count equals lk under random similarities") {
    for (int trial = 0; trial < 50; ++trial) {
        const Similarity s = random_similarity();
        const PolyLoop a = apply_similarity(s, square_a());
        const PolyLoop b = apply_similarity(s, thread_b());
        const PlanarDisk d = canonical_filling_disk(a);
        CHECK(signed_piercing_count(disk_piercings(d, b)) == gauss_linking_number(a, b).lk);

        const PolyLoop c = apply_similarity(s, far_c());
        CHECK(signed_piercing_count(disk_piercings(d, c)) == 0);
    }
}

TEST_CASE("vertex-transversal piercing counts once") {
    // the threading loop has a vertex exactly in the disk plane
    const PolyLoop vertex_hit{{{0.5, 0, 1}, {0.2, 0.2, 0}, {0.5, 0, -1}, {2, 0, 0}}};
    const PlanarDisk d = canonical_filling_disk(square_a());
    const auto p = disk_piercings(d, vertex_hit);
    REQUIRE(p.size() == 1);  // the in-plane vertex inside the square; the one at (2,0,0) is outside
    CHECK(distance(p[0].point, {0.2, 0.2, 0}) < 1e-12);
    CHECK(signed_piercing_count(p) == gauss_linking_number(square_a(), vertex_hit).lk);
}
