#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "genus2/chain.hpp"
#include "genus2/linking.hpp"

using namespace genus2;

namespace {

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("parameter arithmetic") {
    CHECK(std::fabs(solve_k_for_m(32) - 1.0 / (6.0 * kSqrt2)) < 1e-12);
    CHECK(solve_k_for_m(288) == doctest::Approx(0.01309457).epsilon(1e-6));
    CHECK_THROWS_AS(solve_k_for_m(24), std::invalid_argument);
    CHECK_THROWS_AS(solve_k_for_m(0), std::invalid_argument);

    CHECK(kbound_satisfied(1.0, 0.08, 0.013));
    CHECK(!kbound_satisfied(1.0, 0.08, 1.0 / (6.0 * kSqrt2)));
    CHECK(kbound_satisfied(1.0, 0.08, 1e-9));
    CHECK_THROWS_AS(kbound_satisfied(1.0, -0.08, 0.01), std::invalid_argument);

    int m = 16;
    while (!kbound_satisfied(1.0, 0.08, solve_k_for_m(m))) m += 16;
    CHECK(m == 288);

    const ChainParams p = make_chain_params(1.0, 0.08, 32);
    CHECK(p.n == 4);
    CHECK(p.k == doctest::Approx(1.0 / (6.0 * kSqrt2)));
    CHECK_THROWS_AS(make_chain_params(1.0, 0.08, 32, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(make_chain_params(1.0, 0.08, 24), std::invalid_argument);

    // anchor bookkeeping is exact: 3 sqrt2 k n = 2
    CHECK(std::fabs(3.0 * kSqrt2 * p.k * p.n - 2.0) < 1e-12);
}

TEST_CASE("anchors") {
    const ChainParams p = make_chain_params(1.0, 0.08, 32);
    const auto anchors = anchor_points(p);
    REQUIRE(anchors.size() == 5);
    CHECK(distance(anchors[0], {1.0 / 24.0 / kSqrt2, 1.0 / 24.0 / kSqrt2, 0}) < 1e-12);
    for (int i = 0; i + 1 < 5; ++i)
        CHECK(distance(anchors[static_cast<std::size_t>(i)],
                       anchors[static_cast<std::size_t>(i + 1)]) == doctest::Approx(0.5));
    CHECK(anchors[4].norm() == doctest::Approx(2.0 + 1.0 / 24.0));
}

TEST_CASE("orientation vectors") {
    const auto [v11, v12] = orientation_vectors(1);
    CHECK(distance(v11, {1.0 / kSqrt2, 1.0 / kSqrt2, 0}) < 1e-15);
    CHECK(distance(v12, {0.65328148, -0.65328148, 0.38268343}) < 1e-7);
    const auto v22 = orientation_vectors(2).second;
    CHECK(distance(v22, {-0.27059805, 0.27059805, 0.92387953}) < 1e-7);

    for (int i = 1; i <= 8; ++i) {
        const auto [v1, v2] = orientation_vectors(i);
        CHECK(std::fabs(v1.norm() - 1.0) < 1e-12);
        CHECK(std::fabs(v2.norm() - 1.0) < 1e-12);
        CHECK(std::fabs(v1.dot(v2)) < 1e-12);
        CHECK(std::fabs(v2.dot(orientation_vectors(i + 1).second)) < 1e-12);
    }
    CHECK_THROWS_AS(orientation_vectors(0), std::invalid_argument);
}

TEST_CASE("build_chain structure") {
    const ChainParams p = make_chain_params(1.0, 0.08, 32);
    const Chain chain = build_chain(p);
    REQUIRE(chain.maps.size() == 32);
    REQUIRE(chain.components.size() == 32);
    for (const Similarity& s : chain.maps) CHECK(s.scale() == doctest::Approx(p.k));
    for (const DoubleTorus& d : chain.components) {
        CHECK(d.R() == doctest::Approx(p.k * p.R));
        CHECK(d.r() == doctest::Approx(p.k * p.r));
    }

    // second batch points along the rotated side
    const Vec3 v1_batch2 = chain.maps[static_cast<std::size_t>(p.n)].rotation().column(0);
    CHECK(distance(v1_batch2, {1.0 / kSqrt2, -1.0 / kSqrt2, 0}) < 1e-12);

    // rho1-equivariance: component i+n is the quarter turn of component i
    const Similarity rho1 = Similarity::rotation_about_line(
        {kSqrt2, 0, 0}, {0, 0, 1}, -3.14159265358979323846 / 2.0);
    for (int i = 0; i < 3 * p.n; ++i) {
        const auto a = apply_similarity(rho1, chain.components[static_cast<std::size_t>(i)]).beams();
        const auto b = chain.components[static_cast<std::size_t>(i + p.n)].beams();
        for (std::size_t bi = 0; bi < 8; ++bi)
            CHECK(distance(a[bi].center, b[bi].center) < 1e-10);
    }
    CHECK(distance(rho1({0, 0, 0}), {kSqrt2, kSqrt2, 0}) < 1e-12);

    // iota1 pairing j <-> m+1-j
    const Similarity iota1 =
        Similarity::rotation_about_line({0, 0, 0}, {0, 0, 1}, 3.14159265358979323846);
    for (int j = 1; j <= 32; ++j)
        CHECK(same_solid(apply_similarity(iota1, chain.components[static_cast<std::size_t>(j - 1)]),
                         chain.components[static_cast<std::size_t>(32 - j)], 1e-9));

    // hole center of the first torus sits at the first anchor
    const auto anchors = anchor_points(p);
    CHECK(distance(chain.maps[0](canonical_hole_center(1.0, false)), anchors[0]) < 1e-12);
    CHECK(distance(chain.maps[0](Vec3{2 * kSqrt2, 0, 0}), anchors[1]) < 1e-12);
}

TEST_CASE("verification at m=32") {
    const Chain chain = build_chain(make_chain_params(1.0, 0.08, 32));
    const VerificationReport rep = verify_chain(chain, true);

    // linking holds; containment fails at this k (recorded empirically)
    CHECK(rep.find("chain.consecutive_hopf")->pass);
    CHECK(rep.find("chain.companion_unlinked")->pass);
    CHECK(rep.find("chain.nonadjacent_unlinked")->pass);
    CHECK(rep.find("chain.origin_fourway")->pass);
    CHECK(rep.find("chain.disjoint")->pass);
    CHECK(!rep.find("chain.containment")->pass);

    // deterministic serialization
    CHECK(rep.serialize() == verify_chain(chain, true).serialize());
}

TEST_CASE("origin squares form the scaled four-way pattern") {
    const Chain chain = build_chain(make_chain_params(1.0, 0.08, 32));
    const auto squares = origin_squares(chain);
    REQUIRE(squares.size() == 4);
    for (const PolyLoop& s : squares) {
        CHECK(s.planarity_residual() < 1e-12);
        CHECK(s.diameter() == doctest::Approx(2.0 * kSqrt2 * chain.params.k));
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK(std::abs(gauss_linking_number(squares[i], squares[j]).lk) == 1);
}

TEST_CASE("scale invariance of the verdict") {
    const Chain a = build_chain(make_chain_params(1.0, 0.08, 32));
    const Chain b = build_chain(make_chain_params(2.0, 0.16, 32));
    const VerificationReport ra = verify_chain(a, true);
    const VerificationReport rb = verify_chain(b, true);
    REQUIRE(ra.checks.size() == rb.checks.size());
    for (std::size_t i = 0; i < ra.checks.size(); ++i) {
        CHECK(ra.checks[i].pass == rb.checks[i].pass);
        if (ra.checks[i].name == "chain.disjoint" || ra.checks[i].name == "chain.containment")
            CHECK(rb.checks[i].margin == doctest::Approx(2.0 * ra.checks[i].margin).epsilon(1e-9));
    }
}

TEST_CASE("literal rho1 center override") {
    const Chain lit = build_chain(make_chain_params(1.0, 0.08, 32), Rho1Center::kLiteral);
    CHECK(lit.rho1_center == Rho1Center::kLiteral);
    // the literal printed center does not return the side to the lobe:
    // the second batch leaves the core of X0 and the origin four-way breaks
    const Chain hc = build_chain(make_chain_params(1.0, 0.08, 32));
    const Vec3 lit_c = lit.components[static_cast<std::size_t>(lit.params.n)].shared_corner();
    const Vec3 hc_c = hc.components[static_cast<std::size_t>(hc.params.n)].shared_corner();
    CHECK(distance(lit_c, hc_c) > 0.1);
}
