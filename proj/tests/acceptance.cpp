// Acceptance gate: one line per criterion, pinned tolerances, nonzero
// exit when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "genus2/chain.hpp"
#include "genus2/defining_sequence.hpp"
#include "genus2/fourway.hpp"
#include "genus2/linking.hpp"
#include "genus2/scene_io.hpp"

using namespace genus2;

namespace {

const double kSqrt2 = std::sqrt(2.0);

double now() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

bool g_all = true;

void report(int n, bool pass, double seconds, const std::string& desc) {
    std::printf("criterion %2d %s (%.2fs) %s\n", n, pass ? "PASS" : "FAIL", seconds, desc.c_str());
    if (!pass) g_all = false;
}

bool all_prefixed_pass(const VerificationReport& rep, const std::string& prefix) {
    bool any = false;
    for (const CheckRecord& c : rep.checks)
        if (c.name.rfind(prefix, 0) == 0) {
            any = true;
            if (!c.pass) return false;
        }
    return any;
}

PolyLoop square_a() { return PolyLoop{{{1, 1, 0}, {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}}}; }
PolyLoop thread_b() { return PolyLoop{{{2, 0, 0}, {1, 0, 1}, {0, 0, 0}, {1, 0, -1}}}; }
PolyLoop far_c() { return PolyLoop{{{5, 1, 0}, {4, 1, 1}, {3, 1, 0}, {4, 1, -1}}}; }

}  // namespace

int main() {
    // 1: four-way closed forms
    {
        const double t0 = now();
        const FourWayConfig cfg = build_fourway(1.0, 0.08);
        const double mc = min_core_distance(cfg);
        const double mt = max_thickness(1.0);
        const double closed_min = 1.0 / (2.0 * std::sqrt(2.5 + kSqrt2));
        const double closed_max = 1.0 / (4.0 * std::sqrt(5.0 + 2.0 * kSqrt2));
        const bool pass = std::fabs(mc - 0.25272446) < 1e-6 && std::fabs(mc - closed_min) < 1e-9 &&
                          std::fabs(mt - 0.08935136) < 1e-6 && std::fabs(mt - closed_max) < 1e-12 &&
                          std::fabs(mt - mc / (2.0 * kSqrt2)) < 1e-12;
        const double dt = now() - t0;
        report(1, pass && dt < 1.0, dt, "four-way closed forms, tol 1e-6 / identity 1e-12");
    }

    // 2: four-way certification
    {
        const double t0 = now();
        const VerificationReport rep = verify_fourway(build_fourway(1.0, 0.08));
        bool pass = all_prefixed_pass(rep, "fourway.disjoint.") &&
                    all_prefixed_pass(rep, "fourway.hopf.");
        const CheckRecord* cyl = rep.find("fourway.cylinder_bound");
        pass = pass && cyl && cyl->pass && std::fabs(cyl->margin - 0.02645029) < 1e-6;
        for (const CheckRecord& c : rep.checks)
            if (c.name.rfind("fourway.hopf.", 0) == 0 && c.margin >= 1e-6) pass = false;
        const double dt = now() - t0;
        report(2, pass && dt < 1.0, dt, "R=1 r=0.08: 6 disjoint, cylinder margin, 6 Hopf, residual < 1e-6");
    }

    // 3: parameter arithmetic
    {
        const double t0 = now();
        bool pass = std::fabs(solve_k_for_m(32) - 1.0 / (6.0 * kSqrt2)) < 1e-12;
        pass = pass && kbound_satisfied(1.0, 0.08, 0.013);
        pass = pass && !kbound_satisfied(1.0, 0.08, 1.0 / (6.0 * kSqrt2));
        int m = 16;
        while (!kbound_satisfied(1.0, 0.08, solve_k_for_m(m))) m += 16;
        pass = pass && m == 288 && std::fabs(solve_k_for_m(288) - 0.013094) < 1e-5;
        const double dt = now() - t0;
        report(3, pass && dt < 0.1, dt, "k(32)=1/(6*sqrt2), kbound cases, smallest m=288");
    }

    // 4: full chain certification at m=288
    {
        const double t0 = now();
        const Chain chain = build_chain(make_chain_params(1.0, 0.08, 288));
        const VerificationReport rep = verify_chain(chain, true);
        bool pass = rep.overall_pass();

        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> pick(1, 288);
        const int half = 144;
        auto next_in_cycle = [half](int j) {
            return j <= half ? (j % half) + 1 : half + ((j - half) % half) + 1;
        };
        auto origin4 = [half](int j) { return j == 1 || j == half || j == half + 1 || j == 288; };
        int sampled = 0;
        while (sampled < 1000) {
            const int a = pick(rng), b = pick(rng);
            if (a == b || next_in_cycle(a) == b || next_in_cycle(b) == a) continue;
            if (origin4(a) && origin4(b)) continue;
            const auto [ea, xa] = entry_exit_cores(chain, a);
            const auto [eb, xb] = entry_exit_cores(chain, b);
            if (gauss_linking_number(ea, eb).lk != 0 || gauss_linking_number(xa, xb).lk != 0 ||
                gauss_linking_number(ea, xb).lk != 0 || gauss_linking_number(xa, eb).lk != 0)
                pass = false;
            ++sampled;
        }
        pass = pass && check_level1_symmetry(chain);
        const double dt = now() - t0;
        report(4, pass && dt < 60.0, dt,
               "m=288: disjoint, contained, 288 consecutive Hopf, companions/1000 sampled unlinked, "
               "origin four-way, iota1 pairing");
    }

    // 5: chain linking at m=32, deterministic outcomes
    {
        const double t0 = now();
        const Chain chain = build_chain(make_chain_params(1.0, 0.08, 32));
        const VerificationReport rep = verify_chain(chain, true);
        bool pass = rep.find("chain.consecutive_hopf")->pass &&
                    rep.find("chain.origin_fourway")->pass && check_level1_symmetry(chain);
        const std::string s1 = rep.serialize();
        const std::string s2 = verify_chain(chain, true).serialize();
        const std::string s3 = verify_chain(build_chain(make_chain_params(1.0, 0.08, 32)), true).serialize();
        pass = pass && s1 == s2 && s1 == s3;
        const double dt = now() - t0;
        report(5, pass && dt < 10.0, dt,
               "m=32: Hopf pattern, origin four-way, iota1; outcomes identical across 3 runs");
    }

    // 6: oracle equivalence
    {
        const double t0 = now();
        bool pass = true;
        std::mt19937 rng(606);
        std::uniform_real_distribution<double> ang(0.0, 6.28);
        std::uniform_real_distribution<double> sc(0.5, 2.0);
        std::uniform_real_distribution<double> tr(-4.0, 4.0);
        int instances = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const Vec3 axis = Vec3{tr(rng), tr(rng), tr(rng) + 9.0}.normalized();
            const Similarity s{sc(rng), Mat3::rotation(axis, ang(rng)),
                               Vec3{tr(rng), tr(rng), tr(rng)}};
            const PolyLoop a = apply_similarity(s, square_a());
            const PolyLoop b = apply_similarity(s, thread_b());
            const PolyLoop c = apply_similarity(s, far_c());
            const PlanarDisk d = canonical_filling_disk(a);

            const int g1 = gauss_linking_number(a, b).lk;
            if (g1 != crossing_linking_number_auto(a, b).lk || std::abs(g1) != 1) pass = false;
            if (signed_piercing_count(disk_piercings(d, b)) != g1) pass = false;
            ++instances;

            const int g0 = gauss_linking_number(a, c).lk;
            if (g0 != crossing_linking_number_auto(a, c).lk || g0 != 0) pass = false;
            if (signed_piercing_count(disk_piercings(d, c)) != 0) pass = false;
            ++instances;
        }
        pass = pass && instances >= 100;
        const double dt = now() - t0;
        report(6, pass && dt < 5.0, dt,
               "Gauss == crossing == signed piercings on 120 randomized Hopf/unlink instances");
    }

    // 7: defining-sequence laws at m=32, depth 2
    {
        const double t0 = now();
        const Chain chain = build_chain(make_chain_params(1.0, 0.08, 32));
        const auto level2 = expand_level(chain, 2);
        bool pass = level2.size() == 1024;

        const double want = chain.params.k * chain.params.k *
                            make_canonical_double_torus(1.0, 0.08).diameter();
        for (const Component& c : level2)
            if (std::fabs(c.solid.diameter() - want) > 1e-9 * want) pass = false;

        // nesting equals the similarity-invariant prediction: X_{a,b} in
        // X_{1,a} exactly when X_{1,b} in X0 (at this k some b fail both)
        const DoubleTorus x0 = make_canonical_double_torus(1.0, 0.08);
        std::vector<bool> level1_in(33, false);
        for (int b = 1; b <= 32; ++b)
            level1_in[static_cast<std::size_t>(b)] =
                contains_solid(x0, chain.components[static_cast<std::size_t>(b - 1)]);
        for (const Component& c : level2) {
            const int a = c.address.word[0], b = c.address.word[1];
            const Component parent = component(chain, Address{{a}});
            if (contains_solid(parent.solid, c.solid) != level1_in[static_cast<std::size_t>(b)])
                pass = false;
        }
        const double dt = now() - t0;
        report(7, pass && dt < 30.0, dt,
               "1024 level-2 components, diameter law 1e-9, nesting matches similarity prediction");
    }

    // 8: dynamics skeleton
    {
        const double t0 = now();
        const Chain chain = build_chain(make_chain_params(1.0, 0.08, 32));
        const Vec3 right_hole = canonical_hole_center(1.0, true);
        const Vec3 near_hole = canonical_hole_center(1.0, false);
        bool pass = membership(chain, right_hole, 12).escape_level == 0 &&
                    !membership(chain, right_hole, 12).contained;
        pass = pass && membership(chain, chain.maps[0](near_hole), 12).escape_level == 1;
        const MembershipResult f1 = membership(chain, map_fixed_point(chain.maps[0]), 12);
        const MembershipResult f17 = membership(chain, map_fixed_point(chain.maps[16]), 12);
        pass = pass && f1.contained && f1.depth_reached == 12 && f17.contained;
        pass = pass && escape_radius_model(4.0, 1, PowerMapParams{6}) == 4096.0;
        const double dt = now() - t0;
        report(8, pass && dt < 1.0, dt,
               "hole escapes at 0, phi1(hole) at 1, fixed points contained to 12, 4^6 = 4096");
    }

    // 9: similarity dimension
    {
        const double t0 = now();
        const bool pass =
            std::fabs(similarity_dimension(32, 1.0 / (6.0 * kSqrt2)) - 1.620760) < 1e-5;
        report(9, pass, now() - t0, "dim(32, 1/(6*sqrt2)) = 1.620760 +- 1e-5");
    }

    // 10: determinism and round-trip
    {
        const double t0 = now();
        const Chain chain = build_chain(make_chain_params(1.0, 0.08, 32));
        const std::string p1 = "/tmp/genus2_acc_a.scene", p2 = "/tmp/genus2_acc_b.scene";
        write_scene(chain, p1);
        write_scene(read_scene(p1), p2);
        std::string s1, s2;
        {
            std::FILE* f = std::fopen(p1.c_str(), "rb");
            char buf[4096];
            std::size_t n;
            while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) s1.append(buf, n);
            std::fclose(f);
            f = std::fopen(p2.c_str(), "rb");
            while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) s2.append(buf, n);
            std::fclose(f);
        }
        bool pass = !s1.empty() && s1 == s2;
        std::remove(p1.c_str());
        std::remove(p2.c_str());

        VerifyOptions opts;
        pass = pass && run_full_verification(chain, opts).serialize() ==
                           run_full_verification(chain, opts).serialize();

        const std::string obj = "/tmp/genus2_acc.obj";
        export_obj(chain, 1, obj);
        long v = 0, f = 0;
        {
            std::FILE* fp = std::fopen(obj.c_str(), "rb");
            std::string text;
            char buf[4096];
            std::size_t n;
            while ((n = std::fread(buf, 1, sizeof(buf), fp)) > 0) text.append(buf, n);
            std::fclose(fp);
            std::size_t pos = 0;
            while (pos < text.size()) {
                const std::size_t end = text.find('\n', pos);
                const std::string line = text.substr(pos, end - pos);
                if (line.rfind("v ", 0) == 0) ++v;
                if (line.rfind("f ", 0) == 0) ++f;
                pos = end == std::string::npos ? text.size() : end + 1;
            }
        }
        std::remove(obj.c_str());
        pass = pass && v == 2048 && f == 3072;
        report(10, pass, now() - t0,
               "scene round-trip bit-identical, report byte-identical, OBJ 2048 v / 3072 tris");
    }

    std::printf("acceptance %s\n", g_all ? "PASS" : "FAIL");
    return g_all ? 0 : 1;
}
