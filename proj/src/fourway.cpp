#include "genus2/fourway.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "genus2/errors.hpp"
#include "genus2/linking.hpp"

namespace genus2 {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ProtoTorus {
    Vec3 center;
    Vec3 diag;       // unit direction of the in-plane diagonal (before tilt)
    Vec3 tilt_axis;  // rotation axis
    double angle;
    double upper_vertex_sign;  // which diagonal vertex the upper segment starts at
};

double torus_pair_distance(const SquareTorusFrame& a, const SquareTorusFrame& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const Beam& ba : a.beams())
        for (const Beam& bb : b.beams()) {
            best = std::min(best, beam_distance(ba, bb));
            if (best == 0.0) return 0.0;
        }
    return best;
}

}  // namespace

FourWayConfig build_fourway(double R, double r) {
    if (!(R > 0.0) || !(r > 0.0) || !(r < R)) throw std::invalid_argument("build_fourway: need 0 < r < R");

    const double q = std::sqrt(2.0) * R / 4.0;
    const Vec3 ex{1, 0, 0};
    const Vec3 ey{0, 1, 0};
    const Vec3 ez{0, 0, 1};

    // Tilt senses are calibrated to the reference vector equations of the
    // four upper segments; the x2-axis tilts use the opposite handedness.
    const std::array<ProtoTorus, 4> protos{
        ProtoTorus{{-q, 0, 0}, ex, ex, -3.0 * kPi / 8.0, +1.0},   // T1: (3q,0,0),(-5q,0,0)
        ProtoTorus{{q, 0, 0}, ex, ex, 3.0 * kPi / 8.0, +1.0},     // T2: (5q,0,0),(-3q,0,0)
        ProtoTorus{{0, -3 * q, 0}, ey, ey, -kPi / 8.0, +1.0},     // T3: (0,q,0),(0,-7q,0)
        ProtoTorus{{0, 3 * q, 0}, ey, ey, kPi / 8.0, -1.0},       // T4: (0,7q,0),(0,-q,0)
    };

    std::vector<SquareTorusFrame> tori;
    std::vector<PolyLoop> cores;
    std::vector<Segment> uppers;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (const ProtoTorus& p : protos) {
        const Vec3 e1 = (p.diag + ez) * inv_sqrt2;
        const Vec3 e2 = (p.diag - ez) * inv_sqrt2;
        const SquareTorusFrame flat{p.center, e1, e2, R, r};
        const Similarity rot = Similarity::rotation_about_line({0, 0, 0}, p.tilt_axis, p.angle);
        const SquareTorusFrame tilted = apply_similarity(rot, flat);
        tori.push_back(tilted);
        const auto cv = tilted.core_vertices();
        cores.push_back(PolyLoop{{cv[0], cv[1], cv[2], cv[3]}});

        const Vec3 start = p.center + (e1 + e2) * (R * p.upper_vertex_sign);
        const Vec3 top = p.center + (e1 - e2) * R;  // apex, x3 = sqrt2 R before tilt
        uppers.emplace_back(rot(start), rot(top));
    }

    return FourWayConfig{R, r,
                         {tori[0], tori[1], tori[2], tori[3]},
                         {cores[0], cores[1], cores[2], cores[3]},
                         {uppers[0], uppers[1], uppers[2], uppers[3]}};
}

double min_core_distance(const FourWayConfig& cfg) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            best = std::min(best, segment_distance(cfg.upper_segments[static_cast<std::size_t>(i)],
                                                   cfg.upper_segments[static_cast<std::size_t>(j)]));
    return best;
}

double max_thickness(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("max_thickness: R must be positive");
    return R / (4.0 * std::sqrt(5.0 + 2.0 * std::sqrt(2.0)));
}

VerificationReport verify_fourway(const FourWayConfig& cfg) {
    VerificationReport rep;

    const double cyl_margin = min_core_distance(cfg) - 2.0 * std::sqrt(2.0) * cfg.r;
    rep.add("fourway.cylinder_bound", cyl_margin > 0.0, cyl_margin);

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const std::string pair = "T" + std::to_string(i + 1) + "T" + std::to_string(j + 1);
            const double dist = torus_pair_distance(cfg.tori[static_cast<std::size_t>(i)],
                                                    cfg.tori[static_cast<std::size_t>(j)]);
            rep.add("fourway.disjoint." + pair, dist > 0.0, dist);
        }

    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const std::string pair = "T" + std::to_string(i + 1) + "T" + std::to_string(j + 1);
            bool hopf = false;
            double residual = 0.0;
            std::string detail;
            try {
                const LinkReport lk = gauss_linking_number(cfg.cores[static_cast<std::size_t>(i)],
                                                           cfg.cores[static_cast<std::size_t>(j)]);
                residual = lk.gauss_residual;
                hopf = is_hopf_pair(cfg.cores[static_cast<std::size_t>(i)],
                                    cfg.cores[static_cast<std::size_t>(j)]);
                detail = "lk=" + std::to_string(lk.lk);
            } catch (const LoopsTooCloseError&) {
                detail = "loops_too_close";
            }
            rep.add("fourway.hopf." + pair, hopf, residual, detail);
        }

    return rep;
}

}  // namespace genus2
