#include "genus2/chain.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "genus2/errors.hpp"
#include "genus2/fourway.hpp"
#include "genus2/linking.hpp"

namespace genus2 {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);

void require_params(const ChainParams& p) {
    if (!(p.R > 0.0) || !(p.r > 0.0) || !(p.r < p.R))
        throw std::invalid_argument("chain: need 0 < r < R");
    if (p.m <= 0 || p.m % 16 != 0)
        throw std::invalid_argument("chain: m must be a positive multiple of 16");
    if (p.n * 8 != p.m) throw std::invalid_argument("chain: n must equal m/8");
    const double lhs = p.m * 3.0 * kSqrt2 * p.k;
    if (!(std::fabs(lhs - 16.0) <= 1e-9 * 16.0))
        throw std::invalid_argument("chain: k inconsistent with m (need m*3*sqrt2*k = 16)");
}

std::string pair_tag(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

// Distance lower bound from axis-aligned boxes; 0 when they overlap.
double aabb_gap(const Vec3& lo1, const Vec3& hi1, const Vec3& lo2, const Vec3& hi2) {
    double g2 = 0.0;
    for (int a = 0; a < 3; ++a) {
        const double g = std::max({lo1[a] - hi2[a], lo2[a] - hi1[a], 0.0});
        g2 += g * g;
    }
    return std::sqrt(g2);
}

void loop_aabb(const PolyLoop& loop, Vec3& lo, Vec3& hi) {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
    hi = -lo;
    for (const Vec3& v : loop.vertices) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
}

}  // namespace

double solve_k_for_m(int m) {
    if (m <= 0 || m % 16 != 0)
        throw std::invalid_argument("solve_k_for_m: m must be a positive multiple of 16");
    return 16.0 / (3.0 * kSqrt2 * m);
}

bool kbound_satisfied(double R, double r, double k) {
    if (!(R > 0.0) || !(r > 0.0) || !(k > 0.0))
        throw std::invalid_argument("kbound_satisfied: inputs must be positive");
    return 2.0 * kSqrt2 * k * (2.0 * R + r) < r;
}

ChainParams make_chain_params(double R, double r, int m, double k) {
    if (k <= 0.0) k = solve_k_for_m(m);
    ChainParams p{R, r, k, m, m / 8};
    require_params(p);
    return p;
}

std::vector<Vec3> anchor_points(const ChainParams& params) {
    require_params(params);
    if (std::fabs(3.0 * kSqrt2 * params.k * params.n - 2.0) > 1e-9)
        throw std::invalid_argument("anchor_points: anchors do not cover the side (3*sqrt2*k*n != 2)");
    const Vec3 u{1.0 / kSqrt2, 1.0 / kSqrt2, 0.0};
    const double step = 3.0 * kSqrt2 * params.k * params.R;
    const double start = kSqrt2 * params.k * params.R / 4.0;
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(params.n) + 1);
    for (int i = 0; i <= params.n; ++i) out.push_back(u * (start + i * step));
    return out;
}

std::pair<Vec3, Vec3> orientation_vectors(int i) {
    if (i < 1) throw std::invalid_argument("orientation_vectors: index must be >= 1");
    const Vec3 v1{1.0 / kSqrt2, 1.0 / kSqrt2, 0.0};
    Vec3 v2;
    if (i % 2 == 1) {
        const double a = std::sqrt(4.0 + 2.0 * kSqrt2) / 4.0;
        v2 = {a, -a, std::sqrt(2.0 - kSqrt2) / 2.0};
    } else {
        const double a = std::sqrt(4.0 - 2.0 * kSqrt2) / 4.0;
        v2 = {-a, a, std::sqrt(2.0 + kSqrt2) / 2.0};
    }
    return {v1, v2};
}

Chain build_chain(const ChainParams& params, Rho1Center rho1_center) {
    require_params(params);
    const int n = params.n;
    const int m = params.m;
    const double skR = kSqrt2 * params.k * params.R;

    const std::vector<Vec3> anchors = anchor_points(params);
    std::vector<Similarity> maps;
    maps.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= n; ++i) {
        const auto [v1, v2] = orientation_vectors(i);
        const Mat3 rot = Mat3::from_columns(v1, v2, v1.cross(v2));
        const Vec3 t = anchors[static_cast<std::size_t>(i - 1)] + v1 * skR;
        maps.emplace_back(params.k, rot, t);
    }

    const double c1 = (rho1_center == Rho1Center::kLiteral ? 2.0 : 1.0) * kSqrt2 * params.R;
    const Similarity rho1 = Similarity::rotation_about_line({c1, 0, 0}, {0, 0, 1}, -kPi / 2.0);
    for (int b = 1; b <= 3; ++b)
        for (int i = 0; i < n; ++i)
            maps.push_back(compose(rho1, maps[static_cast<std::size_t>((b - 1) * n + i)]));

    // Left lobe: rho2 images of the right lobe, labeled in reverse so the
    // left cycle starts at the origin and iota1 pairs j with m+1-j.
    const Similarity rho2 = Similarity::rotation_about_line({0, 0, 0}, {0, 0, 1}, kPi);
    for (int i = 1; i <= 4 * n; ++i)
        maps.push_back(compose(rho2, maps[static_cast<std::size_t>(4 * n - i)]));

    const DoubleTorus x0 = make_canonical_double_torus(params.R, params.r);
    std::vector<DoubleTorus> components;
    components.reserve(static_cast<std::size_t>(m));
    for (const Similarity& s : maps) components.push_back(apply_similarity(s, x0));

    return Chain{params, std::move(maps), std::move(components), rho1_center};
}

std::pair<PolyLoop, PolyLoop> entry_exit_cores(const Chain& chain, int j) {
    if (j < 1 || j > chain.params.m) throw std::invalid_argument("entry_exit_cores: index out of range");
    const auto [exit_core, entry_core] =
        core_loops(chain.components[static_cast<std::size_t>(j - 1)]);
    if (j <= chain.params.m / 2) return {entry_core, exit_core};
    return {exit_core, entry_core};
}

std::vector<PolyLoop> origin_squares(const Chain& chain) {
    const int half = chain.params.m / 2;
    return {entry_exit_cores(chain, 1).first, entry_exit_cores(chain, half).second,
            entry_exit_cores(chain, half + 1).first, entry_exit_cores(chain, chain.params.m).second};
}

VerificationReport verify_chain(const Chain& chain, bool check_containment) {
    VerificationReport rep;
    const int m = chain.params.m;
    const int half = m / 2;
    const std::size_t mm = static_cast<std::size_t>(m);

    std::vector<Vec3> lo(mm), hi(mm);
    for (std::size_t j = 0; j < mm; ++j) chain.components[j].aabb(lo[j], hi[j]);

    auto next_in_cycle = [half, m](int j) {
        return j <= half ? (j % half) + 1 : half + ((j - half) % half) + 1;
    };
    auto consecutive = [&](int a, int b) { return next_in_cycle(a) == b || next_in_cycle(b) == a; };
    const auto in_origin_four = [half, m](int j) {
        return j == 1 || j == half || j == half + 1 || j == m;
    };

    // (a) pairwise disjointness; bounding boxes prune far pairs and their
    // gap stands in for the exact distance as a reported lower bound.
    {
        double worst = std::numeric_limits<double>::infinity();
        std::string worst_pair;
        bool pass = true;
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b) {
                const std::size_t ia = static_cast<std::size_t>(a - 1);
                const std::size_t ib = static_cast<std::size_t>(b - 1);
                double d = aabb_gap(lo[ia], hi[ia], lo[ib], hi[ib]);
                if (d == 0.0) d = solid_distance(chain.components[ia], chain.components[ib]);
                if (d < worst) {
                    worst = d;
                    worst_pair = pair_tag(a, b);
                }
                if (d <= 0.0) pass = false;
            }
        rep.add("chain.disjoint", pass, worst, worst_pair);
    }

    if (check_containment) {
        const DoubleTorus x0 = make_canonical_double_torus(chain.params.R, chain.params.r);
        double worst = std::numeric_limits<double>::infinity();
        std::string worst_tag;
        bool pass = true;
        for (int j = 1; j <= m; ++j) {
            const DoubleTorus& comp = chain.components[static_cast<std::size_t>(j - 1)];
            const bool inside = contains_solid(x0, comp);
            const double depth = corner_depth(x0, comp);
            if (!inside) pass = false;
            if (depth < worst) {
                worst = depth;
                worst_tag = std::to_string(j);
            }
        }
        rep.add("chain.containment", pass, worst, worst_tag);
    }

    // (c) consecutive squares Hopf, companions unlinked.
    {
        bool pass = true;
        double worst_residual = 0.0;
        std::string bad;
        for (int j = 1; j <= m; ++j) {
            const int nj = next_in_cycle(j);
            const PolyLoop exit_j = entry_exit_cores(chain, j).second;
            const PolyLoop entry_n = entry_exit_cores(chain, nj).first;
            try {
                const LinkReport lr = gauss_linking_number(exit_j, entry_n);
                worst_residual = std::max(worst_residual, lr.gauss_residual);
                if (!is_hopf_pair(exit_j, entry_n)) {
                    pass = false;
                    if (bad.empty()) bad = pair_tag(j, nj) + " lk=" + std::to_string(lr.lk);
                }
            } catch (const LoopsTooCloseError&) {
                pass = false;
                if (bad.empty()) bad = pair_tag(j, nj) + " too_close";
            }
        }
        rep.add("chain.consecutive_hopf", pass, worst_residual, bad);
    }
    {
        bool pass = true;
        std::string bad;
        for (int j = 1; j <= m; ++j) {
            const int nj = next_in_cycle(j);
            const auto [entry_j, exit_j] = entry_exit_cores(chain, j);
            const auto [entry_n, exit_n] = entry_exit_cores(chain, nj);
            const int lk_exit = gauss_linking_number(exit_j, exit_n).lk;
            const int lk_entry = gauss_linking_number(entry_j, entry_n).lk;
            if (lk_exit != 0 || lk_entry != 0) {
                pass = false;
                if (bad.empty()) bad = pair_tag(j, nj);
            }
        }
        rep.add("chain.companion_unlinked", pass, 0.0, bad);
    }

    // Non-adjacent core pairs unlink. Box-separated loops are split by a
    // coordinate plane, so only near pairs need the Gauss integral. The
    // four origin components link across lobes and are handled in (d).
    {
        bool pass = true;
        std::string bad;
        long computed = 0;
        for (int a = 1; a <= m && pass; ++a)
            for (int b = a + 1; b <= m; ++b) {
                if (consecutive(a, b)) continue;
                if (in_origin_four(a) && in_origin_four(b)) continue;
                const std::size_t ia = static_cast<std::size_t>(a - 1);
                const std::size_t ib = static_cast<std::size_t>(b - 1);
                if (aabb_gap(lo[ia], hi[ia], lo[ib], hi[ib]) > 0.0) continue;
                const auto [ea, xa] = entry_exit_cores(chain, a);
                const auto [eb, xb] = entry_exit_cores(chain, b);
                for (const PolyLoop* la : {&ea, &xa})
                    for (const PolyLoop* lb : {&eb, &xb}) {
                        Vec3 la_lo, la_hi, lb_lo, lb_hi;
                        loop_aabb(*la, la_lo, la_hi);
                        loop_aabb(*lb, lb_lo, lb_hi);
                        if (aabb_gap(la_lo, la_hi, lb_lo, lb_hi) > 0.0) continue;
                        ++computed;
                        if (gauss_linking_number(*la, *lb).lk != 0) {
                            pass = false;
                            if (bad.empty()) bad = pair_tag(a, b);
                        }
                    }
                if (!pass) break;
            }
        rep.add("chain.nonadjacent_unlinked", pass, static_cast<double>(computed), bad);
    }

    // (d) four-way linking at the origin.
    {
        const std::vector<PolyLoop> sq = origin_squares(chain);
        bool pass = true;
        double worst_residual = 0.0;
        std::string bad;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                try {
                    const LinkReport lr = gauss_linking_number(sq[static_cast<std::size_t>(a)],
                                                               sq[static_cast<std::size_t>(b)]);
                    worst_residual = std::max(worst_residual, lr.gauss_residual);
                    if (std::abs(lr.lk) != 1) {
                        pass = false;
                        if (bad.empty()) bad = pair_tag(a, b) + " lk=" + std::to_string(lr.lk);
                    }
                } catch (const LoopsTooCloseError&) {
                    pass = false;
                    if (bad.empty()) bad = pair_tag(a, b) + " too_close";
                }
            }
        rep.add("chain.origin_fourway", pass, worst_residual, bad);
    }

    return rep;
}

}  // namespace genus2
