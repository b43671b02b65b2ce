#include "genus2/linking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "genus2/errors.hpp"

namespace genus2 {

namespace {

constexpr double kPi = 3.14159265358979323846;

double loop_clearance(const PolyLoop& a, const PolyLoop& b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            best = std::min(best, segment_distance(a.segment(i), b.segment(j)));
    return best;
}

/// Signed solid angle of the spherical triangle (u, v, w), unit inputs.
double spherical_triangle_area(const Vec3& u, const Vec3& v, const Vec3& w) {
    const double num = triple(u, v, w);
    const double den = 1.0 + u.dot(v) + v.dot(w) + w.dot(u);
    return 2.0 * std::atan2(num, den);
}

/// Contribution of one segment pair to 4*pi*lk: signed area of the
/// spherical quadrilateral traced by the Gauss map.
double segment_pair_area(const Vec3& a1, const Vec3& a2, const Vec3& b1, const Vec3& b2) {
    const Vec3 v00 = (a1 - b1).normalized();
    const Vec3 v10 = (a2 - b1).normalized();
    const Vec3 v11 = (a2 - b2).normalized();
    const Vec3 v01 = (a1 - b2).normalized();
    return spherical_triangle_area(v00, v10, v11) + spherical_triangle_area(v00, v11, v01);
}

}  // namespace

LinkReport gauss_linking_number(const PolyLoop& a, const PolyLoop& b) {
    const double tol = 1e-9 * std::max(a.diameter(), b.diameter());
    if (loop_clearance(a, b) <= tol)
        throw LoopsTooCloseError("loops too close: linking number undefined at contact");

    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Segment sa = a.segment(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Segment sb = b.segment(j);
            total += segment_pair_area(sa.a, sa.b, sb.a, sb.b);
        }
    }
    // Sign fixed to agree with the signed-crossing convention of the
    // projection oracle.
    const double raw = -total / (4.0 * kPi);
    const double rounded = std::round(raw);
    const double residual = std::fabs(raw - rounded);
    if (residual >= 1e-6)
        throw LoopsTooCloseError("Gauss sum does not round to an integer (residual " +
                                 std::to_string(residual) + ")");
    LinkReport rep;
    rep.lk = static_cast<int>(rounded);
    rep.gauss_residual = residual;
    rep.method = LinkMethod::gauss;
    return rep;
}

namespace {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    double norm() const { return std::hypot(x, y); }
};

double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

struct ProjectedLoop {
    std::vector<Vec2> pts;
    std::vector<double> depth;
};

ProjectedLoop project_loop(const PolyLoop& loop, const Vec3& u, const Vec3& v, const Vec3& w) {
    ProjectedLoop out;
    out.pts.reserve(loop.size());
    out.depth.reserve(loop.size());
    for (const Vec3& p : loop.vertices) {
        out.pts.push_back({p.dot(u), p.dot(v)});
        out.depth.push_back(p.dot(w));
    }
    return out;
}

}  // namespace

LinkReport crossing_linking_number(const PolyLoop& a, const PolyLoop& b, const Vec3& dir,
                                   int* crossings) {
    if (dir.norm() == 0.0) throw DegenerateDirectionError("zero projection direction");
    const Vec3 w = dir.normalized();
    // Any in-plane basis works; pick against the smallest component of w.
    Vec3 seed = std::fabs(w.x) <= std::fabs(w.y) && std::fabs(w.x) <= std::fabs(w.z)
                    ? Vec3{1, 0, 0}
                    : (std::fabs(w.y) <= std::fabs(w.z) ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
    const Vec3 u = w.cross(seed).normalized();
    const Vec3 v = w.cross(u);

    // Genericity: no segment of either loop parallel to dir.
    for (const PolyLoop* loop : {&a, &b})
        for (std::size_t i = 0; i < loop->size(); ++i) {
            const Vec3 d = loop->segment(i).direction();
            const double planar = std::sqrt(std::max(0.0, d.norm2() - d.dot(w) * d.dot(w)));
            if (planar <= 1e-9 * d.norm())
                throw DegenerateDirectionError("segment parallel to projection direction");
        }

    const ProjectedLoop pa = project_loop(a, u, v, w);
    const ProjectedLoop pb = project_loop(b, u, v, w);
    const double scale = std::max(a.diameter(), b.diameter());
    const double ztol = 1e-12 * scale;
    const double vtol = 1e-9 * scale;

    int total_sign = 0;
    int total_crossings = 0;
    const std::size_t na = pa.pts.size();
    const std::size_t nb = pb.pts.size();

    for (std::size_t ia = 0; ia < na; ++ia) {
        const Vec2 p0 = pa.pts[ia];
        const Vec2 p1 = pa.pts[(ia + 1) % na];
        const Vec2 da = p1 - p0;
        const double da_len = da.norm();
        const Vec2 normal{-da.y, da.x};

        // Side of the edge's supporting line for every vertex of b.
        std::vector<int> side(nb);
        std::vector<double> sdist(nb);
        for (std::size_t j = 0; j < nb; ++j) {
            const double s = cross2(da, pb.pts[j] - p0) / da_len;
            sdist[j] = s;
            side[j] = std::fabs(s) <= ztol ? 0 : (s > 0 ? 1 : -1);
        }
        (void)normal;

        // Walk b between consecutive nonzero-side vertices; bridge single
        // on-line vertices, reject on-line segments.
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < nb; ++j)
            if (side[j] != 0) nz.push_back(j);
        if (nz.size() < 2) {
            if (!nz.empty() || nb > 0) {
                // Whole loop on the line (or all but one vertex): hopeless.
                throw DegenerateDirectionError("projected loop collapses onto an edge line");
            }
        }
        for (std::size_t t = 0; t < nz.size(); ++t) {
            const std::size_t i0 = nz[t];
            const std::size_t i1 = nz[(t + 1) % nz.size()];
            if (side[i0] == side[i1]) continue;
            const std::size_t gap = (i1 + nb - i0) % nb;
            Vec2 cpt;
            double depth_b;
            if (gap == 1) {
                const double s0 = sdist[i0];
                const double s1 = sdist[i1];
                const double tt = s0 / (s0 - s1);
                cpt = {pb.pts[i0].x + (pb.pts[i1].x - pb.pts[i0].x) * tt,
                       pb.pts[i0].y + (pb.pts[i1].y - pb.pts[i0].y) * tt};
                depth_b = pb.depth[i0] + (pb.depth[i1] - pb.depth[i0]) * tt;
            } else if (gap == 2) {
                const std::size_t mid = (i0 + 1) % nb;
                cpt = pb.pts[mid];
                depth_b = pb.depth[mid];
            } else {
                throw DegenerateDirectionError("projected segment lies on an edge line");
            }
            const Vec2 db{pb.pts[i1].x - pb.pts[i0].x, pb.pts[i1].y - pb.pts[i0].y};

            // Crossing must fall strictly inside this edge of a.
            const double ta = dot2(cpt - p0, da) / (da_len * da_len);
            const double along = ta * da_len;
            if (along < -vtol || along > da_len + vtol) continue;
            if (along < vtol || along > da_len - vtol)
                throw DegenerateDirectionError("crossing at a projected vertex");

            const double depth_a = pa.depth[ia] + (pa.depth[(ia + 1) % na] - pa.depth[ia]) * ta;
            if (std::fabs(depth_b - depth_a) <= vtol)
                throw DegenerateDirectionError("coincident depths at a crossing");
            const double cr = cross2(da, db);
            if (std::fabs(cr) <= 1e-12 * da_len * db.norm())
                throw DegenerateDirectionError("parallel strands at a crossing");

            const bool a_over = depth_a > depth_b;
            const int sign = a_over ? (cr > 0 ? 1 : -1) : (cr < 0 ? 1 : -1);
            total_sign += sign;
            ++total_crossings;
        }
    }

    if (total_sign % 2 != 0)
        throw DegenerateDirectionError("odd signed crossing sum: missed crossing");
    LinkReport rep;
    rep.lk = total_sign / 2;
    rep.gauss_residual = 0.0;
    rep.method = LinkMethod::crossing;
    if (crossings) *crossings = total_crossings;
    return rep;
}

LinkReport crossing_linking_number_auto(const PolyLoop& a, const PolyLoop& b) {
    std::mt19937 rng(0x67656e32u);  // fixed seed for reproducibility
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Vec3 dir;
        if (attempt == 0) {
            dir = {0.0, 0.0, 1.0};
        } else {
            do {
                dir = {unit(rng), unit(rng), unit(rng)};
            } while (dir.norm() < 0.1);
        }
        try {
            return crossing_linking_number(a, b, dir);
        } catch (const DegenerateDirectionError&) {
            if (attempt == 15) throw;
        }
    }
    throw DegenerateDirectionError("no generic projection direction found");
}

bool is_hopf_pair(const PolyLoop& a, const PolyLoop& b) {
    const double tol_a = 1e-9 * a.diameter();
    const double tol_b = 1e-9 * b.diameter();
    if (a.planarity_residual() > tol_a || b.planarity_residual() > tol_b) return false;
    if (!a.is_simple(tol_a) || !b.is_simple(tol_b)) return false;
    const LinkReport rep = gauss_linking_number(a, b);
    return std::abs(rep.lk) == 1;
}

PlanarDisk canonical_filling_disk(const PolyLoop& square) {
    if (square.size() != 4) throw std::invalid_argument("filling disk requires a 4-gon");
    const double tol = 1e-9 * square.diameter();
    if (square.planarity_residual() > tol)
        throw std::invalid_argument("filling disk requires a planar square");
    if (!square.is_simple(tol)) throw std::invalid_argument("filling disk boundary must be simple");
    const Vec3 n = square.newell_normal().normalized();
    const Vec3 e1 = (square.vertices[1] - square.vertices[0]).normalized();
    const Vec3 e2 = n.cross(e1);
    return PlanarDisk{square.centroid(), e1, e2, square};
}

std::vector<Piercing> disk_piercings(const PlanarDisk& d, const PolyLoop& loop) {
    const Vec3 n = d.normal();
    const double scale = std::max(d.boundary.diameter(), loop.diameter());
    const double ztol = 1e-9 * scale;

    const std::size_t count = loop.size();
    std::vector<double> height(count);
    std::vector<int> side(count);
    for (std::size_t i = 0; i < count; ++i) {
        height[i] = (loop.vertices[i] - d.origin).dot(n);
        side[i] = std::fabs(height[i]) <= ztol ? 0 : (height[i] > 0 ? 1 : -1);
    }
    for (std::size_t i = 0; i < count; ++i)
        if (side[i] == 0 && side[(i + 1) % count] == 0)
            throw NonGenericPositionError("loop segment lies in the disk plane");

    // 2D boundary in the disk frame.
    std::vector<Vec2> poly;
    for (const Vec3& v : d.boundary.vertices)
        poly.push_back({(v - d.origin).dot(d.e1), (v - d.origin).dot(d.e2)});

    auto in_square = [&](const Vec2& p, double& edge_dist) {
        int pos = 0;
        int neg = 0;
        edge_dist = std::numeric_limits<double>::infinity();
        const std::size_t m = poly.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Vec2 a = poly[i];
            const Vec2 b = poly[(i + 1) % m];
            const Vec2 e = b - a;
            const double c = cross2(e, {p.x - a.x, p.y - a.y});
            if (c > 0) ++pos;
            if (c < 0) ++neg;
            // point-segment distance in 2D
            const double len2 = e.x * e.x + e.y * e.y;
            double t = ((p.x - a.x) * e.x + (p.y - a.y) * e.y) / len2;
            t = std::clamp(t, 0.0, 1.0);
            const Vec2 q{a.x + e.x * t, a.y + e.y * t};
            edge_dist = std::min(edge_dist, (Vec2{p.x - q.x, p.y - q.y}).norm());
        }
        return pos == 0 || neg == 0;
    };

    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < count; ++i)
        if (side[i] != 0) nz.push_back(i);
    if (nz.empty()) throw NonGenericPositionError("loop lies entirely in the disk plane");

    std::vector<Piercing> out;
    for (std::size_t t = 0; t < nz.size(); ++t) {
        const std::size_t i0 = nz[t];
        const std::size_t i1 = nz[(t + 1) % nz.size()];
        if (side[i0] == side[i1]) continue;
        const std::size_t gap = (i1 + count - i0) % count;
        Vec3 pt;
        if (gap == 1) {
            const double h0 = height[i0];
            const double h1 = height[i1];
            const double tt = h0 / (h0 - h1);
            pt = loop.vertices[i0] + (loop.vertices[i1] - loop.vertices[i0]) * tt;
        } else {
            pt = loop.vertices[(i0 + 1) % count];  // transversal passage through a vertex
        }
        const Vec2 p2{(pt - d.origin).dot(d.e1), (pt - d.origin).dot(d.e2)};
        double edge_dist = 0.0;
        const bool inside = in_square(p2, edge_dist);
        if (edge_dist <= ztol)
            throw NonGenericPositionError("piercing grazes the disk boundary");
        if (!inside) continue;
        out.push_back({pt, side[i1] > 0 ? 1 : -1});
    }
    return out;
}

int signed_piercing_count(const std::vector<Piercing>& piercings) {
    int sum = 0;
    for (const Piercing& p : piercings) sum += p.sign;
    return sum;
}

}  // namespace genus2
