#include "genus2/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace genus2 {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

// --- Similarity ------------------------------------------------------------

Similarity::Similarity(double scale, const Mat3& rotation, const Vec3& translation)
    : scale_(scale), rotation_(rotation), translation_(translation) {
    require(std::isfinite(scale) && scale > 0.0, "similarity scale must be positive");
    require(translation.finite(), "similarity translation must be finite");
    require(rotation.orthonormality_residual() < kOrthoTol,
            "similarity rotation is not orthonormal");
    require(rotation.det() > 0.0, "similarity must be sense-preserving");
}

Similarity Similarity::rotation_about_line(const Vec3& center, const Vec3& axis, double angle) {
    const Mat3 rot = Mat3::rotation(axis, angle);
    // x -> R (x - c) + c
    return {1.0, rot, center - rot * center};
}

Similarity Similarity::inverse() const {
    const Mat3 rt = rotation_.transpose();
    return {1.0 / scale_, rt, rt * translation_ * (-1.0 / scale_)};
}

Similarity compose(const Similarity& s1, const Similarity& s2) {
    return {s1.scale() * s2.scale(), s1.rotation() * s2.rotation(),
            s1.rotation() * s2.translation() * s1.scale() + s1.translation()};
}

// --- Segment ---------------------------------------------------------------

Segment::Segment(const Vec3& a_, const Vec3& b_) : a(a_), b(b_) {
    require(a.finite() && b.finite(), "segment endpoints must be finite");
    require((b - a).norm() > 0.0, "segment endpoints must be distinct");
}

// --- Beam ------------------------------------------------------------------

Beam::Beam(const Vec3& center_, const std::array<Vec3, 3>& frame_,
           const std::array<double, 3>& half_extents_)
    : center(center_), frame(frame_), half_extents(half_extents_) {
    const Mat3 f = Mat3::from_rows(frame[0], frame[1], frame[2]);
    require(f.orthonormality_residual() < 10 * kOrthoTol, "beam frame is not orthonormal");
    for (double h : half_extents) require(std::isfinite(h) && h > 0.0, "beam half-extents must be positive");
}

bool Beam::contains(const Vec3& p, double tol) const {
    const Vec3 d = p - center;
    for (int i = 0; i < 3; ++i)
        if (std::fabs(d.dot(frame[static_cast<std::size_t>(i)])) > half_extents[static_cast<std::size_t>(i)] + tol)
            return false;
    return true;
}

std::array<Vec3, 8> Beam::corners() const {
    std::array<Vec3, 8> out;
    int idx = 0;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1})
                out[static_cast<std::size_t>(idx++)] = center + frame[0] * (sx * half_extents[0]) +
                                                      frame[1] * (sy * half_extents[1]) +
                                                      frame[2] * (sz * half_extents[2]);
    return out;
}

void Beam::aabb(Vec3& lo, Vec3& hi) const {
    Vec3 ext{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        const auto u = static_cast<std::size_t>(i);
        ext.x += std::fabs(frame[u].x) * half_extents[u];
        ext.y += std::fabs(frame[u].y) * half_extents[u];
        ext.z += std::fabs(frame[u].z) * half_extents[u];
    }
    lo = center - ext;
    hi = center + ext;
}

// --- SquareTorusFrame ------------------------------------------------------

SquareTorusFrame::SquareTorusFrame(const Vec3& center_, const Vec3& e1_, const Vec3& e2_,
                                   double R_, double r_)
    : center(center_), e1(e1_), e2(e2_), R(R_), r(r_) {
    require(std::isfinite(R) && std::isfinite(r) && r > 0.0 && r < R,
            "square torus requires 0 < r < R");
    const Mat3 f = Mat3::from_rows(e1, e2, e1.cross(e2));
    require(f.orthonormality_residual() < 10 * kOrthoTol, "torus frame is not orthonormal");
}

std::array<Vec3, 4> SquareTorusFrame::core_vertices() const {
    return {center - e1 * R + e2 * R, center + e1 * R + e2 * R, center + e1 * R - e2 * R,
            center - e1 * R - e2 * R};
}

std::array<Beam, 4> SquareTorusFrame::beams() const {
    const Vec3 n = normal();
    const std::array<Vec3, 3> f{e1, e2, n};
    return {Beam{center + e2 * R, f, {R + r, r, r}}, Beam{center - e2 * R, f, {R + r, r, r}},
            Beam{center + e1 * R, f, {r, R + r, r}}, Beam{center - e1 * R, f, {r, R + r, r}}};
}

// --- DoubleTorus -----------------------------------------------------------

DoubleTorus::DoubleTorus(const SquareTorusFrame& lobe1_, const SquareTorusFrame& lobe2_)
    : lobe1(lobe1_), lobe2(lobe2_) {
    require(std::fabs(lobe1.R - lobe2.R) <= kGeomTolRel * lobe1.R &&
                std::fabs(lobe1.r - lobe2.r) <= kGeomTolRel * lobe1.r,
            "double torus lobes must have equal R and r");
    const double tol = kGeomTolRel * lobe1.R;
    int shared = 0;
    for (const Vec3& a : lobe1.core_vertices())
        for (const Vec3& b : lobe2.core_vertices())
            if (distance(a, b) <= tol) ++shared;
    require(shared == 1, "double torus core squares must share exactly one vertex");
}

Vec3 DoubleTorus::shared_corner() const {
    const double tol = kGeomTolRel * lobe1.R;
    for (const Vec3& a : lobe1.core_vertices())
        for (const Vec3& b : lobe2.core_vertices())
            if (distance(a, b) <= tol) return (a + b) * 0.5;
    throw std::logic_error("double torus without shared corner");
}

std::array<Beam, 8> DoubleTorus::beams() const {
    const auto b1 = lobe1.beams();
    const auto b2 = lobe2.beams();
    return {b1[0], b1[1], b1[2], b1[3], b2[0], b2[1], b2[2], b2[3]};
}

void DoubleTorus::aabb(Vec3& lo, Vec3& hi) const {
    lo = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity()};
    hi = -lo;
    for (const Beam& b : beams()) {
        Vec3 blo, bhi;
        b.aabb(blo, bhi);
        lo = {std::min(lo.x, blo.x), std::min(lo.y, blo.y), std::min(lo.z, blo.z)};
        hi = {std::max(hi.x, bhi.x), std::max(hi.y, bhi.y), std::max(hi.z, bhi.z)};
    }
}

double DoubleTorus::diameter() const {
    double worst = 0.0;
    const auto bs = beams();
    std::vector<Vec3> pts;
    for (const Beam& b : bs)
        for (const Vec3& c : b.corners()) pts.push_back(c);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            worst = std::max(worst, distance(pts[i], pts[j]));
    return worst;
}

// --- PolyLoop --------------------------------------------------------------

PolyLoop::PolyLoop(std::vector<Vec3> vertices_) : vertices(std::move(vertices_)) {
    require(vertices.size() >= 3, "polyloop needs at least 3 vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        require(vertices[i].finite(), "polyloop vertices must be finite");
        require(distance(vertices[i], vertices[(i + 1) % vertices.size()]) > 0.0,
                "polyloop consecutive vertices must be distinct");
    }
}

Segment PolyLoop::segment(std::size_t i) const {
    return {vertices[i % vertices.size()], vertices[(i + 1) % vertices.size()]};
}

double PolyLoop::diameter() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            worst = std::max(worst, distance(vertices[i], vertices[j]));
    return worst;
}

PolyLoop PolyLoop::reversed() const {
    std::vector<Vec3> v(vertices.rbegin(), vertices.rend());
    return PolyLoop{std::move(v)};
}

double PolyLoop::self_clearance() const {
    const std::size_t n = vertices.size();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
            best = std::min(best, segment_distance(segment(i), segment(j)));
        }
    return best;
}

Vec3 PolyLoop::newell_normal() const {
    Vec3 n{0, 0, 0};
    const std::size_t count = vertices.size();
    for (std::size_t i = 0; i < count; ++i) {
        const Vec3& a = vertices[i];
        const Vec3& b = vertices[(i + 1) % count];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n;
}

Vec3 PolyLoop::centroid() const {
    Vec3 c{0, 0, 0};
    for (const Vec3& v : vertices) c += v;
    return c / static_cast<double>(vertices.size());
}

double PolyLoop::planarity_residual() const {
    const Vec3 n = newell_normal();
    if (n.norm() == 0.0) return std::numeric_limits<double>::infinity();
    const Vec3 u = n.normalized();
    const Vec3 c = centroid();
    double worst = 0.0;
    for (const Vec3& v : vertices) worst = std::max(worst, std::fabs((v - c).dot(u)));
    return worst;
}

// --- Canonical model -------------------------------------------------------

DoubleTorus make_canonical_double_torus(double R, double r) {
    require(std::isfinite(R) && R > 0.0, "R must be positive");
    require(std::isfinite(r) && r > 0.0 && r < R, "canonical double torus requires 0 < r < R");
    const double s = std::sqrt(2.0) / 2.0;
    const Vec3 e1{s, s, 0.0};
    const Vec3 e2{-s, s, 0.0};
    const double c = std::sqrt(2.0) * R;
    SquareTorusFrame right{{c, 0.0, 0.0}, e1, e2, R, r};
    SquareTorusFrame left{{-c, 0.0, 0.0}, e1, e2, R, r};
    return {right, left};
}

Vec3 canonical_hole_center(double R, bool right_lobe) {
    return {right_lobe ? std::sqrt(2.0) * R : -std::sqrt(2.0) * R, 0.0, 0.0};
}

// --- Similarity application ------------------------------------------------

Segment apply_similarity(const Similarity& s, const Segment& seg) {
    return {s(seg.a), s(seg.b)};
}

Beam apply_similarity(const Similarity& s, const Beam& b) {
    const Mat3& rot = s.rotation();
    return {s(b.center),
            {rot * b.frame[0], rot * b.frame[1], rot * b.frame[2]},
            {b.half_extents[0] * s.scale(), b.half_extents[1] * s.scale(),
             b.half_extents[2] * s.scale()}};
}

SquareTorusFrame apply_similarity(const Similarity& s, const SquareTorusFrame& f) {
    const Mat3& rot = s.rotation();
    return {s(f.center), rot * f.e1, rot * f.e2, f.R * s.scale(), f.r * s.scale()};
}

DoubleTorus apply_similarity(const Similarity& s, const DoubleTorus& d) {
    return {apply_similarity(s, d.lobe1), apply_similarity(s, d.lobe2)};
}

PolyLoop apply_similarity(const Similarity& s, const PolyLoop& p) {
    std::vector<Vec3> v;
    v.reserve(p.vertices.size());
    for (const Vec3& x : p.vertices) v.push_back(s(x));
    return PolyLoop{std::move(v)};
}

// --- Queries ---------------------------------------------------------------

std::pair<PolyLoop, PolyLoop> core_loops(const DoubleTorus& d) {
    const auto v1 = d.lobe1.core_vertices();
    const auto v2 = d.lobe2.core_vertices();
    return {PolyLoop{{v1[0], v1[1], v1[2], v1[3]}}, PolyLoop{{v2[0], v2[1], v2[2], v2[3]}}};
}

bool contains_point(const SquareTorusFrame& f, const Vec3& x) {
    const double tol = kBoundaryTolRel * f.R;
    for (const Beam& b : f.beams())
        if (b.contains(x, tol)) return true;
    return false;
}

bool contains_point(const DoubleTorus& d, const Vec3& x) {
    return contains_point(d.lobe1, x) || contains_point(d.lobe2, x);
}

double solid_distance(const DoubleTorus& d1, const DoubleTorus& d2) {
    double best = std::numeric_limits<double>::infinity();
    for (const Beam& a : d1.beams())
        for (const Beam& b : d2.beams()) {
            best = std::min(best, beam_distance(a, b));
            if (best == 0.0) return 0.0;
        }
    return best;
}

// --- Convex primitives -----------------------------------------------------

double point_segment_distance(const Vec3& p, const Segment& s) {
    const Vec3 d = s.b - s.a;
    double t = (p - s.a).dot(d) / d.norm2();
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, s.a + d * t);
}

double segment_distance(const Segment& s, const Segment& t) {
    // Standard clamped quadratic minimization (Eberly-style).
    const Vec3 d1 = s.b - s.a;
    const Vec3 d2 = t.b - t.a;
    const Vec3 r = s.a - t.a;
    const double a = d1.norm2();
    const double e = d2.norm2();
    const double f = d2.dot(r);
    const double c = d1.dot(r);
    const double b = d1.dot(d2);
    const double denom = a * e - b * b;

    double u;  // parameter on s
    if (denom > 1e-14 * a * e) {
        u = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
    } else {
        u = 0.0;  // nearly parallel
    }
    double v = (b * u + f) / e;
    if (v < 0.0) {
        v = 0.0;
        u = std::clamp(-c / a, 0.0, 1.0);
    } else if (v > 1.0) {
        v = 1.0;
        u = std::clamp((b - c) / a, 0.0, 1.0);
    }
    return distance(s.a + d1 * u, t.a + d2 * v);
}

namespace {

/// Planar rectangle in 3D: center, two orthonormal in-plane axes, half sizes.
struct Rect {
    Vec3 center;
    Vec3 u;
    Vec3 v;
    double hu;
    double hv;

    std::array<Vec3, 4> corners() const {
        return {center + u * hu + v * hv, center - u * hu + v * hv, center - u * hu - v * hv,
                center + u * hu - v * hv};
    }
};

double point_rect_distance(const Vec3& p, const Rect& r) {
    const Vec3 d = p - r.center;
    const double cu = std::clamp(d.dot(r.u), -r.hu, r.hu);
    const double cv = std::clamp(d.dot(r.v), -r.hv, r.hv);
    return distance(p, r.center + r.u * cu + r.v * cv);
}

double rect_rect_distance(const Rect& a, const Rect& b) {
    double best = std::numeric_limits<double>::infinity();
    const auto ca = a.corners();
    const auto cb = b.corners();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            best = std::min(best, segment_distance(Segment{ca[static_cast<std::size_t>(i)],
                                                           ca[static_cast<std::size_t>((i + 1) % 4)]},
                                                   Segment{cb[static_cast<std::size_t>(j)],
                                                           cb[static_cast<std::size_t>((j + 1) % 4)]}));
    for (const Vec3& p : ca) best = std::min(best, point_rect_distance(p, b));
    for (const Vec3& p : cb) best = std::min(best, point_rect_distance(p, a));
    return best;
}

std::array<Rect, 6> beam_faces(const Beam& b) {
    std::array<Rect, 6> out{};
    int idx = 0;
    for (int axis = 0; axis < 3; ++axis) {
        const auto ax = static_cast<std::size_t>(axis);
        const auto a1 = static_cast<std::size_t>((axis + 1) % 3);
        const auto a2 = static_cast<std::size_t>((axis + 2) % 3);
        for (int sign : {-1, 1}) {
            out[static_cast<std::size_t>(idx++)] =
                Rect{b.center + b.frame[ax] * (sign * b.half_extents[ax]), b.frame[a1], b.frame[a2],
                     b.half_extents[a1], b.half_extents[a2]};
        }
    }
    return out;
}

double projected_radius(const Beam& b, const Vec3& axis) {
    return b.half_extents[0] * std::fabs(axis.dot(b.frame[0])) +
           b.half_extents[1] * std::fabs(axis.dot(b.frame[1])) +
           b.half_extents[2] * std::fabs(axis.dot(b.frame[2]));
}

}  // namespace

bool beams_overlap(const Beam& a, const Beam& b) {
    const Vec3 d = b.center - a.center;
    auto separated = [&](const Vec3& axis) {
        const double n2 = axis.norm2();
        if (n2 < 1e-24) return false;  // degenerate axis, skip
        const Vec3 u = axis / std::sqrt(n2);
        return std::fabs(d.dot(u)) > projected_radius(a, u) + projected_radius(b, u);
    };
    for (int i = 0; i < 3; ++i) {
        if (separated(a.frame[static_cast<std::size_t>(i)])) return false;
        if (separated(b.frame[static_cast<std::size_t>(i)])) return false;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (separated(a.frame[static_cast<std::size_t>(i)].cross(
                    b.frame[static_cast<std::size_t>(j)])))
                return false;
    return true;
}

double beam_distance(const Beam& a, const Beam& b) {
    if (beams_overlap(a, b)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    const auto fa = beam_faces(a);
    const auto fb = beam_faces(b);
    for (const Rect& ra : fa)
        for (const Rect& rb : fb) best = std::min(best, rect_rect_distance(ra, rb));
    return best;
}

// --- Containment by convex subtraction -------------------------------------

namespace {

struct HalfSpace {
    Vec3 n;    // unit outward normal
    double d;  // inside means n.x <= d
};

struct ConvexPiece {
    std::vector<HalfSpace> hs;
};

std::vector<HalfSpace> beam_halfspaces(const Beam& b) {
    std::vector<HalfSpace> out;
    out.reserve(6);
    for (int i = 0; i < 3; ++i) {
        const auto u = static_cast<std::size_t>(i);
        out.push_back({b.frame[u], b.frame[u].dot(b.center) + b.half_extents[u]});
        out.push_back({-b.frame[u], -b.frame[u].dot(b.center) + b.half_extents[u]});
    }
    return out;
}

/// True when the piece shrunk by `eps` still has a feasible point, i.e.
/// the piece contains a ball of radius ~eps. Pieces always include a
/// bounding beam, so the region is bounded and any nonempty shrunk region
/// has a vertex on three of its planes.
bool piece_has_ball(const ConvexPiece& p, double eps, double feas_tol) {
    const std::size_t n = p.hs.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Mat3 a = Mat3::from_rows(p.hs[i].n, p.hs[j].n, p.hs[k].n);
                const Vec3 rhs{p.hs[i].d - eps, p.hs[j].d - eps, p.hs[k].d - eps};
                Vec3 x;
                if (!solve3(a, rhs, x, 1e-9)) continue;
                bool ok = true;
                for (const HalfSpace& h : p.hs)
                    if (h.n.dot(x) > h.d - eps + feas_tol) {
                        ok = false;
                        break;
                    }
                if (ok) return true;
            }
    return false;
}

/// Splits `piece` against a beam: returns the parts outside the beam;
/// the part inside is covered and dropped.
void subtract_beam(const ConvexPiece& piece, const std::vector<HalfSpace>& beam_hs, double eps,
                   double feas_tol, std::vector<ConvexPiece>& out) {
    ConvexPiece remaining = piece;
    for (const HalfSpace& face : beam_hs) {
        ConvexPiece outside = remaining;
        outside.hs.push_back({-face.n, -face.d});
        if (piece_has_ball(outside, eps, feas_tol)) out.push_back(std::move(outside));
        remaining.hs.push_back(face);
    }
}

bool aabbs_overlap(const Vec3& lo1, const Vec3& hi1, const Vec3& lo2, const Vec3& hi2,
                   double margin) {
    return lo1.x <= hi2.x + margin && lo2.x <= hi1.x + margin && lo1.y <= hi2.y + margin &&
           lo2.y <= hi1.y + margin && lo1.z <= hi2.z + margin && lo2.z <= hi1.z + margin;
}

}  // namespace

bool contains_solid(const DoubleTorus& outer, const DoubleTorus& inner) {
    const double eps = kGeomTolRel * outer.R();
    const double feas_tol = kBoundaryTolRel * outer.R();
    const auto outer_beams = outer.beams();
    std::array<std::pair<Vec3, Vec3>, 8> outer_boxes;
    for (std::size_t i = 0; i < 8; ++i) outer_beams[i].aabb(outer_boxes[i].first, outer_boxes[i].second);

    for (const Beam& ib : inner.beams()) {
        Vec3 ilo, ihi;
        ib.aabb(ilo, ihi);

        // Quick accept: whole beam inside a single outer beam.
        bool accepted = false;
        const auto corners = ib.corners();
        for (const Beam& ob : outer_beams) {
            bool all = true;
            for (const Vec3& c : corners)
                if (!ob.contains(c, feas_tol)) {
                    all = false;
                    break;
                }
            if (all) {
                accepted = true;
                break;
            }
        }
        if (accepted) continue;

        std::vector<ConvexPiece> pieces{ConvexPiece{beam_halfspaces(ib)}};
        for (std::size_t o = 0; o < 8 && !pieces.empty(); ++o) {
            if (!aabbs_overlap(ilo, ihi, outer_boxes[o].first, outer_boxes[o].second, eps)) continue;
            const auto ohs = beam_halfspaces(outer_beams[o]);
            std::vector<ConvexPiece> next;
            for (const ConvexPiece& p : pieces) subtract_beam(p, ohs, eps, feas_tol, next);
            pieces = std::move(next);
        }
        if (!pieces.empty()) return false;
    }
    return true;
}

double corner_depth(const DoubleTorus& outer, const DoubleTorus& inner) {
    const auto outer_beams = outer.beams();
    double worst = std::numeric_limits<double>::infinity();
    for (const Beam& ib : inner.beams())
        for (const Vec3& c : ib.corners()) {
            double depth = -std::numeric_limits<double>::infinity();
            for (const Beam& ob : outer_beams) {
                double slack = std::numeric_limits<double>::infinity();
                const Vec3 d = c - ob.center;
                for (int i = 0; i < 3; ++i) {
                    const auto u = static_cast<std::size_t>(i);
                    slack = std::min(slack, ob.half_extents[u] - std::fabs(d.dot(ob.frame[u])));
                }
                depth = std::max(depth, slack);
            }
            worst = std::min(worst, depth);
        }
    return worst;
}

bool same_solid(const DoubleTorus& a, const DoubleTorus& b, double tol) {
    const auto ba = a.beams();
    const auto bb = b.beams();
    std::array<bool, 8> used{};
    for (const Beam& beam_a : ba) {
        const auto ca = beam_a.corners();
        bool matched = false;
        for (std::size_t j = 0; j < 8 && !matched; ++j) {
            if (used[j]) continue;
            const auto cb = bb[j].corners();
            bool all = true;
            for (const Vec3& p : ca) {
                bool found = false;
                for (const Vec3& q : cb)
                    if (distance(p, q) <= tol) {
                        found = true;
                        break;
                    }
                if (!found) {
                    all = false;
                    break;
                }
            }
            if (all) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

}  // namespace genus2
