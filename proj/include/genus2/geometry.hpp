#pragma once

#include <array>
#include <utility>
#include <vector>

#include "genus2/linalg.hpp"

namespace genus2 {

// Tolerances used throughout. Geometric comparisons scale with the
// relevant size coefficient; orthonormality is absolute.
inline constexpr double kOrthoTol = 1e-12;
inline constexpr double kGeomTolRel = 1e-9;
inline constexpr double kBoundaryTolRel = 1e-12;

/// Orientation-preserving conformal affine map x -> scale * rotation * x + translation.
class Similarity {
   public:
    Similarity() = default;
    Similarity(double scale, const Mat3& rotation, const Vec3& translation);

    static Similarity identity() { return {}; }
    static Similarity scaling(double s) { return {s, Mat3::identity(), {}}; }
    static Similarity translation_by(const Vec3& t) { return {1.0, Mat3::identity(), t}; }
    /// Rotation by `angle` about the axis line through `center` with unit
    /// direction `axis`, right-handed.
    static Similarity rotation_about_line(const Vec3& center, const Vec3& axis, double angle);

    double scale() const { return scale_; }
    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 operator()(const Vec3& x) const { return rotation_ * x * scale_ + translation_; }

    Similarity inverse() const;

   private:
    double scale_ = 1.0;
    Mat3 rotation_;
    Vec3 translation_;
};

/// (S1 o S2)(x) = S1(S2(x)).
Similarity compose(const Similarity& s1, const Similarity& s2);

struct Segment {
    Vec3 a;
    Vec3 b;

    Segment(const Vec3& a_, const Vec3& b_);
    Vec3 direction() const { return b - a; }
    double length() const { return direction().norm(); }
};

/// Closed oriented rectangular box: center, orthonormal frame, positive
/// half-extents along the frame axes.
struct Beam {
    Vec3 center;
    std::array<Vec3, 3> frame;
    std::array<double, 3> half_extents;

    Beam(const Vec3& center_, const std::array<Vec3, 3>& frame_,
         const std::array<double, 3>& half_extents_);

    bool contains(const Vec3& p, double tol) const;
    std::array<Vec3, 8> corners() const;
    void aabb(Vec3& lo, Vec3& hi) const;
};

/// Square solid torus: core square center +- R e1 +- R e2 thickened by r
/// in the infinity metric of its plane and by r along the plane normal.
/// Realized as the union of four beams overlapping at the corners.
struct SquareTorusFrame {
    Vec3 center;
    Vec3 e1;
    Vec3 e2;
    double R;
    double r;

    SquareTorusFrame(const Vec3& center_, const Vec3& e1_, const Vec3& e2_, double R_, double r_);

    Vec3 normal() const { return e1.cross(e2); }
    std::array<Vec3, 4> core_vertices() const;
    std::array<Beam, 4> beams() const;
};

/// Two square solid tori of equal R and r whose core squares share
/// exactly one vertex.
struct DoubleTorus {
    SquareTorusFrame lobe1;
    SquareTorusFrame lobe2;

    DoubleTorus(const SquareTorusFrame& lobe1_, const SquareTorusFrame& lobe2_);

    double R() const { return lobe1.R; }
    double r() const { return lobe1.r; }
    Vec3 shared_corner() const;
    std::array<Beam, 8> beams() const;
    void aabb(Vec3& lo, Vec3& hi) const;
    double diameter() const;
};

/// Closed simple polygon; the last vertex connects back to the first.
struct PolyLoop {
    std::vector<Vec3> vertices;

    explicit PolyLoop(std::vector<Vec3> vertices_);

    std::size_t size() const { return vertices.size(); }
    Segment segment(std::size_t i) const;
    double diameter() const;
    PolyLoop reversed() const;
    /// Min distance between non-adjacent edges, as a simplicity measure.
    double self_clearance() const;
    bool is_simple(double tol) const { return self_clearance() > tol; }
    /// Max vertex deviation from the best-fit plane (Newell normal).
    double planarity_residual() const;
    Vec3 newell_normal() const;
    Vec3 centroid() const;
};

// --- Canonical model -------------------------------------------------------

/// The canonical double torus: shared corner at the origin, length along
/// the x1-axis, core squares in the x1x2-plane. Right-lobe core vertices
/// (0,0,0), (sqrt2 R, +-sqrt2 R, 0), (2 sqrt2 R, 0, 0); left lobe is the
/// mirror through the origin.
DoubleTorus make_canonical_double_torus(double R, double r);

/// Hole centers of the canonical double torus at (+-sqrt2 R, 0, 0).
Vec3 canonical_hole_center(double R, bool right_lobe);

// --- Similarity application ------------------------------------------------

Segment apply_similarity(const Similarity& s, const Segment& seg);
Beam apply_similarity(const Similarity& s, const Beam& b);
SquareTorusFrame apply_similarity(const Similarity& s, const SquareTorusFrame& f);
DoubleTorus apply_similarity(const Similarity& s, const DoubleTorus& d);
PolyLoop apply_similarity(const Similarity& s, const PolyLoop& p);

// --- Queries ---------------------------------------------------------------

/// Core square curves (lobe1, lobe2); 4 vertices each, sharing one vertex.
std::pair<PolyLoop, PolyLoop> core_loops(const DoubleTorus& d);

/// Closed-solid membership; points within kBoundaryTolRel*R of a face
/// count as inside.
bool contains_point(const DoubleTorus& d, const Vec3& x);
bool contains_point(const SquareTorusFrame& f, const Vec3& x);

/// Exact distance between the two solids: min over beam pairs, 0 iff the
/// solids intersect.
double solid_distance(const DoubleTorus& d1, const DoubleTorus& d2);

/// Closed containment: inner subset of the closed outer solid, up to
/// slivers thinner than kGeomTolRel * outer.R().
bool contains_solid(const DoubleTorus& outer, const DoubleTorus& inner);

// --- Convex primitives -----------------------------------------------------

double segment_distance(const Segment& s, const Segment& t);
double point_segment_distance(const Vec3& p, const Segment& s);

/// Separating-axis test for two oriented boxes (exact up to roundoff).
bool beams_overlap(const Beam& a, const Beam& b);

/// Euclidean distance between two oriented boxes; 0 when they overlap.
double beam_distance(const Beam& a, const Beam& b);

/// Min over inner beam corners of the depth inside the outer solid
/// (max over beams of the min face slack). Positive when every corner is
/// strictly interior; used as a reported containment margin.
double corner_depth(const DoubleTorus& outer, const DoubleTorus& inner);

/// True when the two double tori, compared as unions of beams, coincide
/// within `tol` (each beam matched by corner sets).
bool same_solid(const DoubleTorus& a, const DoubleTorus& b, double tol);

}  // namespace genus2
