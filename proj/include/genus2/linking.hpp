#pragma once

#include <vector>

#include "genus2/geometry.hpp"

namespace genus2 {

enum class LinkMethod { gauss, crossing };

/// Integer link invariant with the numeric evidence behind it.
struct LinkReport {
    int lk = 0;
    double gauss_residual = 0.0;  // distance of the raw sum from the nearest integer
    LinkMethod method = LinkMethod::gauss;
};

/// Gauss linking number of two disjoint closed polygons, via the signed
/// spherical-quadrilateral area per segment pair (stable arctangent form).
/// Throws LoopsTooCloseError when the loops come within
/// 1e-9 * max(diam) of each other, and when the residual exceeds 1e-6.
LinkReport gauss_linking_number(const PolyLoop& a, const PolyLoop& b);

/// Linking number as half the signed crossing count of the projection
/// along `dir`. Throws DegenerateDirectionError for non-generic
/// directions. `crossings` (optional out) receives the raw crossing count.
LinkReport crossing_linking_number(const PolyLoop& a, const PolyLoop& b, const Vec3& dir,
                                   int* crossings = nullptr);

/// Crossing oracle with up to 16 deterministic pseudo-random retry
/// directions (fixed seed); rethrows the last degeneracy if all fail.
LinkReport crossing_linking_number_auto(const PolyLoop& a, const PolyLoop& b);

/// True iff both loops are planar simple polygons (hence unknots) with
/// |lk| = 1.
bool is_hopf_pair(const PolyLoop& a, const PolyLoop& b);

/// Filled planar square bounded by a square core curve.
struct PlanarDisk {
    Vec3 origin;  // a point of the plane
    Vec3 e1;      // orthonormal in-plane basis
    Vec3 e2;
    PolyLoop boundary;

    Vec3 normal() const { return e1.cross(e2); }
};

/// Canonical filling disk of a planar simple 4-gon. Throws
/// std::invalid_argument for non-planar input.
PlanarDisk canonical_filling_disk(const PolyLoop& square);

struct Piercing {
    Vec3 point;
    int sign;  // +1 along the disk normal, -1 against it
};

/// Transversal intersections of the loop with the closed disk. A loop
/// vertex lying exactly in the disk plane with its neighbors on opposite
/// sides counts as a single piercing at that vertex. Throws
/// NonGenericPositionError for in-plane segments or boundary-grazing hits.
std::vector<Piercing> disk_piercings(const PlanarDisk& d, const PolyLoop& loop);

int signed_piercing_count(const std::vector<Piercing>& piercings);

}  // namespace genus2
