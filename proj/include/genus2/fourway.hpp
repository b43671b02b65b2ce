#pragma once

#include <array>

#include "genus2/geometry.hpp"
#include "genus2/report.hpp"

namespace genus2 {

/// The four-way linking configuration: four square tori whose cores meet
/// the x1x2-plane along their diagonals, tilted so that every pair forms
/// a Hopf link.
struct FourWayConfig {
    double R;
    double r;
    std::array<SquareTorusFrame, 4> tori;
    std::array<PolyLoop, 4> cores;
    std::array<Segment, 4> upper_segments;  // the core sides with x3 >= 0 used for the distance bound
};

/// Builds the configuration: diagonal intersection points on the axes,
/// then tilts by -3pi/8, 3pi/8 about x1 (T1, T2) and by pi/8, -pi/8
/// about x2 (T3, T4). Rotation senses are fixed so the upper core
/// segments reproduce the reference vector equations.
FourWayConfig build_fourway(double R, double r);

/// Minimum over the six pairwise distances of the upper core segments.
double min_core_distance(const FourWayConfig& cfg);

/// Largest admissible thickness R / (4 sqrt(5 + 2 sqrt 2)); equals
/// min_core_distance / (2 sqrt 2).
double max_thickness(double R);

/// Certifies the configuration: conservative cylinder bound, exact
/// beam-level disjointness of all six torus pairs, and Hopf linking of
/// all six core pairs. Failures are recorded, not thrown.
VerificationReport verify_fourway(const FourWayConfig& cfg);

}  // namespace genus2
