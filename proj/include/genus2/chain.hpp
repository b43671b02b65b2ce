#pragma once

#include <utility>
#include <vector>

#include "genus2/geometry.hpp"
#include "genus2/report.hpp"

namespace genus2 {

/// Parameters of the level-1 chain. m = 8n double tori of scale k wrap
/// once around the figure-eight core of X0: 4n around each lobe.
struct ChainParams {
    double R;
    double r;
    double k;
    int m;
    int n;  // m / 8
};

/// Which point the quarter-turn rho1 rotates about. The hole center
/// (sqrt2 R, 0, 0) is the self-consistent choice; `kLiteral` keeps the
/// point (2 sqrt2 R, 0, 0) for comparison runs.
enum class Rho1Center { kHoleCenter, kLiteral };

struct Chain {
    ChainParams params;
    std::vector<Similarity> maps;        // maps[j-1] = phi_j, all of scale k
    std::vector<DoubleTorus> components;  // components[j-1] = phi_j(X0)
    Rho1Center rho1_center = Rho1Center::kHoleCenter;
};

/// k = 16 / (3 sqrt2 m). Throws std::invalid_argument unless m is a
/// positive multiple of 16.
double solve_k_for_m(int m);

/// The containment certificate 2 sqrt2 k (2R + r) < r: a scaled double
/// torus anchored on the core fits inside half the thickness.
bool kbound_satisfied(double R, double r, double k);

/// Validates and packs parameters. Pass k <= 0 to solve it from m.
/// Requires m a positive multiple of 16 and, when k is given,
/// m * 3 sqrt2 k = 16 within 1e-9 relative. The thickness bound of the
/// four-way configuration is reported by verification, not enforced here.
ChainParams make_chain_params(double R, double r, int m, double k = 0.0);

/// n+1 anchors on the core side from the origin toward (sqrt2 R, sqrt2 R, 0):
/// arclength sqrt2 kR/4, then spacing 3 sqrt2 kR. The last anchor lands
/// sqrt2 kR/4 past the far vertex.
std::vector<Vec3> anchor_points(const ChainParams& params);

/// (v_{i,1}, v_{i,2}) for the i-th torus on the first side, 1 <= i <= n.
/// v1 is the side direction; v2 alternates between the two tilted width
/// directions so consecutive tori link.
std::pair<Vec3, Vec3> orientation_vectors(int i);

/// Builds all m maps: tori 1..n sit on the first side (hole center at
/// p_i, far corner at p_{i+1}), batches n+1..4n are rho1-orbit images,
/// and 4n+1..8n wrap the left lobe as rho2 images of 1..4n in reversed
/// label order, so that iota1 pairs component j with m+1-j.
Chain build_chain(const ChainParams& params, Rho1Center rho1_center = Rho1Center::kHoleCenter);

/// Core squares of component j (1-based) in chain traversal order:
/// first = the square crossed when entering the component along its
/// lobe cycle, second = the one crossed when leaving.
std::pair<PolyLoop, PolyLoop> entry_exit_cores(const Chain& chain, int j);

/// The four core squares meeting at the origin (components 1, 4n, 4n+1,
/// 8n), which form the scaled four-way configuration.
std::vector<PolyLoop> origin_squares(const Chain& chain);

/// Certifies the chain: (a) pairwise solid disjointness, (b) optional
/// containment of every component in X0, (c) the Hopf pattern of
/// consecutive squares with companion and non-adjacent pairs unlinked,
/// (d) the six-pair four-way linking at the origin.
VerificationReport verify_chain(const Chain& chain, bool check_containment);

}  // namespace genus2
