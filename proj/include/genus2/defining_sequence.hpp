#pragma once

#include <string>
#include <vector>

#include "genus2/chain.hpp"
#include "genus2/geometry.hpp"

namespace genus2 {

/// Index word of a component of the n-th stage: X_{w1} ⊃ X_{w1 w2} ⊃ ...
/// The empty word is X0 itself.
struct Address {
    std::vector<int> word;  // letters in 1..m

    std::size_t level() const { return word.size(); }
    std::string to_string() const;  // letters joined by '_', "-" for the empty word
};

struct Component {
    Address address;
    Similarity map;  // composition of the letter maps, scale k^level
    DoubleTorus solid;
};

/// Outcome of the inverse-map dynamics on a point: either it stayed
/// inside through `depth_reached` pullbacks (prefix records the visited
/// letters) or it left X0 after `escape_level` steps.
struct MembershipResult {
    bool contained = false;
    Address prefix;
    int depth_reached = 0;
    int escape_level = 0;

    static MembershipResult contained_result(Address prefix, int depth);
    static MembershipResult escaped_at(int level);
};

/// Radial power-map model outside X0: B0 = B(0, inner_radius) maps onto
/// B(0, inner_radius^d).
struct PowerMapParams {
    int d;
    double inner_radius = 4.0;

    double outer_radius() const;
};

Component component(const Chain& chain, const Address& address);

/// All m^n components of stage n in lexicographic address order.
/// Throws BudgetExceededError when m^n > budget.
std::vector<Component> expand_level(const Chain& chain, int n, long budget = 100000);

/// Pulls x back by the inverse letter maps (the dynamics f on X1),
/// lowest containing index first. A point of X0 \ X1 escapes one step
/// later.
MembershipResult membership(const Chain& chain, const Vec3& x, int max_depth);

/// Radius after t power-map steps: s^(d^t). Overflow is reported as
/// +infinity with *overflowed set.
double escape_radius_model(double s, int t, const PowerMapParams& p, bool* overflowed = nullptr);

/// The two ambient involutions: rotation by pi about the x3-axis and
/// about the x1-axis.
Vec3 involution_iota1(const Vec3& x);
Vec3 involution_iota2(const Vec3& x);

/// Degree m/4 winding about the x3-axis in cylindrical coordinates.
Vec3 winding_omega(const Vec3& x, int m);

/// True iff iota1 maps the level-1 component multiset to itself with the
/// pairing j <-> m+1-j, each match within 1e-9 * R.
bool check_level1_symmetry(const Chain& chain);

/// ln m / ln(1/k).
double similarity_dimension(int m, double k);

/// Fixed point of a contracting similarity, by solving (I - kQ)x = t.
Vec3 map_fixed_point(const Similarity& s);

}  // namespace genus2
