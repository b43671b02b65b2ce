#include "genus2/defining_sequence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "genus2/errors.hpp"

namespace genus2 {

std::string Address::to_string() const {
    if (word.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += '_';
        out += std::to_string(word[i]);
    }
    return out;
}

MembershipResult MembershipResult::contained_result(Address prefix, int depth) {
    MembershipResult out;
    out.contained = true;
    out.prefix = std::move(prefix);
    out.depth_reached = depth;
    return out;
}

MembershipResult MembershipResult::escaped_at(int level) {
    MembershipResult out;
    out.escape_level = level;
    return out;
}

double PowerMapParams::outer_radius() const { return std::pow(inner_radius, d); }

Component component(const Chain& chain, const Address& address) {
    Similarity map = Similarity::identity();
    for (int letter : address.word) {
        if (letter < 1 || letter > chain.params.m)
            throw std::invalid_argument("component: address letter out of range");
        map = compose(map, chain.maps[static_cast<std::size_t>(letter - 1)]);
    }
    const DoubleTorus x0 = make_canonical_double_torus(chain.params.R, chain.params.r);
    return Component{address, map, apply_similarity(map, x0)};
}

std::vector<Component> expand_level(const Chain& chain, int n, long budget) {
    if (n < 0) throw std::invalid_argument("expand_level: negative level");
    double count = 1.0;
    for (int i = 0; i < n; ++i) count *= chain.params.m;
    if (count > static_cast<double>(budget))
        throw BudgetExceededError("expand_level: m^n exceeds the component budget");

    const DoubleTorus x0 = make_canonical_double_torus(chain.params.R, chain.params.r);
    std::vector<Component> level{{Address{}, Similarity::identity(), x0}};
    for (int depth = 0; depth < n; ++depth) {
        std::vector<Component> next;
        next.reserve(level.size() * static_cast<std::size_t>(chain.params.m));
        for (const Component& parent : level)
            for (int j = 1; j <= chain.params.m; ++j) {
                Address addr = parent.address;
                addr.word.push_back(j);
                const Similarity map =
                    compose(parent.map, chain.maps[static_cast<std::size_t>(j - 1)]);
                next.push_back(Component{std::move(addr), map, apply_similarity(map, x0)});
            }
        level = std::move(next);
    }
    return level;
}

MembershipResult membership(const Chain& chain, const Vec3& x, int max_depth) {
    if (max_depth < 0) throw std::invalid_argument("membership: negative depth");
    const DoubleTorus x0 = make_canonical_double_torus(chain.params.R, chain.params.r);
    Vec3 cur = x;
    Address prefix;
    for (int level = 0;; ++level) {
        if (!contains_point(x0, cur)) return MembershipResult::escaped_at(level);
        if (level == max_depth) return MembershipResult::contained_result(prefix, max_depth);
        int child = 0;
        for (int j = 1; j <= chain.params.m; ++j)
            if (contains_point(chain.components[static_cast<std::size_t>(j - 1)], cur)) {
                child = j;
                break;
            }
        if (child == 0) return MembershipResult::escaped_at(level + 1);
        prefix.word.push_back(child);
        cur = chain.maps[static_cast<std::size_t>(child - 1)].inverse()(cur);
    }
}

double escape_radius_model(double s, int t, const PowerMapParams& p, bool* overflowed) {
    if (!(s > 1.0)) throw std::invalid_argument("escape_radius_model: need s > 1");
    if (t < 0 || p.d < 2) throw std::invalid_argument("escape_radius_model: need t >= 0, d >= 2");
    if (overflowed) *overflowed = false;
    const double exponent = std::pow(static_cast<double>(p.d), t);
    const double out = std::pow(s, exponent);
    if (!std::isfinite(out)) {
        if (overflowed) *overflowed = true;
        return std::numeric_limits<double>::infinity();
    }
    return out;
}

Vec3 involution_iota1(const Vec3& x) { return {-x.x, -x.y, x.z}; }

Vec3 involution_iota2(const Vec3& x) { return {x.x, -x.y, -x.z}; }

Vec3 winding_omega(const Vec3& x, int m) {
    if (m <= 0 || m % 4 != 0) throw std::invalid_argument("winding_omega: m must be a positive multiple of 4");
    const double radius = std::hypot(x.x, x.y);
    const double theta = std::atan2(x.y, x.x) * (m / 4);
    return {radius * std::cos(theta), radius * std::sin(theta), x.z};
}

bool check_level1_symmetry(const Chain& chain) {
    const Similarity iota1 = Similarity::rotation_about_line({0, 0, 0}, {0, 0, 1},
                                                             3.14159265358979323846);
    const double tol = 1e-9 * chain.params.R;
    const int m = chain.params.m;
    for (int j = 1; j <= m; ++j) {
        const DoubleTorus image =
            apply_similarity(iota1, chain.components[static_cast<std::size_t>(j - 1)]);
        if (!same_solid(image, chain.components[static_cast<std::size_t>(m - j)], tol)) return false;
    }
    return true;
}

double similarity_dimension(int m, double k) {
    if (m < 2 || !(k > 0.0) || !(k < 1.0))
        throw std::invalid_argument("similarity_dimension: need m >= 2 and 0 < k < 1");
    return std::log(static_cast<double>(m)) / std::log(1.0 / k);
}

Vec3 map_fixed_point(const Similarity& s) {
    Mat3 a = Mat3::identity();
    for (int rr = 0; rr < 3; ++rr)
        for (int cc = 0; cc < 3; ++cc) a(rr, cc) -= s.scale() * s.rotation()(rr, cc);
    Vec3 out;
    if (!solve3(a, s.translation(), out))
        throw std::invalid_argument("map_fixed_point: map is not a contraction");
    return out;
}

}  // namespace genus2
