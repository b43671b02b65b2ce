#include "genus2/linalg.hpp"

namespace genus2 {

bool solve3(const Mat3& a, const Vec3& b, Vec3& out, double eps) {
    const double d = a.det();
    // Scale-aware singularity guard.
    double rowscale = 1.0;
    for (int r = 0; r < 3; ++r) rowscale = std::max(rowscale, a.row(r).inf_norm());
    if (std::fabs(d) <= eps * rowscale * rowscale * rowscale) return false;

    Mat3 ax = a, ay = a, az = a;
    for (int r = 0; r < 3; ++r) {
        ax(r, 0) = b[r];
        ay(r, 1) = b[r];
        az(r, 2) = b[r];
    }
    out = {ax.det() / d, ay.det() / d, az.det() / d};
    return true;
}

}  // namespace genus2
