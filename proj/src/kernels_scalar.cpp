#include <cmath>

#include "so3contact/kernels.hpp"

namespace so3contact::kernels {

void orbit_kernel_scalar(const OrbitBlock& in, double scale, OrbitResult& out) {
  const std::size_t n = in.size();
  out.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x1 = in.x1[i], x2 = in.x2[i], x3 = in.x3[i];
    const double y1 = in.y1[i], y2 = in.y2[i], y3 = in.y3[i];
    // y cross x
    const double cx = y2 * x3 - y3 * x2;
    const double cy = y3 * x1 - y1 * x3;
    const double cz = y1 * x2 - y2 * x1;
    out.mu_x[i] = scale * cx;
    out.mu_y[i] = scale * cy;
    out.mu_z[i] = scale * cz;

    const double xx = x1 * x1 + x2 * x2 + x3 * x3;
    const double yy = y1 * y1 + y2 * y2 + y3 * y3;
    const double xy = x1 * y1 + x2 * y2 + x3 * y3;
    const double diff = xx - yy;
    const double lambda_max = 0.5 * (xx + yy + std::sqrt(diff * diff + 4.0 * xy * xy));
    const double cross = std::sqrt(cx * cx + cy * cy + cz * cz);
    out.sigma_min[i] = lambda_max > 0.0 ? cross / std::sqrt(lambda_max) : 0.0;
  }
}

}  // namespace so3contact::kernels
