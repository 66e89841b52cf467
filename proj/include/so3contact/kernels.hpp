#pragma once

// Batched orbit-type kernels over structure-of-arrays point blocks.
//
// For each point with acted coordinates x, y in R^3 the kernels compute
//   moment = scale * (y cross x)   -- <mu, A> = scale * x^T A y for A in so(3)
//   sigma_min = |x cross y| / sigma_max
// where sigma_min <= sigma_max are the singular values of the 2x3 matrix with
// rows x and y. sigma_min is formed from the cross product rather than from
// the Gram eigenvalues so that it stays accurate near rank one.
//
// A scalar reference and an AVX2 variant are provided; `run_orbit_kernel`
// picks one at runtime. Both must agree to rounding.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace so3contact::kernels {

struct OrbitBlock {
  std::vector<double> x1, x2, x3, y1, y2, y3;

  std::size_t size() const { return x1.size(); }
  void resize(std::size_t n);
};

struct OrbitResult {
  std::vector<double> mu_x, mu_y, mu_z, sigma_min;

  std::size_t size() const { return mu_x.size(); }
  void resize(std::size_t n);
};

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best variant supported by the running CPU (and compiled in).
Isa detect_isa();
bool isa_available(Isa isa);

void orbit_kernel_scalar(const OrbitBlock& in, double scale, OrbitResult& out);
void orbit_kernel_avx2(const OrbitBlock& in, double scale, OrbitResult& out);

/// Dispatches to the detected variant; `out` is resized to match `in`.
void run_orbit_kernel(const OrbitBlock& in, double scale, OrbitResult& out);
void run_orbit_kernel(Isa isa, const OrbitBlock& in, double scale, OrbitResult& out);

}  // namespace so3contact::kernels
