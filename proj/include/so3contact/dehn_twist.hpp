#pragma once

// The k-fold twist of T*S^2 built from a cut-off geodesic flow.
//
// A point of T*S^2 is (q, p) in R^3 x R^3 with |q| = 1 and q . p = 0. The
// twist rotates (q, p/|p|) by the angle f(|p|) = pi k (1 + rho_eps(|p|)),
// where rho_eps climbs smoothly from 0 at eps/2 to 1 at eps.

#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "so3contact/invariants.hpp"
#include "so3contact/torus_calculus.hpp"

namespace so3contact::twist {

inline constexpr double kDefaultEpsCap = 0.05;
inline constexpr double kNormalizationTol = 1e-12;  // relative, adaptive Gauss-Kronrod
inline constexpr double kPullbackStep = 1e-6;

struct CotangentPoint {
  Eigen::Vector3d q;
  Eigen::Vector3d p;
};

struct CotangentVector {
  Eigen::Vector3d dq;
  Eigen::Vector3d dp;
};

/// Largest of | |q| - 1 | and |q . p|.
double validity_residual(const CotangentPoint& pt);

/// 1 / int_{eps/2}^{eps} exp(eps^2 / (4 (x - eps/2)(x - eps))) dx.
double normalization(double eps);

class TwistConfig {
 public:
  /// N(eps) is computed here once; the object is read-only afterwards.
  TwistConfig(int k, double eps);
  /// eps = min(0.05, 1 / (32 k N(1) e^{-4} pi)); 0.05 when k = 0.
  static double default_eps(int k);
  static TwistConfig with_default_eps(int k) { return TwistConfig(k, default_eps(k)); }

  int k() const { return k_; }
  double eps() const { return eps_; }
  double normalization() const { return norm_; }

  double rho(double r) const;
  double rho_prime(double r) const;
  double f(double r) const;
  double f_prime(double r) const;

 private:
  int k_;
  double eps_;
  double norm_;
};

CotangentPoint twist(const TwistConfig& cfg, const CotangentPoint& pt);
/// Twist with -f.
CotangentPoint twist_inverse(const TwistConfig& cfg, const CotangentPoint& pt);

/// |lambda(d tau v) - lambda(v) - |p| df(v)| with d tau by central differences.
double pullback_defect(const TwistConfig& cfg, const CotangentPoint& pt, const CotangentVector& v);

/// Minimum of 1 - 2 r^2 f'(r) over `samples` equally spaced r in [0, 2 eps].
double contact_margin(const TwistConfig& cfg, int samples);

/// Largest sampled rho' over (eps/2, eps).
double max_rho_prime(const TwistConfig& cfg, int samples);

/// Random point with |p| uniform in [0, p_max].
CotangentPoint random_point(std::mt19937_64& rng, double p_max);
/// Random tangent vector: unit-scale base part, fibre part of size `fibre_scale`.
CotangentVector random_tangent(const CotangentPoint& pt, std::mt19937_64& rng, double fibre_scale);

/// Monodromy of the mapping torus restricted to the zero section: the
/// identity gives ETriv, the antipodal map ETwist.
SingularComponentType mapping_torus_type(int k);

struct TwistMarking {
  torus::BoundaryMarking marking;  // from torus::twist_boundary_class
  std::int64_t contribution = 0;   // Dehn-Euler contribution of the marking
  int crossings = 0;               // t in [0,1) where the section meets q = +-e1
  int marked_crossings = 0;        // crossings with the curve that carries the marking
};

/// Marking of a k-fold twisted gluing together with a direct count of the
/// section's crossings with the marked set along the zero section.
TwistMarking twist_marking(int k);

}  // namespace so3contact::twist
