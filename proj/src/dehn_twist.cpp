#include "so3contact/dehn_twist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace so3contact::twist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPanels = 8;

// Bump integrand on the unit interval: exp(1 / (u (u - 1))).
double unit_bump(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return std::exp(1.0 / (u * (u - 1.0)));
}

// int_0^s unit_bump, composite 20-point Gauss-Legendre.
double unit_bump_integral(double s) {
  if (s <= 0.0) return 0.0;
  s = std::min(s, 1.0);
  const double h = s / kPanels;
  double total = 0;
  for (int i = 0; i < kPanels; ++i)
    total += boost::math::quadrature::gauss<double, 20>::integrate(unit_bump, i * h, (i + 1) * h);
  return total;
}

double unit_normalization() {
  static const double n = normalization(1.0);
  return n;
}

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Eigen::Vector3d v(n(rng), n(rng), n(rng));
    if (v.norm() > 1e-3) return v.normalized();
  }
}

CotangentPoint rotate_by(const CotangentPoint& pt, double angle) {
  const double r = pt.p.norm();
  const double c = std::cos(angle), s = std::sin(angle);
  return {pt.q * c + (pt.p / r) * s, pt.p * c - r * pt.q * s};
}

}  // namespace

double validity_residual(const CotangentPoint& pt) {
  return std::max(std::abs(pt.q.norm() - 1.0), std::abs(pt.q.dot(pt.p)));
}

double normalization(double eps) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  auto integrand = [eps](double x) {
    if (x <= eps / 2 || x >= eps) return 0.0;
    return std::exp(eps * eps / (4 * (x - eps / 2) * (x - eps)));
  };
  double error = 0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, eps / 2, eps, 15, kNormalizationTol, &error);
  return 1.0 / integral;
}

TwistConfig::TwistConfig(int k, double eps) : k_(k), eps_(eps), norm_(0) {
  if (k < 0) throw std::invalid_argument("twist count must be >= 0");
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  norm_ = so3contact::twist::normalization(eps);
}

double TwistConfig::default_eps(int k) {
  if (k < 0) throw std::invalid_argument("twist count must be >= 0");
  if (k == 0) return kDefaultEpsCap;
  const double peak = unit_normalization() * std::exp(-4.0);
  return std::min(kDefaultEpsCap, 1.0 / (32.0 * k * peak * kPi));
}

double TwistConfig::rho(double r) const {
  if (r <= eps_ / 2) return 0.0;
  if (r >= eps_) return 1.0;
  const double half = eps_ / 2;
  return std::clamp(norm_ * half * unit_bump_integral((r - half) / half), 0.0, 1.0);
}

double TwistConfig::rho_prime(double r) const {
  if (r <= eps_ / 2 || r >= eps_) return 0.0;
  return norm_ * std::exp(eps_ * eps_ / (4 * (r - eps_ / 2) * (r - eps_)));
}

double TwistConfig::f(double r) const { return kPi * k_ * (1 + rho(r)); }

double TwistConfig::f_prime(double r) const { return kPi * k_ * rho_prime(r); }

CotangentPoint twist(const TwistConfig& cfg, const CotangentPoint& pt) {
  const double r = pt.p.norm();
  if (r <= cfg.eps() / 2) {
    const double s = cfg.k() % 2 == 0 ? 1.0 : -1.0;
    return {s * pt.q, s * pt.p};
  }
  if (r >= cfg.eps()) return pt;
  return rotate_by(pt, cfg.f(r));
}

CotangentPoint twist_inverse(const TwistConfig& cfg, const CotangentPoint& pt) {
  const double r = pt.p.norm();
  if (r <= cfg.eps() / 2) {
    const double s = cfg.k() % 2 == 0 ? 1.0 : -1.0;
    return {s * pt.q, s * pt.p};
  }
  if (r >= cfg.eps()) return pt;
  return rotate_by(pt, -cfg.f(r));
}

double pullback_defect(const TwistConfig& cfg, const CotangentPoint& pt, const CotangentVector& v) {
  const double h = kPullbackStep;
  const CotangentPoint plus{pt.q + h * v.dq, pt.p + h * v.dp};
  const CotangentPoint minus{pt.q - h * v.dq, pt.p - h * v.dp};
  const CotangentPoint image = twist(cfg, pt);
  const Eigen::Vector3d dq = (twist(cfg, plus).q - twist(cfg, minus).q) / (2 * h);
  const double pulled = image.p.dot(dq);
  const double plain = pt.p.dot(v.dq);
  // |p| d(f(|p|)) (v) = f'(|p|) (p . dp)
  const double correction = cfg.f_prime(pt.p.norm()) * pt.p.dot(v.dp);
  return std::abs(pulled - plain - correction);
}

double contact_margin(const TwistConfig& cfg, int samples) {
  if (samples < 2) throw std::invalid_argument("contact_margin needs at least two samples");
  double margin = 1.0;
  for (int i = 0; i < samples; ++i) {
    const double r = 2 * cfg.eps() * i / (samples - 1);
    margin = std::min(margin, 1 - 2 * r * r * cfg.f_prime(r));
  }
  return margin;
}

double max_rho_prime(const TwistConfig& cfg, int samples) {
  double best = 0;
  for (int i = 1; i < samples; ++i) {
    const double r = cfg.eps() / 2 * (1 + double(i) / samples);
    best = std::max(best, cfg.rho_prime(r));
  }
  return best;
}

CotangentPoint random_point(std::mt19937_64& rng, double p_max) {
  const Eigen::Vector3d q = random_unit(rng);
  Eigen::Vector3d d = random_unit(rng);
  d -= d.dot(q) * q;
  while (d.norm() < 1e-3) {
    d = random_unit(rng);
    d -= d.dot(q) * q;
  }
  const double r = std::uniform_real_distribution<double>(0.0, p_max)(rng);
  return {q, r * d.normalized()};
}

CotangentVector random_tangent(const CotangentPoint& pt, std::mt19937_64& rng, double fibre_scale) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector3d dq(n(rng), n(rng), n(rng));
  dq -= dq.dot(pt.q) * pt.q;
  Eigen::Vector3d dp = fibre_scale * Eigen::Vector3d(n(rng), n(rng), n(rng));
  // q . dp + p . dq = 0 keeps q . p = 0 to first order
  dp -= (dp.dot(pt.q) + pt.p.dot(dq)) * pt.q;
  return {dq, dp};
}

SingularComponentType mapping_torus_type(int k) {
  if (k < 0) throw std::invalid_argument("twist count must be >= 0");
  const TwistConfig cfg(k, TwistConfig::default_eps(k));
  int fixed = 0, antipodal = 0;
  const Eigen::Vector3d zero = Eigen::Vector3d::Zero();
  for (const Eigen::Vector3d& q : {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 0, 1),
                                   Eigen::Vector3d(0.6, -0.8, 0), Eigen::Vector3d(0, 0.28, 0.96)}) {
    const CotangentPoint image = twist(cfg, {q, zero});
    if ((image.q - q).norm() < 1e-12) ++fixed;
    else if ((image.q + q).norm() < 1e-12) ++antipodal;
  }
  if (fixed == 4) return SingularComponentType::ETriv;
  if (antipodal == 4) return SingularComponentType::ETwist;
  throw std::logic_error("zero-section monodromy is neither the identity nor antipodal");
}

TwistMarking twist_marking(int k) {
  if (k < 0) throw std::invalid_argument("twist count must be >= 0");
  TwistMarking out;
  out.marking = torus::twist_boundary_class(k);
  const std::int64_t local = torus::local_intersection(out.marking);
  out.contribution = out.marking.kind == torus::CurveKind::Section ? 2 * local : local;

  // The section at r = 0 passes through q = (cos pi k t, -sin pi k t, 0).
  // It meets q = +-e1 where sin(pi k t) changes sign.
  constexpr int grid = 4096;
  auto s = [k](double t) { return std::sin(kPi * k * t); };
  for (int i = 0; i < grid; ++i) {
    const double t0 = (i + 0.5) / grid, t1 = (i + 1.5) / grid;
    if ((s(t0) < 0) != (s(t1) < 0) && std::abs(s(t0)) + std::abs(s(t1)) > 0) {
      ++out.crossings;
      if (std::cos(kPi * k * 0.5 * (t0 + t1)) > 0) ++out.marked_crossings;
    }
  }
  if (k % 2 == 1) out.marked_crossings = out.crossings;
  return out;
}

}  // namespace so3contact::twist
