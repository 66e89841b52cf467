#include "so3contact/geometry.hpp"

#include <cmath>
#include <numbers>

#include "so3contact/kernels.hpp"

namespace so3contact::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

cplx ipow(cplx z, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

double wrap_angle(double d) {
  d = std::remainder(d, 2 * kPi);
  return d;
}

Eigen::Vector3d unit_gaussian3(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (;;) {
    Eigen::Vector3d v(n(rng), n(rng), n(rng));
    const double len = v.norm();
    if (len > 1e-3) return v / len;
  }
}

void check_same_variety(const AmbientPoint& p, const ContactFormId& form) {
  if (!(p.variety == form.variety()))
    throw std::invalid_argument("form " + form.name() + " is not defined on " + p.variety.name());
}

}  // namespace

Variety Variety::brieskorn(int k) {
  if (k < 0) throw std::invalid_argument("Brieskorn exponent must be >= 0");
  return {Kind::Brieskorn, k};
}

std::string Variety::name() const {
  return kind == Kind::Sphere ? "S^5" : "W_" + std::to_string(k);
}

Eigen::Vector3d AmbientPoint::x() const {
  const int o = variety.acted_offset();
  return {coords[2 * o], coords[2 * o + 2], coords[2 * o + 4]};
}

Eigen::Vector3d AmbientPoint::y() const {
  const int o = variety.acted_offset();
  return {coords[2 * o + 1], coords[2 * o + 3], coords[2 * o + 5]};
}

AmbientPoint make_point(const Variety& v, std::span<const cplx> z) {
  if (static_cast<int>(z.size()) != v.complex_dim())
    throw std::invalid_argument("wrong number of coordinates for " + v.name());
  AmbientPoint p{v, Vec(v.real_dim())};
  for (int j = 0; j < v.complex_dim(); ++j) {
    p.coords[2 * j] = z[j].real();
    p.coords[2 * j + 1] = z[j].imag();
  }
  return p;
}

Eigen::Matrix3d matrix(const LieAlgElement& A) {
  Eigen::Matrix3d m;
  m << 0, -A.c, A.b,
       A.c, 0, -A.a,
       -A.b, A.a, 0;
  return m;
}

Eigen::Matrix3d exp(const LieAlgElement& A) {
  const double theta = A.axis().norm();
  const Eigen::Matrix3d K = matrix(A);
  double s, c;
  if (theta < 1e-6) {
    const double t2 = theta * theta;
    s = 1 - t2 / 6;
    c = 0.5 - t2 / 24;
  } else {
    s = std::sin(theta) / theta;
    c = (1 - std::cos(theta)) / (theta * theta);
  }
  return Eigen::Matrix3d::Identity() + s * K + c * K * K;
}

ContactFormId ContactFormId::alpha_k(int k, int sign) {
  if (k < 0) throw std::invalid_argument("Brieskorn exponent must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return {Kind::AlphaK, k, sign};
}

Variety ContactFormId::variety() const {
  return kind == Kind::AlphaK ? Variety::brieskorn(k) : Variety::sphere();
}

std::string ContactFormId::name() const {
  switch (kind) {
    case Kind::AlphaPlus: return "alpha+";
    case Kind::AlphaMinus: return "alpha-";
    case Kind::AlphaK: return std::string("alpha") + (sign > 0 ? "+" : "-") + std::to_string(k);
  }
  return "?";
}

// ---------------------------------------------------------------- constraints

Vec constraints(const Variety& v, const Vec& u) {
  Vec c(v.constraint_count());
  c[0] = u.squaredNorm() - v.radius_sq();
  if (v.kind == Variety::Kind::Brieskorn) {
    cplx f = ipow({u[0], u[1]}, v.k);
    for (int j = 1; j <= 3; ++j) {
      const cplx z{u[2 * j], u[2 * j + 1]};
      f += z * z;
    }
    c[1] = f.real();
    c[2] = f.imag();
  }
  return c;
}

Eigen::MatrixXd constraint_jacobian(const Variety& v, const Vec& u) {
  const int n = v.real_dim();
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(v.constraint_count(), n);
  J.row(0) = 2 * u.transpose();
  if (v.kind == Variety::Kind::Brieskorn) {
    for (int j = 0; j < 4; ++j) {
      const cplx z{u[2 * j], u[2 * j + 1]};
      const cplx d = j == 0 ? (v.k == 0 ? cplx(0) : double(v.k) * ipow(z, v.k - 1)) : 2.0 * z;
      J(1, 2 * j) = d.real();
      J(1, 2 * j + 1) = -d.imag();
      J(2, 2 * j) = d.imag();
      J(2, 2 * j + 1) = d.real();
    }
  }
  return J;
}

double constraint_residual(const AmbientPoint& p) {
  return constraints(p.variety, p.coords).lpNorm<Eigen::Infinity>();
}

std::optional<AmbientPoint> project_to_variety(const Variety& v, const Vec& guess) {
  if (guess.size() != v.real_dim()) throw std::invalid_argument("guess has wrong dimension");
  const double norm = guess.norm();
  if (!(norm >= kGuessNormMin && norm <= kGuessNormMax)) return std::nullopt;
  Vec u = guess;
  for (int it = 0; it <= kMaxNewtonIterations; ++it) {
    const Vec c = constraints(v, u);
    if (!c.allFinite()) return std::nullopt;
    if (c.lpNorm<Eigen::Infinity>() <= kProjectionTol) return AmbientPoint{v, u};
    if (it == kMaxNewtonIterations) break;
    const Eigen::MatrixXd J = constraint_jacobian(v, u);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(J * J.transpose());
    if (!lu.isInvertible()) return std::nullopt;
    u -= J.transpose() * lu.solve(c);
    if (u.norm() > 1e3) return std::nullopt;
  }
  return std::nullopt;
}

AmbientPoint sample_point(const Variety& v, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Vec g(v.real_dim());
    for (auto& c : g) c = n(rng);
    if (auto p = project_to_variety(v, g)) return *p;
  }
  throw SamplingError("no projected sample on " + v.name() + " after 1000 attempts");
}

AmbientPoint sample_singular_point(const Variety& v, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  const Eigen::Vector3d e = unit_gaussian3(rng);
  if (v.kind == Variety::Kind::Sphere) {
    const cplx w = std::polar(1.0, angle(rng));
    const std::array<cplx, 3> z{w * e[0], w * e[1], w * e[2]};
    return make_point(v, z);
  }
  const double phi = angle(rng);
  const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
  const cplx w = sign * cplx(0, 1) * std::polar(1.0, v.k * phi / 2);
  const std::array<cplx, 4> z{std::polar(1.0, phi), w * e[0], w * e[1], w * e[2]};
  return make_point(v, z);
}

AmbientPoint perturb(const AmbientPoint& p, double size, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vec d(p.coords.size());
    for (auto& c : d) c = n(rng);
    if (auto q = project_to_variety(p.variety, p.coords + size * d.normalized())) return *q;
  }
  throw SamplingError("perturbation did not reproject onto " + p.variety.name());
}

// ---------------------------------------------------------------- action

AmbientPoint act(const Eigen::Matrix3d& g, const AmbientPoint& p) {
  AmbientPoint q = p;
  const Eigen::Vector3d x = g * p.x(), y = g * p.y();
  const int o = p.variety.acted_offset();
  for (int j = 0; j < 3; ++j) {
    q.coords[2 * (o + j)] = x[j];
    q.coords[2 * (o + j) + 1] = y[j];
  }
  return q;
}

Vec infinitesimal_generator(const AmbientPoint& p, const LieAlgElement& A) {
  const Eigen::Matrix3d M = matrix(A);
  const Eigen::Vector3d dx = M * p.x(), dy = M * p.y();
  Vec v = Vec::Zero(p.coords.size());
  const int o = p.variety.acted_offset();
  for (int j = 0; j < 3; ++j) {
    v[2 * (o + j)] = dx[j];
    v[2 * (o + j) + 1] = dy[j];
  }
  return v;
}

Vec project_to_tangent(const AmbientPoint& p, const Vec& v) {
  const Eigen::MatrixXd J = constraint_jacobian(p.variety, p.coords);
  const Eigen::MatrixXd G = J * J.transpose();
  return v - J.transpose() * G.ldlt().solve(J * v);
}

// ---------------------------------------------------------------- forms

Vec form_coefficients(const ContactFormId& form, const Vec& u) {
  Vec w = Vec::Zero(u.size());
  switch (form.kind) {
    case ContactFormId::Kind::AlphaPlus:
    case ContactFormId::Kind::AlphaMinus: {
      for (int j = 0; j < 3; ++j) {
        w[2 * j] = -u[2 * j + 1];
        w[2 * j + 1] = u[2 * j];
      }
      if (form.kind == ContactFormId::Kind::AlphaMinus) {
        // alpha- = alpha+ - (a db - b da) with a + ib = sum z_j^2
        double a = 0, b = 0;
        for (int j = 0; j < 3; ++j) {
          const double x = u[2 * j], y = u[2 * j + 1];
          a += x * x - y * y;
          b += 2 * x * y;
        }
        for (int j = 0; j < 3; ++j) {
          const double x = u[2 * j], y = u[2 * j + 1];
          w[2 * j] += -2 * a * y + 2 * b * x;
          w[2 * j + 1] += -2 * a * x - 2 * b * y;
        }
      }
      break;
    }
    case ContactFormId::Kind::AlphaK: {
      const double c0 = form.sign * (form.k + 1.0);
      w[0] = -c0 * u[1];
      w[1] = c0 * u[0];
      for (int j = 1; j <= 3; ++j) {
        w[2 * j] = -2 * u[2 * j + 1];
        w[2 * j + 1] = 2 * u[2 * j];
      }
      break;
    }
  }
  return w;
}

double eval_form(const ContactFormId& form, const AmbientPoint& p, const Vec& v) {
  check_same_variety(p, form);
  return form_coefficients(form, p.coords).dot(v);
}

Eigen::Vector3d moment_map(const AmbientPoint& p, const ContactFormId& form) {
  check_same_variety(p, form);
  return form.moment_scale() * p.y().cross(p.x());
}

Eigen::MatrixXd dalpha_matrix(const ContactFormId& form, const Vec& u) {
  const int n = static_cast<int>(u.size());
  Eigen::MatrixXd J(n, n);  // J(i, j) = d_i w_j
  for (int i = 0; i < n; ++i) {
    Vec up = u, um = u;
    up[i] += kFormStep;
    um[i] -= kFormStep;
    J.row(i) = (form_coefficients(form, up) - form_coefficients(form, um)).transpose() /
               (2 * kFormStep);
  }
  return J - J.transpose();
}

double alpha_dalpha(const ContactFormId& form, const AmbientPoint& p, const Vec& a, const Vec& b,
                    const Vec& c) {
  check_same_variety(p, form);
  const Vec w = form_coefficients(form, p.coords);
  const Eigen::MatrixXd D = dalpha_matrix(form, p.coords);
  return w.dot(a) * b.dot(D * c) - w.dot(b) * a.dot(D * c) + w.dot(c) * a.dot(D * b);
}

double volume_form_value(const ContactFormId& form, const AmbientPoint& p, const Frame& frame) {
  check_same_variety(p, form);
  const Vec w = form_coefficients(form, p.coords);
  const Eigen::MatrixXd D = dalpha_matrix(form, p.coords);
  std::array<double, 5> al{};
  Eigen::Matrix<double, 5, 5> B;
  for (int i = 0; i < 5; ++i) {
    al[i] = w.dot(frame[i]);
    for (int j = 0; j < 5; ++j) B(i, j) = frame[i].dot(D * frame[j]);
  }
  double total = 0;
  for (int i = 0; i < 5; ++i) {
    std::array<int, 4> r{};
    for (int j = 0, m = 0; j < 5; ++j)
      if (j != i) r[m++] = j;
    const double pf = B(r[0], r[1]) * B(r[2], r[3]) - B(r[0], r[2]) * B(r[1], r[3]) +
                      B(r[0], r[3]) * B(r[1], r[2]);
    total += (i % 2 == 0 ? 1.0 : -1.0) * al[i] * 2 * pf;
  }
  return total;
}

double contact_check(const ContactFormId& form, const AmbientPoint& p, const Frame& frame) {
  Eigen::Matrix<double, 5, 5> gram;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) gram(i, j) = frame[i].dot(frame[j]);
  const double det = gram.determinant();
  if (!(det > kMinGramDeterminant))
    throw DegenerateFrameError("frame Gram determinant " + std::to_string(det) + " <= 1e-6");
  return volume_form_value(form, p, frame);
}

Frame tangent_frame(const AmbientPoint& p) {
  const int n = p.variety.real_dim();
  const int m = p.variety.constraint_count();
  const Eigen::MatrixXd G = constraint_jacobian(p.variety, p.coords).transpose();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd basis(n, n);
  basis << G, Q.rightCols(n - m);
  const bool flip = basis.determinant() < 0;
  Frame frame;
  for (int i = 0; i < 5; ++i) frame[i] = Q.col(m + i);
  if (flip) frame[4] = -frame[4];
  return frame;
}

// ---------------------------------------------------------------- orbit types

const char* to_string(StabilizerClass c) {
  switch (c) {
    case StabilizerClass::Trivial: return "trivial";
    case StabilizerClass::Circle: return "circle";
    case StabilizerClass::Indeterminate: return "indeterminate";
  }
  return "?";
}

double second_singular_value(const Eigen::Vector3d& x, const Eigen::Vector3d& y) {
  const double xx = x.squaredNorm(), yy = y.squaredNorm(), xy = x.dot(y);
  const double diff = xx - yy;
  const double lambda_max = 0.5 * (xx + yy + std::sqrt(diff * diff + 4 * xy * xy));
  return lambda_max > 0 ? x.cross(y).norm() / std::sqrt(lambda_max) : 0.0;
}

StabilizerClass classify_sigma(double sigma_min) {
  if (sigma_min < kCircleThreshold) return StabilizerClass::Circle;
  if (sigma_min >= kTrivialThreshold) return StabilizerClass::Trivial;
  return StabilizerClass::Indeterminate;
}

StabilizerClass stabilizer_class(const AmbientPoint& p) {
  return classify_sigma(second_singular_value(p.x(), p.y()));
}

std::vector<OrbitSummary> orbit_summaries(std::span<const AmbientPoint> points,
                                          const ContactFormId& form) {
  kernels::OrbitBlock block;
  block.resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    check_same_variety(points[i], form);
    const Eigen::Vector3d x = points[i].x(), y = points[i].y();
    block.x1[i] = x[0];
    block.x2[i] = x[1];
    block.x3[i] = x[2];
    block.y1[i] = y[0];
    block.y2[i] = y[1];
    block.y3[i] = y[2];
  }
  kernels::OrbitResult res;
  kernels::run_orbit_kernel(block, form.moment_scale(), res);
  std::vector<OrbitSummary> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i].moment = {res.mu_x[i], res.mu_y[i], res.mu_z[i]};
    out[i].sigma_min = res.sigma_min[i];
    out[i].stabilizer = classify_sigma(res.sigma_min[i]);
  }
  return out;
}

int cross_section_sign(const Variety& v) {
  return v.kind == Variety::Kind::Sphere ? -1 : 1;
}

bool in_cross_section(const AmbientPoint& p, const ContactFormId& form) {
  const Eigen::Vector3d mu = moment_map(p, form);
  return std::abs(mu[0]) <= kCrossSectionTol && std::abs(mu[1]) <= kCrossSectionTol &&
         cross_section_sign(p.variety) * mu[2] > kCrossSectionTol;
}

std::optional<AmbientPoint> rotate_into_cross_section(const AmbientPoint& p,
                                                      const ContactFormId& form) {
  const Eigen::Vector3d mu = moment_map(p, form);
  const double len = mu.norm();
  if (len < kTrivialThreshold) return std::nullopt;
  const Eigen::Vector3d u = mu / len;
  const Eigen::Vector3d target(0, 0, cross_section_sign(p.variety));
  const Eigen::Vector3d axis = u.cross(target);
  const double s = axis.norm(), c = u.dot(target);
  Eigen::Matrix3d g;
  if (s < 1e-12) {
    g = c > 0 ? Eigen::Matrix3d::Identity() : exp({kPi, 0, 0});
  } else {
    const Eigen::Vector3d a = axis / s * std::atan2(s, c);
    g = exp({a[0], a[1], a[2]});
  }
  return act(g, p);
}

int principal_stabilizer_order(const Variety& v, int samples, std::mt19937_64& rng) {
  // Rotations fixing two independent vectors of R^3 fix all of R^3, so the
  // stabilizer of a point with trivial class is the identity.
  for (int i = 0; i < samples; ++i)
    if (stabilizer_class(sample_point(v, rng)) == StabilizerClass::Trivial) return 1;
  throw SamplingError("no principal orbit among " + std::to_string(samples) + " samples on " +
                      v.name());
}

// ---------------------------------------------------------------- singular set

namespace {

template <class Candidates, class PointOf>
SingularComponentType trace_branch(Candidates candidates, PointOf point_of,
                                   const std::string& label) {
  const auto start = candidates(0.0);
  cplx current = start[0];
  for (int step = 1; step <= kBranchSteps; ++step) {
    const double s = 2 * kPi * step / kBranchSteps;
    const auto cand = candidates(s);
    for (const cplx& w : cand) {
      const AmbientPoint p = point_of(s, w);
      if (constraint_residual(p) > 1e-10 || stabilizer_class(p) != StabilizerClass::Circle)
        throw std::logic_error(label + ": candidate is not a singular point");
    }
    double d0 = std::abs(cand[0] - current), d1 = std::abs(cand[1] - current);
    const double near = std::min(d0, d1), far = std::max(d0, d1);
    if (!(far > 0) || near / far > kBranchAmbiguity)
      throw BranchTrackingError(label + ": ambiguous continuation at step " +
                                std::to_string(step) + " (distances " + std::to_string(near) +
                                ", " + std::to_string(far) + ")");
    current = d0 <= d1 ? cand[0] : cand[1];
  }
  const double back = std::abs(current - start[0]), swapped = std::abs(current - start[1]);
  if (back < 1e-9) return SingularComponentType::ETriv;
  if (swapped < 1e-9) return SingularComponentType::ETwist;
  throw BranchTrackingError(label + ": branch did not return to a start candidate");
}

}  // namespace

SingularComponentType singular_component_type(int k) {
  if (k < 0) throw std::invalid_argument("Brieskorn exponent must be >= 0");
  const Variety v = Variety::brieskorn(k);
  auto candidates = [k](double phi) {
    const cplx w = std::sqrt(-std::polar(1.0, k * phi));
    return std::array<cplx, 2>{w, -w};
  };
  auto point_of = [&v](double phi, cplx w) {
    const std::array<cplx, 4> z{std::polar(1.0, phi), w, 0.0, 0.0};
    return make_point(v, z);
  };
  return trace_branch(candidates, point_of, "W_" + std::to_string(k));
}

SingularComponentType sphere_singular_component_type() {
  const Variety v = Variety::sphere();
  auto candidates = [](double psi) {
    const cplx w = std::sqrt(std::polar(1.0, psi));
    return std::array<cplx, 2>{w, -w};
  };
  auto point_of = [&v](double, cplx w) {
    const std::array<cplx, 3> z{0.0, 0.0, w};
    return make_point(v, z);
  };
  return trace_branch(candidates, point_of, "S^5");
}

// ---------------------------------------------------------------- boundary tori

ChartPoint boundary_chart(const AmbientPoint& p) {
  const int o = p.variety.acted_offset();
  const cplx za = p.z(o), zb = p.z(o + 1);
  const cplx fibre = za + cplx(0, 1) * zb;
  const cplx base = p.variety.kind == Variety::Kind::Sphere ? za * za + zb * zb : p.z(0);
  if (std::abs(fibre) < 1e-12 || std::abs(base) < 1e-12)
    throw LoopError("point lies outside the boundary chart");
  return {std::arg(base), std::arg(fibre)};
}

torus::TorusClass loop_to_class(std::span<const ChartPoint> loop) {
  if (loop.size() < 3) throw LoopError("loop needs at least three samples");
  double total_t = 0, total_phi = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const ChartPoint& a = loop[i];
    const ChartPoint& b = loop[(i + 1) % loop.size()];
    const double dt = wrap_angle(b.t - a.t), dphi = wrap_angle(b.phi - a.phi);
    if (std::abs(dt) >= kPi / 2 || std::abs(dphi) >= kPi / 2)
      throw LoopError("phase step of at least pi/2 after sample " + std::to_string(i));
    total_t += dt;
    total_phi += dphi;
  }
  const double wa = total_t / (2 * kPi), wb = total_phi / (2 * kPi);
  const double ra = std::round(wa), rb = std::round(wb);
  if (std::abs(wa - ra) > kWindingTol || std::abs(wb - rb) > kWindingTol)
    throw LoopError("winding numbers are not integral");
  return {static_cast<std::int64_t>(ra), static_cast<std::int64_t>(rb)};
}

torus::TorusClass loop_to_class(std::span<const AmbientPoint> loop) {
  std::vector<ChartPoint> chart;
  chart.reserve(loop.size());
  for (const auto& p : loop) chart.push_back(boundary_chart(p));
  return loop_to_class(std::span<const ChartPoint>(chart));
}

AmbientPoint brieskorn_section(int k, cplx z0) {
  const double r2 = std::norm(z0);
  const double r2k = std::pow(r2, k);
  const double B = 2 - r2;
  const double A = std::sqrt(B + std::sqrt(std::max(0.0, B * B - r2k)));
  const cplx P = ipow(z0, k) / (2 * A);
  const double Q = A / 2;
  const cplx i(0, 1);
  const std::array<cplx, 4> z{z0, i * (P + Q), Q - P, 0.0};
  return make_point(Variety::brieskorn(k), z);
}

AmbientPoint sphere_section(cplx w) {
  std::array<cplx, 3> z{w + 1.0, w - 1.0, 0.0};
  const double len = std::sqrt(std::norm(z[0]) + std::norm(z[1]));
  for (auto& c : z) c /= len;
  return make_point(Variety::sphere(), z);
}

std::vector<AmbientPoint> brieskorn_marked_curve(int k, int samples_per_turn) {
  const int turns = k % 2 == 1 ? 2 : 1;
  const int total = turns * samples_per_turn;
  const Variety v = Variety::brieskorn(k);
  std::vector<AmbientPoint> out;
  out.reserve(total);
  for (int i = 0; i < total; ++i) {
    const double phi = 2 * kPi * turns * i / total;
    const std::array<cplx, 4> z{std::polar(1.0, phi), cplx(0, 1) * std::polar(1.0, k * phi / 2),
                                0.0, 0.0};
    out.push_back(make_point(v, z));
  }
  return out;
}

std::vector<AmbientPoint> brieskorn_section_boundary(int k, int samples) {
  // For k = 0 the section boundary runs along the marked curve; shifting it
  // along the orbit leaves its class unchanged.
  const Eigen::Matrix3d shift = k == 0 ? exp({0, 0, 0.1}) : Eigen::Matrix3d::Identity();
  std::vector<AmbientPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i)
    out.push_back(act(shift, brieskorn_section(k, std::polar(1.0, 2 * kPi * i / samples))));
  return out;
}

std::vector<AmbientPoint> sphere_marked_curve(int samples) {
  std::vector<AmbientPoint> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const std::array<cplx, 3> z{std::polar(1.0, 2 * kPi * i / samples), 0.0, 0.0};
    out.push_back(make_point(Variety::sphere(), z));
  }
  return out;
}

std::vector<AmbientPoint> sphere_section_boundary(int samples) {
  // Real axis of the upper half plane, then the circle at infinity.
  const int half = samples / 2;
  std::vector<AmbientPoint> out;
  out.reserve(2 * half);
  for (int i = 0; i < half; ++i) {
    const double x = std::tan(-kPi / 2 + kPi * (i + 0.5) / half);
    out.push_back(sphere_section(x));
  }
  for (int i = 0; i < half; ++i) {
    const cplx e = std::polar(1.0, kPi * i / half) / std::sqrt(2.0);
    const std::array<cplx, 3> z{e, e, 0.0};
    out.push_back(make_point(Variety::sphere(), z));
  }
  return out;
}

int section_orientation(const ContactFormId& form) {
  constexpr double h = 1e-6;
  const bool sphere = form.kind != ContactFormId::Kind::AlphaK;
  auto sigma = [&](cplx w) { return sphere ? sphere_section(w) : brieskorn_section(form.k, w); };
  const cplx w0 = sphere ? cplx(0, 1) : cplx(0.3, 0.2);
  const AmbientPoint p = sigma(w0);
  const Vec du = (sigma(w0 + h).coords - sigma(w0 - h).coords) / (2 * h);
  const Vec dv = (sigma(w0 + cplx(0, h)).coords - sigma(w0 - cplx(0, h)).coords) / (2 * h);
  const double value = alpha_dalpha(form, p, du, dv, infinitesimal_generator(p, kZ));
  if (std::abs(value) < 1e-8)
    throw std::runtime_error("cross-section orientation is degenerate for " + form.name());
  return value > 0 ? 1 : -1;
}

namespace {

ExampleMarking assemble(SingularComponentType type, torus::TorusClass gamma,
                        torus::TorusClass boundary, const ContactFormId& form) {
  ExampleMarking m;
  m.marked_curve = gamma;
  m.section_boundary = boundary;
  m.section_orientation = section_orientation(form);
  m.marking.kind = type == SingularComponentType::ETwist ? torus::CurveKind::Double
                                                         : torus::CurveKind::Section;
  m.marking.gamma = gamma;
  m.marking.section_boundary = -m.section_orientation * boundary;
  torus::check_marking(m.marking);
  return m;
}

}  // namespace

ExampleMarking brieskorn_marking(int k, int sign) {
  const ContactFormId form = ContactFormId::alpha_k(k, sign);
  const int samples = 64 * (k + 1);
  const auto gamma = loop_to_class(std::span<const AmbientPoint>(brieskorn_marked_curve(k, samples)));
  const auto boundary =
      loop_to_class(std::span<const AmbientPoint>(brieskorn_section_boundary(k, samples)));
  return assemble(singular_component_type(k), gamma, boundary, form);
}

ExampleMarking sphere_marking(int sign) {
  const ContactFormId form = sign > 0 ? ContactFormId::alpha_plus() : ContactFormId::alpha_minus();
  const auto gamma = loop_to_class(std::span<const AmbientPoint>(sphere_marked_curve(256)));
  const auto boundary = loop_to_class(std::span<const AmbientPoint>(sphere_section_boundary(512)));
  return assemble(sphere_singular_component_type(), gamma, boundary, form);
}

std::int64_t dehn_euler_of_example(int k, int sign) {
  const ExampleMarking m = brieskorn_marking(k, sign);
  return torus::dehn_euler_number(std::span(&m.marking, 1), 1);
}

std::int64_t dehn_euler_of_sphere(int sign) {
  const ExampleMarking m = sphere_marking(sign);
  return torus::dehn_euler_number(std::span(&m.marking, 1), 1);
}

}  // namespace so3contact::geometry
