#pragma once

// Numerical geometry of the two model families: the unit sphere S^5 in C^3
// and the Brieskorn manifolds W_k in C^4 (radius sqrt 2).
//
// Real coordinates are interleaved, coords[2j] = Re z_j, coords[2j+1] = Im z_j.
// SO(3) acts on the last three complex coordinates by real rotation; on W_k
// the first coordinate z_0 is fixed. The acted block is split as x + iy with
// x, y in R^3.
//
// Lie algebra basis: X, Y, Z are the rotations about e1, e2, e3, so that
// exp(tZ) e1 = cos t e1 + sin t e2 and [X, Y] = Z. A generator A acts on R^3
// by v -> a cross v with a = (a, b, c).

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "so3contact/invariants.hpp"
#include "so3contact/torus_calculus.hpp"

namespace so3contact::geometry {

using Vec = Eigen::VectorXd;
using cplx = std::complex<double>;

inline constexpr double kProjectionTol = 1e-12;
inline constexpr int kMaxNewtonIterations = 50;
inline constexpr double kGuessNormMin = 0.1;
inline constexpr double kGuessNormMax = 10.0;
inline constexpr double kCircleThreshold = 1e-8;   // sigma_min below: circle stabilizer
inline constexpr double kTrivialThreshold = 1e-6;  // sigma_min above: trivial stabilizer
inline constexpr double kCrossSectionTol = 1e-9;
inline constexpr double kFormStep = 1e-5;  // central differences for d(alpha)
inline constexpr double kMinGramDeterminant = 1e-6;
inline constexpr int kBranchSteps = 1024;
inline constexpr double kBranchAmbiguity = 0.5;
inline constexpr double kWindingTol = 1e-6;

struct Variety {
  enum class Kind { Sphere, Brieskorn };
  Kind kind = Kind::Sphere;
  int k = 0;  // Brieskorn exponent

  static Variety sphere() { return {Kind::Sphere, 0}; }
  static Variety brieskorn(int k);

  int complex_dim() const { return kind == Kind::Sphere ? 3 : 4; }
  int real_dim() const { return 2 * complex_dim(); }
  int acted_offset() const { return kind == Kind::Sphere ? 0 : 1; }
  int constraint_count() const { return kind == Kind::Sphere ? 1 : 3; }
  double radius_sq() const { return kind == Kind::Sphere ? 1.0 : 2.0; }
  std::string name() const;

  friend bool operator==(const Variety&, const Variety&) = default;
};

struct AmbientPoint {
  Variety variety;
  Vec coords;

  cplx z(int j) const { return {coords[2 * j], coords[2 * j + 1]}; }
  /// Real and imaginary parts of the acted block.
  Eigen::Vector3d x() const;
  Eigen::Vector3d y() const;
};

AmbientPoint make_point(const Variety& v, std::span<const cplx> z);

struct LieAlgElement {
  double a = 0, b = 0, c = 0;  // coefficients of X, Y, Z

  Eigen::Vector3d axis() const { return {a, b, c}; }
};

inline constexpr LieAlgElement kX{1, 0, 0};
inline constexpr LieAlgElement kY{0, 1, 0};
inline constexpr LieAlgElement kZ{0, 0, 1};

Eigen::Matrix3d matrix(const LieAlgElement& A);
/// Rodrigues formula for exp(A).
Eigen::Matrix3d exp(const LieAlgElement& A);

struct ContactFormId {
  enum class Kind { AlphaPlus, AlphaMinus, AlphaK };
  Kind kind = Kind::AlphaPlus;
  int k = 0;
  int sign = 1;

  static ContactFormId alpha_plus() { return {Kind::AlphaPlus, 0, 1}; }
  static ContactFormId alpha_minus() { return {Kind::AlphaMinus, 0, -1}; }
  static ContactFormId alpha_k(int k, int sign);

  Variety variety() const;
  /// <mu, A> = moment_scale() * x^T A y.
  double moment_scale() const { return kind == Kind::AlphaK ? 4.0 : 2.0; }
  std::string name() const;
};

// ---------------------------------------------------------------- constraints

/// Defining functions: |u|^2 - r^2, and on W_k also Re f, Im f with
/// f = z0^k + z1^2 + z2^2 + z3^2.
Vec constraints(const Variety& v, const Vec& u);
/// Rows are the gradients of constraints().
Eigen::MatrixXd constraint_jacobian(const Variety& v, const Vec& u);
double constraint_residual(const AmbientPoint& p);

/// Newton iteration with minimum-norm steps. nullopt when the guess norm is
/// outside [0.1, 10] or the iteration does not reach 1e-12 in 50 steps.
std::optional<AmbientPoint> project_to_variety(const Variety& v, const Vec& guess);

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gaussian guess projected onto the variety, retried on failure.
AmbientPoint sample_point(const Variety& v, std::mt19937_64& rng);
/// A point on a singular orbit (acted block x parallel to y).
AmbientPoint sample_singular_point(const Variety& v, std::mt19937_64& rng);
/// Random displacement of the given size followed by reprojection.
AmbientPoint perturb(const AmbientPoint& p, double size, std::mt19937_64& rng);

// ---------------------------------------------------------------- action

AmbientPoint act(const Eigen::Matrix3d& g, const AmbientPoint& p);
Vec infinitesimal_generator(const AmbientPoint& p, const LieAlgElement& A);
/// Orthogonal projection onto the tangent space at p.
Vec project_to_tangent(const AmbientPoint& p, const Vec& v);

// ---------------------------------------------------------------- forms

/// Coefficients w(u) with alpha_u(v) = w(u) . v. Defined on all of the
/// ambient space.
Vec form_coefficients(const ContactFormId& form, const Vec& u);
double eval_form(const ContactFormId& form, const AmbientPoint& p, const Vec& v);

/// (<mu,X>, <mu,Y>, <mu,Z>) from the closed formula scale * (y cross x).
Eigen::Vector3d moment_map(const AmbientPoint& p, const ContactFormId& form);

/// Antisymmetric matrix D with d(alpha)(a, b) = a^T D b, by central differences.
Eigen::MatrixXd dalpha_matrix(const ContactFormId& form, const Vec& u);

/// alpha ^ d(alpha) on three vectors.
double alpha_dalpha(const ContactFormId& form, const AmbientPoint& p, const Vec& a, const Vec& b,
                    const Vec& c);

using Frame = std::array<Vec, 5>;

/// alpha ^ d(alpha) ^ d(alpha) on five vectors, without any frame check.
double volume_form_value(const ContactFormId& form, const AmbientPoint& p, const Frame& frame);

class DegenerateFrameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// volume_form_value after checking det(Gram) > 1e-6.
double contact_check(const ContactFormId& form, const AmbientPoint& p, const Frame& frame);

/// Orthonormal tangent frame, oriented so that (gradients, frame) is a
/// positive basis of the ambient space.
Frame tangent_frame(const AmbientPoint& p);

// ---------------------------------------------------------------- orbit types

enum class StabilizerClass { Trivial, Circle, Indeterminate };
const char* to_string(StabilizerClass c);

/// Smaller singular value of the 2x3 matrix with rows x, y.
double second_singular_value(const Eigen::Vector3d& x, const Eigen::Vector3d& y);
StabilizerClass classify_sigma(double sigma_min);
StabilizerClass stabilizer_class(const AmbientPoint& p);

struct OrbitSummary {
  Eigen::Vector3d moment;
  double sigma_min = 0;
  StabilizerClass stabilizer = StabilizerClass::Indeterminate;
};

/// Batched moment map and stabilizer class through the SIMD kernels.
std::vector<OrbitSummary> orbit_summaries(std::span<const AmbientPoint> points,
                                          const ContactFormId& form);

/// +1 if the cross-section is {<mu,Z> > 0}, -1 if it is {<mu,Z> < 0}.
/// Sphere: x1 y2 - y1 x2 > 0. Brieskorn: x2 y1 - x1 y2 > 0.
int cross_section_sign(const Variety& v);
bool in_cross_section(const AmbientPoint& p, const ContactFormId& form);
/// g.p in the cross-section for a rotation g; nullopt on a singular orbit.
std::optional<AmbientPoint> rotate_into_cross_section(const AmbientPoint& p,
                                                      const ContactFormId& form);

/// Principal stabilizer order estimated from sampled points.
int principal_stabilizer_order(const Variety& v, int samples, std::mt19937_64& rng);

// ---------------------------------------------------------------- singular set

class BranchTrackingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Follows one of the two singular points (e^{i phi}, w e1) with
/// w^2 = -e^{i k phi} once around phi in [0, 2 pi]. Returning to the start
/// gives ETriv, arriving at the other point gives ETwist.
SingularComponentType singular_component_type(int k);
/// Same for S^5 along (0, 0, w) with w^2 = e^{i psi}.
SingularComponentType sphere_singular_component_type();

// ---------------------------------------------------------------- boundary tori

/// Angular chart (t, phi) near the boundary of the cross-section closure.
/// phi = arg(z_a + i z_b) on the first two acted coordinates, so the orbit of
/// exp(sZ) is the direction (0, 1). t = arg z0 on W_k, t = arg(z_a^2 + z_b^2)
/// on S^5.
struct ChartPoint {
  double t = 0;
  double phi = 0;
};

ChartPoint boundary_chart(const AmbientPoint& p);

class LoopError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Winding numbers of a closed sampled loop (the closing step last -> first
/// is included). Each step must move both angles by less than pi/2.
torus::TorusClass loop_to_class(std::span<const ChartPoint> loop);
torus::TorusClass loop_to_class(std::span<const AmbientPoint> loop);

/// Section of W_k over the disc |z0| <= 1.
AmbientPoint brieskorn_section(int k, cplx z0);
/// Section of S^5 over the upper half plane, (w+1, w-1, 0)/|.|.
AmbientPoint sphere_section(cplx w);

std::vector<AmbientPoint> brieskorn_marked_curve(int k, int samples_per_turn);
std::vector<AmbientPoint> brieskorn_section_boundary(int k, int samples);
std::vector<AmbientPoint> sphere_marked_curve(int samples);
std::vector<AmbientPoint> sphere_section_boundary(int samples);

/// Sign of alpha ^ d(alpha)(d_u sigma, d_v sigma, Z) at an interior point of
/// the section.
int section_orientation(const ContactFormId& form);

struct ExampleMarking {
  torus::BoundaryMarking marking;
  torus::TorusClass marked_curve;
  torus::TorusClass section_boundary;  // as traced, before orientation
  int section_orientation = 0;
};

/// Marking of the single boundary torus. The cross-section is oriented by
/// -alpha ^ d(alpha), which reverses the traced boundary when the section
/// orientation is positive.
ExampleMarking brieskorn_marking(int k, int sign);
ExampleMarking sphere_marking(int sign);

std::int64_t dehn_euler_of_example(int k, int sign);
std::int64_t dehn_euler_of_sphere(int sign);

}  // namespace so3contact::geometry
