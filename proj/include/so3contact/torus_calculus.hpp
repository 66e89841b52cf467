#pragma once

// Integer homology of the boundary tori of the cross-section closure.
//
// Classes are written in the basis ([t], [phi]) where [t] is a section
// direction and [phi] the orbit of the circle action. All bases are taken
// positively oriented, with the torus oriented so that a marked curve
// followed by the orbit generator is a positive frame.

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace so3contact::torus {

struct TorusClass {
  std::int64_t a = 0;  // [t] coefficient
  std::int64_t b = 0;  // [phi] coefficient

  friend bool operator==(const TorusClass&, const TorusClass&) = default;
  friend TorusClass operator+(TorusClass x, TorusClass y) { return {x.a + y.a, x.b + y.b}; }
  friend TorusClass operator-(TorusClass x) { return {-x.a, -x.b}; }
  friend TorusClass operator*(std::int64_t s, TorusClass x) { return {s * x.a, s * x.b}; }
};

inline constexpr TorusClass kOrbitClass{0, 1};
inline constexpr TorusClass kSectionClass{1, 0};

bool is_primitive_or_zero(TorusClass x);

/// Algebraic intersection number a*d - b*c.
std::int64_t intersection(TorusClass x, TorusClass y);

enum class CurveKind {
  Section,  // marked curve meets every orbit once
  Double,   // marked curve meets every orbit twice
};

struct BoundaryMarking {
  CurveKind kind = CurveKind::Section;
  TorusClass gamma;              // marked curve
  TorusClass section_boundary;   // boundary of the global section on this torus

  friend bool operator==(const BoundaryMarking&, const BoundaryMarking&) = default;
};

class MarkingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws MarkingError if the marking is not of one of the two admissible
/// shapes (gamma meets orbits once/twice, section boundary meets them once,
/// double curves cross the section an odd number of times).
void check_marking(const BoundaryMarking& m);

/// Contribution <gamma, d sigma> of a single boundary.
std::int64_t local_intersection(const BoundaryMarking& m);

/// Stabilizer order 1: 2 * sum over Section markings + sum over Double
/// markings. Stabilizer order 2: plain sum, all markings Section-kind.
std::int64_t dehn_euler_number(std::span<const BoundaryMarking> markings, int stabilizer_order);

/// Replace the section by one rotated by r_j around the j-th boundary.
/// The rotation numbers of a global change of section sum to zero.
std::vector<BoundaryMarking> change_section(std::span<const BoundaryMarking> markings,
                                            std::span<const std::int64_t> rotations);

using Matrix2 = std::array<std::array<std::int64_t, 2>, 2>;

/// [[1, c], [0, 1]]: sends [t] to [t] + c [phi], fixes [phi].
Matrix2 collar_change(std::int64_t c);
TorusClass transform(const Matrix2& m, TorusClass x);
/// Matrix product; transform(compose(a, b), x) == transform(b, transform(a, x)).
Matrix2 compose(const Matrix2& lhs, const Matrix2& rhs);
std::int64_t determinant(const Matrix2& m);

/// Marking of a boundary glued with collar shift c. ETriv-type gluings use a
/// marked section and contribute 2c; ETwist-type gluings use the double curve
/// 2[t] - [phi] and contribute 2c + 1; O(2)-type gluings contribute c.
enum class GluingModel { Trivial, Twisted, Projective };
BoundaryMarking collar_marking(GluingModel model, std::int64_t c);

/// Marking produced by a k-fold twisted gluing (k >= 0): a double curve with
/// contribution k for odd k, a section crossing d sigma k/2 times for even k.
BoundaryMarking twist_boundary_class(std::int64_t k);

}  // namespace so3contact::torus
