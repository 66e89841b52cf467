#include "so3contact/torus_calculus.hpp"

#include <numeric>
#include <string>

namespace so3contact::torus {

bool is_primitive_or_zero(TorusClass x) {
  if (x.a == 0 && x.b == 0) return true;
  return std::gcd(x.a, x.b) == 1;
}

std::int64_t intersection(TorusClass x, TorusClass y) { return x.a * y.b - x.b * y.a; }

void check_marking(const BoundaryMarking& m) {
  if (!is_primitive_or_zero(m.gamma) || !is_primitive_or_zero(m.section_boundary))
    throw MarkingError("marked curve and section boundary must be primitive classes");
  // <c, orbit> counts how often an embedded curve meets each orbit.
  const std::int64_t sigma_hits = intersection(m.section_boundary, kOrbitClass);
  if (sigma_hits != 1 && sigma_hits != -1)
    throw MarkingError("section boundary must meet every orbit exactly once, got " +
                       std::to_string(sigma_hits));
  const std::int64_t gamma_hits = intersection(m.gamma, kOrbitClass);
  switch (m.kind) {
    case CurveKind::Section:
      if (gamma_hits != 1)
        throw MarkingError("section-kind marked curve must meet every orbit once, got " +
                           std::to_string(gamma_hits));
      break;
    case CurveKind::Double:
      if (gamma_hits != 2)
        throw MarkingError("double-kind marked curve must meet every orbit twice, got " +
                           std::to_string(gamma_hits));
      if (intersection(m.gamma, m.section_boundary) % 2 == 0)
        throw MarkingError("double-kind marked curve has even intersection with the section");
      break;
  }
}

std::int64_t local_intersection(const BoundaryMarking& m) {
  return intersection(m.gamma, m.section_boundary);
}

std::int64_t dehn_euler_number(std::span<const BoundaryMarking> markings, int stabilizer_order) {
  if (stabilizer_order != 1 && stabilizer_order != 2)
    throw MarkingError("Dehn-Euler number needs stabilizer order 1 or 2");
  std::int64_t n = 0;
  for (const auto& m : markings) {
    check_marking(m);
    const std::int64_t local = local_intersection(m);
    if (stabilizer_order == 2) {
      if (m.kind != CurveKind::Section)
        throw MarkingError("stabilizer order 2 admits only section-kind marked curves");
      n += local;
    } else {
      n += m.kind == CurveKind::Section ? 2 * local : local;
    }
  }
  return n;
}

std::vector<BoundaryMarking> change_section(std::span<const BoundaryMarking> markings,
                                            std::span<const std::int64_t> rotations) {
  if (markings.size() != rotations.size())
    throw MarkingError("one rotation number per boundary component required");
  if (std::accumulate(rotations.begin(), rotations.end(), std::int64_t{0}) != 0)
    throw MarkingError("rotation numbers of a change of section must sum to zero");
  std::vector<BoundaryMarking> out(markings.begin(), markings.end());
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j].section_boundary = out[j].section_boundary + rotations[j] * kOrbitClass;
  return out;
}

Matrix2 collar_change(std::int64_t c) { return {{{1, c}, {0, 1}}}; }

// Classes are row vectors (a, b) acted on from the right, so row i of the
// matrix is the image of the i-th basis class.
TorusClass transform(const Matrix2& m, TorusClass x) {
  return {m[0][0] * x.a + m[1][0] * x.b, m[0][1] * x.a + m[1][1] * x.b};
}

Matrix2 compose(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = lhs[i][0] * rhs[0][j] + lhs[i][1] * rhs[1][j];
  return out;
}

std::int64_t determinant(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

BoundaryMarking collar_marking(GluingModel model, std::int64_t c) {
  const TorusClass sigma = transform(collar_change(c), kSectionClass);
  switch (model) {
    case GluingModel::Trivial:
    case GluingModel::Projective:
      return {CurveKind::Section, kSectionClass, sigma};
    case GluingModel::Twisted:
      // The marked double curve pulls back to t -> (2t, -t) in the collar.
      return {CurveKind::Double, TorusClass{2, -1}, sigma};
  }
  throw MarkingError("unknown gluing model");
}

BoundaryMarking twist_boundary_class(std::int64_t k) {
  if (k < 0) throw MarkingError("twist count must be non-negative");
  if (k % 2 == 1) return collar_marking(GluingModel::Twisted, (k - 1) / 2);
  return collar_marking(GluingModel::Trivial, k / 2);
}

}  // namespace so3contact::torus
