#pragma once

// Classifying data of closed 5-dimensional contact SO(3)-manifolds and the
// equivalence decision built on it.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace so3contact {

enum class SingularComponentType {
  RP2Bundle,  // S^1 x RP^2, stabilizer O(2)
  ETriv,      // trivial S^2-bundle over S^1
  ETwist,     // R x S^2 / (t,p) ~ (t+1,-p)
};

const char* to_string(SingularComponentType type);
std::optional<SingularComponentType> parse_component_type(const std::string& name);

/// Rational number kept as written; normalize() reduces it.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Unnormalized Seifert pair (alpha, beta) of an exceptional orbit.
struct SeifertPair {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;

  friend bool operator==(const SeifertPair&, const SeifertPair&) = default;
  friend auto operator<=>(const SeifertPair&, const SeifertPair&) = default;
};

/// Seifert-type data of the 3-dimensional cross-section and its orbit surface.
struct CrossSectionData {
  int genus = 0;
  int boundary_count = 0;
  std::vector<SeifertPair> exceptional_orbits;
  std::optional<Rational> euler_number;  // present iff boundary_count == 0

  friend bool operator==(const CrossSectionData&, const CrossSectionData&) = default;
};

struct InvariantTuple {
  int stabilizer_order = 1;  // principal stabilizer Z_k
  CrossSectionData cross_section;
  std::vector<SingularComponentType> singular_components;
  std::optional<std::int64_t> dehn_euler;  // present iff singular_components nonempty

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

/// Machine-readable codes for violated arithmetic conditions.
enum class ViolationCode {
  StabilizerOrderNonPositive,
  SingularOrbitsNeedSmallStabilizer,  // k >= 3 forbids singular orbits
  Order2NeedsRP2Bundles,
  Order1NeedsSphereBundles,
  DehnEulerParity,
  DehnEulerMissing,
  DehnEulerUnexpected,
  BoundaryCountMismatch,
  NegativeGenus,
  NegativeBoundaryCount,
  InvalidSeifertPair,
  EulerNumberMissing,
  EulerNumberUnexpected,
  EulerNumberZero,
  EulerNumberZeroDenominator,
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;
};

/// Every violated condition; an empty result means the tuple is realizable.
std::vector<Violation> validate(const InvariantTuple& t);

class InvalidTupleError : public std::invalid_argument {
 public:
  explicit InvalidTupleError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Canonical form: beta reduced into [1, alpha), orbit pairs sorted, singular
/// components sorted RP2Bundle < ETriv < ETwist, Euler number in lowest terms
/// with positive denominator. Throws InvalidTupleError on invalid input.
InvariantTuple normalize(const InvariantTuple& t);

/// Equality of canonical forms. Closed cross-sections compare by
/// (genus, orbit pairs, Euler number) only.
bool equivalent(const InvariantTuple& a, const InvariantTuple& b);

/// One gluing step of a construction plan: a boundary torus of the
/// cross-section closed off by a singular component through the collar
/// change [[1, c], [0, 1]].
struct GluingStep {
  SingularComponentType component;
  std::int64_t collar_shift = 0;  // c
  std::int64_t twist_count = 0;   // Dehn-Euler contribution of this boundary
};

struct GluingPlan {
  int stabilizer_order = 1;
  CrossSectionData base;
  std::vector<GluingStep> gluings;  // empty: M = SO(3) x_{S^1} R
};

/// Symbolic construction plan realizing a valid tuple. Throws
/// InvalidTupleError when the tuple fails validate().
GluingPlan realize(const InvariantTuple& t);

/// Dehn-Euler number of the plan recomputed from its boundary markings.
std::int64_t plan_dehn_euler(const GluingPlan& plan);

/// Tuple described by a plan (inverse of realize up to normalization).
InvariantTuple tuple_of_plan(const GluingPlan& plan);

}  // namespace so3contact
