#pragma once

// Worked examples: S^5 with its two contact forms and the Brieskorn family
// W_k with alpha_{+k}, alpha_{-k}. Every tuple is computed through the
// geometry pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "so3contact/geometry.hpp"
#include "so3contact/invariants.hpp"

namespace so3contact::catalog {

struct ExampleId {
  enum class Kind { SpherePlus, SphereMinus, Brieskorn };
  Kind kind = Kind::SpherePlus;
  int k = 0;
  int sign = 1;

  static ExampleId sphere(int sign);
  static ExampleId brieskorn(int k, int sign);

  geometry::ContactFormId form() const;
  friend bool operator==(const ExampleId&, const ExampleId&) = default;
};

/// "sphere+", "sphere-", "brieskorn:<k>:+" or "brieskorn:<k>:-".
std::optional<ExampleId> parse_example(const std::string& text);
std::string to_string(const ExampleId& id);

struct Options {
  std::uint64_t seed = 1;
  int samples = 1000;
};

struct ExampleReport {
  ExampleId id;
  InvariantTuple tuple;
  geometry::ExampleMarking marking;
  std::string diffeomorphism_type;  // "S^5" or "S^2 x S^3"
};

ExampleReport analyze_example(const ExampleId& id, const Options& opts = {});
InvariantTuple invariants_of_example(const ExampleId& id, const Options& opts = {});

inline constexpr int kMaxTableK = 12;

/// Both signs of W_k for k = 0..k_max, computed in parallel, ordered by
/// (k, +, -).
std::vector<ExampleReport> simply_connected_table(int k_max, const Options& opts = {});

/// Index pairs (i, j), i < j, of equivalent table entries.
std::vector<std::pair<std::size_t, std::size_t>> coincidences(
    const std::vector<ExampleReport>& table);

}  // namespace so3contact::catalog
