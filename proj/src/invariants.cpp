#include "so3contact/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "so3contact/torus_calculus.hpp"

namespace so3contact {

const char* to_string(SingularComponentType type) {
  switch (type) {
    case SingularComponentType::RP2Bundle: return "RP2Bundle";
    case SingularComponentType::ETriv: return "ETriv";
    case SingularComponentType::ETwist: return "ETwist";
  }
  return "?";
}

std::optional<SingularComponentType> parse_component_type(const std::string& name) {
  if (name == "RP2Bundle") return SingularComponentType::RP2Bundle;
  if (name == "ETriv") return SingularComponentType::ETriv;
  if (name == "ETwist") return SingularComponentType::ETwist;
  return std::nullopt;
}

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::StabilizerOrderNonPositive: return "stabilizer_order_nonpositive";
    case ViolationCode::SingularOrbitsNeedSmallStabilizer: return "singular_orbits_need_order_le_2";
    case ViolationCode::Order2NeedsRP2Bundles: return "order2_needs_rp2_bundles";
    case ViolationCode::Order1NeedsSphereBundles: return "order1_needs_sphere_bundles";
    case ViolationCode::DehnEulerParity: return "dehn_euler_parity";
    case ViolationCode::DehnEulerMissing: return "dehn_euler_missing";
    case ViolationCode::DehnEulerUnexpected: return "dehn_euler_unexpected";
    case ViolationCode::BoundaryCountMismatch: return "boundary_count_mismatch";
    case ViolationCode::NegativeGenus: return "negative_genus";
    case ViolationCode::NegativeBoundaryCount: return "negative_boundary_count";
    case ViolationCode::InvalidSeifertPair: return "invalid_seifert_pair";
    case ViolationCode::EulerNumberMissing: return "euler_number_missing";
    case ViolationCode::EulerNumberUnexpected: return "euler_number_unexpected";
    case ViolationCode::EulerNumberZero: return "euler_number_zero";
    case ViolationCode::EulerNumberZeroDenominator: return "euler_number_zero_denominator";
  }
  return "?";
}

namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t x, std::int64_t m) { return (x - floor_mod(x, m)) / m; }

std::string describe(const char* what, std::int64_t value) {
  std::ostringstream os;
  os << what << " (got " << value << ")";
  return os.str();
}

void check_cross_section(const CrossSectionData& cs, std::vector<Violation>& out) {
  if (cs.genus < 0)
    out.push_back({ViolationCode::NegativeGenus, describe("genus must be >= 0", cs.genus)});
  if (cs.boundary_count < 0)
    out.push_back({ViolationCode::NegativeBoundaryCount,
                   describe("boundary count must be >= 0", cs.boundary_count)});
  for (const auto& [alpha, beta] : cs.exceptional_orbits) {
    if (alpha < 2 || std::gcd(alpha, beta) != 1) {
      std::ostringstream os;
      os << "exceptional orbit (" << alpha << ", " << beta
         << ") needs alpha >= 2 and gcd(alpha, beta) = 1";
      out.push_back({ViolationCode::InvalidSeifertPair, os.str()});
    }
  }
  if (cs.boundary_count == 0) {
    if (!cs.euler_number) {
      out.push_back({ViolationCode::EulerNumberMissing,
                     "closed cross-section needs an orbifold Euler number"});
    } else if (cs.euler_number->den == 0) {
      out.push_back({ViolationCode::EulerNumberZeroDenominator,
                     "Euler number has zero denominator"});
    } else if (cs.euler_number->num == 0) {
      out.push_back({ViolationCode::EulerNumberZero,
                     "closed cross-section must have nonzero Euler number"});
    }
  } else if (cs.euler_number) {
    out.push_back({ViolationCode::EulerNumberUnexpected,
                   "Euler number is only an invariant of closed cross-sections"});
  }
}

}  // namespace

std::vector<Violation> validate(const InvariantTuple& t) {
  std::vector<Violation> out;
  const auto& comps = t.singular_components;
  const auto count = [&](SingularComponentType type) {
    return static_cast<std::int64_t>(std::count(comps.begin(), comps.end(), type));
  };

  if (t.stabilizer_order < 1)
    out.push_back({ViolationCode::StabilizerOrderNonPositive,
                   describe("stabilizer order must be >= 1", t.stabilizer_order)});

  check_cross_section(t.cross_section, out);

  if (t.cross_section.boundary_count >= 0 &&
      static_cast<std::size_t>(t.cross_section.boundary_count) != comps.size()) {
    std::ostringstream os;
    os << "boundary count " << t.cross_section.boundary_count << " differs from "
       << comps.size() << " singular components";
    out.push_back({ViolationCode::BoundaryCountMismatch, os.str()});
  }

  if (comps.empty()) {
    if (t.dehn_euler)
      out.push_back({ViolationCode::DehnEulerUnexpected,
                     "Dehn-Euler number given without singular components"});
    return out;
  }

  if (!t.dehn_euler)
    out.push_back({ViolationCode::DehnEulerMissing,
                   "singular components present but Dehn-Euler number missing"});

  if (t.stabilizer_order >= 3) {
    out.push_back({ViolationCode::SingularOrbitsNeedSmallStabilizer,
                   describe("principal stabilizer Z_k with k >= 3 admits no singular orbits",
                            t.stabilizer_order)});
  } else if (t.stabilizer_order == 2) {
    if (count(SingularComponentType::RP2Bundle) != static_cast<std::int64_t>(comps.size()))
      out.push_back({ViolationCode::Order2NeedsRP2Bundles,
                     "principal stabilizer Z_2 requires all components S^1 x RP^2"});
  } else if (t.stabilizer_order == 1) {
    if (count(SingularComponentType::RP2Bundle) != 0)
      out.push_back({ViolationCode::Order1NeedsSphereBundles,
                     "trivial principal stabilizer requires S^2-bundle components"});
    // Sections contribute even terms, double curves odd ones.
    if (t.dehn_euler && floor_mod(*t.dehn_euler, 2) != count(SingularComponentType::ETwist) % 2) {
      std::ostringstream os;
      os << "Dehn-Euler number " << *t.dehn_euler << " must have the parity of the "
         << count(SingularComponentType::ETwist) << " twisted components";
      out.push_back({ViolationCode::DehnEulerParity, os.str()});
    }
  }
  return out;
}

InvalidTupleError::InvalidTupleError(std::vector<Violation> violations)
    : std::invalid_argument([&] {
        std::string msg = "invalid invariant tuple:";
        for (const auto& v : violations) msg += std::string(" [") + to_string(v.code) + "]";
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

void require_valid(const InvariantTuple& t) {
  auto violations = validate(t);
  if (!violations.empty()) throw InvalidTupleError(std::move(violations));
}

}  // namespace

InvariantTuple normalize(const InvariantTuple& t) {
  require_valid(t);
  InvariantTuple out = t;
  for (auto& pair : out.cross_section.exceptional_orbits)
    pair.beta = floor_mod(pair.beta, pair.alpha);
  std::sort(out.cross_section.exceptional_orbits.begin(),
            out.cross_section.exceptional_orbits.end());
  if (auto& e = out.cross_section.euler_number) {
    const std::int64_t g = std::gcd(e->num, e->den);
    e->num /= g;
    e->den /= g;
    if (e->den < 0) {
      e->num = -e->num;
      e->den = -e->den;
    }
  }
  std::sort(out.singular_components.begin(), out.singular_components.end());
  return out;
}

bool equivalent(const InvariantTuple& a, const InvariantTuple& b) {
  return normalize(a) == normalize(b);
}

GluingPlan realize(const InvariantTuple& t) {
  const InvariantTuple n = normalize(t);
  GluingPlan plan;
  plan.stabilizer_order = n.stabilizer_order;
  plan.base = n.cross_section;
  if (n.singular_components.empty()) return plan;

  // Every boundary but the first takes the smallest contribution of its type;
  // the first absorbs the rest, which has the right parity after validate().
  std::int64_t remaining = *n.dehn_euler;
  for (std::size_t j = 1; j < n.singular_components.size(); ++j)
    remaining -= n.singular_components[j] == SingularComponentType::ETwist ? 1 : 0;

  for (std::size_t j = 0; j < n.singular_components.size(); ++j) {
    const auto type = n.singular_components[j];
    const std::int64_t contribution =
        j == 0 ? remaining : (type == SingularComponentType::ETwist ? 1 : 0);
    GluingStep step{type, 0, contribution};
    switch (type) {
      case SingularComponentType::ETriv: step.collar_shift = contribution / 2; break;
      case SingularComponentType::ETwist: step.collar_shift = floor_div(contribution - 1, 2); break;
      case SingularComponentType::RP2Bundle: step.collar_shift = contribution; break;
    }
    plan.gluings.push_back(step);
  }
  if (plan_dehn_euler(plan) != *n.dehn_euler)
    throw std::logic_error("realize: plan does not reproduce the Dehn-Euler number");
  return plan;
}

namespace {

torus::GluingModel model_of(SingularComponentType type) {
  switch (type) {
    case SingularComponentType::ETriv: return torus::GluingModel::Trivial;
    case SingularComponentType::ETwist: return torus::GluingModel::Twisted;
    case SingularComponentType::RP2Bundle: return torus::GluingModel::Projective;
  }
  return torus::GluingModel::Trivial;
}

}  // namespace

std::int64_t plan_dehn_euler(const GluingPlan& plan) {
  std::vector<torus::BoundaryMarking> markings;
  markings.reserve(plan.gluings.size());
  for (const auto& step : plan.gluings)
    markings.push_back(torus::collar_marking(model_of(step.component), step.collar_shift));
  return torus::dehn_euler_number(markings, plan.stabilizer_order);
}

InvariantTuple tuple_of_plan(const GluingPlan& plan) {
  InvariantTuple t;
  t.stabilizer_order = plan.stabilizer_order;
  t.cross_section = plan.base;
  for (const auto& step : plan.gluings) t.singular_components.push_back(step.component);
  if (!plan.gluings.empty()) t.dehn_euler = plan_dehn_euler(plan);
  return t;
}

}  // namespace so3contact
