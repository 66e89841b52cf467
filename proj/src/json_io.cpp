#include "so3contact/json_io.hpp"

#include <initializer_list>
#include <limits>
#include <set>

namespace so3contact {

using nlohmann::json;

SchemaError::SchemaError(std::string location, const std::string& message)
    : std::runtime_error(location + ": " + message), location_(std::move(location)) {}

namespace {

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> allowed) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : obj.items())
    if (!keys.contains(item.key())) throw SchemaError(where + "/" + item.key(), "unknown field");
}

const json& field(const json& obj, const std::string& where, const char* name) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw SchemaError(where + "/" + name, "missing field");
  return *it;
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where, "expected an integer");
  return v.get<std::int64_t>();
}

int as_small_int(const json& v, const std::string& where) {
  const std::int64_t x = as_int(v, where);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw SchemaError(where, "integer out of range");
  return static_cast<int>(x);
}

std::pair<std::int64_t, std::int64_t> as_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw SchemaError(where, "expected a pair [a, b]");
  return {as_int(v[0], where + "/0"), as_int(v[1], where + "/1")};
}

CrossSectionData cross_section_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  reject_unknown(j, where, {"genus", "boundary_count", "exceptional_orbits", "euler_number"});
  CrossSectionData cs;
  cs.genus = as_small_int(field(j, where, "genus"), where + "/genus");
  cs.boundary_count = as_small_int(field(j, where, "boundary_count"), where + "/boundary_count");
  const json& orbits = field(j, where, "exceptional_orbits");
  if (!orbits.is_array()) throw SchemaError(where + "/exceptional_orbits", "expected an array");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    auto [a, b] = as_pair(orbits[i], where + "/exceptional_orbits/" + std::to_string(i));
    cs.exceptional_orbits.push_back({a, b});
  }
  const json& euler = field(j, where, "euler_number");
  if (!euler.is_null()) {
    auto [num, den] = as_pair(euler, where + "/euler_number");
    cs.euler_number = Rational{num, den};
  }
  return cs;
}

}  // namespace

json tuple_to_json(const InvariantTuple& t) {
  json orbits = json::array();
  for (const auto& p : t.cross_section.exceptional_orbits) orbits.push_back({p.alpha, p.beta});
  json comps = json::array();
  for (auto c : t.singular_components) comps.push_back(to_string(c));
  const auto& e = t.cross_section.euler_number;
  return json{
      {"stabilizer_order", t.stabilizer_order},
      {"cross_section",
       {{"genus", t.cross_section.genus},
        {"boundary_count", t.cross_section.boundary_count},
        {"exceptional_orbits", orbits},
        {"euler_number", e ? json{e->num, e->den} : json(nullptr)}}},
      {"singular_components", comps},
      {"dehn_euler", t.dehn_euler ? json(*t.dehn_euler) : json(nullptr)},
  };
}

InvariantTuple tuple_from_json(const json& j) {
  const std::string root;
  if (!j.is_object()) throw SchemaError("/", "expected an object");
  reject_unknown(j, root, {"stabilizer_order", "cross_section", "singular_components", "dehn_euler"});
  InvariantTuple t;
  t.stabilizer_order = as_small_int(field(j, root, "stabilizer_order"), "/stabilizer_order");
  t.cross_section = cross_section_from_json(field(j, root, "cross_section"), "/cross_section");
  const json& comps = field(j, root, "singular_components");
  if (!comps.is_array()) throw SchemaError("/singular_components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "/singular_components/" + std::to_string(i);
    if (!comps[i].is_string()) throw SchemaError(where, "expected a component name");
    auto type = parse_component_type(comps[i].get<std::string>());
    if (!type) throw SchemaError(where, "unknown component '" + comps[i].get<std::string>() + "'");
    t.singular_components.push_back(*type);
  }
  const json& n = field(j, root, "dehn_euler");
  if (!n.is_null()) t.dehn_euler = as_int(n, "/dehn_euler");
  return t;
}

InvariantTuple parse_tuple(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("byte " + std::to_string(e.byte), "syntax error");
  }
  return tuple_from_json(j);
}

json plan_to_json(const GluingPlan& plan) {
  InvariantTuple base_only;
  base_only.cross_section = plan.base;
  json steps = json::array();
  for (const auto& s : plan.gluings) {
    steps.push_back({{"component", to_string(s.component)},
                     {"collar_matrix", {{1, s.collar_shift}, {0, 1}}},
                     {"twist_count", s.twist_count}});
  }
  return json{
      {"stabilizer_order", plan.stabilizer_order},
      {"base", tuple_to_json(base_only)["cross_section"]},
      {"gluings", steps},
      {"construction", plan.gluings.empty() ? "SO(3) x_{S^1} R" : "glue singular collars onto SO(3) x_{S^1} R"},
      {"dehn_euler", plan.gluings.empty() ? json(nullptr) : json(plan_dehn_euler(plan))},
  };
}

}  // namespace so3contact
