#include "so3contact/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "so3contact/catalog.hpp"
#include "so3contact/dehn_twist.hpp"
#include "so3contact/geometry.hpp"
#include "so3contact/invariants.hpp"
#include "so3contact/json_io.hpp"
#include "so3contact/kernels.hpp"

namespace so3contact::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Settings {
  std::uint64_t seed = 1;
  int samples = 1000;
  std::string format = "table";
  double tol = 1e-9;
};

struct Outcome {
  int status = kOk;
  json report;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json provenance(const Settings& s) {
  return {
      {"tool", "so3ctl"},
      {"version", kVersion},
      {"seed", s.seed},
      {"samples", s.samples},
      {"tol", s.tol},
      {"kernel_isa", std::string(kernels::to_string(kernels::detect_isa()))},
      {"conventions",
       {{"lie_basis", "X, Y, Z rotate about e1, e2, e3; exp(tZ)e1 = cos t e1 + sin t e2"},
        {"moment_map", "<mu,A> = 2 x^T A y on S^5, 4 x^T A y on W_k"},
        {"cross_section_sphere", "x1 y2 - y1 x2 > 0, i.e. <mu,Z> < 0"},
        {"cross_section_brieskorn", "x2 y1 - x1 y2 > 0, i.e. <mu,Z> > 0"},
        {"cross_section_orientation", "-alpha ^ d alpha on the cross-section"},
        {"alpha_minus", "alpha+ - (a db - b da), a + ib = sum z_j^2"},
        {"boundary_chart", "t = arg z0 (W_k) or arg(z1^2 + z2^2) (S^5); phi = arg(z1 + i z2)"},
        {"projective_collar", "O(2) collars act by phi + 2 theta; c counts once, no chart is traced"},
        {"mapping_torus", "contact factor checked pointwise on R x T*S^2"}}},
  };
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InvariantTuple load_tuple_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_tuple(text);
  } catch (const SchemaError& e) {
    throw InputError(path + ": " + e.what());
  }
}

InvariantTuple load_tuple(const std::string& arg, const Settings& s) {
  if (auto id = catalog::parse_example(arg)) return catalog::invariants_of_example(*id, {s.seed, s.samples});
  return load_tuple_file(arg);
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({{"code", to_string(v.code)}, {"message", v.message}});
  return out;
}

json class_json(torus::TorusClass c) { return json::array({c.a, c.b}); }

// ---------------------------------------------------------------- commands

Outcome cmd_invariants(const std::string& arg, const Settings& s) {
  const auto id = catalog::parse_example(arg);
  if (!id) throw InputError(arg + ": unknown example (sphere+, sphere-, brieskorn:<k>:<+|->)");
  const auto rep = catalog::analyze_example(*id, {s.seed, s.samples});
  const auto& m = rep.marking;
  Outcome o;
  o.report = {
      {"example", catalog::to_string(*id)},
      {"form", id->form().name()},
      {"tuple", tuple_to_json(rep.tuple)},
      {"diffeomorphism_type", rep.diffeomorphism_type},
      {"marking",
       {{"kind", m.marking.kind == torus::CurveKind::Double ? "double" : "section"},
        {"marked_curve", class_json(m.marked_curve)},
        {"section_boundary_traced", class_json(m.section_boundary)},
        {"section_orientation", m.section_orientation},
        {"section_boundary_oriented", class_json(m.marking.section_boundary)}}},
      {"violations", violations_json(validate(rep.tuple))},
  };
  if (!validate(rep.tuple).empty()) o.status = kFailure;
  return o;
}

Outcome cmd_compare(const std::string& a, const std::string& b, const Settings& s) {
  const InvariantTuple ta = load_tuple(a, s), tb = load_tuple(b, s);
  const auto va = validate(ta), vb = validate(tb);
  Outcome o;
  o.report = {{"left", a}, {"right", b}};
  if (!va.empty() || !vb.empty()) {
    o.status = kNegative;
    o.report["result"] = "invalid";
    o.report["left_violations"] = violations_json(va);
    o.report["right_violations"] = violations_json(vb);
    return o;
  }
  const bool eq = equivalent(ta, tb);
  o.status = eq ? kOk : kNegative;
  o.report["result"] = eq ? "equivalent" : "inequivalent";
  o.report["left_normalized"] = tuple_to_json(normalize(ta));
  o.report["right_normalized"] = tuple_to_json(normalize(tb));
  return o;
}

Outcome cmd_validate(const std::string& path) {
  const InvariantTuple t = load_tuple_file(path);
  const auto vs = validate(t);
  Outcome o;
  o.status = vs.empty() ? kOk : kNegative;
  o.report = {{"file", path}, {"valid", vs.empty()}, {"violations", violations_json(vs)}};
  return o;
}

Outcome cmd_realize(const std::string& path) {
  const InvariantTuple t = load_tuple_file(path);
  const auto vs = validate(t);
  Outcome o;
  o.report = {{"file", path}};
  if (!vs.empty()) {
    o.status = kNegative;
    o.report["valid"] = false;
    o.report["violations"] = violations_json(vs);
    return o;
  }
  const GluingPlan plan = realize(t);
  o.report["valid"] = true;
  o.report["plan"] = plan_to_json(plan);
  if (t.dehn_euler && plan_dehn_euler(plan) != *t.dehn_euler) o.status = kFailure;
  return o;
}

Outcome cmd_twist_check(int k, std::optional<double> eps, const Settings& s) {
  if (k < 0) throw InputError("--k must be >= 0");
  const twist::TwistConfig cfg(k, eps.value_or(twist::TwistConfig::default_eps(k)));
  const int n = std::max(2, s.samples);
  std::mt19937_64 rng(s.seed);

  double worst_pullback = 0, worst_equivariance = 0, worst_inverse = 0, worst_validity = 0;
  for (int i = 0; i < n; ++i) {
    const auto pt = twist::random_point(rng, 2 * cfg.eps());
    const auto v = twist::random_tangent(pt, rng, cfg.eps());
    worst_pullback =
        std::max(worst_pullback, twist::pullback_defect(cfg, pt, v) / (1 + pt.p.norm()));

    std::normal_distribution<double> g(0.0, 1.0);
    const Eigen::Matrix3d R = geometry::exp({g(rng), g(rng), g(rng)});
    const auto lhs = twist::twist(cfg, {R * pt.q, R * pt.p});
    const auto image = twist::twist(cfg, pt);
    worst_equivariance = std::max(
        {worst_equivariance, (lhs.q - R * image.q).norm(), (lhs.p - R * image.p).norm()});
    const auto back = twist::twist_inverse(cfg, image);
    worst_inverse = std::max({worst_inverse, (back.q - pt.q).norm(), (back.p - pt.p).norm()});
    worst_validity = std::max({worst_validity, twist::validity_residual(image),
                               std::abs(image.p.norm() - pt.p.norm())});
  }

  const double margin = twist::contact_margin(cfg, n);
  const double predicted = twist::normalization(1.0) * std::exp(-4.0) / cfg.eps();
  const double measured = twist::max_rho_prime(cfg, 100 * n);
  const auto marking = twist::twist_marking(k);

  const bool pullback_ok = worst_pullback <= 1e-6;
  const bool maps_ok = worst_equivariance <= s.tol && worst_inverse <= s.tol && worst_validity <= s.tol;
  Outcome o;
  o.status = margin > 0 && pullback_ok && maps_ok ? kOk : kNegative;
  o.report = {
      {"k", k},
      {"eps", cfg.eps()},
      {"eps_rule", eps ? "user" : "default"},
      {"normalization", cfg.normalization()},
      {"contact_margin", margin},
      {"max_rho_prime", measured},
      {"max_rho_prime_predicted", predicted},
      {"max_rho_prime_ratio", measured / predicted},
      {"pullback_defect_max", worst_pullback},
      {"pullback_tolerance", 1e-6},
      {"equivariance_error_max", worst_equivariance},
      {"inverse_error_max", worst_inverse},
      {"validity_residual_max", worst_validity},
      {"mapping_torus_type", to_string(twist::mapping_torus_type(k))},
      {"marking_contribution", marking.contribution},
      {"section_crossings", marking.crossings},
      {"marked_crossings", marking.marked_crossings},
      {"result", o.status == kOk ? "pass" : "fail"},
  };
  return o;
}

Outcome cmd_table(int k_max, const Settings& s) {
  if (k_max < 0 || k_max > catalog::kMaxTableK)
    throw InputError("--kmax must lie in [0, " + std::to_string(catalog::kMaxTableK) + "]");
  const auto table = catalog::simply_connected_table(k_max, {s.seed, s.samples});
  json entries = json::array();
  for (const auto& e : table)
    entries.push_back({{"example", catalog::to_string(e.id)},
                       {"diffeomorphism_type", e.diffeomorphism_type},
                       {"tuple", tuple_to_json(e.tuple)}});
  json pairs = json::array();
  for (auto [i, j] : catalog::coincidences(table))
    pairs.push_back({catalog::to_string(table[i].id), catalog::to_string(table[j].id)});
  Outcome o;
  o.report = {{"kmax", k_max}, {"entries", entries}, {"coincidences", pairs}};
  return o;
}

// ---------------------------------------------------------------- output

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void flatten(const json& j, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& item : j.items())
      flatten(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), rows);
    return;
  }
  rows.push_back({prefix, scalar_text(j)});
}

std::string components_text(const json& comps) {
  std::string s;
  for (const auto& c : comps) s += (s.empty() ? "" : ",") + c.get<std::string>();
  return s.empty() ? "-" : s;
}

void print_table_report(std::ostream& out, const std::string& command, const Outcome& o) {
  if (command == "table") {
    std::vector<std::vector<std::string>> rows{{"example", "k_stab", "components", "n", "type"}};
    for (const auto& e : o.report["entries"]) {
      const json& t = e["tuple"];
      rows.push_back({e["example"].get<std::string>(), scalar_text(t["stabilizer_order"]),
                      components_text(t["singular_components"]), scalar_text(t["dehn_euler"]),
                      e["diffeomorphism_type"].get<std::string>()});
    }
    print_rows(out, rows);
    for (const auto& p : o.report["coincidences"])
      out << "coincidence  " << p[0].get<std::string>() << " ~ " << p[1].get<std::string>() << "\n";
    return;
  }
  std::vector<std::vector<std::string>> rows;
  flatten(o.report, "", rows);
  print_rows(out, rows);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of contact SO(3)-manifolds in dimension five", "so3ctl"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--seed", s.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", s.samples, "Samples per sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--tol", s.tol, "Tolerance for map checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string example, left, right, file;
  int k = 0, k_max = 0;
  std::optional<double> eps;

  auto* inv = app.add_subcommand("invariants", "Compute the invariants of an example");
  inv->add_option("example", example, "sphere+, sphere-, brieskorn:<k>:<+|->")->required();
  auto* cmp = app.add_subcommand("compare", "Decide equivalence of two tuples or examples");
  cmp->add_option("left", left, "Tuple file or example id")->required();
  cmp->add_option("right", right, "Tuple file or example id")->required();
  auto* val = app.add_subcommand("validate", "Check a tuple file");
  val->add_option("file", file, "Tuple JSON file")->required();
  auto* rea = app.add_subcommand("realize", "Construction plan of a tuple file");
  rea->add_option("file", file, "Tuple JSON file")->required();
  auto* tw = app.add_subcommand("twist-check", "Verify the k-fold twist");
  tw->add_option("--k", k, "Twist count")->required()->check(CLI::NonNegativeNumber);
  tw->add_option("--eps", eps, "Cut-off radius")->check(CLI::PositiveNumber);
  auto* tab = app.add_subcommand("table", "Table of the Brieskorn examples");
  tab->add_option("--kmax", k_max, "Largest exponent")->required()->check(CLI::Range(0, catalog::kMaxTableK));

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFailure;
  }

  std::string command;
  Outcome o;
  try {
    if (inv->parsed()) {
      command = "invariants";
      o = cmd_invariants(example, s);
    } else if (cmp->parsed()) {
      command = "compare";
      o = cmd_compare(left, right, s);
    } else if (val->parsed()) {
      command = "validate";
      o = cmd_validate(file);
    } else if (rea->parsed()) {
      command = "realize";
      o = cmd_realize(file);
    } else if (tw->parsed()) {
      command = "twist-check";
      o = cmd_twist_check(k, eps, s);
    } else {
      command = "table";
      o = cmd_table(k_max, s);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kFailure;
  }

  o.report["command"] = command;
  o.report["status"] = o.status;
  o.report["provenance"] = provenance(s);
  if (s.format == "json") {
    out << o.report.dump(2) << "\n";
  } else {
    print_table_report(out, command, o);
    if (command == "table") {
      std::vector<std::vector<std::string>> rows;
      flatten(o.report["provenance"], "provenance", rows);
      print_rows(out, rows);
    }
  }
  return o.status;
}

}  // namespace so3contact::cli
