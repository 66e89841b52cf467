#include "so3contact/catalog.hpp"

#include <charconv>
#include <future>
#include <random>
#include <stdexcept>

namespace so3contact::catalog {

ExampleId ExampleId::sphere(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return {sign > 0 ? Kind::SpherePlus : Kind::SphereMinus, 0, sign};
}

ExampleId ExampleId::brieskorn(int k, int sign) {
  if (k < 0) throw std::invalid_argument("Brieskorn exponent must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return {Kind::Brieskorn, k, sign};
}

geometry::ContactFormId ExampleId::form() const {
  switch (kind) {
    case Kind::SpherePlus: return geometry::ContactFormId::alpha_plus();
    case Kind::SphereMinus: return geometry::ContactFormId::alpha_minus();
    case Kind::Brieskorn: return geometry::ContactFormId::alpha_k(k, sign);
  }
  throw std::logic_error("unknown example");
}

std::optional<ExampleId> parse_example(const std::string& text) {
  if (text == "sphere+") return ExampleId::sphere(1);
  if (text == "sphere-") return ExampleId::sphere(-1);
  const std::string prefix = "brieskorn:";
  if (text.rfind(prefix, 0) != 0 || text.size() < prefix.size() + 3) return std::nullopt;
  const char sign = text.back();
  if (text[text.size() - 2] != ':' || (sign != '+' && sign != '-')) return std::nullopt;
  const char* first = text.data() + prefix.size();
  const char* last = text.data() + text.size() - 2;
  int k = -1;
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc() || ptr != last || k < 0) return std::nullopt;
  return ExampleId::brieskorn(k, sign == '+' ? 1 : -1);
}

std::string to_string(const ExampleId& id) {
  switch (id.kind) {
    case ExampleId::Kind::SpherePlus: return "sphere+";
    case ExampleId::Kind::SphereMinus: return "sphere-";
    case ExampleId::Kind::Brieskorn:
      return "brieskorn:" + std::to_string(id.k) + ":" + (id.sign > 0 ? "+" : "-");
  }
  return "?";
}

namespace {

std::uint64_t stream_seed(const Options& opts, const ExampleId& id) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(id.kind), static_cast<std::uint32_t>(id.k),
                    static_cast<std::uint32_t>(id.sign + 1)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t(words[0]) << 32) | words[1];
}

}  // namespace

ExampleReport analyze_example(const ExampleId& id, const Options& opts) {
  std::mt19937_64 rng(stream_seed(opts, id));
  const geometry::Variety variety = id.form().variety();
  const bool sphere = id.kind != ExampleId::Kind::Brieskorn;

  ExampleReport report;
  report.id = id;
  report.tuple.stabilizer_order =
      geometry::principal_stabilizer_order(variety, std::max(1, opts.samples), rng);
  // The cross-section closure is a solid torus over a disc with no
  // exceptional orbits.
  report.tuple.cross_section = CrossSectionData{0, 1, {}, std::nullopt};
  report.marking = sphere ? geometry::sphere_marking(id.sign) : geometry::brieskorn_marking(id.k, id.sign);
  report.tuple.singular_components = {sphere ? geometry::sphere_singular_component_type()
                                             : geometry::singular_component_type(id.k)};
  report.tuple.dehn_euler = torus::dehn_euler_number(std::span(&report.marking.marking, 1),
                                                     report.tuple.stabilizer_order);
  report.diffeomorphism_type = sphere || id.k % 2 == 1 ? "S^5" : "S^2 x S^3";
  return report;
}

InvariantTuple invariants_of_example(const ExampleId& id, const Options& opts) {
  return analyze_example(id, opts).tuple;
}

std::vector<ExampleReport> simply_connected_table(int k_max, const Options& opts) {
  if (k_max < 0 || k_max > kMaxTableK)
    throw std::invalid_argument("k_max must lie in [0, " + std::to_string(kMaxTableK) + "]");
  std::vector<std::future<ExampleReport>> jobs;
  for (int k = 0; k <= k_max; ++k)
    for (int sign : {1, -1})
      jobs.push_back(std::async(std::launch::async, [=] {
        return analyze_example(ExampleId::brieskorn(k, sign), opts);
      }));
  std::vector<ExampleReport> out;
  out.reserve(jobs.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> coincidences(
    const std::vector<ExampleReport>& table) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (equivalent(table[i].tuple, table[j].tuple)) out.emplace_back(i, j);
  return out;
}

}  // namespace so3contact::catalog
