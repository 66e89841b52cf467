#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "so3contact/cli.hpp"

using namespace so3contact;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "so3ctl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("so3ctl_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

const char* kValid = R"({"stabilizer_order": 1,
  "cross_section": {"genus": 0, "boundary_count": 1, "exceptional_orbits": [], "euler_number": null},
  "singular_components": ["ETriv"], "dehn_euler": 4})";

const char* kParity = R"({"stabilizer_order": 1,
  "cross_section": {"genus": 0, "boundary_count": 1, "exceptional_orbits": [], "euler_number": null},
  "singular_components": ["ETwist"], "dehn_euler": 2})";

}  // namespace

TEST_CASE("compare examples") {
  const auto eq = run({"compare", "sphere+", "brieskorn:1:+"});
  CHECK(eq.status == cli::kOk);
  CHECK(eq.out.find("equivalent") != std::string::npos);

  const auto ne = run({"--format", "json", "compare", "sphere+", "sphere-"});
  CHECK(ne.status == cli::kNegative);
  CHECK(json::parse(ne.out)["result"] == "inequivalent");
}

TEST_CASE("compare a file with an example") {
  const auto path = temp_file("w4.json", kValid);
  const auto r = run({"--format", "json", "compare", path, "brieskorn:4:+"});
  CHECK(r.status == cli::kOk);
  CHECK(json::parse(r.out)["result"] == "equivalent");
}

TEST_CASE("validate") {
  const auto good = run({"validate", temp_file("valid.json", kValid)});
  CHECK(good.status == cli::kOk);

  const auto bad = run({"--format", "json", "validate", temp_file("parity.json", kParity)});
  CHECK(bad.status == cli::kNegative);
  const json j = json::parse(bad.out);
  CHECK(j["valid"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["code"] == "dehn_euler_parity");
}

TEST_CASE("malformed input exits with 2 and a location") {
  const auto path = temp_file("broken.json", R"({"stabilizer_order": 1})");
  const auto r = run({"validate", path});
  CHECK(r.status == cli::kFailure);
  CHECK(r.err.find("/cross_section") != std::string::npos);

  CHECK(run({"validate", "/nonexistent/tuple.json"}).status == cli::kFailure);
  CHECK(run({"invariants", "torus"}).status == cli::kFailure);
  CHECK(run({"--bogus", "table", "--kmax", "1"}).status == cli::kFailure);
  CHECK(run({"table", "--kmax", "13"}).status == cli::kFailure);
  CHECK(run({"--format", "xml", "table", "--kmax", "1"}).status == cli::kFailure);
  CHECK(run({}).status == cli::kFailure);
  CHECK(run({"--help"}).status == cli::kOk);
}

TEST_CASE("realize") {
  const auto r = run({"--format", "json", "realize", temp_file("realize.json", kValid)});
  CHECK(r.status == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["plan"]["dehn_euler"] == 4);
  CHECK(run({"realize", temp_file("realize_bad.json", kParity)}).status == cli::kNegative);
}

TEST_CASE("invariants report") {
  const auto r = run({"--format", "json", "invariants", "brieskorn:3:-"});
  CHECK(r.status == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["tuple"]["dehn_euler"] == -3);
  CHECK(j["tuple"]["singular_components"] == json{"ETwist"});
  CHECK(j["diffeomorphism_type"] == "S^5");
  CHECK(j["provenance"]["seed"] == 1);
  CHECK(j["provenance"]["samples"] == 1000);
  CHECK(j["provenance"]["tol"] == 1e-9);
  CHECK(j["provenance"].contains("conventions"));
}

TEST_CASE("twist-check") {
  const auto r = run({"--format", "json", "--samples", "300", "twist-check", "--k", "1"});
  CHECK(r.status == cli::kOk);
  const json j = json::parse(r.out);
  CHECK(j["contact_margin"].get<double>() > 0);
  CHECK(j["result"] == "pass");
  CHECK(j["mapping_torus_type"] == "ETwist");

  const auto wide = run({"--format", "json", "--samples", "300", "twist-check", "--k", "1", "--eps", "0.2"});
  CHECK(wide.status == cli::kNegative);
  CHECK(json::parse(wide.out)["contact_margin"].get<double>() < 0);
}

TEST_CASE("table") {
  const auto r = run({"table", "--kmax", "2"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("coincidence  brieskorn:0:+ ~ brieskorn:0:-") != std::string::npos);
  CHECK(r.out.find("S^2 x S^3") != std::string::npos);
  CHECK(r.out.back() == '\n');
}

TEST_CASE("output is deterministic for a fixed seed") {
  const std::vector<std::string> args{"--format", "json", "--seed", "17", "--samples", "200", "twist-check", "--k", "2"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> inv{"--format", "json", "--seed", "5", "invariants", "sphere-"};
  CHECK(run(inv).out == run(inv).out);
}
