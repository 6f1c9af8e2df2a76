#include <doctest.h>

#include <json.hpp>

#include "heisbl/commands.hpp"
#include "heisbl/errors.hpp"
#include "support.hpp"

using namespace heisbl;
using heisbl::testing::read_data;
using nlohmann::json;

namespace {

RunConfig load(const char* name) { return load_config(heisbl::testing::data_path(name)); }

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("config errors point at the problem") {
  CHECK(error_of(read_data("malformed.json")).find("line 4, column") != std::string::npos);
  CHECK(error_of(read_data("overlap.json")).find("/projections/0/coords") != std::string::npos);
  CHECK(error_of(R"({"n": 2, "m": 1, "projections": [{"coords": [3]}]})").find("/projections/0/coords/0") !=
        std::string::npos);
  CHECK(error_of(R"({"n": 2, "m": 2, "projections": [{"coords": [1]}]})").find("expected m = 2") != std::string::npos);
  CHECK(error_of(R"({"n": 1, "m": 1, "projections": ["full"], "offsets": {"a": [[1], [0]]}})").find("/offsets") !=
        std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), InvalidInput);
}

TEST_CASE("subspace and exponent syntaxes") {
  CHECK(parse_subspace_spec(2, "coords:2").label() == "<e2>");
  CHECK(parse_subspace_spec(2, "basis:1,1").label() == "<(1,1)>");
  CHECK(parse_subspace_spec(3, "basis:1,0,0;0,1/2,0") == CoordinateSubspace(3, {0, 1}).to_subspace());
  CHECK(parse_subspace_spec(2, "zero").is_zero());
  CHECK_THROWS_AS(parse_subspace_spec(2, "coords:3"), InvalidInput);
  CHECK_THROWS_AS(parse_subspace_spec(2, "plane"), InvalidInput);
  CHECK(parse_exponent_list("5/2,inf", true).values() == heisbl::testing::q_of({"2/5", "0"}));
  CHECK_THROWS_AS(parse_exponent_list("1/2,x", false), InvalidInput);
}

TEST_CASE("polytope report") {
  const auto r = run_polytope(load("lw_h2.json"), {});
  CHECK(r.status == ExitStatus::Ok);
  CHECK(validate_report(r.output).empty());
  const json j = json::parse(r.output);
  CHECK(j["tool"] == "heisbl");
  CHECK(j["command"] == "polytope");
  CHECK(j["relative_to_family"] == false);
  CHECK(j["affine_dimension"] == 1);
  CHECK(j["vertices"].size() == 2);
  CHECK(j["vertices"][0]["q"] == json::array({"1/5", "2/5", "1/5", "2/5"}));
  CHECK(j["vertices"][0]["p"] == json::array({"5", "5/2", "5", "5/2"}));
  CHECK_FALSE(j.contains("timestamp"));

  CommandOptions csv;
  csv.format = "csv";
  CHECK(run_polytope(load("lw_h2.json"), csv).output == "q1,q2,q3,q4\n1/5,2/5,1/5,2/5\n2/5,1/5,2/5,1/5\n");
  csv.format = "svg";
  CHECK_THROWS_AS(run_polytope(load("lw_h2.json"), csv), InvalidInput);
}

TEST_CASE("non-coordinate configs are reported relative to their family") {
  const json j = json::parse(run_polytope(load("skewed_h2.json"), {}).output);
  CHECK(j["relative_to_family"] == true);
}

TEST_CASE("infeasible polytope") {
  const auto r = run_polytope(load("infeasible.json"), {});
  CHECK(r.status == ExitStatus::Infeasible);
  CHECK(validate_report(r.output).empty());
  CHECK(json::parse(r.output)["vertices"].empty());
  CHECK(json::parse(r.output)["affine_dimension"] == -1);
}

TEST_CASE("family selection") {
  const auto cfg = load("skewed_h2.json");
  CommandOptions o;
  o.family = "coords";
  CHECK(resolve_family(cfg, o).size() == 4);
  o.family = "file:" + heisbl::testing::data_path("family_lw.json");
  CHECK(resolve_family(cfg, o).size() == 4);
  o.family = "heuristic";
  CHECK(resolve_family(cfg, o).size() >= 4);
  o.family = "everything";
  CHECK_THROWS_AS(resolve_family(cfg, o), InvalidInput);
  o.family = "file:/nonexistent.json";
  CHECK_THROWS_AS(resolve_family(cfg, o), InvalidInput);
}

TEST_CASE("check report") {
  const auto cfg = load("lw_h2.json");
  const json j = json::parse(run_check(cfg, {}).output);
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][0]["inside"] == true);
  CHECK(j["results"][0]["critical"] == json::array({"<e2>", "R^2"}));
  CHECK(j["results"][2]["inside"] == false);
  CHECK(j["results"][2]["violated"] == json::array({"A1", "A2"}));

  CommandOptions o;
  o.q = "1/5,2/5,2/5,1/5";
  const json s = json::parse(run_check(load("skewed_h2.json"), o).output);
  CHECK(s["results"][0]["violated"] == json::array({"C(<e1>)", "C(<(1,-1)>)"}));
  o.q = "1/5,2/5";
  CHECK_THROWS_AS(run_check(cfg, o), InvalidInput);
  CHECK_THROWS_AS(run_check(load("skewed_h2.json"), {}), InvalidInput);
}

TEST_CASE("witness table") {
  CommandOptions o;
  o.condition = "B1";
  o.v = "coords:1";
  const auto csv = run_witness(load("lw_h2.json"), o);
  CHECK(csv.status == ExitStatus::Ok);
  CHECK(csv.output.rfind("parameter,omega,pi1_lower,pi1_upper", 0) == 0);
  CHECK(csv.output.find("\nwithin_tolerance,true,true,,true,,true,,true,\n") != std::string::npos);

  o.format = "json";
  const auto r = run_witness(load("lw_h2.json"), o);
  CHECK(validate_report(r.output).empty());
  const json j = json::parse(r.output);
  CHECK(j["rows"].size() == 5);
  CHECK(j["predicted"]["omega"] == "2");

  // The skewed C2 witness has sign-changing fibers, so it needs a real grid.
  CommandOptions tight;
  tight.condition = "C2";
  tight.v = "coords:1";
  tight.format = "json";
  tight.budget = 1000;
  const auto partial = run_witness(load("skewed_h2.json"), tight);
  CHECK(partial.status == ExitStatus::BudgetExceeded);
  CHECK(json::parse(partial.output)["complete"] == false);

  o.budget.reset();
  o.condition = "C1";
  o.w = "coords:1";
  CHECK_THROWS_AS(run_witness(load("lw_h2.json"), o), InvalidInput);
  o.condition = "D";
  CHECK_THROWS_AS(run_witness(load("lw_h2.json"), o), InvalidInput);
}

TEST_CASE("frames report and cross-check") {
  const auto r = run_frames(load("skewed_h2.json"), {});
  CHECK(validate_report(r.output).empty());
  const json j = json::parse(r.output);
  CHECK(j["frame_pairs"] == json::parse("[[1,3],[1,4],[2,3],[2,4]]"));
  CHECK(j["conjectural"] == false);
  CHECK(j["cross_check"]["matches_sufficient_vertices"] == false);
  for (const auto& p : j["cross_check"]["points"]) CHECK(p["in_necessary"] == true);

  CHECK(json::parse(run_frames(load("lw_h2.json"), {}).output)["cross_check"]["matches_sufficient_vertices"] == true);
  CHECK_THROWS_AS(run_frames(load("infeasible.json"), {}), InvalidInput);
}

TEST_CASE("Monte Carlo report") {
  CommandOptions o;
  o.budget = 100000;
  const auto r = run_montecarlo(load("radon_h1.json"), o);
  CHECK(validate_report(r.output).empty());
  const json j = json::parse(r.output);
  CHECK(j["samples"] == 100000);
  CHECK(j["seed"] == 1);

  o.p = "3/2,3/2";
  o.dilations = 2;
  const json s = json::parse(run_montecarlo(load("radon_h1.json"), o).output);
  CHECK(s["dilation_sweep"].size() == 3);
  CHECK(s["ratio_max_over_min"].get<double>() < 1.1);

  CHECK_THROWS_AS(run_montecarlo(load("lw_h2.json"), {}), InvalidInput);
}

TEST_CASE("plots") {
  CommandOptions o;
  const auto svg = run_plot({read_data("lw_h2.json")}, o);
  CHECK(svg.output.rfind("<svg", 0) == 0);
  CHECK(svg.output.find("(1/5, 1/5)") != std::string::npos);

  const auto report = run_polytope(load("lw_h2.json"), {}).output;
  o.format = "csv";
  CHECK(run_plot({report}, o).output == "series,q1,q3\nsufficient,1/5,1/5\nsufficient,2/5,2/5\n");

  const auto empty = run_plot({read_data("infeasible.json")}, CommandOptions{});
  CHECK(empty.output.find(">infeasible</text>") != std::string::npos);

  o.slice = {1, 1};
  CHECK_THROWS_AS(run_plot({report}, o), InvalidInput);
  CommandOptions nec;
  nec.mode = Mode::Necessary;
  nec.slice = {1, 2};  // q1 + q2 is constant on the necessary square
  CHECK_THROWS_AS(run_plot({read_data("skewed_h2.json")}, nec), InvalidInput);
  nec.slice.reset();
  CHECK(run_plot({read_data("skewed_h2.json")}, nec).output.find("<polygon") != std::string::npos);
  CHECK_THROWS_AS(run_plot({read_data("malformed.json")}, CommandOptions{}), InvalidInput);
}

TEST_CASE("report validation catches schema problems") {
  CHECK_FALSE(validate_report("{").empty());
  CHECK_FALSE(validate_report(R"({"tool":"heisbl","version":"0","seed":1,"command":"polytope"})").empty());
  auto j = json::parse(run_polytope(load("lw_h2.json"), {}).output);
  j["vertices"][0]["q"][0] = "0.2";
  const auto problems = validate_report(j.dump());
  REQUIRE(problems.size() == 1);
  CHECK(problems[0] == "/vertices/0/q/0: not an exact fraction");
}
