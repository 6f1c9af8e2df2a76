#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "heisbl/heisbl.h"

namespace {

std::string data(const char* name) { return std::string(HEISBL_TEST_DATA) + "/" + name; }

int cli(const std::string& args) {
  const std::string cmd = std::string(HEISBL_CLI) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("version and options") {
  CHECK(std::strlen(hbl_version()) > 0);
  hbl_options o;
  hbl_options_init(&o);
  CHECK(o.ladder_count == 5);
  CHECK(o.seed == 1);
  CHECK(o.slice_i == 0);
}

TEST_CASE("config handles and status codes") {
  hbl_config* cfg = nullptr;
  REQUIRE(hbl_config_load(data("lw_h2.json").c_str(), &cfg) == HBL_OK);
  hbl_options o;
  hbl_options_init(&o);
  char* out = nullptr;
  REQUIRE(hbl_run_polytope(cfg, &o, &out) == HBL_OK);
  CHECK(std::string(out).find("\"1/5\"") != std::string::npos);
  CHECK(hbl_validate_report(out) == HBL_OK);
  hbl_string_free(out);

  o.format = "csv";
  REQUIRE(hbl_run_polytope(cfg, &o, &out) == HBL_OK);
  CHECK(std::string(out) == "q1,q2,q3,q4\n1/5,2/5,1/5,2/5\n2/5,1/5,2/5,1/5\n");
  hbl_string_free(out);

  o.format = "svg";
  CHECK(hbl_run_polytope(cfg, &o, &out) == HBL_ERR_USER);
  CHECK(out == nullptr);
  CHECK(std::string(hbl_last_error()).find("svg") != std::string::npos);
  hbl_config_free(cfg);

  CHECK(hbl_config_load(data("malformed.json").c_str(), &cfg) == HBL_ERR_USER);
  CHECK(cfg == nullptr);
  CHECK(std::string(hbl_last_error()).find("line 4") != std::string::npos);
  CHECK(hbl_run_polytope(nullptr, &o, &out) == HBL_ERR_USER);
}

TEST_CASE("infeasible and budget statuses still return a report") {
  hbl_options o;
  hbl_options_init(&o);
  hbl_config* cfg = nullptr;
  char* out = nullptr;
  REQUIRE(hbl_config_load(data("infeasible.json").c_str(), &cfg) == HBL_OK);
  CHECK(hbl_run_polytope(cfg, &o, &out) == HBL_ERR_INFEASIBLE);
  REQUIRE(out != nullptr);
  hbl_string_free(out);
  hbl_config_free(cfg);

  REQUIRE(hbl_config_load(data("skewed_h2.json").c_str(), &cfg) == HBL_OK);
  o.condition = "C2";
  o.v = "coords:1";
  o.budget = 1000;
  CHECK(hbl_run_witness(cfg, &o, &out) == HBL_ERR_BUDGET);
  REQUIRE(out != nullptr);
  CHECK(std::string(out).find("partial") != std::string::npos);
  hbl_string_free(out);
  hbl_config_free(cfg);
}

TEST_CASE("plot and validation through the C API") {
  hbl_options o;
  hbl_options_init(&o);
  const char* text = R"({"n": 2, "m": 2, "projections": [{"coords": [1]}, {"coords": [2]}]})";
  char* out = nullptr;
  REQUIRE(hbl_plot(&text, 1, &o, &out) == HBL_OK);
  CHECK(std::string(out).rfind("<svg", 0) == 0);
  hbl_string_free(out);
  CHECK(hbl_validate_report("{\"tool\": \"other\"}") == HBL_ERR_USER);
}

TEST_CASE("command-line exit codes") {
  CHECK(cli("polytope " + data("lw_h2.json")) == 0);
  CHECK(cli("polytope " + data("malformed.json")) == 2);
  CHECK(cli("polytope " + data("overlap.json")) == 2);
  CHECK(cli("polytope " + data("infeasible.json")) == 3);
  CHECK(cli("witness " + data("skewed_h2.json") + " --condition C2 --V coords:1 --budget 1000") == 4);
  CHECK(cli("frames " + data("infeasible.json")) == 2);
  CHECK(cli("check " + data("lw_h2.json") + " --q 1/2") == 2);
  CHECK(cli("polytope") == 2);
  CHECK(cli("polytope " + data("lw_h2.json") + " --mode maybe") == 2);
  CHECK(cli("nonsense") == 2);
  CHECK(cli("--version") == 0);
  CHECK(cli("plot " + data("lw_h2.json") + " " + data("skewed_h2.json")) == 0);
  CHECK(cli("montecarlo " + data("radon_h1.json") + " --budget 10000 --workers 2") == 0);
}
