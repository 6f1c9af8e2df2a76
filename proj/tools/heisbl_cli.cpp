// heisbl: exponent polytopes, witnesses and frame readouts for Brascamp-Lieb
// type forms on the Heisenberg group. Links only the C interface.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heisbl/heisbl.h"

namespace {

bool use_color() { return !std::getenv("NO_COLOR") && isatty(STDERR_FILENO); }

void report(const char* kind, const std::string& msg) {
  if (msg.empty()) return;
  const bool color = use_color();
  const char* tint = std::string(kind) == "error" ? "\033[31m" : "\033[33m";
  std::fprintf(stderr, "%s%s:%s %s\n", color ? tint : "", kind, color ? "\033[0m" : "", msg.c_str());
}

std::string slurp(const std::string& path) {
  std::ostringstream s;
  if (path == "-") {
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  s << in.rdbuf();
  return s.str();
}

struct Args {
  std::string config;
  std::vector<std::string> inputs;
  std::string mode, family, pairs = "complement", format, out, q, p, condition = "A1", v, w, ladder, slice;
  int depth = 2, dilations = 4;
  double grid_h = 1.0 / 64;
  std::uint64_t budget = 0, seed = 1;
  unsigned workers = 0;
};

std::vector<double> split_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("'" + item + "' is not a number");
    out.push_back(v);
  }
  return out;
}

hbl_options to_options(const Args& a) {
  hbl_options o;
  hbl_options_init(&o);
  if (a.mode == "sufficient") o.mode = HBL_MODE_SUFFICIENT;
  if (a.mode == "necessary") o.mode = HBL_MODE_NECESSARY;
  o.family = a.family.empty() ? nullptr : a.family.c_str();
  o.all_pairs = a.pairs == "all";
  o.depth = a.depth;
  if (!a.ladder.empty()) {
    const auto l = split_numbers(a.ladder);
    if (l.size() != 3 || l[2] != double(int(l[2]))) throw CLI::ValidationError("--ladder expects r0,factor,count");
    o.ladder_r0 = l[0];
    o.ladder_factor = l[1];
    o.ladder_count = int(l[2]);
  }
  o.grid_h = a.grid_h;
  o.budget = a.budget;
  o.seed = a.seed;
  o.workers = a.workers;
  o.format = a.format.empty() ? nullptr : a.format.c_str();
  o.q = a.q.empty() ? nullptr : a.q.c_str();
  o.p = a.p.empty() ? nullptr : a.p.c_str();
  o.condition = a.condition.c_str();
  o.v = a.v.empty() ? nullptr : a.v.c_str();
  o.w = a.w.empty() ? nullptr : a.w.c_str();
  o.dilations = a.dilations;
  if (!a.slice.empty()) {
    const auto s = split_numbers(a.slice);
    if (s.size() != 2) throw CLI::ValidationError("--slice expects i,k");
    o.slice_i = int(s[0]);
    o.slice_k = int(s[1]);
  }
  return o;
}

int emit(hbl_status status, char* output, const std::string& out_path) {
  if (output) {
    if (out_path.empty() || out_path == "-") {
      std::fputs(output, stdout);
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << output;
      if (!f) {
        hbl_string_free(output);
        report("error", "cannot write " + out_path);
        return HBL_ERR_USER;
      }
    }
    hbl_string_free(output);
  }
  if (status == HBL_ERR_USER || status == HBL_ERR_INTERNAL)
    report("error", hbl_last_error());
  else
    report("note", hbl_last_error());
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponent polytopes, scaling witnesses and frame readouts for Heisenberg Brascamp-Lieb forms", "heisbl"};
  app.set_version_flag("--version", std::string(hbl_version()));
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub, bool takes_config) {
    if (takes_config) sub->add_option("config", a.config, "Config file (JSON), or - for stdin")->required();
    sub->add_option("--out,-o", a.out, "Write the report here instead of stdout");
    sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  };
  auto family = [&](CLI::App* sub) {
    sub->add_option("--mode", a.mode, "sufficient (default) or necessary")->check(CLI::IsMember({"sufficient", "necessary"}));
    sub->add_option("--family", a.family, "Subspace family: coords, heuristic or file:PATH");
    sub->add_option("--pairs", a.pairs, "Necessary mode: complement pairs (default) or all pairs")
        ->check(CLI::IsMember({"complement", "all"}));
    sub->add_option("--depth", a.depth, "Closure depth of the heuristic family")->check(CLI::NonNegativeNumber);
  };
  auto exponents = [&](CLI::App* sub) {
    auto* q = sub->add_option("--q", a.q, "Reciprocal exponents, e.g. 2/5,1/5,2/5,1/5");
    sub->add_option("--p", a.p, "Exponents, e.g. 5/2,5,5/2,5 (inf allowed)")->excludes(q);
  };

  auto* polytope = app.add_subcommand("polytope", "Vertices and tagged constraints of the exponent polytope");
  common(polytope, true);
  family(polytope);

  auto* check = app.add_subcommand("check", "Test exponent vectors against the constraints");
  common(check, true);
  family(check);
  exponents(check);

  auto* witness = app.add_subcommand("witness", "Scaling table of a box witness along a parameter ladder");
  common(witness, true);
  exponents(witness);
  witness->add_option("--condition", a.condition, "A1, A2, B1, B2, C1 or C2")
      ->check(CLI::IsMember({"A1", "A2", "B1", "B2", "C1", "C2"}));
  witness->add_option("--V", a.v, "Subspace V: coords:1,2 | basis:1,1;0,1 | zero | full");
  witness->add_option("--W", a.w, "Subspace W <= V^perp (C conditions; default V^perp)");
  witness->add_option("--ladder", a.ladder, "r0,factor,count (default 8,2,5)");
  witness->add_option("--grid-h", a.grid_h, "Relative grid cell size")->check(CLI::Range(1e-9, 1.0));
  witness->add_option("--budget", a.budget, "Grid cells per estimate (default 1e8)");
  witness->add_option("--workers", a.workers, "Threads (0: all cores)");

  auto* frames = app.add_subcommand("frames", "Tangent fields, brackets and frame extreme points");
  common(frames, true);
  family(frames);

  auto* mc = app.add_subcommand("montecarlo", "Monte Carlo estimate of the form on the config's functions");
  common(mc, true);
  exponents(mc);
  mc->add_option("--budget", a.budget, "Number of samples (default 1e6)");
  mc->add_option("--seed", a.seed, "Random seed");
  mc->add_option("--workers", a.workers, "Threads (0: all cores)");
  mc->add_option("--dilations", a.dilations, "Dilation steps 2^0..2^k for the norm-ratio sweep")->check(CLI::Range(0, 30));

  auto* plot = app.add_subcommand("plot", "Two-coordinate slice of one or more polytopes");
  plot->add_option("inputs", a.inputs, "Polytope reports or config files")->required();
  plot->add_option("--out,-o", a.out, "Write the plot here instead of stdout");
  plot->add_option("--format", a.format, "svg (default) or csv")->check(CLI::IsMember({"svg", "csv"}));
  plot->add_option("--slice", a.slice, "Coordinates i,k to plot (1-based, default 1,m+1)");
  family(plot);

  hbl_options opts;
  try {
    app.parse(argc, argv);
    opts = to_options(a);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return HBL_ERR_USER;
  }

  char* output = nullptr;
  try {
    if (plot->parsed()) {
      std::vector<std::string> texts;
      for (const auto& path : a.inputs) texts.push_back(slurp(path));
      std::vector<const char*> ptrs;
      for (const auto& t : texts) ptrs.push_back(t.c_str());
      return emit(hbl_plot(ptrs.data(), ptrs.size(), &opts, &output), output, a.out);
    }

    hbl_config* config = nullptr;
    const hbl_status st = a.config == "-" ? hbl_config_parse(slurp("-").c_str(), &config)
                                          : hbl_config_load(a.config.c_str(), &config);
    if (st != HBL_OK) return emit(st, nullptr, a.out);
    hbl_status status;
    if (polytope->parsed())
      status = hbl_run_polytope(config, &opts, &output);
    else if (check->parsed())
      status = hbl_run_check(config, &opts, &output);
    else if (witness->parsed())
      status = hbl_run_witness(config, &opts, &output);
    else if (frames->parsed())
      status = hbl_run_frames(config, &opts, &output);
    else
      status = hbl_run_montecarlo(config, &opts, &output);
    hbl_config_free(config);
    return emit(status, output, a.out);
  } catch (const std::exception& e) {
    report("error", e.what());
    return HBL_ERR_USER;
  }
}
