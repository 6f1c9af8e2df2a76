#include "heisbl/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

#include "heisbl/frames.hpp"
#include "heisbl/montecarlo.hpp"
#include "heisbl/plot.hpp"
#include "heisbl/polytope.hpp"

#ifndef HEISBL_VERSION
#define HEISBL_VERSION "0.0.0"
#endif

namespace heisbl {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

constexpr double kSlopeTolerance = 0.15;

ordered fractions(const RationalVector& v) {
  ordered a = ordered::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered exponent_json(const ReciprocalVector& q) {
  return ordered{{"q", fractions(q.values())}, {"p", q.exponent_strings()}};
}

ordered header(const char* command, const CommandOptions& options) {
  return ordered{{"tool", "heisbl"}, {"version", HEISBL_VERSION}, {"command", command}, {"seed", options.seed}};
}

ordered config_json(const RunConfig& config) {
  ordered projs = ordered::array();
  for (const auto& v : config.projections.subspaces()) projs.push_back(v.label());
  ordered c{{"n", config.projections.n()}, {"m", config.projections.m()}, {"projections", projs}};
  c["offsets"] = !config.offsets.a.empty() || !config.offsets.b.empty();
  return c;
}

ordered subspace_json(const Subspace& v) {
  ordered basis = ordered::array();
  for (const auto& col : v.basis().columns()) basis.push_back(fractions(col));
  return ordered{{"label", v.label()}, {"basis", basis}};
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Le: return "<=";
    case Relation::Ge: return ">=";
  }
  return "?";
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

std::string pick_format(const CommandOptions& options, const char* fallback, std::initializer_list<const char*> allowed) {
  const std::string f = options.format.empty() ? fallback : options.format;
  for (const char* a : allowed)
    if (f == a) return f;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw InvalidInput("format '" + f + "' is not available for this command (choose " + list + ")");
}

bool covers_coordinates(const ProjectionConfig& config, const std::vector<Subspace>& family) {
  if (!config.is_coordinate()) return false;
  const std::set<Subspace> have(family.begin(), family.end());
  for (const auto& c : coordinate_subspaces(config.n()))
    if (!have.count(c)) return false;
  return true;
}

std::vector<ReciprocalVector> exponents_from(const RunConfig& config, const CommandOptions& options) {
  std::vector<ReciprocalVector> out;
  if (!options.q.empty() && !options.p.empty()) throw InvalidInput("pass either --q or --p, not both");
  if (!options.q.empty())
    out.push_back(parse_exponent_list(options.q, false));
  else if (!options.p.empty())
    out.push_back(parse_exponent_list(options.p, true));
  else
    out = config.test_exponents;
  const std::size_t dim = 2 * config.projections.m();
  for (const auto& q : out)
    if (q.size() != dim)
      throw InvalidInput("exponent vector has " + std::to_string(q.size()) + " entries; this config needs 2m = " +
                         std::to_string(dim));
  return out;
}

ConstraintSystem system_for(const RunConfig& config, const CommandOptions& options, Mode mode) {
  return build_system(config.projections, resolve_family(config, options), mode, options.pairs);
}

ordered polytope_json(const RunConfig& config, const CommandOptions& options, const ConstraintSystem& sys,
                      const VPolytope& v) {
  ordered r = header("polytope", options);
  r["config"] = config_json(config);
  r["mode"] = to_string(sys.mode);
  r["relative_to_family"] = !covers_coordinates(config.projections, sys.family);
  ordered fam = ordered::array();
  for (const auto& s : sys.family) fam.push_back(subspace_json(s));
  r["family"] = fam;
  if (sys.mode == Mode::Necessary) {
    r["pair_policy"] = options.pairs == PairPolicy::All ? "all" : "complement";
    ordered pairs = ordered::array();
    for (const auto& [a, b] : sys.pairs) pairs.push_back(ordered::array({a.label(), b.label()}));
    r["pairs"] = pairs;
  }
  ordered cons = ordered::array();
  for (const auto& c : sys.constraints)
    cons.push_back(ordered{{"tag", sys.tag_label(c.tag)},
                           {"coeffs", fractions(c.coeffs)},
                           {"relation", relation_text(c.relation)},
                           {"rhs", to_string(c.rhs)}});
  r["constraints"] = cons;
  ordered verts = ordered::array();
  for (const auto& q : v.vertices) verts.push_back(exponent_json(ReciprocalVector(q)));
  r["feasible"] = !v.empty();
  r["vertices"] = verts;
  r["affine_dimension"] = affine_dimension(v);
  return r;
}

}  // namespace

std::vector<Subspace> resolve_family(const RunConfig& config, const CommandOptions& options) {
  const auto& pc = config.projections;
  std::vector<Subspace> fam;
  if (options.family.empty()) {
    fam = default_family(pc, options.depth);
    fam.insert(fam.end(), config.family.begin(), config.family.end());
  } else if (options.family == "coords") {
    fam = coordinate_subspaces(pc.n());
    fam.insert(fam.end(), config.family.begin(), config.family.end());
  } else if (options.family == "heuristic") {
    fam = heuristic_family(pc, config.family, options.depth);
  } else if (options.family.rfind("file:", 0) == 0) {
    fam = parse_family_json(pc.n(), read_text_file(options.family.substr(5)));
  } else {
    throw InvalidInput("family must be coords, heuristic or file:PATH, got '" + options.family + "'");
  }
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  if (fam.empty()) throw InvalidInput("the subspace family is empty");
  return fam;
}

CommandResult run_polytope(const RunConfig& config, const CommandOptions& options) {
  const std::string format = pick_format(options, "json", {"json", "csv"});
  const auto sys = system_for(config, options, options.mode.value_or(Mode::Sufficient));
  const auto v = enumerate_vertices(HPolytope::from_system(sys));
  CommandResult res;
  if (format == "json") {
    res.output = dump(polytope_json(config, options, sys, v));
  } else {
    std::ostringstream out;
    for (std::size_t j = 0; j < sys.dim; ++j) out << (j ? "," : "") << "q" << j + 1;
    out << "\n";
    for (const auto& q : v.vertices) {
      for (std::size_t j = 0; j < q.size(); ++j) out << (j ? "," : "") << to_string(q[j]);
      out << "\n";
    }
    res.output = out.str();
  }
  if (v.empty()) {
    res.status = ExitStatus::Infeasible;
    res.message = std::string("the ") + to_string(sys.mode) + " polytope is empty";
  }
  return res;
}

CommandResult run_check(const RunConfig& config, const CommandOptions& options) {
  const std::string format = pick_format(options, "json", {"json", "csv"});
  const auto qs = exponents_from(config, options);
  if (qs.empty()) throw InvalidInput("no exponent vector to check: pass --q or --p, or list test_exponents in the config");
  const auto sys = system_for(config, options, options.mode.value_or(Mode::Sufficient));
  const HPolytope h = HPolytope::from_system(sys);

  ordered r = header("check", options);
  r["config"] = config_json(config);
  r["mode"] = to_string(sys.mode);
  r["relative_to_family"] = !covers_coordinates(config.projections, sys.family);
  ordered results = ordered::array();
  std::ostringstream csv;
  csv << "q,inside,violated,critical\n";
  for (const auto& q : qs) {
    const auto mem = contains(h, q.values());
    ordered violated = ordered::array();
    for (auto i : mem.violated) violated.push_back(sys.tag_label(h.constraints()[i].tag));
    const bool a_holds = satisfies_A(config.projections, q);
    ordered critical = ordered::array();
    if (a_holds)
      for (const auto& v : critical_subspaces(config.projections, q, sys.family)) critical.push_back(v.label());
    ordered item = exponent_json(q);
    item["inside"] = mem.inside;
    item["violated"] = violated;
    item["satisfies_A"] = a_holds;
    item["critical"] = critical;
    results.push_back(item);

    std::string qtext, vtext, ctext;
    for (const auto& x : q.values()) qtext += (qtext.empty() ? "" : " ") + to_string(x);
    for (const auto& t : violated) vtext += (vtext.empty() ? "" : ";") + t.get<std::string>();
    for (const auto& t : critical) ctext += (ctext.empty() ? "" : ";") + t.get<std::string>();
    csv << qtext << "," << (mem.inside ? "true" : "false") << ",\"" << vtext << "\",\"" << ctext << "\"\n";
  }
  r["results"] = results;
  CommandResult res;
  res.output = format == "json" ? dump(r) : csv.str();
  return res;
}

CommandResult run_witness(const RunConfig& config, const CommandOptions& options) {
  const std::string format = pick_format(options, "csv", {"csv", "json"});
  const auto& pc = config.projections;
  const std::size_t n = pc.n();
  const WitnessKind kind = parse_witness_kind(options.condition);
  const Subspace v = options.v.empty() ? Subspace::full(n) : parse_subspace_spec(n, options.v);
  const Subspace w = options.w.empty() ? v.orthogonal_complement() : parse_subspace_spec(n, options.w);
  const BoxWitness wit = BoxWitness::make(pc, kind, v, w);
  const auto ladder = geometric_ladder(options.ladder_r0, options.ladder_factor, options.ladder_count);
  GridSpec grid;
  grid.h = options.grid_h;
  grid.budget = options.budget.value_or(grid.budget);
  grid.workers = options.workers;
  std::optional<ReciprocalVector> q;
  if (const auto qs = exponents_from(RunConfig{pc, {}, {}, {}, {}}, options); !qs.empty()) q = qs.front();

  const WitnessTable table = witness_ladder(pc, wit, ladder, grid, q, config.offsets);
  const std::size_t maps = 2 * pc.m();

  std::vector<bool> within(maps, false);
  bool omega_ok = false;
  if (table.omega_slope) {
    omega_ok = std::fabs(*table.omega_slope - wit.omega_exponent().get_d()) <= kSlopeTolerance;
    for (std::size_t j = 0; j < maps; ++j) {
      const double pred = wit.image_exponents()[j].get_d();
      within[j] = wit.images_are_upper_bounds() ? table.image_slopes[j] <= pred + kSlopeTolerance
                                                : std::fabs(table.image_slopes[j] - pred) <= kSlopeTolerance;
    }
  }

  CommandResult res;
  if (!table.complete) {
    res.status = ExitStatus::BudgetExceeded;
    res.message = "witness ladder stopped early: " + table.failure;
  }

  if (format == "csv") {
    std::ostringstream out;
    out << "parameter,omega";
    for (std::size_t j = 0; j < maps; ++j) out << ",pi" << j + 1 << "_lower,pi" << j + 1 << "_upper";
    if (q) out << ",ratio";
    out << "\n";
    for (const auto& row : table.rows) {
      out << number(row.parameter) << "," << number(row.omega);
      for (const auto& b : row.images) out << "," << number(b.lower) << "," << number(b.upper);
      if (q) out << "," << number(*row.ratio);
      out << "\n";
    }
    auto summary = [&](const std::string& label, const std::string& omega, auto&& per_map, const std::string& last) {
      out << label << "," << omega;
      for (std::size_t j = 0; j < maps; ++j) out << "," << per_map(j) << ",";
      if (q) out << "," << last;
      out << "\n";
    };
    if (table.omega_slope) {
      summary("fitted_slope", number(*table.omega_slope), [&](std::size_t j) { return number(table.image_slopes[j]); }, "");
    }
    summary("predicted", to_string(wit.omega_exponent()), [&](std::size_t j) { return to_string(wit.image_exponents()[j]); },
            q ? to_string(-*table.predicted_ratio_exponent) : "");
    summary("bound", "~", [&](std::size_t) { return std::string(wit.images_are_upper_bounds() ? "<=" : "~"); }, "");
    if (table.omega_slope)
      summary("within_tolerance", omega_ok ? "true" : "false", [&](std::size_t j) { return std::string(within[j] ? "true" : "false"); }, "");
    if (!table.complete) out << "partial," << "\"" << table.failure << "\"\n";
    res.output = out.str();
    return res;
  }

  ordered r = header("witness", options);
  r["config"] = config_json(config);
  r["condition"] = to_string(kind);
  r["V"] = v.label();
  r["W"] = w.label();
  r["parameter"] = wit.parameter();
  r["description"] = wit.description();
  r["tolerance"] = kSlopeTolerance;
  r["images_are_upper_bounds"] = wit.images_are_upper_bounds();
  r["predicted"] = ordered{{"omega", to_string(wit.omega_exponent())}, {"images", fractions(wit.image_exponents())}};
  ordered rows = ordered::array();
  for (const auto& row : table.rows) {
    ordered imgs = ordered::array();
    for (const auto& b : row.images) imgs.push_back(ordered{{"lower", b.lower}, {"upper", b.upper}});
    ordered item{{"parameter", row.parameter}, {"omega", row.omega}, {"images", imgs}};
    if (row.ratio) item["ratio"] = *row.ratio;
    rows.push_back(item);
  }
  r["rows"] = rows;
  r["complete"] = table.complete;
  if (!table.complete) r["failure"] = table.failure;
  if (table.omega_slope) {
    r["fitted"] = ordered{{"omega", *table.omega_slope}, {"images", table.image_slopes}};
    r["within_tolerance"] = ordered{{"omega", omega_ok}, {"images", within}};
  }
  if (q) {
    r["q"] = exponent_json(*q);
    r["predicted_ratio_exponent"] = to_string(-*table.predicted_ratio_exponent);
  }
  res.output = dump(r);
  return res;
}

CommandResult run_frames(const RunConfig& config, const CommandOptions& options) {
  pick_format(options, "json", {"json"});
  const auto& pc = config.projections;
  const FrameReport fr = analyze_frames(pc);

  ordered r = header("frames", options);
  r["config"] = config_json(config);
  ordered fields = ordered::array();
  for (const auto& f : fr.fields)
    fields.push_back(ordered{{"index", f.index + 1},
                             {"side", f.side == Side::X ? "x" : "y"},
                             {"field", f.describe()},
                             {"spatial", fractions(f.spatial)},
                             {"t_linear", fractions(f.t_linear)},
                             {"t_constant", to_string(f.t_constant)}});
  r["fields"] = fields;
  ordered brackets = ordered::array();
  for (const auto& b : fr.brackets)
    brackets.push_back(ordered{{"pair", ordered::array({b.j + 1, b.k + 1})}, {"value", to_string(b.value)}});
  r["brackets"] = brackets;
  r["spatial_span_full"] = fr.spatial_span_full;
  ordered pairs = ordered::array();
  for (const auto& [j, k] : fr.pairs) pairs.push_back(ordered::array({j + 1, k + 1}));
  r["frame_pairs"] = pairs;
  ordered points = ordered::array();
  for (const auto& q : fr.points) points.push_back(exponent_json(q));
  r["extreme_points"] = points;
  r["conjectural"] = fr.conjectural;

  // Compare the readout with both exponent polytopes.
  const auto suff = system_for(config, options, Mode::Sufficient);
  const auto nec = system_for(config, options, Mode::Necessary);
  const HPolytope hs = HPolytope::from_system(suff), hn = HPolytope::from_system(nec);
  const auto vs = enumerate_vertices(hs);
  ordered checks = ordered::array();
  std::set<RationalVector> frame_set;
  for (const auto& q : fr.points) {
    frame_set.insert(q.values());
    const auto ms = contains(hs, q.values());
    ordered violated = ordered::array();
    for (auto i : ms.violated) violated.push_back(suff.tag_label(hs.constraints()[i].tag));
    checks.push_back(ordered{{"q", fractions(q.values())},
                             {"in_sufficient", ms.inside},
                             {"violated_sufficient", violated},
                             {"in_necessary", contains(hn, q.values()).inside}});
  }
  ordered verts = ordered::array();
  for (const auto& q : vs.vertices) verts.push_back(fractions(q));
  const std::set<RationalVector> vertex_set(vs.vertices.begin(), vs.vertices.end());
  r["cross_check"] = ordered{{"sufficient_vertices", verts},
                             {"points", checks},
                             {"matches_sufficient_vertices", frame_set == vertex_set}};
  CommandResult res;
  res.output = dump(r);
  return res;
}

CommandResult run_montecarlo(const RunConfig& config, const CommandOptions& options) {
  const std::string format = pick_format(options, "json", {"json", "csv"});
  if (config.functions.empty()) throw InvalidInput("config has no \"functions\" to integrate");
  MonteCarloOptions mc;
  mc.samples = options.budget.value_or(mc.samples);
  mc.seed = options.seed;
  mc.workers = options.workers;
  const auto qs = exponents_from(RunConfig{config.projections, {}, {}, {}, {}}, options);

  const auto base = monte_carlo_form(config.projections, config.offsets, config.functions, mc);
  ordered r = header("montecarlo", options);
  r["config"] = config_json(config);
  r["samples"] = base.samples;
  r["hits"] = base.hits;
  r["estimate"] = base.estimate;
  r["standard_error"] = base.standard_error;
  r["box_lo"] = base.box_lo;
  r["box_hi"] = base.box_hi;
  r["box_volume"] = base.box_volume;

  std::ostringstream csv;
  if (!qs.empty()) {
    const auto rows = dilation_sweep(config.projections, config.offsets, config.functions, qs.front(), options.dilations, mc);
    ordered sweep = ordered::array();
    double lo = INFINITY, hi = 0;
    csv << "lambda,estimate,standard_error,norm_product,ratio\n";
    for (const auto& row : rows) {
      sweep.push_back(ordered{{"lambda", row.lambda},
                              {"estimate", row.form.estimate},
                              {"standard_error", row.form.standard_error},
                              {"norm_product", row.norm_product},
                              {"ratio", row.ratio}});
      csv << number(row.lambda) << "," << number(row.form.estimate) << "," << number(row.form.standard_error) << ","
          << number(row.norm_product) << "," << number(row.ratio) << "\n";
      lo = std::min(lo, row.ratio);
      hi = std::max(hi, row.ratio);
    }
    r["q"] = exponent_json(qs.front());
    r["dilation_sweep"] = sweep;
    r["ratio_max_over_min"] = lo > 0 ? hi / lo : INFINITY;
  } else {
    csv << "estimate,standard_error,samples,hits\n"
        << number(base.estimate) << "," << number(base.standard_error) << "," << base.samples << "," << base.hits << "\n";
  }
  CommandResult res;
  res.output = format == "json" ? dump(r) : csv.str();
  return res;
}

CommandResult run_plot(const std::vector<std::string>& inputs, const CommandOptions& options) {
  const std::string format = pick_format(options, "svg", {"svg", "csv"});
  if (inputs.empty()) throw InvalidInput("plot needs at least one report or config");
  if (options.slice && (options.slice->first < 1 || options.slice->second < 1))
    throw InvalidInput("slice indices are 1-based");
  std::optional<std::pair<std::size_t, std::size_t>> axes;
  auto slice_for = [&](std::size_t dim) {
    const auto ik = options.slice ? std::make_pair(std::size_t(options.slice->first - 1), std::size_t(options.slice->second - 1))
                                  : std::make_pair(std::size_t(0), dim / 2);
    if (!axes) axes = ik;
    return ik;
  };
  std::vector<PlotSeries> series;
  for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
    const std::string prefix = inputs.size() > 1 ? "input " + std::to_string(idx + 1) + ": " : "";
    json doc;
    try {
      doc = json::parse(inputs[idx]);
    } catch (const json::parse_error&) {
      (void)parse_config(inputs[idx]);  // reports the line and column
    }
    if (doc.is_object() && doc.value("tool", "") == "heisbl") {
      if (doc.value("command", "") != "polytope") throw InvalidInput(prefix + "only polytope reports can be plotted");
      if (const auto problems = validate_report(inputs[idx]); !problems.empty())
        throw InvalidInput(prefix + "invalid report: " + problems.front());
      std::vector<RationalVector> verts;
      for (const auto& v : doc["vertices"]) {
        RationalVector q;
        for (const auto& s : v["q"]) q.push_back(parse_rational(s.get<std::string>()));
        verts.push_back(std::move(q));
      }
      const auto [i, k] = slice_for(2 * doc["config"]["m"].get<std::size_t>());
      series.push_back(slice_series(prefix + doc["mode"].get<std::string>(), verts, i, k));
      continue;
    }
    const RunConfig cfg = parse_config(inputs[idx]);
    std::vector<Mode> modes;
    if (options.mode)
      modes.push_back(*options.mode);
    else
      modes = {Mode::Necessary, Mode::Sufficient};
    const auto [i, k] = slice_for(2 * cfg.projections.m());
    for (Mode mode : modes) {
      const auto v = enumerate_vertices(HPolytope::from_system(system_for(cfg, options, mode)));
      series.push_back(slice_series(prefix + to_string(mode), v.vertices, i, k));
    }
  }
  CommandResult res;
  const auto [i, k] = *axes;
  res.output = format == "svg" ? render_svg(series, i, k) : render_plot_csv(series, i, k);
  return res;
}

// ---------------------------------------------------------------------------

namespace {

struct Validator {
  std::vector<std::string> problems;

  void fail(const std::string& path, const std::string& msg) { problems.push_back(path + ": " + msg); }

  bool has(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) {
      fail(path, std::string("missing \"") + key + "\"");
      return false;
    }
    return true;
  }

  void fraction_list(const json& a, const std::string& path, bool unit_interval) {
    if (!a.is_array()) return fail(path, "expected an array of fraction strings");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_string()) {
        fail(path + "/" + std::to_string(i), "expected a fraction string");
        continue;
      }
      try {
        const Rational r = parse_rational(a[i].get<std::string>());
        if (unit_interval && (r < 0 || r > 1)) fail(path + "/" + std::to_string(i), "outside [0, 1]");
      } catch (const InvalidInput&) {
        fail(path + "/" + std::to_string(i), "not an exact fraction");
      }
    }
  }

  void exponent(const json& e, const std::string& path) {
    if (has(e, "q", path)) fraction_list(e["q"], path + "/q", true);
    if (has(e, "p", path) && !e["p"].is_array()) fail(path + "/p", "expected an array");
  }

  void typed(const json& obj, const char* key, const std::string& path, bool (json::*check)() const noexcept,
             const char* what) {
    if (has(obj, key, path) && !(obj[key].*check)()) fail(path + "/" + key, std::string("expected ") + what);
  }
};

}  // namespace

std::vector<std::string> validate_report(const std::string& text) {
  Validator v;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    return {std::string("not JSON: ") + e.what()};
  }
  if (!doc.is_object()) return {"/: expected an object"};
  if (doc.value("tool", "") != "heisbl") v.fail("/tool", "expected \"heisbl\"");
  v.typed(doc, "version", "", &json::is_string, "a string");
  v.typed(doc, "seed", "", &json::is_number_unsigned, "an unsigned integer");
  if (v.has(doc, "config", "")) {
    v.typed(doc["config"], "n", "/config", &json::is_number_unsigned, "an unsigned integer");
    v.typed(doc["config"], "m", "/config", &json::is_number_unsigned, "an unsigned integer");
  }
  if (!v.has(doc, "command", "") || !doc["command"].is_string()) return v.problems;
  const std::string cmd = doc["command"];

  if (cmd == "polytope") {
    if (v.has(doc, "mode", "") && doc["mode"] != "necessary" && doc["mode"] != "sufficient")
      v.fail("/mode", "expected necessary or sufficient");
    v.typed(doc, "affine_dimension", "", &json::is_number_integer, "an integer");
    v.typed(doc, "feasible", "", &json::is_boolean, "a boolean");
    v.typed(doc, "family", "", &json::is_array, "an array");
    if (v.has(doc, "vertices", "") && doc["vertices"].is_array())
      for (std::size_t i = 0; i < doc["vertices"].size(); ++i) v.exponent(doc["vertices"][i], "/vertices/" + std::to_string(i));
    if (v.has(doc, "constraints", "") && doc["constraints"].is_array())
      for (std::size_t i = 0; i < doc["constraints"].size(); ++i) {
        const auto& c = doc["constraints"][i];
        const std::string path = "/constraints/" + std::to_string(i);
        v.typed(c, "tag", path, &json::is_string, "a string");
        if (v.has(c, "coeffs", path)) v.fraction_list(c["coeffs"], path + "/coeffs", false);
        if (v.has(c, "rhs", path)) v.fraction_list(json::array({c["rhs"]}), path + "/rhs", false);
        if (v.has(c, "relation", path) && c["relation"] != "=" && c["relation"] != "<=" && c["relation"] != ">=")
          v.fail(path + "/relation", "expected =, <= or >=");
      }
  } else if (cmd == "check") {
    if (v.has(doc, "results", "") && doc["results"].is_array())
      for (std::size_t i = 0; i < doc["results"].size(); ++i) {
        const auto& e = doc["results"][i];
        const std::string path = "/results/" + std::to_string(i);
        v.exponent(e, path);
        v.typed(e, "inside", path, &json::is_boolean, "a boolean");
        v.typed(e, "violated", path, &json::is_array, "an array");
        v.typed(e, "critical", path, &json::is_array, "an array");
      }
  } else if (cmd == "witness") {
    v.typed(doc, "complete", "", &json::is_boolean, "a boolean");
    if (v.has(doc, "rows", "") && doc["rows"].is_array())
      for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
        const auto& row = doc["rows"][i];
        const std::string path = "/rows/" + std::to_string(i);
        v.typed(row, "parameter", path, &json::is_number, "a number");
        v.typed(row, "omega", path, &json::is_number, "a number");
        v.typed(row, "images", path, &json::is_array, "an array");
      }
  } else if (cmd == "frames") {
    v.typed(doc, "frame_pairs", "", &json::is_array, "an array");
    v.typed(doc, "conjectural", "", &json::is_boolean, "a boolean");
    if (v.has(doc, "extreme_points", "") && doc["extreme_points"].is_array())
      for (std::size_t i = 0; i < doc["extreme_points"].size(); ++i)
        v.exponent(doc["extreme_points"][i], "/extreme_points/" + std::to_string(i));
  } else if (cmd == "montecarlo") {
    v.typed(doc, "estimate", "", &json::is_number, "a number");
    v.typed(doc, "standard_error", "", &json::is_number, "a number");
    v.typed(doc, "samples", "", &json::is_number_unsigned, "an unsigned integer");
  } else {
    v.fail("/command", "unknown command '" + cmd + "'");
  }
  return v.problems;
}

}  // namespace heisbl
