#include "heisbl/heisbl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "heisbl/commands.hpp"
#include "heisbl/errors.hpp"

struct hbl_config {
  heisbl::RunConfig value;
};

namespace {

thread_local std::string last_error;

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
hbl_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const heisbl::InvalidInput& e) {
    last_error = e.what();
    return HBL_ERR_USER;
  } catch (const heisbl::BudgetExceeded& e) {
    last_error = e.what();
    return HBL_ERR_BUDGET;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return HBL_ERR_INTERNAL;
  } catch (...) {
    last_error = "internal error";
    return HBL_ERR_INTERNAL;
  }
}

heisbl::CommandOptions convert(const hbl_options* o) {
  heisbl::CommandOptions c;
  if (!o) return c;
  if (o->mode == HBL_MODE_SUFFICIENT) c.mode = heisbl::Mode::Sufficient;
  if (o->mode == HBL_MODE_NECESSARY) c.mode = heisbl::Mode::Necessary;
  if (o->family) c.family = o->family;
  c.pairs = o->all_pairs ? heisbl::PairPolicy::All : heisbl::PairPolicy::Complement;
  c.depth = o->depth;
  c.ladder_r0 = o->ladder_r0;
  c.ladder_factor = o->ladder_factor;
  c.ladder_count = o->ladder_count;
  c.grid_h = o->grid_h;
  if (o->budget) c.budget = o->budget;
  c.seed = o->seed;
  c.workers = o->workers;
  if (o->format) c.format = o->format;
  if (o->q) c.q = o->q;
  if (o->p) c.p = o->p;
  if (o->condition) c.condition = o->condition;
  if (o->v) c.v = o->v;
  if (o->w) c.w = o->w;
  c.dilations = o->dilations;
  if (o->slice_i || o->slice_k) c.slice = std::make_pair(o->slice_i, o->slice_k);
  return c;
}

hbl_status finish(const heisbl::CommandResult& r, char** out) {
  *out = copy_out(r.output);
  last_error = r.message;
  return static_cast<hbl_status>(r.status);
}

using Runner = heisbl::CommandResult (*)(const heisbl::RunConfig&, const heisbl::CommandOptions&);

hbl_status run(Runner f, const hbl_config* config, const hbl_options* options, char** out) {
  return guarded([&] {
    if (!out) throw heisbl::InvalidInput("output pointer is null");
    *out = nullptr;
    if (!config) throw heisbl::InvalidInput("config is null");
    return finish(f(config->value, convert(options)), out);
  });
}

}  // namespace

extern "C" {

void hbl_options_init(hbl_options* options) {
  if (!options) return;
  const heisbl::CommandOptions d;
  *options = hbl_options{};
  options->mode = HBL_MODE_DEFAULT;
  options->depth = d.depth;
  options->ladder_r0 = d.ladder_r0;
  options->ladder_factor = d.ladder_factor;
  options->ladder_count = d.ladder_count;
  options->grid_h = d.grid_h;
  options->seed = d.seed;
  options->workers = d.workers;
  options->dilations = d.dilations;
}

const char* hbl_version(void) { return HEISBL_VERSION; }

const char* hbl_last_error(void) { return last_error.c_str(); }

hbl_status hbl_config_parse(const char* json_text, hbl_config** out) {
  return guarded([&] {
    if (!out || !json_text) throw heisbl::InvalidInput("null argument");
    *out = nullptr;
    *out = new hbl_config{heisbl::parse_config(json_text)};
    return HBL_OK;
  });
}

hbl_status hbl_config_load(const char* path, hbl_config** out) {
  return guarded([&] {
    if (!out || !path) throw heisbl::InvalidInput("null argument");
    *out = nullptr;
    *out = new hbl_config{heisbl::load_config(path)};
    return HBL_OK;
  });
}

void hbl_config_free(hbl_config* config) { delete config; }

hbl_status hbl_run_polytope(const hbl_config* c, const hbl_options* o, char** out) {
  return run(heisbl::run_polytope, c, o, out);
}
hbl_status hbl_run_check(const hbl_config* c, const hbl_options* o, char** out) {
  return run(heisbl::run_check, c, o, out);
}
hbl_status hbl_run_witness(const hbl_config* c, const hbl_options* o, char** out) {
  return run(heisbl::run_witness, c, o, out);
}
hbl_status hbl_run_frames(const hbl_config* c, const hbl_options* o, char** out) {
  return run(heisbl::run_frames, c, o, out);
}
hbl_status hbl_run_montecarlo(const hbl_config* c, const hbl_options* o, char** out) {
  return run(heisbl::run_montecarlo, c, o, out);
}

hbl_status hbl_plot(const char* const* inputs, size_t count, const hbl_options* options, char** out) {
  return guarded([&] {
    if (!out) throw heisbl::InvalidInput("output pointer is null");
    *out = nullptr;
    if (count && !inputs) throw heisbl::InvalidInput("inputs is null");
    std::vector<std::string> texts;
    for (size_t i = 0; i < count; ++i) {
      if (!inputs[i]) throw heisbl::InvalidInput("input " + std::to_string(i + 1) + " is null");
      texts.emplace_back(inputs[i]);
    }
    return finish(heisbl::run_plot(texts, convert(options)), out);
  });
}

hbl_status hbl_validate_report(const char* json_text) {
  return guarded([&] {
    if (!json_text) throw heisbl::InvalidInput("null argument");
    const auto problems = heisbl::validate_report(json_text);
    if (problems.empty()) return HBL_OK;
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "\n") + p;
    throw heisbl::InvalidInput(msg);
  });
}

void hbl_string_free(char* s) { std::free(s); }

}  // extern "C"
