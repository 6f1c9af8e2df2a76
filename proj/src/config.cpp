#include "heisbl/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace heisbl {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InvalidInput((path.empty() ? std::string("/") : path) + ": " + msg);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("syntax error");
    throw InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                       (pos == std::string::npos ? what : what.substr(pos)));
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t count_field(const json& obj, const char* key, const std::string& path) {
  const json& v = field(obj, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path + "/" + key, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

Rational rational_value(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InvalidInput& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected an integer or a rational string such as \"1/2\"");
}

RationalVector rational_vector(const json& v, std::size_t len, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  if (v.size() != len) fail(path, "expected " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
  RationalVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_value(v[i], path + "/" + std::to_string(i)));
  return out;
}

double bound_value(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return rational_value(v, path).get_d();
  }
  fail(path, "expected a number, a rational string or \"inf\"");
}

Subspace subspace_value(const json& v, std::size_t n, const std::string& path) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "zero") return Subspace::zero(n);
    if (s == "full") return Subspace::full(n);
    fail(path, "expected \"zero\", \"full\" or an object with \"coords\" or \"basis\"");
  }
  if (!v.is_object()) fail(path, "expected an object with \"coords\" or \"basis\"");
  if (v.contains("coords")) {
    const json& c = v["coords"];
    if (!c.is_array()) fail(path + "/coords", "expected an array of 1-based coordinate indices");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_number_integer() || c[i].get<long long>() < 1 || c[i].get<long long>() > static_cast<long long>(n))
        fail(path + "/coords/" + std::to_string(i), "coordinate index must be an integer in 1.." + std::to_string(n));
      idx.push_back(c[i].get<std::size_t>() - 1);
    }
    try {
      return CoordinateSubspace(n, idx).to_subspace();
    } catch (const InvalidInput& e) {
      fail(path + "/coords", e.what());
    }
  }
  if (v.contains("basis")) {
    const json& b = v["basis"];
    if (!b.is_array()) fail(path + "/basis", "expected an array of vectors");
    std::vector<RationalVector> vecs;
    for (std::size_t i = 0; i < b.size(); ++i) vecs.push_back(rational_vector(b[i], n, path + "/basis/" + std::to_string(i)));
    return Subspace::span(n, vecs);
  }
  fail(path, "expected \"coords\" or \"basis\"");
}

ReciprocalVector exponent_value(const json& v, std::size_t len, const std::string& path) {
  if (!v.is_object()) fail(path, "expected {\"q\": [...]} or {\"p\": [...]}");
  const bool has_q = v.contains("q"), has_p = v.contains("p");
  if (has_q == has_p) fail(path, "expected exactly one of \"q\" or \"p\"");
  const char* key = has_q ? "q" : "p";
  const json& arr = v[key];
  const std::string sub = path + "/" + key;
  if (!arr.is_array()) fail(sub, "expected an array");
  if (arr.size() != len) fail(sub, "expected " + std::to_string(len) + " entries, got " + std::to_string(arr.size()));
  std::vector<std::string> items;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr[i].is_number_integer())
      items.push_back(std::to_string(arr[i].get<long long>()));
    else if (arr[i].is_string())
      items.push_back(arr[i].get<std::string>());
    else
      fail(sub + "/" + std::to_string(i), "expected an integer or a string");
  }
  try {
    return has_q ? ReciprocalVector::parse(items) : ReciprocalVector::from_exponents(items);
  } catch (const InvalidInput& e) {
    fail(sub, e.what());
  }
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("", "expected a JSON object");
  const std::size_t n = count_field(doc, "n", "");
  const std::size_t m = count_field(doc, "m", "");
  if (n == 0) fail("/n", "n must be at least 1");
  if (m == 0) fail("/m", "m must be at least 1");
  const json& projs = field(doc, "projections", "");
  if (!projs.is_array()) fail("/projections", "expected an array");
  if (projs.size() != m) fail("/projections", "expected m = " + std::to_string(m) + " entries, got " + std::to_string(projs.size()));
  std::vector<Subspace> subspaces;
  for (std::size_t j = 0; j < m; ++j) {
    const std::string path = "/projections/" + std::to_string(j);
    subspaces.push_back(subspace_value(projs[j], n, path));
  }

  RunConfig cfg{ProjectionConfig(n, subspaces), {}, {}, {}, {}};

  if (doc.contains("offsets")) {
    const json& off = doc["offsets"];
    if (!off.is_object()) fail("/offsets", "expected an object with \"a\" and/or \"b\"");
    for (const char* key : {"a", "b"}) {
      if (!off.contains(key)) continue;
      const std::string path = std::string("/offsets/") + key;
      const json& arr = off[key];
      if (!arr.is_array() || arr.size() != 2 * m) fail(path, "expected 2m = " + std::to_string(2 * m) + " vectors");
      auto& dest = key[0] == 'a' ? cfg.offsets.a : cfg.offsets.b;
      for (std::size_t i = 0; i < arr.size(); ++i) dest.push_back(rational_vector(arr[i], n, path + "/" + std::to_string(i)));
    }
    try {
      (void)vertical_projections(cfg.projections, cfg.offsets);
    } catch (const InvalidInput& e) {
      fail("/offsets", e.what());
    }
  }

  if (doc.contains("family")) {
    const json& fam = doc["family"];
    if (!fam.is_array()) fail("/family", "expected an array of subspaces");
    for (std::size_t i = 0; i < fam.size(); ++i) cfg.family.push_back(subspace_value(fam[i], n, "/family/" + std::to_string(i)));
  }

  if (doc.contains("test_exponents")) {
    const json& te = doc["test_exponents"];
    if (!te.is_array()) fail("/test_exponents", "expected an array");
    for (std::size_t i = 0; i < te.size(); ++i)
      cfg.test_exponents.push_back(exponent_value(te[i], 2 * m, "/test_exponents/" + std::to_string(i)));
  }

  if (doc.contains("functions")) {
    const json& fs = doc["functions"];
    if (!fs.is_array() || fs.size() != 2 * m) fail("/functions", "expected 2m = " + std::to_string(2 * m) + " functions");
    const auto maps = vertical_projections(cfg.projections, cfg.offsets);
    for (std::size_t j = 0; j < fs.size(); ++j) {
      const std::string path = "/functions/" + std::to_string(j);
      const json& f = fs[j];
      if (!f.is_object()) fail(path, "expected {\"lo\": [...], \"hi\": [...]} or {\"zero\": true}");
      if (f.contains("zero")) {
        if (!f["zero"].is_boolean()) fail(path + "/zero", "expected a boolean");
        if (f["zero"].get<bool>()) {
          cfg.functions.push_back(BoxFunction::zero_function());
          continue;
        }
      }
      const std::size_t dim = maps[j].codomain_dim();
      BoxFunction box;
      for (const char* key : {"lo", "hi"}) {
        const json& arr = field(f, key, path);
        const std::string sub = path + "/" + key;
        if (!arr.is_array() || arr.size() != dim)
          fail(sub, "expected " + std::to_string(dim) + " bounds (codomain dimension of map " + std::to_string(j + 1) + ")");
        auto& dest = key[0] == 'l' ? box.lo : box.hi;
        for (std::size_t i = 0; i < arr.size(); ++i) dest.push_back(bound_value(arr[i], sub + "/" + std::to_string(i)));
      }
      cfg.functions.push_back(std::move(box));
    }
  }
  return cfg;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig load_config(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_config(text);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Subspace parse_subspace_spec(std::size_t n, const std::string& spec) {
  const std::string s = trim(spec);
  if (s == "zero") return Subspace::zero(n);
  if (s == "full") return Subspace::full(n);
  if (s.rfind("coords:", 0) == 0) {
    std::vector<std::size_t> idx;
    for (const auto& item : split(s.substr(7), ',')) {
      const std::string t = trim(item);
      std::size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(t, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (t.empty() || pos != t.size() || v < 1 || v > static_cast<long>(n))
        throw InvalidInput("subspace '" + spec + "': coordinate index must be an integer in 1.." + std::to_string(n));
      idx.push_back(static_cast<std::size_t>(v - 1));
    }
    return CoordinateSubspace(n, idx).to_subspace();
  }
  if (s.rfind("basis:", 0) == 0) {
    std::vector<RationalVector> vecs;
    for (const auto& vec : split(s.substr(6), ';')) {
      RationalVector v;
      for (const auto& item : split(vec, ',')) v.push_back(parse_rational(trim(item)));
      if (v.size() != n) throw InvalidInput("subspace '" + spec + "': every basis vector needs " + std::to_string(n) + " entries");
      vecs.push_back(std::move(v));
    }
    return Subspace::span(n, vecs);
  }
  throw InvalidInput("subspace '" + spec + "': expected coords:..., basis:..., zero or full");
}

std::vector<Subspace> parse_family_json(std::size_t n, const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) fail("", "expected an array of subspaces");
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(subspace_value(doc[i], n, "/" + std::to_string(i)));
  return out;
}

ReciprocalVector parse_exponent_list(const std::string& text, bool exponents) {
  std::vector<std::string> items;
  for (const auto& item : split(text, ',')) items.push_back(trim(item));
  return exponents ? ReciprocalVector::from_exponents(items) : ReciprocalVector::parse(items);
}

}  // namespace heisbl
