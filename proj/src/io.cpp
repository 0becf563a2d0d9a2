#include "homly/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

#include "homly/error.hpp"

namespace homly {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw DocumentError(path + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("$: malformed JSON: ") + e.what());
  }
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) fail(path + "." + key, "unknown key");
  }
}

std::size_t read_index(const json& v, const std::string& path, std::size_t bound) {
  if (!v.is_number_integer()) fail(path, "expected an integer index");
  const auto raw = v.get<long long>();
  if (raw < 0 || static_cast<unsigned long long>(raw) >= bound)
    fail(path, "index " + std::to_string(raw) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(raw);
}

std::size_t read_index_key(const std::string& key, const std::string& path, std::size_t bound) {
  std::size_t value = 0;
  const auto* end = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (key.empty() || ec != std::errc() || ptr != end) fail(path, "coefficient key '" + key + "' is not an index");
  if (value >= bound)
    fail(path, "index " + key + " out of range [0, " + std::to_string(bound) + ")");
  return value;
}

Rational read_rational(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "rational must be a string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const MalformedScalar& e) {
    fail(path, std::string("bad rational: ") + e.what());
  }
}

std::size_t read_dim(const json& doc, const std::string& path) {
  if (!doc.contains("dim")) fail(path, "missing key 'dim'");
  const auto& d = doc["dim"];
  if (!d.is_number_integer() || d.get<long long>() < 0) fail(path + ".dim", "expected a non-negative integer");
  return static_cast<std::size_t>(d.get<long long>());
}

void check_version(const json& doc) {
  if (!doc.contains("version")) return;
  if (!doc["version"].is_number_integer() || doc["version"].get<long long>() != kDocumentVersion)
    fail("$.version", "unsupported document version");
}

LinearMap read_matrix(const json& m, const std::string& path, std::size_t dim) {
  if (!m.is_array() || m.size() != dim) fail(path, "expected " + std::to_string(dim) + " rows");
  LinearMap out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    const auto& row = m[i];
    if (!row.is_array() || row.size() != dim) fail(row_path, "expected " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = read_rational(row[j], row_path + "[" + std::to_string(j) + "]");
  }
  return out;
}

ordered matrix_json(const LinearMap& m) {
  ordered rows = ordered::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ordered row = ordered::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Reads "binary" (arity 2) or "ternary" (arity 3) entries into the flat
/// coefficient setter.
template <class Setter>
void read_entries(const json& list, const std::string& key, std::size_t dim, std::size_t arity, Setter set) {
  const std::string path = "$." + key;
  if (!list.is_array()) fail(path, "expected a list of entries");
  static constexpr const char* names[] = {"i", "j", "k"};
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string ep = path + "[" + std::to_string(e) + "]";
    const auto& entry = list[e];
    if (!entry.is_object()) fail(ep, "expected an object");
    if (arity == 2)
      check_keys(entry, ep, {"i", "j", "coeffs"});
    else
      check_keys(entry, ep, {"i", "j", "k", "coeffs"});
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < arity; ++a) {
      if (!entry.contains(names[a])) fail(ep, std::string("missing key '") + names[a] + "'");
      idx.push_back(read_index(entry[names[a]], ep + "." + names[a], dim));
    }
    if (!seen.insert(idx).second) fail(ep, "duplicate entry for this index group");
    if (!entry.contains("coeffs") || !entry["coeffs"].is_object()) fail(ep + ".coeffs", "expected an object");
    for (const auto& [k, v] : entry["coeffs"].items()) {
      const std::string cp = ep + ".coeffs[\"" + k + "\"]";
      set(idx, read_index_key(k, cp, dim), read_rational(v, cp));
    }
  }
}

std::string entry_line(const std::vector<std::size_t>& idx, const Vector& coeffs) {
  static constexpr const char* names[] = {"i", "j", "k"};
  ordered e;
  for (std::size_t a = 0; a < idx.size(); ++a) e[names[a]] = idx[a];
  ordered c = ordered::object();
  for (std::size_t l = 0; l < coeffs.dim(); ++l)
    if (!coeffs[l].is_zero()) c[std::to_string(l)] = coeffs[l].str();
  e["coeffs"] = std::move(c);
  return e.dump();
}

void emit_entry_list(std::ostringstream& os, const char* key, const std::vector<std::string>& lines) {
  os << ",\n  \"" << key << "\": [";
  for (std::size_t i = 0; i < lines.size(); ++i) os << (i ? ",\n    " : "\n    ") << lines[i];
  os << (lines.empty() ? "]" : "\n  ]");
}

ordered verdict_json(const AxiomVerdict& v) {
  ordered out;
  out["axiom_id"] = v.axiom_id;
  out["passed"] = v.passed;
  out["checked_tuples"] = v.checked_tuples;
  out["counterexample_count"] = v.counterexample_count;
  ordered ces = ordered::array();
  for (const auto& c : v.counterexamples) {
    ordered r = ordered::array();
    for (const auto& x : c.residual.coords()) r.push_back(x.str());
    ces.push_back(ordered{{"tuple", c.tuple}, {"residual", std::move(r)}});
  }
  out["counterexamples"] = std::move(ces);
  return out;
}

void verdict_text(std::ostringstream& os, const AxiomVerdict& v, const char* prefix) {
  os << "  " << prefix << v.axiom_id << ": " << v.checked_tuples << " tuples ";
  if (v.passed) {
    os << "PASS\n";
    return;
  }
  os << "FAIL (" << v.counterexample_count << " counterexamples, " << v.counterexamples.size() << " shown)\n";
  for (const auto& c : v.counterexamples) {
    os << "    (";
    for (std::size_t i = 0; i < c.tuple.size(); ++i) os << (i ? ", " : "") << c.tuple[i];
    os << ") -> " << c.residual << "\n";
  }
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("$", "expected an object");
  check_keys(doc, "$", {"version", "name", "dim", "basis", "alpha", "binary", "ternary"});
  check_version(doc);
  const std::size_t n = read_dim(doc, "$");

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail("$.name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  Algebra a = Algebra::empty(name, n);

  if (doc.contains("basis")) {
    const auto& b = doc["basis"];
    if (!b.is_array() || b.size() != n) fail("$.basis", "expected " + std::to_string(n) + " labels");
    std::set<std::string> labels;
    a.basis.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const std::string p = "$.basis[" + std::to_string(i) + "]";
      if (!b[i].is_string()) fail(p, "expected a string");
      if (!labels.insert(b[i].get<std::string>()).second) fail(p, "duplicate basis label");
      a.basis.push_back(b[i].get<std::string>());
    }
  }
  if (doc.contains("alpha")) a.alpha = read_matrix(doc["alpha"], "$.alpha", n);

  if (doc.contains("binary")) {
    BinaryTable c(n);
    read_entries(doc["binary"], "binary", n, 2,
                 [&](const std::vector<std::size_t>& idx, std::size_t k, Rational v) { c(idx[0], idx[1], k) = v; });
    a.binary = std::move(c);
  }
  if (doc.contains("ternary")) {
    TernaryTable d(n);
    read_entries(doc["ternary"], "ternary", n, 3, [&](const std::vector<std::size_t>& idx, std::size_t l, Rational v) {
      d(idx[0], idx[1], idx[2], l) = v;
    });
    a.ternary = std::move(d);
  }
  return a;
}

std::string emit_algebra(const Algebra& a) {
  a.validate();
  const std::size_t n = a.dim;
  std::ostringstream os;
  os << "{\n  \"version\": " << kDocumentVersion;
  os << ",\n  \"name\": " << ordered(a.name).dump();
  os << ",\n  \"dim\": " << n;
  os << ",\n  \"basis\": " << ordered(a.basis).dump();
  os << ",\n  \"alpha\": " << matrix_json(a.alpha).dump();
  if (a.binary) {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector v = a.binary->product(i, j);
        if (!v.is_zero()) lines.push_back(entry_line({i, j}, v));
      }
    emit_entry_list(os, "binary", lines);
  }
  if (a.ternary) {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vector v = a.ternary->product(i, j, k);
          if (!v.is_zero()) lines.push_back(entry_line({i, j, k}, v));
        }
    emit_entry_list(os, "ternary", lines);
  }
  os << "\n}\n";
  return os.str();
}

LinearMap parse_map(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("$", "expected an object");
  check_keys(doc, "$", {"version", "dim", "matrix"});
  check_version(doc);
  const std::size_t n = read_dim(doc, "$");
  if (!doc.contains("matrix")) fail("$", "missing key 'matrix'");
  return read_matrix(doc["matrix"], "$.matrix", n);
}

std::string emit_map(const LinearMap& m) {
  std::ostringstream os;
  os << "{\n  \"version\": " << kDocumentVersion << ",\n  \"dim\": " << m.dim() << ",\n  \"matrix\": ";
  os << matrix_json(m).dump() << "\n}\n";
  return os.str();
}

CandidateSet parse_candidates(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("$", "expected an object");
  check_keys(doc, "$", {"version", "dim", "provenance", "maps"});
  check_version(doc);
  CandidateSet set;
  set.dim = read_dim(doc, "$");
  if (doc.contains("provenance")) {
    if (!doc["provenance"].is_string()) fail("$.provenance", "expected a string");
    try {
      set.provenance = provenance_from_string(doc["provenance"].get<std::string>());
    } catch (const DocumentError& e) {
      fail("$.provenance", e.what());
    }
  }
  if (!doc.contains("maps") || !doc["maps"].is_array()) fail("$.maps", "expected a list of matrices");
  for (std::size_t i = 0; i < doc["maps"].size(); ++i)
    set.add(read_matrix(doc["maps"][i], "$.maps[" + std::to_string(i) + "]", set.dim));
  return set;
}

std::string emit_candidates(const CandidateSet& set) {
  std::ostringstream os;
  os << "{\n  \"version\": " << kDocumentVersion << ",\n  \"dim\": " << set.dim << ",\n  \"provenance\": \""
     << to_string(set.provenance) << "\",\n  \"maps\": [";
  for (std::size_t i = 0; i < set.maps.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << matrix_json(set.maps[i]).dump();
  os << (set.maps.empty() ? "]" : "\n  ]") << "\n}\n";
  return os.str();
}

std::string emit_report(const CheckReport& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered out;
    out["version"] = kDocumentVersion;
    out["suite_id"] = r.suite_id;
    out["passed"] = r.passed;
    out["checked_tuples"] = r.checked_tuples;
    ordered axioms = ordered::array();
    for (const auto& v : r.axioms) axioms.push_back(verdict_json(v));
    out["axioms"] = std::move(axioms);
    ordered info = ordered::array();
    for (const auto& v : r.informational) info.push_back(verdict_json(v));
    out["informational"] = std::move(info);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "suite " << r.suite_id << "\n";
  for (const auto& v : r.axioms) verdict_text(os, v, "");
  for (const auto& v : r.informational) verdict_text(os, v, "info ");
  os << "result: " << (r.passed ? "PASS" : "FAIL") << " (" << r.checked_tuples << " tuples checked)\n";
  return os.str();
}

}  // namespace homly
