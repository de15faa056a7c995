#include "torbiv/documents.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

namespace torbiv {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    fail("$", std::string("malformed JSON (") + e.what() + ")");
  }
}

void require_keys(const Json &obj, const std::string &path,
                  const std::set<std::string> &allowed,
                  const std::set<std::string> &required) {
  if (!obj.is_object())
    fail(path, "expected an object");
  for (const auto &[key, _] : obj.items())
    if (!allowed.count(key))
      fail(path, "unknown key '" + key + "'");
  for (const auto &key : required)
    if (!obj.contains(key))
      fail(path, "missing key '" + key + "'");
}

Integer integer_from_json(const Json &j, const std::string &path) {
  if (j.is_number_integer())
    return j.is_number_unsigned() ? Integer(j.get<unsigned long>())
                                  : Integer(j.get<long>());
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto s = j.get<std::string>();
    if (std::regex_match(s, digits))
      return Integer(s);
  }
  fail(path, "expected an integer");
}

std::size_t index_from_json(const Json &j, const std::string &path) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<long>() < 0))
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Json integer_to_json(const Integer &x) {
  if (x.fits_slong_p())
    return Json(x.get_si());
  return Json(x.get_str());
}

Json vector_json(const std::vector<Integer> &v) {
  Json out = Json::array();
  for (const auto &x : v)
    out.push_back(integer_to_json(x));
  return out;
}

Json index_json(const std::vector<std::size_t> &v) {
  Json out = Json::array();
  for (std::size_t x : v)
    out.push_back(x);
  return out;
}

std::vector<Integer> integer_array(const Json &j, const std::string &path) {
  if (!j.is_array())
    fail(path, "expected an array");
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

// One top-level key per line, values in compact form. Json objects keep
// their keys sorted, which makes this canonical.
std::string canonical_dump(const Json &doc) {
  std::ostringstream os;
  os << "{\n";
  std::size_t i = 0;
  for (const auto &[key, value] : doc.items()) {
    os << "  " << Json(key).dump() << ": " << value.dump()
       << (++i < doc.size() ? ",\n" : "\n");
  }
  os << "}\n";
  return os.str();
}

Json rational_matrix_json(const RatMatrix &m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).get_str());
    out.push_back(row);
  }
  return out;
}

Json integer_matrix_json(const IntMatrix &m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(vector_json(m.row(i)));
  return out;
}

} // namespace

Rational parse_rational(const std::string &text) {
  static const std::regex form("(-?[0-9]+)(/([0-9]+))?");
  std::smatch m;
  if (!std::regex_match(text, m, form))
    fail("$", "malformed rational '" + text + "'");
  const Integer num(m[1].str());
  const Integer den(m[3].matched ? m[3].str() : std::string("1"));
  if (den == 0)
    fail("$", "zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

FanDescription parse_fan_document(const std::string &text) {
  const Json doc = parse_json(text);
  require_keys(doc, "$", {"dim", "rays", "max_cones", "name"},
               {"dim", "rays", "max_cones"});
  FanDescription d;
  d.dim = index_from_json(doc["dim"], "$.dim");
  const Json &rays = doc["rays"];
  if (!rays.is_array())
    fail("$.rays", "expected an array");
  for (std::size_t i = 0; i < rays.size(); ++i)
    d.rays.push_back(integer_array(rays[i], "$.rays[" + std::to_string(i) + "]"));
  const Json &cones = doc["max_cones"];
  if (!cones.is_array())
    fail("$.max_cones", "expected an array");
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const std::string path = "$.max_cones[" + std::to_string(k) + "]";
    if (!cones[k].is_array())
      fail(path, "expected an array");
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < cones[k].size(); ++i)
      cone.push_back(index_from_json(cones[k][i], path + "[" + std::to_string(i) + "]"));
    d.max_cones.push_back(std::move(cone));
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      fail("$.name", "expected a string");
    d.name = doc["name"].get<std::string>();
  }
  return d;
}

std::string serialize_fan_document(const FanDescription &desc) {
  Json doc;
  doc["dim"] = desc.dim;
  Json rays = Json::array();
  for (const auto &r : desc.rays)
    rays.push_back(vector_json(r));
  doc["rays"] = rays;
  Json cones = Json::array();
  for (const auto &c : desc.max_cones)
    cones.push_back(index_json(c));
  doc["max_cones"] = cones;
  if (!desc.name.empty())
    doc["name"] = desc.name;
  return canonical_dump(doc);
}

BivectorDocument parse_bivector_document(const std::string &text) {
  const Json doc = parse_json(text);
  require_keys(doc, "$", {"alpha", "entries", "base_chart"}, {"alpha", "entries"});
  BivectorDocument out;
  out.alpha = integer_array(doc["alpha"], "$.alpha");
  const std::size_t n = out.alpha.size();
  const Json &entries = doc["entries"];
  if (!entries.is_array())
    fail("$.entries", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string path = "$.entries[" + std::to_string(e) + "]";
    require_keys(entries[e], path, {"i", "j", "value"}, {"i", "j", "value"});
    BivectorEntry entry;
    entry.i = index_from_json(entries[e]["i"], path + ".i");
    entry.j = index_from_json(entries[e]["j"], path + ".j");
    if (entry.i >= entry.j)
      fail(path, "expected i < j");
    if (entry.j >= n)
      fail(path, "index " + std::to_string(entry.j) + " out of range for dimension " +
                     std::to_string(n));
    if (!seen.emplace(entry.i, entry.j).second)
      fail(path, "duplicate entry (" + std::to_string(entry.i) + "," +
                     std::to_string(entry.j) + ")");
    const Json &value = entries[e]["value"];
    if (value.is_string()) {
      try {
        entry.value = parse_rational(value.get<std::string>());
      } catch (const Error &err) {
        fail(path + ".value", err.what());
      }
    } else if (value.is_number_integer()) {
      entry.value = Rational(integer_from_json(value, path + ".value"));
    } else {
      fail(path + ".value", "expected a rational string or an integer");
    }
    out.entries.push_back(std::move(entry));
  }
  if (doc.contains("base_chart"))
    out.base_chart = index_from_json(doc["base_chart"], "$.base_chart");
  return out;
}

std::string serialize_bivector_document(const BivectorDocument &doc) {
  std::vector<BivectorEntry> entries = doc.entries;
  std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  Json out;
  out["alpha"] = vector_json(doc.alpha);
  Json list = Json::array();
  for (const auto &e : entries)
    list.push_back({{"i", e.i}, {"j", e.j}, {"value", e.value.get_str()}});
  out["entries"] = list;
  if (doc.base_chart)
    out["base_chart"] = *doc.base_chart;
  return canonical_dump(out);
}

EquivariantBivector to_bivector(const BivectorDocument &doc) {
  const std::size_t n = doc.alpha.size();
  RatMatrix a(n, n);
  for (const auto &e : doc.entries) {
    a(e.i, e.j) = e.value;
    a(e.j, e.i) = -e.value;
  }
  return EquivariantBivector(doc.alpha, a, doc.base_chart);
}

BivectorDocument to_document(const EquivariantBivector &bv) {
  BivectorDocument doc{bv.alpha(), {}, bv.base_chart()};
  for (std::size_t i = 0; i < bv.dim(); ++i)
    for (std::size_t j = i + 1; j < bv.dim(); ++j)
      if (bv.a()(i, j) != 0)
        doc.entries.push_back({i, j, bv.a()(i, j)});
  return doc;
}

Json validation_json(const FanDescription &desc, const ValidationReport &report,
                     std::optional<bool> complete) {
  Json out;
  out["name"] = desc.name;
  out["dim"] = desc.dim;
  out["valid"] = report.valid();
  out["complete"] = complete ? Json(*complete) : Json(nullptr);
  out["pairs_checked"] = report.pairs_checked;
  Json cones = Json::array();
  for (const auto &c : report.cones)
    cones.push_back({{"index", c.index}, {"smooth", c.smooth}});
  out["cones"] = cones;
  Json violations = Json::array();
  for (const auto &v : report.violations)
    violations.push_back({{"kind", std::string(violation_kind_name(v.kind))},
                          {"cones", index_json(v.cones)},
                          {"message", v.message}});
  out["violations"] = violations;
  out["warnings"] = report.warnings;
  return out;
}

Json orbit_json(const OrbitRef &t) { return index_json(t.cone); }

Json stratification_json(const Stratification &s) {
  Json out;
  out["dim"] = s.ambient_dim;
  Json orbits = Json::array();
  for (const auto &r : s.ranks)
    orbits.push_back({{"cone", orbit_json(r.orbit)},
                      {"orbit_dim", r.orbit.dim},
                      {"rank", r.rank}});
  out["orbits"] = orbits;
  Json bounds = Json::array();
  for (const auto &[bound, cones] : s.by_bound) {
    Json entry;
    entry["bound"] = bound;
    Json list = Json::array();
    for (const auto &t : cones)
      list.push_back(orbit_json(t));
    entry["cones"] = list;
    Json comps = Json::array();
    for (const auto &c : components(s, bound / 2))
      comps.push_back({{"cone", orbit_json(c.cone)}, {"dim", c.dim}});
    entry["components"] = comps;
    bounds.push_back(entry);
  }
  out["bounds"] = bounds;
  return out;
}

namespace {

std::string clause_kind_name(ClauseKind k) {
  switch (k) {
  case ClauseKind::DegeneracyBound: return "degeneracy_bound";
  case ClauseKind::ZeroLocusCurve: return "zero_locus_curve";
  case ClauseKind::CompactNonempty: return "compact_nonempty";
  }
  return "?";
}

} // namespace

Json certificate_json(const TheoremCertificate &cert) {
  Json out;
  out["dim"] = cert.ambient_dim;
  out["fan_complete"] = cert.fan_complete;
  out["regular"] = cert.regular;
  out["passed"] = cert.passed();
  Json clauses = Json::array();
  for (const auto &c : cert.clauses) {
    Json j;
    j["kind"] = clause_kind_name(c.kind);
    j["k"] = c.k;
    j["status"] = std::string(clause_status_name(c.status));
    j["nonempty"] = c.nonempty;
    j["witness"] = c.witness ? orbit_json(*c.witness) : Json(nullptr);
    j["component_dim"] = c.witness ? Json(c.component_dim) : Json(nullptr);
    j["note"] = c.note;
    clauses.push_back(j);
  }
  out["clauses"] = clauses;
  return out;
}

Json poisson_json(const PoissonResult &p) {
  Json out;
  out["poisson"] = p.poisson;
  if (p.triple)
    out["triple"] = {(*p.triple)[0] + 1, (*p.triple)[1] + 1, (*p.triple)[2] + 1};
  else
    out["triple"] = nullptr;
  out["value"] = p.value.get_str();
  return out;
}

Json presentation_json(const ChartPresentation &cp, const IntMatrix &r) {
  Json out;
  out["chart"] = cp.chart ? Json(*cp.chart) : Json(nullptr);
  out["r"] = integer_matrix_json(r);
  out["s"] = integer_matrix_json(unimodular_inverse(r));
  out["b"] = rational_matrix_json(cp.b);
  out["beta"] = vector_json(cp.beta);
  out["regular"] = is_regular_on_chart(cp);
  return out;
}

} // namespace torbiv
