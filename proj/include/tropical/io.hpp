#pragma once

// JSON documents for cycles and maps. Numbers are exact: integers may be
// JSON integers or decimal strings, rationals are strings "p/q".

#include "tropical/affine_map.hpp"
#include "tropical/cycle.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace tropical {

/// Malformed input; the CLI maps it to exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

namespace io {

using Json = nlohmann::ordered_json;

inline std::string where(const std::string& path) { return path.empty() ? "document" : path; }

inline Rational rational_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  throw InputError(path + ": expected an integer or a \"p/q\" string");
}

inline Integer integer_from(const Json& j, const std::string& path) {
  const Rational q = rational_from(j, path);
  if (q.get_den() != 1) throw InputError(path + ": expected an integer, got " + to_string(q));
  return q.get_num();
}

inline Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(to_string(q));
}

inline Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(to_string(x));
}

template <class V>
Json vector_json(const V& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(where(path) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where(path) + ": missing field \"" + key + "\"");
  return *it;
}

inline const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& a = field(j, key, path);
  if (!a.is_array()) throw InputError(path + (path.empty() ? "" : ".") + key + ": expected an array");
  return a;
}

template <class T, class F>
std::vector<T> tuples(const Json& a, std::size_t length, const std::string& path, F element) {
  std::vector<T> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!a[i].is_array() || a[i].size() != length)
      throw InputError(p + ": expected a tuple of length " + std::to_string(length));
    T t;
    for (std::size_t k = 0; k < length; ++k) t.push_back(element(a[i][k], p + "[" + std::to_string(k) + "]"));
    out.push_back(std::move(t));
  }
  return out;
}

inline std::size_t count_from(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw InputError(path + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::vector<std::size_t> indices(const Json& cell, const char* key, std::size_t bound,
                                        const std::string& path) {
  std::vector<std::size_t> out;
  if (!cell.contains(key)) return out;
  const Json& a = array_field(cell, key, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = path + "." + key + "[" + std::to_string(i) + "]";
    const std::size_t k = count_from(a[i], p);
    if (k >= bound) throw InputError(p + ": index " + std::to_string(k) + " out of range");
    out.push_back(k);
  }
  return out;
}

/// Parses JSON text, reporting syntax errors by line and column.
inline Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto k = what.find("syntax error"); k != std::string::npos) what = what.substr(k);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace io

/// Reads a cycle document; checks the complex property but not balancing.
inline TropicalCycle cycle_from_json(const io::Json& j) {
  using namespace io;
  const std::size_t r = count_from(field(j, "ambient_rank", ""), "ambient_rank");
  const auto points = tuples<RatVector>(array_field(j, "points", ""), r, "points", rational_from);
  const auto rays = tuples<IntVector>(array_field(j, "rays", ""), r, "rays", integer_from);
  std::vector<IntVector> lineality;
  if (j.contains("lineality")) lineality = tuples<IntVector>(array_field(j, "lineality", ""), r, "lineality", integer_from);
  const Json& cells = array_field(j, "cells", "");
  std::optional<int> dim;
  if (j.contains("dimension")) {
    const Json& d = j["dimension"];
    if (!d.is_number_integer()) throw InputError("dimension: expected an integer");
    dim = d.get<int>();
  }
  std::vector<WeightedCell> weighted;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string p = "cells[" + std::to_string(i) + "]";
    const Json& c = cells[i];
    if (!c.is_object()) throw InputError(p + ": expected an object");
    std::vector<RatVector> vs;
    std::vector<IntVector> rs, ls;
    for (auto k : indices(c, "point_indices", points.size(), p)) vs.push_back(points[k]);
    for (auto k : indices(c, "ray_indices", rays.size(), p)) rs.push_back(rays[k]);
    for (auto k : indices(c, "lineality_indices", lineality.size(), p)) ls.push_back(lineality[k]);
    if (vs.empty()) throw InputError(p + ": a cell needs at least one point");
    Polyhedron cell;
    try {
      cell = Polyhedron::from_generators(r, vs, rs, ls);
    } catch (const Error& e) {
      throw InputError(p + ": " + e.what());
    }
    const Integer w = integer_from(field(c, "weight", p), p + ".weight");
    if (!dim) dim = static_cast<int>(cell.dim());
    if (cell.dim() != static_cast<std::size_t>(std::max(*dim, 0)) || *dim < 0)
      throw InputError(p + ": cell " + to_string(cell) + " does not have dimension " + std::to_string(*dim));
    weighted.emplace_back(std::move(cell), w);
  }
  if (!dim) throw InputError("dimension: required for a document without cells");
  if (*dim < 0 || *dim > static_cast<int>(r))
    throw InputError("dimension: " + std::to_string(*dim) + " is not between 0 and " + std::to_string(r));
  std::vector<Polyhedron> ps;
  for (const auto& [p, w] : weighted) ps.push_back(p);
  try {
    return TropicalCycle::from_complex_unchecked(PolyhedralComplex::from_maximal_cells(r, ps), *dim, weighted);
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

/// Canonical document: generator tables sorted and deduplicated, cells in
/// canonical cell order with sorted index lists.
inline io::Json cycle_to_json(const TropicalCycle& c) {
  using namespace io;
  std::set<RatVector, LexLess> points;
  std::set<IntVector, LexLess> rays, lineality;
  for (const auto& [p, w] : c.weighted_cells()) {
    points.insert(p.vertices().begin(), p.vertices().end());
    rays.insert(p.rays().begin(), p.rays().end());
    for (const auto& l : p.lineality()) lineality.insert(l);
  }
  auto position = [](const auto& set, const auto& x) {
    return static_cast<std::size_t>(std::distance(set.begin(), set.find(x)));
  };
  Json j;
  j["ambient_rank"] = c.ambient_rank();
  j["dimension"] = c.dimension();
  j["points"] = Json::array();
  for (const auto& p : points) j["points"].push_back(vector_json(p));
  j["rays"] = Json::array();
  for (const auto& r : rays) j["rays"].push_back(vector_json(r));
  j["lineality"] = Json::array();
  for (const auto& l : lineality) j["lineality"].push_back(vector_json(l));
  j["cells"] = Json::array();
  for (const auto& [p, w] : c.weighted_cells()) {
    std::vector<std::size_t> pi, ri, li;
    for (const auto& v : p.vertices()) pi.push_back(position(points, v));
    for (const auto& r : p.rays()) ri.push_back(position(rays, r));
    for (const auto& l : p.lineality()) li.push_back(position(lineality, l));
    std::sort(pi.begin(), pi.end());
    std::sort(ri.begin(), ri.end());
    std::sort(li.begin(), li.end());
    Json cell;
    cell["point_indices"] = pi;
    cell["ray_indices"] = ri;
    cell["lineality_indices"] = li;
    cell["weight"] = to_json(w);
    j["cells"].push_back(std::move(cell));
  }
  return j;
}

/// Compact layout: one table row or cell per line.
inline std::string dump_document(const io::Json& j) {
  std::string s = "{\n";
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    if (!first) s += ",\n";
    first = false;
    s += "  " + io::Json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object())) {
      s += "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) s += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      s += "  ]";
    } else {
      s += value.dump();
    }
  }
  return s + "\n}\n";
}

inline std::string serialize(const TropicalCycle& c) { return dump_document(cycle_to_json(c)); }

inline TropicalCycle parse_cycle(const std::string& text, const std::string& source = "input") {
  return cycle_from_json(io::parse_text(text, source));
}

inline TropicalCycle load_cycle(const std::string& path) { return parse_cycle(io::read_file(path), path); }

inline IntegralAffineMap map_from_json(const io::Json& j) {
  using namespace io;
  const Json& rows = array_field(j, "matrix", "");
  if (rows.empty() || !rows[0].is_array())
    throw InputError("matrix: expected a non-empty list of rows");
  const std::size_t r = rows[0].size();
  const auto m = tuples<IntVector>(rows, r, "matrix", integer_from);
  RatVector t(m.size(), Rational(0));
  if (j.contains("translation")) {
    const Json& tj = array_field(j, "translation", "");
    if (tj.size() != m.size()) throw InputError("translation: expected " + std::to_string(m.size()) + " entries");
    for (std::size_t i = 0; i < m.size(); ++i) t[i] = rational_from(tj[i], "translation[" + std::to_string(i) + "]");
  }
  return IntegralAffineMap(IntegerMatrix::from_rows(r, m), t);
}

inline io::Json map_to_json(const IntegralAffineMap& f) {
  io::Json j;
  j["matrix"] = io::Json::array();
  for (std::size_t i = 0; i < f.codomain_rank(); ++i) j["matrix"].push_back(io::vector_json(f.linear().row(i)));
  j["translation"] = io::vector_json(f.translation());
  return j;
}

inline IntegralAffineMap parse_map(const std::string& text, const std::string& source = "input") {
  return map_from_json(io::parse_text(text, source));
}

inline IntegralAffineMap load_map(const std::string& path) { return parse_map(io::read_file(path), path); }

} // namespace tropical
