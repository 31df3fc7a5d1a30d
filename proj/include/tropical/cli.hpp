#pragma once

// The `tropical` command line: every command reads documents, writes a
// document or a report, and returns 0 (success or true), 1 (mathematical
// failure) or 2 (malformed input).

#include "tropical/calculus.hpp"
#include "tropical/io.hpp"
#include "tropical/laws.hpp"
#include "tropical/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace tropical {

namespace cli_detail {

struct Settings {
  std::string out;
  bool verbose = false;
  std::size_t seed = 0;
};

inline void emit(const Settings& s, const std::string& text, std::ostream& out) {
  if (s.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.out, std::ios::binary);
  if (!f) throw Error(s.out + ": cannot write file");
  f << text;
}

inline std::ostream& notes(const Settings& s, std::ostream& out, std::ostream& err) {
  return s.out.empty() ? err : out;
}

inline Integer total_weight(const TropicalCycle& c) {
  Integer t = 0;
  for (const auto& [p, w] : c.weighted_cells()) t += w;
  return t;
}

inline void summary(const TropicalCycle& c, std::ostream& os) {
  os << "codimension " << c.codimension() << ", " << c.weighted_cells().size() << " cells, total weight "
     << total_weight(c) << "\n";
}

inline void trace(const std::vector<LocalComputation>& steps, std::ostream& os) {
  for (const auto& s : steps) {
    os << "cell " << to_string(s.cell) << " at " << to_string(s.point) << ", v = " << to_string(s.v) << "\n";
    for (const auto& t : s.terms)
      os << "  " << to_string(t.first) << " x " << to_string(t.second) << ": index " << t.index << ", weights "
         << t.first_weight << " * " << t.second_weight << "\n";
    os << "  weight " << s.weight << "\n";
  }
}

inline std::vector<std::size_t> index_list(const std::string& text, const std::string& spec) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("cell spec \"" + spec + "\": expected comma separated indices");
    out.push_back(std::stoul(item));
  }
  return out;
}

/// "P:R:L" with comma separated indices into the document's points, rays and lineality.
inline Polyhedron cell_from_spec(const io::Json& doc, const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (!spec.empty() && spec.back() == ':') parts.push_back("");
  if (parts.empty() || parts.size() > 3) throw InputError("cell spec \"" + spec + "\": expected P:R:L");
  parts.resize(3);
  io::Json cell;
  cell["point_indices"] = index_list(parts[0], spec);
  cell["ray_indices"] = index_list(parts[1], spec);
  cell["lineality_indices"] = index_list(parts[2], spec);
  cell["weight"] = 1;
  io::Json single = doc;
  single.erase("dimension");
  single["cells"] = io::Json::array({cell});
  return cycle_from_json(single).weighted_cells().front().first;
}

inline LawCorpus load_manifest(const std::string& path) {
  const auto j = io::parse_text(io::read_file(path), path);
  const auto base = std::filesystem::path(path).parent_path();
  LawCorpus corpus;
  auto entries = [&](const char* key) {
    std::vector<std::string> names;
    if (!j.is_object()) throw InputError(path + ": expected an object");
    if (!j.contains(key)) return names;
    const auto& a = j[key];
    if (!a.is_array()) throw InputError(path + ": " + key + " must be an array");
    for (const auto& e : a) {
      if (!e.is_string()) throw InputError(path + ": " + key + " entries must be file names");
      names.push_back(e.get<std::string>());
    }
    return names;
  };
  for (const auto& n : entries("cycles")) corpus.cycles.push_back({n, load_cycle((base / n).string())});
  for (const auto& n : entries("maps")) corpus.maps.push_back({n, load_map((base / n).string())});
  return corpus;
}

inline std::string compact(const TropicalCycle& c) { return cycle_to_json(c).dump(); }

} // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Exact tropical intersection theory on R^n", "tropical"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--out", s.out, "write the resulting document here instead of stdout");
  app.add_flag("--verbose", s.verbose, "print the local weight computations");
  app.add_option("--seed-sequence", s.seed, "start of the displacement vector candidate sequence");

  std::string a, b, map_path, cell_spec, source_path, fault;
  auto* check = app.add_subcommand("check", "check the balancing condition");
  check->add_option("cycle", a)->required();
  auto* inter = app.add_subcommand("intersect", "stable intersection of two cycles");
  inter->add_option("a", a)->required();
  inter->add_option("b", b)->required();
  auto* push = app.add_subcommand("push", "push-forward along an affine map");
  push->add_option("map", map_path)->required();
  push->add_option("cycle", a)->required();
  auto* pull = app.add_subcommand("pull", "pull-back along an affine map");
  pull->add_option("map", map_path)->required();
  pull->add_option("cycle", a)->required();
  pull->add_option("--source", source_path, "cycle document whose complex refines the source");
  auto* laws = app.add_subcommand("laws", "check the algebraic laws on a manifest of documents");
  laws->add_option("manifest", a)->required();
  laws->add_option("--inject-fault", fault, "corrupt one result checked by the given law")
      ->check(CLI::IsMember(law_names()));
  auto* plot = app.add_subcommand("plot", "SVG drawing of a cycle in R^2");
  plot->add_option("cycle", a)->required();
  auto* star = app.add_subcommand("star", "star of a cycle at one of its cells");
  star->add_option("cycle", a)->required();
  star->add_option("cell", cell_spec, "P:R:L index lists into the document tables")->required();
  auto* addc = app.add_subcommand("add", "sum of two cycles");
  addc->add_option("a", a)->required();
  addc->add_option("b", b)->required();
  auto* eq = app.add_subcommand("eq", "equality of two cycles up to refinement");
  eq->add_option("a", a)->required();
  eq->add_option("b", b)->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const CalculusOptions calc{s.seed, nullptr};
  try {
    if (check->parsed()) {
      const auto c = load_cycle(a);
      const auto report = is_balanced(c);
      if (report.balanced) {
        out << "balanced\n";
        return 0;
      }
      out << "unbalanced\n";
      for (const auto& f : report.failures)
        out << "  at " << to_string(f.tau) << ": normal vector sum " << to_string(f.sum) << "\n";
      return 1;
    }
    if (inter->parsed()) {
      std::vector<LocalComputation> steps;
      const auto c = stable_intersect(load_cycle(a), load_cycle(b), {s.seed, s.verbose ? &steps : nullptr});
      emit(s, serialize(c), out);
      auto& os = notes(s, out, err);
      if (s.verbose) trace(steps, os);
      summary(c, os);
      return 0;
    }
    if (push->parsed()) {
      const auto c = push_forward(load_map(map_path), load_cycle(a));
      emit(s, serialize(c), out);
      summary(c, notes(s, out, err));
      return 0;
    }
    if (pull->parsed()) {
      std::vector<LocalComputation> steps;
      std::optional<PolyhedralComplex> source;
      if (!source_path.empty()) source = load_cycle(source_path).complex();
      const auto r = pull_back_detailed(load_map(map_path), load_cycle(a), source ? &*source : nullptr,
                                        {s.seed, s.verbose ? &steps : nullptr});
      auto doc = cycle_to_json(r.cycle);
      if (r.degenerate) doc["metadata"] = {{"degenerate", true}};
      emit(s, dump_document(doc), out);
      auto& os = notes(s, out, err);
      if (s.verbose) trace(steps, os);
      if (r.degenerate) os << "degenerate: the map is not surjective and every coefficient vanished\n";
      summary(r.cycle, os);
      return 0;
    }
    if (laws->parsed()) {
      const auto report = check_laws(load_manifest(a), {s.seed, fault});
      out << std::left << std::setw(20) << "law" << std::right << std::setw(8) << "checks" << std::setw(10)
          << "failures" << "\n";
      for (const auto& t : report.tallies)
        out << std::left << std::setw(20) << t.law << std::right << std::setw(8) << t.checks << std::setw(10)
            << t.failures << "\n";
      for (const auto& f : report.failures) {
        out << "FAIL " << f.law << ": " << f.instance << "\n";
        out << "  lhs " << compact(f.lhs) << "\n";
        out << "  rhs " << compact(f.rhs) << "\n";
      }
      out << (report.ok() ? "all laws hold" : "law violations found") << " (" << report.checks() << " checks)\n";
      return report.ok() ? 0 : 1;
    }
    if (plot->parsed()) {
      emit(s, render_svg(load_cycle(a)), out);
      return 0;
    }
    if (star->parsed()) {
      const auto doc = io::parse_text(io::read_file(a), a);
      const auto c = cycle_from_json(doc);
      const auto tau = cell_from_spec(doc, cell_spec);
      if (!c.complex().index_of(tau)) throw InputError(to_string(tau) + " is not a cell of " + a);
      const auto st = star_cycle(c, tau);
      emit(s, serialize(st.cycle), out);
      auto& os = notes(s, out, err);
      os << "chart";
      for (std::size_t i = 0; i < st.chart.rows(); ++i) os << " " << to_string(st.chart.row(i));
      os << "\n";
      return 0;
    }
    if (addc->parsed()) {
      const auto c = add(load_cycle(a), load_cycle(b));
      emit(s, serialize(support_cycle(c)), out);
      return 0;
    }
    if (eq->parsed()) {
      const bool same = equals(load_cycle(a), load_cycle(b));
      out << (same ? "equal" : "not equal") << "\n";
      return same ? 0 : 1;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

} // namespace tropical
