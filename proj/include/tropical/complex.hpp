#pragma once

// Finite polyhedral complexes in R^r: face-closed, canonically ordered cell
// lists with a facet/coface index.

#include "tropical/polyhedron.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tropical {

class PolyhedralComplex {
public:
  PolyhedralComplex() = default;
  explicit PolyhedralComplex(std::size_t ambient_rank) : ambient_rank_(ambient_rank) {}

  /// Face closure of the given cells. Throws "not a complex" if two of them
  /// meet in something that is not a common face.
  static PolyhedralComplex from_maximal_cells(std::size_t ambient_rank, const std::vector<Polyhedron>& cells) {
    for (const auto& c : cells)
      if (c.ambient_rank() != ambient_rank) throw Error("cell has wrong ambient rank");
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        const auto m = intersect(cells[i], cells[j]);
        if (m && !(cells[i].has_face(*m) && cells[j].has_face(*m)))
          throw Error("not a complex: cells " + std::to_string(i) + " " + to_string(cells[i]) + " and " +
                      std::to_string(j) + " " + to_string(cells[j]) + " meet in a non-face");
      }
    return from_maximal_cells_unchecked(ambient_rank, cells);
  }

  /// Face closure without the pairwise intersection check.
  static PolyhedralComplex from_maximal_cells_unchecked(std::size_t ambient_rank,
                                                        const std::vector<Polyhedron>& cells) {
    std::vector<Polyhedron> all;
    for (const auto& c : cells) {
      if (c.ambient_rank() != ambient_rank) throw Error("cell has wrong ambient rank");
      auto fs = c.faces();
      all.insert(all.end(), fs.begin(), fs.end());
    }
    return from_closed_cells(ambient_rank, std::move(all));
  }

  /// Builds the index from a list that is already closed under faces.
  static PolyhedralComplex from_closed_cells(std::size_t ambient_rank, std::vector<Polyhedron> cells) {
    PolyhedralComplex c(ambient_rank);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    c.cells_ = std::move(cells);
    c.build_index();
    return c;
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<Polyhedron>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const Polyhedron& cell(std::size_t i) const { return cells_[i]; }

  /// Largest cell dimension, -1 for the empty complex.
  int dim() const { return cells_.empty() ? -1 : static_cast<int>(cells_.back().dim()); }

  const std::vector<std::size_t>& facets(std::size_t i) const { return facets_[i]; }
  const std::vector<std::size_t>& cofaces(std::size_t i) const { return cofaces_[i]; }
  bool is_maximal(std::size_t i) const { return cofaces_[i].empty(); }

  std::vector<std::size_t> maximal_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (is_maximal(i)) out.push_back(i);
    return out;
  }

  std::vector<Polyhedron> maximal_cells() const {
    std::vector<Polyhedron> out;
    for (auto i : maximal_indices()) out.push_back(cells_[i]);
    return out;
  }

  std::vector<std::size_t> cells_of_dim(std::size_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].dim() == d) out.push_back(i);
    return out;
  }

  std::optional<std::size_t> index_of(const Polyhedron& p) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), p);
    if (it == cells_.end() || !(*it == p)) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
  }

  /// Indices of the cells having tau as a face (tau itself included).
  std::vector<std::size_t> cells_containing(const Polyhedron& tau) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].dim() >= tau.dim() && cells_[i].contains(tau)) out.push_back(i);
    return out;
  }

  bool contains_point(const RatVector& x) const {
    for (auto i : maximal_indices())
      if (cells_[i].contains(x)) return true;
    return false;
  }

  bool is_pure(std::size_t n) const {
    for (auto i : maximal_indices())
      if (cells_[i].dim() != n) return false;
    return true;
  }

  /// All cells of codimension at least l.
  PolyhedralComplex skeleton(std::size_t l) const {
    std::vector<Polyhedron> kept;
    for (const auto& c : cells_)
      if (c.dim() + l <= ambient_rank_) kept.push_back(c);
    return from_closed_cells(ambient_rank_, std::move(kept));
  }

  bool operator==(const PolyhedralComplex& o) const {
    return ambient_rank_ == o.ambient_rank_ && cells_ == o.cells_;
  }

private:
  void build_index() {
    facets_.assign(cells_.size(), {});
    cofaces_.assign(cells_.size(), {});
    for (std::size_t i = 0; i < cells_.size(); ++i)
      for (std::size_t j = i + 1; j < cells_.size(); ++j) {
        if (cells_[j].dim() < cells_[i].dim() + 1) continue;
        if (cells_[j].dim() > cells_[i].dim() + 1) break;
        if (cells_[j].contains(cells_[i])) {
          facets_[j].push_back(i);
          cofaces_[i].push_back(j);
        }
      }
  }

  std::size_t ambient_rank_ = 0;
  std::vector<Polyhedron> cells_;
  std::vector<std::vector<std::size_t>> facets_;
  std::vector<std::vector<std::size_t>> cofaces_;
};

inline PolyhedralComplex common_refinement(const PolyhedralComplex& a, const PolyhedralComplex& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw Error("refining complexes of different ambient rank");
  std::vector<Polyhedron> meets_;
  for (const auto& p : a.maximal_cells())
    for (const auto& q : b.maximal_cells())
      if (auto m = intersect(p, q)) meets_.push_back(std::move(*m));
  return PolyhedralComplex::from_maximal_cells_unchecked(a.ambient_rank(), meets_);
}

/// Cuts the given cells until every two of them meet in a common face. Each
/// cut uses a hyperplane of the other cell that crosses the relative interior
/// and touches the offending intersection. Returns the pieces with the index
/// of the input cell they came from; coinciding pieces are kept separately.
inline std::vector<std::pair<Polyhedron, std::size_t>> refine_to_complex(const std::vector<Polyhedron>& cells) {
  std::vector<std::pair<Polyhedron, std::size_t>> pieces;
  for (std::size_t i = 0; i < cells.size(); ++i) pieces.emplace_back(cells[i], i);
  auto find_cut = [](const Polyhedron& p, const Polyhedron& q, const Polyhedron& meet) -> std::optional<Halfspace> {
    for (const auto& h : q.hyperplanes()) {
      const Sides s = sides(p, h);
      if (s.below && s.above && intersect(meet, Polyhedron::from_constraints(p.ambient_rank(), {}, {h}).value()))
        return h;
    }
    return std::nullopt;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        if (pieces[i].first == pieces[j].first) continue;
        const auto meet = intersect(pieces[i].first, pieces[j].first);
        if (!meet) continue;
        for (int side = 0; side < 2; ++side) {
          const std::size_t a = side ? j : i, b = side ? i : j;
          if (pieces[a].first.has_face(*meet)) continue;
          const auto h = find_cut(pieces[a].first, pieces[b].first, *meet);
          if (!h) throw Error("internal error: no separating hyperplane for " + to_string(pieces[a].first));
          auto parts = split(pieces[a].first, {*h});
          pieces[a].first = std::move(parts[0]);
          pieces.emplace_back(std::move(parts[1]), pieces[a].second);
          changed = true;
          break;
        }
      }
  }
  return pieces;
}

/// The complete complex cut out of R^r by a hyperplane arrangement.
inline PolyhedralComplex arrangement_complex(std::size_t r, const std::vector<Halfspace>& hyperplanes) {
  return PolyhedralComplex::from_maximal_cells_unchecked(r, split(Polyhedron::whole_space(r), hyperplanes));
}

/// Integer chart Z^r -> Z^(r - dim tau) with kernel exactly N_tau.
inline IntegerMatrix quotient_chart(const Polyhedron& tau) {
  const std::size_t r = tau.ambient_rank();
  const auto basis = tau.linear_space().generators();
  const std::size_t d = basis.size();
  if (d == 0) return IntegerMatrix::identity(r);
  const auto hd = hermite_normal_form(IntegerMatrix::from_rows(r, basis));
  IntegerMatrix q(r - d, r);
  for (std::size_t i = 0; i < r - d; ++i)
    for (std::size_t j = 0; j < r; ++j) q(i, j) = hd.u(j, d + i);
  return q;
}

/// The cone of directions of p seen from the point x of p.
inline Polyhedron local_cone(const Polyhedron& p, const RatVector& x) {
  std::vector<IntVector> rays = p.rays();
  for (const auto& v : p.vertices()) {
    const auto d = subtract(v, x);
    if (!is_zero(d)) rays.push_back(primitive(d));
  }
  return Polyhedron::from_generators(p.ambient_rank(), {RatVector(p.ambient_rank(), Rational(0))}, rays,
                                    p.lineality());
}

struct StarFan {
  PolyhedralComplex fan;
  IntegerMatrix chart;
  RatVector base_point;
  std::vector<std::size_t> source_cells; // source_cells[i] is the cell of c mapping to fan.cell(i)
};

inline StarFan star(const PolyhedralComplex& c, const Polyhedron& tau) {
  if (!c.index_of(tau)) throw Error("star: " + to_string(tau) + " is not a cell of the complex");
  StarFan s;
  s.chart = quotient_chart(tau);
  s.base_point = tau.relative_interior_point();
  const std::size_t q = s.chart.rows();
  std::vector<std::pair<Polyhedron, std::size_t>> cones;
  for (auto i : c.cells_containing(tau)) {
    const Polyhedron local = local_cone(c.cell(i), s.base_point);
    std::vector<IntVector> rays, lin;
    for (const auto& r : local.rays()) {
      auto y = s.chart.apply(r);
      if (!is_zero(y)) rays.push_back(primitive(y));
    }
    for (const auto& l : local.lineality()) lin.push_back(s.chart.apply(l));
    cones.emplace_back(Polyhedron::from_generators(q, {RatVector(q, Rational(0))}, rays, lin), i);
  }
  std::sort(cones.begin(), cones.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Polyhedron> cells;
  for (auto& [cone, i] : cones) {
    cells.push_back(cone);
    s.source_cells.push_back(i);
  }
  s.fan = PolyhedralComplex::from_closed_cells(q, std::move(cells));
  if (s.fan.size() != s.source_cells.size()) throw Error("internal error: star cells collapsed");
  return s;
}

namespace detail {

// Pure of full dimension, nonempty, and every wall lies in exactly two maximal cells.
inline bool wall_condition(const PolyhedralComplex& c) {
  const std::size_t r = c.ambient_rank();
  if (c.empty() || !c.is_pure(r)) return false;
  if (r == 0) return true;
  for (auto i : c.cells_of_dim(r - 1))
    if (c.cofaces(i).size() != 2) return false;
  return true;
}

} // namespace detail

/// Decides |c| = R^r: the wall condition on c and on the star of every cell
/// of codimension at least two.
inline bool is_complete(const PolyhedralComplex& c) {
  if (!detail::wall_condition(c)) return false;
  const std::size_t r = c.ambient_rank();
  for (const auto& tau : c.cells())
    if (tau.dim() + 2 <= r && !detail::wall_condition(star(c, tau).fan)) return false;
  return true;
}

} // namespace tropical
