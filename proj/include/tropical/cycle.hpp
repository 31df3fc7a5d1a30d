#pragma once

// Tropical cycles: pure-dimensional weighted complexes, balanced, compared up
// to common refinement.

#include "tropical/complex.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tropical {

using WeightedCell = std::pair<Polyhedron, Integer>;

class TropicalCycle {
public:
  TropicalCycle() = default;

  /// The cycle with no cells; `dimension` may be negative for formal results.
  static TropicalCycle zero(std::size_t ambient_rank, int dimension) {
    TropicalCycle c;
    c.complex_ = PolyhedralComplex(ambient_rank);
    c.dimension_ = dimension;
    return c;
  }

  /// Validates the complex property and the balancing condition.
  static TropicalCycle from_cells(std::size_t ambient_rank, int dimension, const std::vector<WeightedCell>& cells) {
    std::vector<Polyhedron> ps;
    for (const auto& [p, w] : cells) ps.push_back(p);
    auto c = build(PolyhedralComplex::from_maximal_cells(ambient_rank, ps), dimension, cells);
    c.require_balanced();
    return c;
  }

  /// No complex or balancing check; for intermediate results.
  static TropicalCycle from_cells_unchecked(std::size_t ambient_rank, int dimension,
                                            const std::vector<WeightedCell>& cells) {
    std::vector<Polyhedron> ps;
    for (const auto& [p, w] : cells) ps.push_back(p);
    return build(PolyhedralComplex::from_maximal_cells_unchecked(ambient_rank, ps), dimension, cells);
  }

  static TropicalCycle from_complex_unchecked(PolyhedralComplex complex, int dimension,
                                              const std::vector<WeightedCell>& cells) {
    return build(std::move(complex), dimension, cells);
  }

  std::size_t ambient_rank() const { return complex_.ambient_rank(); }
  int dimension() const { return dimension_; }
  int codimension() const { return static_cast<int>(ambient_rank()) - dimension_; }
  const PolyhedralComplex& complex() const { return complex_; }

  /// Maximal cells with their weights, in canonical cell order.
  const std::vector<WeightedCell>& weighted_cells() const { return cells_; }

  Integer weight(const Polyhedron& sigma) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), sigma,
                               [](const WeightedCell& a, const Polyhedron& b) { return a.first < b; });
    if (it == cells_.end() || !(it->first == sigma)) return 0;
    return it->second;
  }

  bool is_zero_weighted() const {
    for (const auto& [p, w] : cells_)
      if (w != 0) return false;
    return true;
  }

  void require_balanced() const;

private:
  static TropicalCycle build(PolyhedralComplex complex, int dimension, const std::vector<WeightedCell>& cells) {
    TropicalCycle c;
    c.dimension_ = dimension;
    for (const auto& [p, w] : cells)
      if (dimension < 0 || p.dim() != static_cast<std::size_t>(dimension))
        throw Error("cell " + to_string(p) + " does not have dimension " + std::to_string(dimension));
    std::map<Polyhedron, Integer> merged;
    for (const auto& [p, w] : cells) {
      auto [it, fresh] = merged.emplace(p, w);
      if (!fresh) throw Error("cell " + to_string(p) + " is listed twice");
    }
    c.cells_.assign(merged.begin(), merged.end());
    for (auto i : complex.maximal_indices())
      if (complex.cell(i).dim() != static_cast<std::size_t>(dimension) || !merged.count(complex.cell(i)))
        throw Error("complex is not pure of dimension " + std::to_string(dimension));
    c.complex_ = std::move(complex);
    return c;
  }

  PolyhedralComplex complex_;
  int dimension_ = 0;
  std::vector<WeightedCell> cells_;
};

struct BalanceFailure {
  Polyhedron tau;
  IntVector sum;
};

struct BalanceReport {
  bool balanced = true;
  std::vector<BalanceFailure> failures;
};

/// Sum of m_sigma * omega_{sigma,tau} over the facets sigma containing tau.
inline IntVector normal_vector_sum(const TropicalCycle& c, std::size_t tau_index) {
  const auto& cx = c.complex();
  const Polyhedron& tau = cx.cell(tau_index);
  const Lattice n_tau = tau.linear_space();
  const RatVector p = tau.relative_interior_point();
  IntVector sum(c.ambient_rank(), Integer(0));
  for (auto j : cx.cofaces(tau_index)) {
    const Polyhedron& sigma = cx.cell(j);
    const Integer m = c.weight(sigma);
    if (m == 0) continue;
    const auto omega =
        primitive_normal_vector(sigma.linear_space(), n_tau, subtract(sigma.relative_interior_point(), p));
    sum = add(sum, scaled(omega, m));
  }
  return sum;
}

inline BalanceReport is_balanced(const TropicalCycle& c) {
  BalanceReport report;
  if (c.dimension() <= 0) return report;
  const auto& cx = c.complex();
  for (auto i : cx.cells_of_dim(static_cast<std::size_t>(c.dimension() - 1))) {
    const IntVector sum = normal_vector_sum(c, i);
    auto gens = cx.cell(i).linear_space().generators();
    const std::size_t before = rank(gens, c.ambient_rank());
    gens.push_back(sum);
    if (rank(gens, c.ambient_rank()) != before) {
      report.balanced = false;
      report.failures.push_back({cx.cell(i), sum});
    }
  }
  return report;
}

inline void TropicalCycle::require_balanced() const {
  const auto report = is_balanced(*this);
  if (!report.balanced)
    throw Error("not balanced at " + to_string(report.failures.front().tau) + ": normal vector sum " +
                to_string(report.failures.front().sum));
}

/// Weighted cells of one dimension, cut until they form a complex, with
/// weights summed over coinciding pieces.
inline TropicalCycle combine(std::size_t r, int dimension, const std::vector<WeightedCell>& cells) {
  std::map<Polyhedron, Integer> merged;
  for (const auto& [p, w] : cells) merged[p] += w;
  std::vector<Polyhedron> ps;
  std::vector<Integer> ws;
  for (const auto& [p, w] : merged) {
    ps.push_back(p);
    ws.push_back(w);
  }
  std::map<Polyhedron, Integer> pieces;
  for (auto& [piece, origin] : refine_to_complex(ps)) pieces[std::move(piece)] += ws[origin];
  std::vector<WeightedCell> out(pieces.begin(), pieces.end());
  return TropicalCycle::from_cells_unchecked(r, dimension, out);
}

inline TropicalCycle scale(const TropicalCycle& c, const Integer& k) {
  std::vector<WeightedCell> cells;
  for (const auto& [p, w] : c.weighted_cells()) cells.emplace_back(p, w * k);
  return TropicalCycle::from_complex_unchecked(c.complex(), c.dimension(), cells);
}

inline TropicalCycle add(const TropicalCycle& a, const TropicalCycle& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw Error("adding cycles of different ambient rank");
  if (a.dimension() != b.dimension())
    throw Error("adding cycles of dimensions " + std::to_string(a.dimension()) + " and " +
                std::to_string(b.dimension()));
  std::vector<WeightedCell> cells = a.weighted_cells();
  cells.insert(cells.end(), b.weighted_cells().begin(), b.weighted_cells().end());
  return combine(a.ambient_rank(), a.dimension(), cells);
}

/// The same cycle with zero-weight cells removed.
inline TropicalCycle support_cycle(const TropicalCycle& c) {
  std::vector<WeightedCell> kept;
  for (const auto& [p, w] : c.weighted_cells())
    if (w != 0) kept.emplace_back(p, w);
  return TropicalCycle::from_cells_unchecked(c.ambient_rank(), c.dimension(), kept);
}

/// The subcomplex generated by the cells of nonzero weight.
inline PolyhedralComplex support(const TropicalCycle& c) { return support_cycle(c).complex(); }

inline bool equals(const TropicalCycle& a, const TropicalCycle& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw Error("comparing cycles of different ambient rank");
  if (a.dimension() != b.dimension()) return false;
  return add(a, scale(b, -1)).is_zero_weighted();
}

/// Transports the weights of c to a subdivision of its complex.
inline TropicalCycle induce_weights(const TropicalCycle& c, const PolyhedralComplex& refinement) {
  if (refinement.ambient_rank() != c.ambient_rank()) throw Error("refinement has wrong ambient rank");
  std::vector<WeightedCell> cells;
  std::map<Polyhedron, std::vector<Polyhedron>> parts;
  for (const auto& piece : refinement.maximal_cells()) {
    const WeightedCell* parent = nullptr;
    for (const auto& wc : c.weighted_cells())
      if (wc.first.contains(piece)) parent = &wc;
    if (!parent || c.dimension() < 0 || piece.dim() != static_cast<std::size_t>(c.dimension()))
      throw Error("not a subdivision: " + to_string(piece) + " lies in no maximal cell");
    cells.emplace_back(piece, parent->second);
    parts[parent->first].push_back(piece);
  }
  // every maximal cell must be covered: inner walls are shared by two pieces, boundary walls by one
  for (const auto& [sigma, w] : c.weighted_cells()) {
    const auto& ps = parts[sigma];
    if (ps.empty()) throw Error("not a subdivision: " + to_string(sigma) + " is not covered");
    if (sigma.dim() == 0) continue;
    std::map<Polyhedron, int> walls;
    for (const auto& p : ps)
      for (const auto& f : p.faces())
        if (f.dim() + 1 == p.dim()) ++walls[f];
    for (const auto& [f, count] : walls) {
      bool on_boundary = false;
      for (const auto& g : sigma.faces())
        if (g.dim() + 1 == sigma.dim() && g.contains(f)) on_boundary = true;
      if (count != (on_boundary ? 1 : 2)) throw Error("not a subdivision: " + to_string(sigma) + " is not covered");
    }
  }
  return TropicalCycle::from_complex_unchecked(refinement, c.dimension(), cells);
}

struct StarCycle {
  TropicalCycle cycle;
  IntegerMatrix chart;
};

inline StarCycle star_cycle(const TropicalCycle& c, const Polyhedron& tau) {
  const StarFan s = star(c.complex(), tau);
  const int d = c.dimension() - static_cast<int>(tau.dim());
  std::vector<WeightedCell> cells;
  for (std::size_t i = 0; i < s.fan.size(); ++i)
    if (static_cast<int>(s.fan.cell(i).dim()) == d) cells.emplace_back(s.fan.cell(i), c.weight(c.complex().cell(s.source_cells[i])));
  return {TropicalCycle::from_complex_unchecked(s.fan, d, cells), s.chart};
}

/// A codimension-k weight on the cones of a complete fan, balanced.
class MinkowskiWeight {
public:
  MinkowskiWeight(PolyhedralComplex fan, std::size_t codim, std::map<Polyhedron, Integer> weights)
      : fan_(std::move(fan)), codim_(codim), weights_(std::move(weights)) {
    if (!is_complete(fan_)) throw Error("Minkowski weights need a complete fan");
    for (const auto& c : fan_.cells())
      if (!c.is_strictly_convex_cone()) throw Error("Minkowski weights need a fan of strictly convex cones");
    if (codim_ > fan_.ambient_rank()) throw Error("codimension exceeds the ambient rank");
    for (const auto& [cone, w] : weights_)
      if (!fan_.index_of(cone) || cone.dim() + codim_ != fan_.ambient_rank())
        throw Error("weight on " + to_string(cone) + " which is not a cone of codimension " + std::to_string(codim_));
    as_cycle().require_balanced();
  }

  const PolyhedralComplex& fan() const { return fan_; }
  std::size_t codim() const { return codim_; }

  Integer operator()(const Polyhedron& cone) const {
    auto it = weights_.find(cone);
    return it == weights_.end() ? Integer(0) : it->second;
  }

  TropicalCycle as_cycle() const {
    const std::size_t d = fan_.ambient_rank() - codim_;
    std::vector<WeightedCell> cells;
    for (auto i : fan_.cells_of_dim(d)) cells.emplace_back(fan_.cell(i), (*this)(fan_.cell(i)));
    return TropicalCycle::from_complex_unchecked(fan_.skeleton(codim_), static_cast<int>(d), cells);
  }

private:
  PolyhedralComplex fan_;
  std::size_t codim_;
  std::map<Polyhedron, Integer> weights_;
};

} // namespace tropical
