#pragma once

// Stable intersection, push-forward and pull-back of tropical cycles, and the
// cup product of Minkowski weights. Displacement coefficients are computed
// locally: at a point p of a candidate cell every cell through p is replaced
// by its cone of directions at p, so the displaced cones need no epsilon.

#include "tropical/affine_map.hpp"
#include "tropical/cycle.hpp"

#include <optional>
#include <set>
#include <vector>

namespace tropical {

inline constexpr std::size_t kMaxDisplacementCandidates = 10000;

namespace detail {

inline Integer nth_prime(std::size_t k) {
  static const std::vector<unsigned long> small = [] {
    std::vector<unsigned long> ps;
    for (unsigned long n = 2; ps.size() < 20000; ++n) {
      bool prime = true;
      for (auto p : ps) {
        if (p * p > n) break;
        if (n % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) ps.push_back(n);
    }
    return ps;
  }();
  if (k < small.size()) return Integer(small[k]);
  Integer n(small.back());
  for (std::size_t i = small.size() - 1; i < k; ++i) mpz_nextprime(n.get_mpz_t(), n.get_mpz_t());
  return n;
}

} // namespace detail

/// Candidate k of sequence `seed`: (q, -q^2, q^3, ...) for the (k+seed)-th
/// prime q. Points of this curve lie in a proper subspace for at most r
/// values of q, so every finite list of subspaces is avoided eventually.
inline RatVector displacement_candidate(std::size_t r, std::size_t k, std::size_t seed = 0) {
  const Integer q = detail::nth_prime(k + seed);
  RatVector v;
  Integer power = q;
  for (std::size_t j = 0; j < r; ++j) {
    v.emplace_back(j % 2 ? Integer(-power) : power);
    power *= q;
  }
  return v;
}

namespace detail {

/// Proper linear subspaces a displacement vector has to avoid.
class SubspaceFilter {
public:
  explicit SubspaceFilter(std::size_t r) : r_(r) {}

  void add(const std::vector<IntVector>& gens) {
    std::vector<RatVector> rows;
    for (const auto& g : gens)
      if (!is_zero(g)) rows.push_back(to_rational(g));
    if (rank(rows, r_) == r_) return;
    auto key = Lattice::saturated(r_, rows).generators();
    if (!seen_.insert(key).second) return;
    std::vector<IntVector> normals;
    for (const auto& n : nullspace(rows, r_)) normals.push_back(primitive(n));
    normals_.push_back(std::move(normals));
  }

  bool avoids(const RatVector& v) const {
    for (const auto& normals : normals_) {
      bool outside = false;
      for (const auto& n : normals)
        if (dot(n, v) != 0) {
          outside = true;
          break;
        }
      if (!outside) return false;
    }
    return true;
  }

  std::size_t ambient_rank() const { return r_; }

private:
  std::size_t r_;
  std::set<std::vector<IntVector>> seen_;
  std::vector<std::vector<IntVector>> normals_;
};

inline std::vector<std::vector<IntVector>> face_spaces(const std::vector<Polyhedron>& cones) {
  std::set<std::vector<IntVector>> out;
  for (const auto& c : cones)
    for (const auto& f : c.faces()) out.insert(f.linear_space().generators());
  return {out.begin(), out.end()};
}

inline void add_pair_sums(SubspaceFilter& filter, const std::vector<std::vector<IntVector>>& a,
                          const std::vector<std::vector<IntVector>>& b) {
  for (const auto& x : a)
    for (const auto& y : b) {
      auto gens = x;
      gens.insert(gens.end(), y.begin(), y.end());
      filter.add(gens);
    }
}

inline RatVector first_generic(const SubspaceFilter& filter, std::size_t seed) {
  for (std::size_t k = 0; k < kMaxDisplacementCandidates; ++k) {
    auto v = displacement_candidate(filter.ambient_rank(), k, seed);
    if (filter.avoids(v)) return v;
  }
  throw Error("no generic vector found");
}

/// Whether the cones a and b + v meet, i.e. v lies in a - b.
inline bool displaced_meet(const Polyhedron& a, const Polyhedron& b, const RatVector& v) {
  const std::size_t r = a.ambient_rank();
  std::vector<IntVector> rays = a.rays();
  for (const auto& x : b.rays()) rays.push_back(scaled(x, Integer(-1)));
  std::vector<IntVector> lin = a.lineality();
  for (const auto& x : b.lineality()) lin.push_back(x);
  for (const auto& x : a.vertices())
    if (!is_zero(x)) throw Error("displacement needs cones, got " + to_string(a));
  for (const auto& x : b.vertices())
    if (!is_zero(x)) throw Error("displacement needs cones, got " + to_string(b));
  return Polyhedron::from_generators(r, {RatVector(r, Rational(0))}, rays, lin).contains(v);
}

/// [Z^r : N_a + N_b], zero unless the linear spans add up to R^r.
inline Integer transverse_index(const Polyhedron& a, const Polyhedron& b) {
  auto gens = a.linear_space().generators();
  for (const auto& g : b.linear_space().generators()) gens.push_back(g);
  return lattice_index(Lattice::full(a.ambient_rank()), gens);
}

inline void require_fan(const PolyhedralComplex& f) {
  for (const auto& c : f.cells())
    if (!c.is_cone()) throw Error("not a fan: " + to_string(c) + " is not a cone");
}

} // namespace detail

struct DisplacementPair {
  std::size_t first;
  std::size_t second;
  Integer coefficient;
};

/// A displacement vector for two fans with the coefficient of every cone pair.
struct DisplacementWitness {
  RatVector v;
  std::vector<DisplacementPair> checked_pairs;
};

/// For every cone pair (s1, s2): s1 and s2 + v meet only if their spans add up to R^r.
inline bool is_generic(const PolyhedralComplex& f1, const PolyhedralComplex& f2, const RatVector& v) {
  if (f1.ambient_rank() != f2.ambient_rank() || v.size() != f1.ambient_rank())
    throw Error("fans and vector of different ambient rank");
  detail::require_fan(f1);
  detail::require_fan(f2);
  for (const auto& a : f1.cells())
    for (const auto& b : f2.cells())
      if (detail::displaced_meet(a, b, v) && detail::transverse_index(a, b) == 0) return false;
  return true;
}

inline DisplacementWitness generic_vector(const PolyhedralComplex& f1, const PolyhedralComplex& f2,
                                          std::size_t seed = 0) {
  if (f1.ambient_rank() != f2.ambient_rank()) throw Error("fans of different ambient rank");
  detail::require_fan(f1);
  detail::require_fan(f2);
  detail::SubspaceFilter filter(f1.ambient_rank());
  detail::add_pair_sums(filter, detail::face_spaces(f1.cells()), detail::face_spaces(f2.cells()));
  DisplacementWitness w{detail::first_generic(filter, seed), {}};
  for (std::size_t i = 0; i < f1.size(); ++i)
    for (std::size_t j = 0; j < f2.size(); ++j) {
      Integer c = 0;
      if (detail::displaced_meet(f1.cell(i), f2.cell(j), w.v)) c = detail::transverse_index(f1.cell(i), f2.cell(j));
      w.checked_pairs.push_back({i, j, c});
    }
  return w;
}

/// One summand of a local weight: index * first_weight * second_weight.
struct LocalTerm {
  Polyhedron first;
  Polyhedron second;
  Integer index;
  Integer first_weight;
  Integer second_weight;
};

/// The weight computation at one candidate cell.
struct LocalComputation {
  Polyhedron cell;
  RatVector point;
  RatVector v;
  std::vector<LocalTerm> terms;
  Integer weight;
};

struct CalculusOptions {
  std::size_t seed = 0;
  std::vector<LocalComputation>* trace = nullptr;
};

namespace detail {

struct LocalCell {
  Polyhedron cell;
  Polyhedron cone;
  Integer weight;
};

inline std::vector<LocalCell> local_cells(const TropicalCycle& c, const RatVector& p) {
  std::vector<LocalCell> out;
  for (const auto& [sigma, w] : c.weighted_cells())
    if (sigma.contains(p)) out.push_back({sigma, local_cone(sigma, p), w});
  return out;
}

inline std::vector<Polyhedron> cones_of(const std::vector<LocalCell>& cells) {
  std::vector<Polyhedron> out;
  for (const auto& c : cells) out.push_back(c.cone);
  return out;
}

inline void record(const CalculusOptions& opt, LocalComputation step) {
  if (opt.trace) opt.trace->push_back(std::move(step));
}

} // namespace detail

inline TropicalCycle stable_intersect(const TropicalCycle& c1, const TropicalCycle& c2,
                                      const CalculusOptions& opt = {}) {
  if (c1.ambient_rank() != c2.ambient_rank()) throw Error("intersecting cycles of different ambient rank");
  const std::size_t r = c1.ambient_rank();
  const int d = c1.dimension() + c2.dimension() - static_cast<int>(r);
  if (d < 0) return TropicalCycle::zero(r, d);
  const auto s1 = support_cycle(c1), s2 = support_cycle(c2);
  std::set<Polyhedron> candidates;
  for (const auto& [a, wa] : s1.weighted_cells())
    for (const auto& [b, wb] : s2.weighted_cells()) {
      const auto m = intersect(a, b);
      if (!m || m->dim() < static_cast<std::size_t>(d)) continue;
      if (m->dim() == static_cast<std::size_t>(d)) {
        candidates.insert(*m);
        continue;
      }
      for (const auto& f : m->faces())
        if (f.dim() == static_cast<std::size_t>(d)) candidates.insert(f);
    }
  std::vector<WeightedCell> kept;
  for (const auto& tau : candidates) {
    const RatVector p = tau.relative_interior_point();
    const auto l1 = detail::local_cells(s1, p), l2 = detail::local_cells(s2, p);
    detail::SubspaceFilter filter(r);
    detail::add_pair_sums(filter, detail::face_spaces(detail::cones_of(l1)), detail::face_spaces(detail::cones_of(l2)));
    LocalComputation step{tau, p, detail::first_generic(filter, opt.seed), {}, 0};
    for (const auto& a : l1)
      for (const auto& b : l2) {
        const Integer index = detail::transverse_index(a.cone, b.cone);
        if (index == 0 || !detail::displaced_meet(a.cone, b.cone, step.v)) continue;
        step.weight += index * a.weight * b.weight;
        step.terms.push_back({a.cell, b.cell, index, a.weight, b.weight});
      }
    if (step.weight != 0) kept.emplace_back(tau, step.weight);
    detail::record(opt, std::move(step));
  }
  return TropicalCycle::from_cells_unchecked(r, d, kept);
}

/// Fan displacement rule on a common complete fan.
inline MinkowskiWeight cup_product(const MinkowskiWeight& c, const MinkowskiWeight& d, std::size_t seed = 0) {
  if (!(c.fan() == d.fan())) throw Error("Minkowski weights on different fans");
  const auto& fan = c.fan();
  const std::size_t r = fan.ambient_rank(), k = c.codim() + d.codim();
  if (k > r) throw Error("codimension " + std::to_string(k) + " exceeds the ambient rank");
  detail::SubspaceFilter filter(r);
  const auto spaces = detail::face_spaces(fan.cells());
  detail::add_pair_sums(filter, spaces, spaces);
  const RatVector v = detail::first_generic(filter, seed);
  std::map<Polyhedron, Integer> out;
  for (auto g : fan.cells_of_dim(r - k)) {
    const auto& gamma = fan.cell(g);
    Integer w = 0;
    for (auto i : fan.cells_containing(gamma)) {
      const auto& sigma = fan.cell(i);
      if (sigma.dim() + c.codim() != r || c(sigma) == 0) continue;
      for (auto j : fan.cells_containing(gamma)) {
        const auto& rho = fan.cell(j);
        if (rho.dim() + d.codim() != r || d(rho) == 0) continue;
        const Integer index = detail::transverse_index(sigma, rho);
        if (index != 0 && detail::displaced_meet(sigma, rho, v)) w += index * c(sigma) * d(rho);
      }
    }
    if (w != 0) out[gamma] = w;
  }
  return MinkowskiWeight(fan, k, std::move(out));
}

inline TropicalCycle push_forward(const IntegralAffineMap& f, const TropicalCycle& c) {
  if (f.domain_rank() != c.ambient_rank()) throw Error("map domain rank does not match the cycle");
  const std::size_t r = f.codomain_rank();
  const int n = c.dimension();
  if (n < 0 || n > static_cast<int>(r)) return TropicalCycle::zero(r, n);
  std::vector<WeightedCell> images;
  for (const auto& [sigma, m] : c.weighted_cells()) {
    if (m == 0) continue;
    std::vector<IntVector> moved;
    for (const auto& b : sigma.linear_space().generators()) moved.push_back(f.apply_linear(b));
    if (rank(moved, r) < static_cast<std::size_t>(n)) continue;
    const auto image = sigma.image(f);
    images.emplace_back(image, m * lattice_index(image.linear_space(), moved));
  }
  return support_cycle(combine(r, n, images));
}

struct PullbackResult {
  TropicalCycle cycle;
  /// F is not surjective and no candidate cell received a nonzero weight.
  bool degenerate = false;
};

namespace detail {

/// {x : a'.F(x) (<= or ==) b'} as a constraint on x; nullopt when the
/// constraint does not depend on x. `feasible` reports whether it then holds.
inline std::optional<Halfspace> pulled_constraint(const IntegralAffineMap& f, const Halfspace& h, bool equation,
                                                  bool& feasible) {
  const IntVector a = f.linear().transpose().apply(h.normal);
  const Rational b = h.offset - dot(h.normal, f.translation());
  if (is_zero(a)) {
    feasible = equation ? b == 0 : b >= 0;
    return std::nullopt;
  }
  feasible = true;
  return Halfspace{a, b};
}

inline std::optional<Polyhedron> preimage(const IntegralAffineMap& f, const Polyhedron& p) {
  std::vector<Halfspace> ineqs, eqs;
  bool feasible = true;
  for (const auto& h : p.inequalities()) {
    if (auto g = pulled_constraint(f, h, false, feasible)) ineqs.push_back(*g);
    if (!feasible) return std::nullopt;
  }
  for (const auto& h : p.equations()) {
    if (auto g = pulled_constraint(f, h, true, feasible)) eqs.push_back(*g);
    if (!feasible) return std::nullopt;
  }
  return Polyhedron::from_constraints(f.domain_rank(), ineqs, eqs);
}

inline Halfspace normalized(Halfspace h) {
  const Integer g = content(h.normal);
  for (auto& x : h.normal) x /= g;
  h.offset /= g;
  return oriented(std::move(h));
}

} // namespace detail

/// Pull-back along F, with the source cells cut by the F-preimages of the
/// hyperplanes of C' and, if given, by the hyperplanes of a complete source complex.
inline PullbackResult pull_back_detailed(const IntegralAffineMap& f, const TropicalCycle& c_prime,
                                         const PolyhedralComplex* source = nullptr,
                                         const CalculusOptions& opt = {}) {
  if (f.codomain_rank() != c_prime.ambient_rank()) throw Error("map codomain rank does not match the cycle");
  const std::size_t r = f.domain_rank(), rp = f.codomain_rank();
  const int d = static_cast<int>(r) - c_prime.codimension();
  if (d < 0) return {TropicalCycle::zero(r, d), false};
  const auto s = support_cycle(c_prime);
  std::set<Halfspace> cuts;
  bool unused = true;
  for (const auto& h : hyperplanes_of(s.complex().maximal_cells()))
    if (auto g = detail::pulled_constraint(f, h, true, unused)) cuts.insert(detail::normalized(*g));
  if (source) {
    if (source->ambient_rank() != r) throw Error("source complex has wrong ambient rank");
    if (!is_complete(*source)) throw Error("source complex is not complete");
    for (const auto& h : hyperplanes_of(source->maximal_cells())) cuts.insert(h);
  }
  const std::vector<Halfspace> hs(cuts.begin(), cuts.end());

  std::set<Polyhedron> candidates;
  for (const auto& [tau_prime, w] : s.weighted_cells()) {
    const auto pre = detail::preimage(f, tau_prime);
    if (!pre || pre->dim() < static_cast<std::size_t>(d)) continue;
    for (const auto& piece : split(*pre, hs)) {
      if (piece.dim() == static_cast<std::size_t>(d)) {
        candidates.insert(piece);
        continue;
      }
      for (const auto& face : piece.faces())
        if (face.dim() == static_cast<std::size_t>(d)) candidates.insert(face);
    }
  }

  const IntegralAffineMap linear(f.linear());
  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < r; ++j) columns.push_back(f.linear().column(j));
  std::vector<WeightedCell> kept;
  for (const auto& tau : candidates) {
    const RatVector p = tau.relative_interior_point();
    const auto targets = detail::local_cells(s, f(p));
    std::vector<Halfspace> through;
    for (const auto& h : hs)
      if (dot(h.normal, p) == h.offset) through.push_back({h.normal, 0});
    const auto regions = split(Polyhedron::whole_space(r), through);
    std::vector<Polyhedron> images;
    for (const auto& region : regions) images.push_back(region.image(linear));

    detail::SubspaceFilter filter(rp);
    std::set<std::vector<IntVector>> moved_faces;
    for (const auto& space : detail::face_spaces(regions)) {
      std::vector<IntVector> moved;
      for (const auto& g : space) moved.push_back(f.apply_linear(g));
      moved_faces.insert(Lattice::span(rp, moved).generators());
    }
    detail::add_pair_sums(filter, {moved_faces.begin(), moved_faces.end()},
                          detail::face_spaces(detail::cones_of(targets)));
    LocalComputation step{tau, p, detail::first_generic(filter, opt.seed), {}, 0};
    for (std::size_t i = 0; i < regions.size(); ++i)
      for (const auto& t : targets) {
        auto gens = columns;
        for (const auto& g : t.cone.linear_space().generators()) gens.push_back(g);
        const Integer index = lattice_index(Lattice::full(rp), gens);
        if (index == 0 || !detail::displaced_meet(images[i], t.cone, step.v)) continue;
        step.weight += index * t.weight;
        step.terms.push_back({regions[i], t.cell, index, 1, t.weight});
      }
    if (step.weight != 0) kept.emplace_back(tau, step.weight);
    detail::record(opt, std::move(step));
  }
  PullbackResult out{TropicalCycle::from_cells_unchecked(r, d, kept), false};
  out.degenerate = kept.empty() && !s.weighted_cells().empty() && rank(columns, rp) < rp;
  return out;
}

inline TropicalCycle pull_back(const IntegralAffineMap& f, const TropicalCycle& c_prime,
                               const CalculusOptions& opt = {}) {
  return pull_back_detailed(f, c_prime, nullptr, opt).cycle;
}

} // namespace tropical
