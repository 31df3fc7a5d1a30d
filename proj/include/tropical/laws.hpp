#pragma once

// Algebraic laws of the intersection calculus checked on a corpus of cycles
// and maps, plus a seeded generator for random balanced fan cycles.

#include "tropical/calculus.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tropical {

struct NamedCycle {
  std::string name;
  TropicalCycle cycle;
};

struct NamedMap {
  std::string name;
  IntegralAffineMap map;
};

struct LawCorpus {
  std::vector<NamedCycle> cycles;
  std::vector<NamedMap> maps;
};

struct LawTally {
  std::string law;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Checks where at least one side has a cell.
  std::size_t nontrivial = 0;
};

struct LawFailure {
  std::string law;
  std::string instance;
  TropicalCycle lhs;
  TropicalCycle rhs;
};

struct LawReport {
  std::vector<LawTally> tallies;
  std::vector<LawFailure> failures;

  bool ok() const { return failures.empty(); }
  std::size_t checks() const {
    std::size_t n = 0;
    for (const auto& t : tallies) n += t.checks;
    return n;
  }
};

struct LawOptions {
  std::size_t seed = 0;
  /// Name of a law whose left-hand side gets one weight increased by 1.
  std::string inject_fault;
};

inline const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names{"commutativity",      "associativity",   "bilinearity",
                                              "pullback-product",   "projection-formula", "push-functoriality",
                                              "pull-functoriality", "support",         "balanced"};
  return names;
}

namespace laws_detail {

inline TropicalCycle corrupted(const TropicalCycle& c) {
  auto cells = c.weighted_cells();
  if (cells.empty()) return c;
  cells.front().second += 1;
  return TropicalCycle::from_complex_unchecked(c.complex(), c.dimension(), cells);
}

/// Moves the first cell far away.
inline TropicalCycle misplaced(const TropicalCycle& c) {
  auto cells = c.weighted_cells();
  if (cells.empty()) return c;
  RatVector t;
  for (std::size_t i = 0; i < c.ambient_rank(); ++i) t.emplace_back(1000 * (i + 1));
  cells.front().first = cells.front().first.image(IntegralAffineMap(IntegerMatrix::identity(c.ambient_rank()), t));
  return TropicalCycle::from_cells_unchecked(c.ambient_rank(), c.dimension(), cells);
}

inline bool point_in_support(const TropicalCycle& c, const RatVector& x) {
  for (const auto& [p, w] : c.weighted_cells())
    if (w != 0 && p.contains(x)) return true;
  return false;
}

class Runner {
public:
  Runner(const LawOptions& options) : options_(options) {
    for (const auto& n : law_names()) report_.tallies.push_back({n, 0, 0, 0});
  }

  void equal(const std::string& law, const std::string& instance, TropicalCycle lhs, const TropicalCycle& rhs) {
    if (options_.inject_fault == law) {
      auto bad = corrupted(lhs);
      if (bad.weighted_cells() != lhs.weighted_cells()) lhs = bad;
      else if (!rhs.weighted_cells().empty()) return record(law, instance, lhs, corrupted(rhs), false);
    }
    record(law, instance, lhs, rhs, equals(lhs, rhs));
  }

  template <class Predicate>
  void holds(const std::string& law, const std::string& instance, const TropicalCycle& witness, Predicate ok) {
    if (options_.inject_fault == law) {
      const auto bad = law == "support" ? misplaced(witness) : corrupted(witness);
      return record(law, instance, bad, bad, ok(bad));
    }
    record(law, instance, witness, witness, ok(witness));
  }

  void balanced(const std::string& instance, const TropicalCycle& c) {
    holds("balanced", instance, c, [](const TropicalCycle& x) { return is_balanced(x).balanced; });
  }

  LawReport take() { return std::move(report_); }
  const LawOptions& options() const { return options_; }

private:
  void record(const std::string& law, const std::string& instance, const TropicalCycle& lhs,
              const TropicalCycle& rhs, bool ok) {
    for (auto& t : report_.tallies)
      if (t.law == law) {
        ++t.checks;
        if (!ok) ++t.failures;
        if (!lhs.weighted_cells().empty() || !rhs.weighted_cells().empty()) ++t.nontrivial;
      }
    if (!ok) report_.failures.push_back({law, instance, lhs, rhs});
  }

  LawOptions options_;
  LawReport report_;
};

} // namespace laws_detail

/// Each cycle is paired with the next one or two cycles of the same ambient
/// rank; each map with cycles of matching rank chosen by its position.
inline LawReport check_laws(const LawCorpus& corpus, const LawOptions& options = {}) {
  laws_detail::Runner run(options);
  const CalculusOptions calc{options.seed, nullptr};
  auto cap = [&](const TropicalCycle& a, const TropicalCycle& b) { return stable_intersect(a, b, calc); };
  auto pull = [&](const IntegralAffineMap& f, const TropicalCycle& c) { return pull_back(f, c, calc); };

  std::map<std::size_t, std::vector<std::size_t>> by_rank;
  for (std::size_t i = 0; i < corpus.cycles.size(); ++i) by_rank[corpus.cycles[i].cycle.ambient_rank()].push_back(i);
  auto nth = [&](std::size_t r, std::size_t k) -> const NamedCycle* {
    auto it = by_rank.find(r);
    if (it == by_rank.end()) return nullptr;
    return &corpus.cycles[it->second[k % it->second.size()]];
  };

  auto intersect_checked = [&](const NamedCycle& a, const NamedCycle& b) {
    const auto c = cap(a.cycle, b.cycle);
    const std::string instance = a.name + " . " + b.name;
    run.balanced(instance, c);
    run.holds("support", instance, c, [&](const TropicalCycle& x) {
      for (const auto& [p, w] : x.weighted_cells()) {
        const auto y = p.relative_interior_point();
        if (!laws_detail::point_in_support(a.cycle, y) || !laws_detail::point_in_support(b.cycle, y)) return false;
      }
      return true;
    });
    return c;
  };

  for (const auto& [r, members] : by_rank) {
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      const auto& a = corpus.cycles[members[pos]];
      const auto& b = corpus.cycles[members[(pos + 1) % members.size()]];
      const auto& c = corpus.cycles[members[(pos + 2) % members.size()]];
      const auto ab = intersect_checked(a, b);
      run.equal("commutativity", a.name + ", " + b.name, ab, cap(b.cycle, a.cycle));
      run.equal("associativity", a.name + ", " + b.name + ", " + c.name, cap(ab, c.cycle),
                cap(a.cycle, intersect_checked(b, c)));
      const NamedCycle* same = nullptr;
      for (std::size_t k = 1; k < members.size() && !same; ++k) {
        const auto& cand = corpus.cycles[members[(pos + k) % members.size()]];
        if (cand.cycle.dimension() == a.cycle.dimension()) same = &cand;
      }
      if (same) {
        run.equal("bilinearity", a.name + " + " + same->name + ", " + c.name, cap(add(a.cycle, same->cycle), c.cycle),
                  add(cap(a.cycle, c.cycle), cap(same->cycle, c.cycle)));
      }
      run.equal("bilinearity", "-2 " + a.name + ", " + b.name, cap(scale(a.cycle, -2), b.cycle), scale(ab, -2));
    }
  }

  for (std::size_t m = 0; m < corpus.maps.size(); ++m) {
    const auto& [fname, f] = corpus.maps[m];
    const std::size_t r = f.domain_rank(), rp = f.codomain_rank();
    const NamedCycle* t1 = nth(rp, 2 * m);
    const NamedCycle* t2 = nth(rp, 2 * m + 1);
    const NamedCycle* s = nth(r, m);
    if (t1 && t2) {
      const std::string instance = fname + "; " + t1->name + ", " + t2->name;
      const auto p1 = pull(f, t1->cycle), p2 = pull(f, t2->cycle);
      run.balanced(fname + "^* " + t1->name, p1);
      run.holds("support", fname + "^* " + t1->name, p1, [&](const TropicalCycle& x) {
        for (const auto& [p, w] : x.weighted_cells())
          if (!laws_detail::point_in_support(t1->cycle, f(p.relative_interior_point()))) return false;
        return true;
      });
      run.equal("pullback-product", instance, pull(f, cap(t1->cycle, t2->cycle)), cap(p1, p2));
    }
    if (t1 && s) {
      const std::string instance = fname + "; " + t1->name + ", " + s->name;
      const auto pushed = push_forward(f, s->cycle);
      run.balanced(fname + "_* " + s->name, pushed);
      run.holds("support", fname + "_* " + s->name, pushed, [&](const TropicalCycle& x) {
        for (const auto& [p, w] : x.weighted_cells()) {
          const auto y = p.relative_interior_point();
          bool found = false;
          for (const auto& [sigma, m2] : s->cycle.weighted_cells())
            if (m2 != 0 && sigma.image(f).contains(y)) found = true;
          if (!found) return false;
        }
        return true;
      });
      run.equal("projection-formula", instance, push_forward(f, cap(pull(f, t1->cycle), s->cycle)),
                cap(t1->cycle, pushed));
    }
    for (std::size_t k = 1; k <= corpus.maps.size(); ++k) {
      const auto& [gname, g] = corpus.maps[(m + k) % corpus.maps.size()];
      if (g.domain_rank() != rp) continue;
      const auto gf = compose(g, f);
      if (s) {
        run.equal("push-functoriality", "(" + gname + " o " + fname + ")_* " + s->name, push_forward(gf, s->cycle),
                  push_forward(g, push_forward(f, s->cycle)));
      }
      if (const NamedCycle* t = nth(g.codomain_rank(), m)) {
        run.equal("pull-functoriality", "(" + gname + " o " + fname + ")^* " + t->name, pull(gf, t->cycle),
                  pull(f, pull(g, t->cycle)));
      }
      break;
    }
  }
  return run.take();
}

namespace corpus {

inline std::vector<IntVector> standard_rays(std::size_t r) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, Integer(0));
    e[i] = 1;
    rays.push_back(e);
  }
  rays.push_back(IntVector(r, Integer(-1)));
  return rays;
}

/// The fan over all d-element subsets of e_1, ..., e_r, -e_1 - ... - e_r with weight 1.
inline TropicalCycle standard_fan(std::size_t r, std::size_t d) {
  if (d == 0) return TropicalCycle::from_cells(r, 0, {{Polyhedron::point(RatVector(r, Rational(0))), 1}});
  if (d == r) return TropicalCycle::from_cells(r, static_cast<int>(r), {{Polyhedron::whole_space(r), 1}});
  const auto rays = standard_rays(r);
  std::vector<WeightedCell> cells;
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      std::vector<IntVector> gens;
      for (auto i : pick) gens.push_back(rays[i]);
      cells.emplace_back(Polyhedron::from_generators(r, {}, gens), 1);
      return;
    }
    for (std::size_t i = start; i < rays.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return TropicalCycle::from_cells(r, static_cast<int>(d), cells);
}

inline std::size_t ray_count(const TropicalCycle& c) {
  std::set<IntVector, LexLess> rays;
  for (const auto& [p, w] : c.weighted_cells()) rays.insert(p.rays().begin(), p.rays().end());
  return rays.size();
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-2, 2);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

inline TropicalCycle random_fan_piece(std::mt19937_64& rng, std::size_t r, std::size_t d) {
  std::uniform_int_distribution<int> weight(-3, 3);
  for (;;) {
    const auto m = random_matrix(rng, r, r);
    if (rank(m.columns(), r) < r) continue;
    int w = 0;
    while (w == 0) w = weight(rng);
    return scale(push_forward(IntegralAffineMap(m), standard_fan(r, d)), w);
  }
}

/// A balanced fan cycle in R^r, r <= 3, with at most 8 rays and weights in [-3, 3].
inline TropicalCycle random_fan_cycle(std::mt19937_64& rng, std::size_t r) {
  std::uniform_int_distribution<std::size_t> dim(0, r);
  std::bernoulli_distribution twice(0.4);
  for (;;) {
    std::size_t d = dim(rng);
    if ((d == 0 || d == r) && dim(rng) != 0) d = std::max<std::size_t>(1, std::min(d, r - 1));
    if (d > r) continue;
    auto c = random_fan_piece(rng, r, d);
    if (twice(rng)) c = support_cycle(add(c, random_fan_piece(rng, r, d)));
    if (c.weighted_cells().empty() || ray_count(c) > 8) continue;
    bool small = true;
    for (const auto& [p, w] : c.weighted_cells())
      if (w < -3 || w > 3) small = false;
    if (small && is_balanced(c).balanced) return c;
  }
}

inline IntegralAffineMap random_map(std::mt19937_64& rng, std::size_t r, std::size_t rp) {
  std::bernoulli_distribution translated(0.5);
  std::uniform_int_distribution<int> shift(-2, 2);
  RatVector t(rp, Rational(0));
  if (translated(rng))
    for (auto& x : t) x = Rational(shift(rng)) / 2;
  return IntegralAffineMap(random_matrix(rng, rp, r), t);
}

/// Seeded corpus: `cycles` fan cycles spread over ranks 1 to 3 and `maps`
/// affine maps between those ranks.
inline LawCorpus random_corpus(std::uint64_t seed, std::size_t cycles, std::size_t maps) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> rank_of(1, 3);
  std::discrete_distribution<std::size_t> cycle_rank{0, 1, 3, 3};
  LawCorpus out;
  for (std::size_t i = 0; i < cycles; ++i) {
    const std::size_t r = i < 3 ? i + 1 : cycle_rank(rng);
    out.cycles.push_back({"cycle" + std::to_string(i), random_fan_cycle(rng, r)});
  }
  for (std::size_t i = 0; i < maps; ++i) {
    const std::size_t r = rank_of(rng), rp = rank_of(rng);
    out.maps.push_back({"map" + std::to_string(i), random_map(rng, r, rp)});
  }
  return out;
}

} // namespace corpus

/// Subdivides every maximal cell into pyramids over its facets with apex at
/// a relative interior point, plus apex + recession cone for unbounded
/// cells; cells without facets are cut by a hyperplane.
inline TropicalCycle barycentric_subdivision(const TropicalCycle& c) {
  const std::size_t r = c.ambient_rank();
  std::vector<WeightedCell> cells;
  for (const auto& [sigma, w] : c.weighted_cells()) {
    if (sigma.dim() == 0) {
      cells.emplace_back(sigma, w);
      continue;
    }
    const RatVector apex = sigma.relative_interior_point();
    std::vector<Polyhedron> facets;
    for (const auto& f : sigma.faces())
      if (f.dim() + 1 == sigma.dim()) facets.push_back(f);
    if (facets.empty()) {
      const auto dirs = sigma.lineality();
      IntVector normal = dirs.front();
      for (const auto& piece : split(sigma, {Halfspace{normal, dot(normal, apex)}})) cells.emplace_back(piece, w);
      continue;
    }
    std::vector<Polyhedron> pieces;
    for (const auto& f : facets) {
      auto vs = f.vertices();
      vs.push_back(apex);
      pieces.push_back(Polyhedron::from_generators(r, vs, f.rays(), f.lineality()));
    }
    if (!sigma.rays().empty()) pieces.push_back(Polyhedron::from_generators(r, {apex}, sigma.rays(), sigma.lineality()));
    for (auto& piece : pieces)
      if (piece.dim() == sigma.dim()) cells.emplace_back(std::move(piece), w);
  }
  return TropicalCycle::from_cells_unchecked(r, c.dimension(), cells);
}

} // namespace tropical
