#pragma once

// Rational polyhedra in R^r with both a generator description (vertices, rays,
// lineality) and a constraint description (inequalities, equations). The two
// are kept in sync by an exact double description conversion and both are
// stored in a canonical form, so equality of values is equality of sets.

#include "tropical/affine_map.hpp"
#include "tropical/lattice.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace tropical {

/// normal . x <= offset (inequality) or normal . x == offset (equation)
struct Halfspace {
  IntVector normal;
  Rational offset;

  bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
  std::strong_ordering operator<=>(const Halfspace& o) const {
    if (auto c = lex_compare(normal, o.normal); c != 0) return c;
    if (offset < o.offset) return std::strong_ordering::less;
    if (o.offset < offset) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

namespace detail {

struct ConeGenerators {
  std::vector<RatVector> rays;
  std::vector<RatVector> lineality;
};

inline RatVector normalized_direction(const RatVector& v) { return to_rational(primitive(v)); }

/// Generators of {x in R^d : a.x >= 0 for a in ineqs, a.x == 0 for a in eqs}
/// by the double description method. Rays are extreme modulo the lineality.
inline ConeGenerators cone_from_constraints(std::size_t d, const std::vector<RatVector>& ineqs,
                                            const std::vector<RatVector>& eqs) {
  ConeGenerators g;
  for (std::size_t i = 0; i < d; ++i) {
    RatVector e(d, Rational(0));
    e[i] = 1;
    g.lineality.push_back(std::move(e));
  }
  std::vector<RatVector> processed;
  std::vector<std::pair<const RatVector*, bool>> order;
  for (const auto& e : eqs) order.emplace_back(&e, true);
  for (const auto& a : ineqs) order.emplace_back(&a, false);

  for (const auto& [aptr, is_eq] : order) {
    const RatVector& a = *aptr;
    if (is_zero(a)) continue;
    auto lit = std::find_if(g.lineality.begin(), g.lineality.end(),
                            [&](const RatVector& l) { return dot(a, l) != 0; });
    if (lit != g.lineality.end()) {
      RatVector l0 = *lit;
      g.lineality.erase(lit);
      Rational al0 = dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      for (auto& l : g.lineality) {
        const Rational f = dot(a, l) / al0;
        if (f != 0) l = subtract(l, scaled(l0, f));
      }
      for (auto& r : g.rays) {
        const Rational f = dot(a, r) / al0;
        if (f != 0) r = normalized_direction(subtract(r, scaled(l0, f)));
      }
      if (!is_eq) g.rays.push_back(normalized_direction(l0));
      processed.push_back(a);
      continue;
    }

    std::vector<RatVector> pos, neg, zero;
    for (auto& r : g.rays) {
      const int s = sign(dot(a, r));
      (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
    }
    std::vector<RatVector> next = zero;
    if (!is_eq) next.insert(next.end(), pos.begin(), pos.end());
    const std::size_t face_rank = d - g.lineality.size();
    for (const auto& p : pos)
      for (const auto& n : neg) {
        // adjacency: the constraints tight at both rays cut out a 2-face
        std::vector<RatVector> common;
        for (const auto& c : processed)
          if (dot(c, p) == 0 && dot(c, n) == 0) common.push_back(c);
        if (face_rank < 2 || rank(common, d) != face_rank - 2) continue;
        const Rational ap = dot(a, p);
        const Rational an = dot(a, n);
        next.push_back(normalized_direction(subtract(scaled(n, ap), scaled(p, an))));
      }
    std::sort(next.begin(), next.end(), LexLess{});
    next.erase(std::unique(next.begin(), next.end()), next.end());
    g.rays = std::move(next);
    processed.push_back(a);
  }
  return g;
}

inline RatVector homogenize(const Rational& t, const RatVector& x) {
  RatVector h;
  h.reserve(x.size() + 1);
  h.push_back(t);
  h.insert(h.end(), x.begin(), x.end());
  return h;
}

} // namespace detail

class Polyhedron {
public:
  Polyhedron() = default;

  /// conv(vertices) + cone(rays) + span(lineality). With no vertices but some
  /// rays or lineality the apex is the origin.
  static Polyhedron from_generators(std::size_t ambient_rank, std::vector<RatVector> vertices,
                                    const std::vector<IntVector>& rays = {},
                                    const std::vector<IntVector>& lineality = {}) {
    if (vertices.empty() && rays.empty() && lineality.empty()) throw Error("empty polyhedron");
    if (vertices.empty()) vertices.push_back(RatVector(ambient_rank, Rational(0)));
    for (const auto& v : vertices)
      if (v.size() != ambient_rank) throw Error("vertex has wrong dimension");
    for (const auto& v : rays)
      if (v.size() != ambient_rank) throw Error("ray has wrong dimension");
    for (const auto& v : lineality)
      if (v.size() != ambient_rank) throw Error("lineality vector has wrong dimension");

    std::vector<RatVector> gens, lin;
    for (const auto& v : vertices) gens.push_back(detail::homogenize(1, v));
    for (const auto& r : rays)
      if (!is_zero(r)) gens.push_back(detail::homogenize(0, to_rational(r)));
    for (const auto& l : lineality)
      if (!is_zero(l)) lin.push_back(detail::homogenize(0, to_rational(l)));
    const auto dual = detail::cone_from_constraints(ambient_rank + 1, gens, lin);

    std::vector<Halfspace> ineqs, eqs;
    for (const auto& y : dual.rays) {
      RatVector a(y.begin() + 1, y.end());
      if (is_zero(a)) continue;
      ineqs.push_back(to_halfspace(a, y[0]));
    }
    for (const auto& e : dual.lineality) {
      RatVector a(e.begin() + 1, e.end());
      if (is_zero(a)) continue;
      eqs.push_back(to_halfspace(a, e[0]));
    }
    auto p = from_constraints(ambient_rank, ineqs, eqs);
    if (!p) throw Error("internal error: generator description is infeasible");
    return std::move(*p);
  }

  static Polyhedron point(const RatVector& x) { return from_generators(x.size(), {x}); }
  static Polyhedron whole_space(std::size_t r) {
    std::vector<IntVector> lin;
    for (std::size_t i = 0; i < r; ++i) {
      IntVector e(r, Integer(0));
      e[i] = 1;
      lin.push_back(e);
    }
    return from_generators(r, {RatVector(r, Rational(0))}, {}, lin);
  }

  /// {x : a.x <= b for each inequality, a.x == b for each equation}; nullopt
  /// when the set is empty.
  static std::optional<Polyhedron> from_constraints(std::size_t ambient_rank,
                                                    const std::vector<Halfspace>& inequalities,
                                                    const std::vector<Halfspace>& equations = {}) {
    std::vector<RatVector> ineqs, eqs;
    ineqs.push_back(detail::homogenize(1, RatVector(ambient_rank, Rational(0)))); // t >= 0
    for (const auto& h : inequalities) {
      if (h.normal.size() != ambient_rank) throw Error("constraint has wrong dimension");
      ineqs.push_back(detail::homogenize(h.offset, scaled(to_rational(h.normal), Rational(-1))));
    }
    for (const auto& h : equations) {
      if (h.normal.size() != ambient_rank) throw Error("constraint has wrong dimension");
      eqs.push_back(detail::homogenize(h.offset, scaled(to_rational(h.normal), Rational(-1))));
    }
    const auto cone = detail::cone_from_constraints(ambient_rank + 1, ineqs, eqs);
    Polyhedron p;
    p.ambient_rank_ = ambient_rank;
    std::vector<RatVector> lin;
    for (const auto& l : cone.lineality) lin.push_back(RatVector(l.begin() + 1, l.end()));
    p.lineality_ = Lattice::saturated(ambient_rank, lin);
    std::vector<RatVector> lin_rows;
    for (const auto& g : p.lineality_.generators()) lin_rows.push_back(to_rational(g));
    const EchelonForm lin_span = reduced_echelon(lin_rows, ambient_rank);
    for (const auto& g : cone.rays) {
      RatVector x(g.begin() + 1, g.end());
      if (g[0] > 0) {
        p.vertices_.push_back(reduce_modulo_span(scaled(x, 1 / g[0]), lin_span));
      } else {
        auto r = primitive(reduce_modulo_span(x, lin_span));
        if (!is_zero(r)) p.rays_.push_back(std::move(r));
      }
    }
    if (p.vertices_.empty()) return std::nullopt;
    std::sort(p.vertices_.begin(), p.vertices_.end(), LexLess{});
    p.vertices_.erase(std::unique(p.vertices_.begin(), p.vertices_.end()), p.vertices_.end());
    std::sort(p.rays_.begin(), p.rays_.end(), LexLess{});
    p.rays_.erase(std::unique(p.rays_.begin(), p.rays_.end()), p.rays_.end());
    p.compute_constraints();
    return p;
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<RatVector>& vertices() const { return vertices_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  std::vector<IntVector> lineality() const { return lineality_.generators(); }
  const Lattice& lineality_lattice() const { return lineality_; }
  const std::vector<Halfspace>& inequalities() const { return inequalities_; }
  const std::vector<Halfspace>& equations() const { return equations_; }

  std::size_t dim() const { return ambient_rank_ - equations_.size(); }
  bool is_bounded() const { return rays_.empty() && lineality_.rank() == 0; }
  /// R_{>=0} * p == p
  bool is_cone() const { return vertices_.size() == 1 && is_zero(vertices_.front()); }
  bool is_strictly_convex_cone() const { return is_cone() && lineality_.rank() == 0; }

  /// Directions spanning the affine hull's underlying vector space.
  std::vector<RatVector> directions() const {
    std::vector<RatVector> dirs;
    for (std::size_t i = 1; i < vertices_.size(); ++i) dirs.push_back(subtract(vertices_[i], vertices_[0]));
    for (const auto& r : rays_) dirs.push_back(to_rational(r));
    for (const auto& l : lineality_.generators()) dirs.push_back(to_rational(l));
    return dirs;
  }

  /// The saturated lattice of the affine hull's direction space.
  Lattice linear_space() const { return Lattice::saturated(ambient_rank_, directions()); }

  bool contains(const RatVector& x) const {
    for (const auto& h : equations_)
      if (dot(h.normal, x) != h.offset) return false;
    for (const auto& h : inequalities_)
      if (dot(h.normal, x) > h.offset) return false;
    return true;
  }

  bool contains(const Polyhedron& q) const {
    for (const auto& v : q.vertices_)
      if (!contains(v)) return false;
    for (const auto& r : q.rays_)
      if (!recedes(r, false)) return false;
    for (const auto& l : q.lineality_.generators())
      if (!recedes(l, true)) return false;
    return true;
  }

  /// A point in the relative interior: vertex barycenter plus all rays.
  RatVector relative_interior_point() const {
    RatVector x(ambient_rank_, Rational(0));
    for (const auto& v : vertices_) x = add(x, v);
    x = scaled(x, Rational(1, static_cast<unsigned long>(vertices_.size())));
    for (const auto& r : rays_) x = add(x, to_rational(r));
    return x;
  }

  /// True if x lies in the relative interior.
  bool relative_interior_contains(const RatVector& x) const {
    if (!contains(x)) return false;
    for (const auto& h : inequalities_)
      if (dot(h.normal, x) == h.offset) return false;
    return true;
  }

  /// All faces including the polyhedron itself, sorted canonically.
  std::vector<Polyhedron> faces() const {
    const std::size_t nv = vertices_.size();
    const std::size_t ng = nv + rays_.size();
    std::vector<std::vector<char>> tight(inequalities_.size(), std::vector<char>(ng, 0));
    for (std::size_t i = 0; i < inequalities_.size(); ++i) {
      const auto& h = inequalities_[i];
      for (std::size_t k = 0; k < nv; ++k) tight[i][k] = dot(h.normal, vertices_[k]) == h.offset;
      for (std::size_t k = 0; k < rays_.size(); ++k) tight[i][nv + k] = dot(h.normal, rays_[k]) == 0;
    }
    std::set<std::vector<char>> seen;
    std::vector<std::vector<char>> queue{std::vector<char>(ng, 1)};
    seen.insert(queue.front());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto current = queue[qi];
      for (std::size_t i = 0; i < inequalities_.size(); ++i) {
        std::vector<char> next(ng);
        bool has_vertex = false;
        for (std::size_t k = 0; k < ng; ++k) {
          next[k] = current[k] && tight[i][k];
          if (k < nv && next[k]) has_vertex = true;
        }
        if (!has_vertex || next == current) continue;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    std::vector<Polyhedron> out;
    const auto lin = lineality_.generators();
    for (const auto& mask : queue) {
      if (mask == queue.front()) {
        out.push_back(*this);
        continue;
      }
      std::vector<RatVector> vs;
      std::vector<IntVector> rs;
      for (std::size_t k = 0; k < nv; ++k)
        if (mask[k]) vs.push_back(vertices_[k]);
      for (std::size_t k = 0; k < rays_.size(); ++k)
        if (mask[nv + k]) rs.push_back(rays_[k]);
      out.push_back(from_generators(ambient_rank_, vs, rs, lin));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// True if q is a face of this polyhedron.
  bool has_face(const Polyhedron& q) const {
    if (!contains(q)) return false;
    // the smallest face containing q is spanned by the generators tight on
    // every inequality that is tight at a relative interior point of q
    const RatVector x = q.relative_interior_point();
    std::vector<const Halfspace*> tight;
    for (const auto& h : inequalities_)
      if (dot(h.normal, x) == h.offset) tight.push_back(&h);
    for (const auto& v : vertices_) {
      bool on = true;
      for (const auto* h : tight) on = on && dot(h->normal, v) == h->offset;
      if (on && !q.contains(v)) return false;
    }
    for (const auto& r : rays_) {
      bool on = true;
      for (const auto* h : tight) on = on && dot(h->normal, r) == 0;
      if (on && !q.recedes(r, false)) return false;
    }
    for (const auto& l : lineality_.generators())
      if (!q.recedes(l, true)) return false;
    return true;
  }

  /// True if d (and -d when both_ways) is a recession direction.
  bool recedes(const IntVector& d, bool both_ways) const {
    for (const auto& h : equations_)
      if (dot(h.normal, d) != 0) return false;
    for (const auto& h : inequalities_) {
      const Integer s = dot(h.normal, d);
      if (s > 0 || (both_ways && s != 0)) return false;
    }
    return true;
  }

  Polyhedron translate(const RatVector& v) const {
    if (v.size() != ambient_rank_) throw Error("translation has wrong dimension");
    std::vector<RatVector> vs;
    for (const auto& x : vertices_) vs.push_back(add(x, v));
    return from_generators(ambient_rank_, vs, rays_, lineality());
  }

  Polyhedron image(const IntegralAffineMap& f) const {
    if (f.domain_rank() != ambient_rank_) throw Error("map domain rank does not match the polyhedron");
    std::vector<RatVector> vs;
    std::vector<IntVector> rs, ls;
    for (const auto& x : vertices_) vs.push_back(f(x));
    for (const auto& r : rays_) rs.push_back(primitive(f.apply_linear(r)));
    for (const auto& l : lineality_.generators()) ls.push_back(f.apply_linear(l));
    return from_generators(f.codomain_rank(), vs, rs, ls);
  }

  /// All hyperplanes appearing in the constraint description.
  std::vector<Halfspace> hyperplanes() const {
    std::vector<Halfspace> hs = equations_;
    hs.insert(hs.end(), inequalities_.begin(), inequalities_.end());
    return hs;
  }

  bool operator==(const Polyhedron& o) const {
    return ambient_rank_ == o.ambient_rank_ && vertices_ == o.vertices_ && rays_ == o.rays_ &&
           lineality_ == o.lineality_;
  }

  /// Canonical order: by dimension, then by generators.
  std::strong_ordering operator<=>(const Polyhedron& o) const {
    if (auto c = ambient_rank_ <=> o.ambient_rank_; c != 0) return c;
    if (auto c = dim() <=> o.dim(); c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(vertices_.begin(), vertices_.end(),
                                                        o.vertices_.begin(), o.vertices_.end(),
                                                        [](const RatVector& a, const RatVector& b) {
                                                          return lex_compare(a, b);
                                                        });
        c != 0)
      return c;
    if (auto c = std::lexicographical_compare_three_way(
            rays_.begin(), rays_.end(), o.rays_.begin(), o.rays_.end(),
            [](const IntVector& a, const IntVector& b) { return lex_compare(a, b); });
        c != 0)
      return c;
    const auto la = lineality_.generators();
    const auto lb = o.lineality_.generators();
    return std::lexicographical_compare_three_way(
        la.begin(), la.end(), lb.begin(), lb.end(),
        [](const IntVector& a, const IntVector& b) { return lex_compare(a, b); });
  }

private:
  static Halfspace to_halfspace(const RatVector& neg_normal, const Rational& rhs) {
    // neg_normal . x + rhs >= 0  <=>  (-neg_normal) . x <= rhs
    Integer den = 1;
    for (const auto& x : neg_normal) den = lcm(den, x.get_den());
    IntVector a(neg_normal.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = -Rational(neg_normal[i] * den).get_num();
    return {a, rhs * den};
  }

  // Canonical irredundant constraints recomputed from the generators.
  void compute_constraints() {
    const std::size_t r = ambient_rank_;
    std::vector<RatVector> gens, lin;
    for (const auto& v : vertices_) gens.push_back(detail::homogenize(1, v));
    for (const auto& x : rays_) gens.push_back(detail::homogenize(0, to_rational(x)));
    for (const auto& l : lineality_.generators()) lin.push_back(detail::homogenize(0, to_rational(l)));
    const auto dual = detail::cone_from_constraints(r + 1, gens, lin);

    // equations: reduced echelon form of [a | b] over the x-part, scaled to
    // primitive integer rows
    std::vector<RatVector> eq_rows;
    for (const auto& e : dual.lineality) {
      RatVector row(e.begin() + 1, e.end());
      if (is_zero(row)) continue;
      row.push_back(-e[0]); // a . x == -e0
      eq_rows.push_back(std::move(row));
    }
    const EchelonForm eqs = reduced_echelon(eq_rows, r + 1);
    equations_.clear();
    for (const auto& row : eqs.rows) {
      const IntVector full = primitive(row);
      equations_.push_back({IntVector(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(r)), full[r]});
    }
    const EchelonForm& eq_x = eqs;

    inequalities_.clear();
    for (const auto& y : dual.rays) {
      RatVector a(y.begin() + 1, y.end());
      // (-a) . x <= y0, reduced modulo the equations
      RatVector row = scaled(a, Rational(-1));
      row.push_back(y[0]);
      row = reduce_modulo_span(row, eq_x);
      RatVector normal(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(r));
      if (is_zero(normal)) continue;
      Integer den = 1;
      for (const auto& x : normal) den = lcm(den, x.get_den());
      IntVector n(r);
      for (std::size_t i = 0; i < r; ++i) n[i] = Rational(normal[i] * den).get_num();
      const Integer g = content(n);
      for (auto& x : n) x /= g;
      inequalities_.push_back({n, row[r] * den / g});
    }
    std::sort(inequalities_.begin(), inequalities_.end());
    inequalities_.erase(std::unique(inequalities_.begin(), inequalities_.end()), inequalities_.end());
  }

  std::size_t ambient_rank_ = 0;
  std::vector<RatVector> vertices_;
  std::vector<IntVector> rays_;
  Lattice lineality_;
  std::vector<Halfspace> inequalities_;
  std::vector<Halfspace> equations_;
};

/// True if one constraint of p or q strictly separates the other polyhedron.
inline bool separated(const Polyhedron& p, const Polyhedron& q) {
  auto beyond = [](const Polyhedron& a, const Halfspace& h, int sign) {
    // sign * (h.normal . x - h.offset) > 0 on all of a
    for (const auto& l : a.lineality_lattice().generators())
      if (dot(h.normal, l) != 0) return false;
    for (const auto& r : a.rays())
      if (sign * sgn(dot(h.normal, r)) < 0) return false;
    for (const auto& v : a.vertices())
      if (sign * sgn(dot(h.normal, v) - h.offset) <= 0) return false;
    return true;
  };
  for (const auto* pair : {&p, &q}) {
    const Polyhedron& other = pair == &p ? q : p;
    for (const auto& h : pair->inequalities())
      if (beyond(other, h, 1)) return true;
    for (const auto& h : pair->equations())
      if (beyond(other, h, 1) || beyond(other, h, -1)) return true;
  }
  return false;
}

inline std::optional<Polyhedron> intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_rank() != q.ambient_rank()) throw Error("intersecting polyhedra of different ambient rank");
  if (separated(p, q)) return std::nullopt;
  if (p.contains(q)) return q;
  if (q.contains(p)) return p;
  std::vector<Halfspace> ineqs = p.inequalities();
  ineqs.insert(ineqs.end(), q.inequalities().begin(), q.inequalities().end());
  std::vector<Halfspace> eqs = p.equations();
  eqs.insert(eqs.end(), q.equations().begin(), q.equations().end());
  return Polyhedron::from_constraints(p.ambient_rank(), ineqs, eqs);
}

inline bool meets(const Polyhedron& p, const Polyhedron& q) { return intersect(p, q).has_value(); }

inline std::string to_string(const Polyhedron& p) {
  std::string s = "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) s += (i ? "," : "") + to_string(p.vertices()[i]);
  s += "}";
  if (!p.rays().empty()) {
    s += "+cone{";
    for (std::size_t i = 0; i < p.rays().size(); ++i) s += (i ? "," : "") + to_string(p.rays()[i]);
    s += "}";
  }
  const auto lin = p.lineality();
  if (!lin.empty()) {
    s += "+span{";
    for (std::size_t i = 0; i < lin.size(); ++i) s += (i ? "," : "") + to_string(lin[i]);
    s += "}";
  }
  return s;
}

/// Which open sides of the hyperplane h.normal . x == h.offset the polyhedron reaches.
struct Sides {
  bool below = false;
  bool above = false;
};

inline Sides sides(const Polyhedron& p, const Halfspace& h) {
  Sides s;
  for (const auto& v : p.vertices()) {
    const Rational t = dot(h.normal, v) - h.offset;
    if (t < 0) s.below = true;
    if (t > 0) s.above = true;
  }
  for (const auto& r : p.rays()) {
    const Integer t = dot(h.normal, r);
    if (t < 0) s.below = true;
    if (t > 0) s.above = true;
  }
  for (const auto& l : p.lineality())
    if (dot(h.normal, l) != 0) s.below = s.above = true;
  return s;
}

/// Cuts p along every hyperplane that crosses its relative interior.
inline std::vector<Polyhedron> split(const Polyhedron& p, const std::vector<Halfspace>& hyperplanes) {
  std::vector<Polyhedron> pieces{p};
  for (const auto& h : hyperplanes) {
    std::vector<Polyhedron> next;
    for (const auto& piece : pieces) {
      const Sides s = sides(piece, h);
      if (!(s.below && s.above)) {
        next.push_back(piece);
        continue;
      }
      Halfspace flipped{scaled(h.normal, Integer(-1)), -h.offset};
      auto low = intersect(piece, Polyhedron::from_constraints(p.ambient_rank(), {h}, {}).value());
      auto high = intersect(piece, Polyhedron::from_constraints(p.ambient_rank(), {flipped}, {}).value());
      next.push_back(std::move(*low));
      next.push_back(std::move(*high));
    }
    pieces = std::move(next);
  }
  return pieces;
}

/// Sign-normalized hyperplane so that h and -h compare equal.
inline Halfspace oriented(Halfspace h) {
  for (const auto& x : h.normal)
    if (x != 0) {
      if (x < 0) {
        for (auto& y : h.normal) y = -y;
        h.offset = -h.offset;
      }
      break;
    }
  return h;
}

inline std::vector<Halfspace> hyperplanes_of(const std::vector<Polyhedron>& cells) {
  std::vector<Halfspace> hs;
  for (const auto& c : cells)
    for (const auto& h : c.hyperplanes()) hs.push_back(oriented(h));
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

} // namespace tropical
