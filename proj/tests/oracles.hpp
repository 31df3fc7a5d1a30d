#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these call into the library's lattice or polyhedron code.

#include <gmpxx.h>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

/// Determinant of a square matrix given by columns, by cofactor expansion.
inline std::int64_t det(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  if (n == 0) return 1;
  if (n == 1) return cols[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> minor;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      Vec c;
      for (std::size_t i = 1; i < n; ++i) c.push_back(cols[k][i]);
      minor.push_back(c);
    }
    const std::int64_t term = cols[j][0] * det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

/// Number of cosets of the lattice spanned by n independent columns in Z^n,
/// counted by enumerating the residue box [0, D)^n with D = |det| (which
/// annihilates the quotient): index = D^n / #(box points in the lattice).
inline std::int64_t coset_count(const std::vector<Vec>& cols) {
  const std::size_t n = cols.size();
  const std::int64_t d = std::llabs(det(cols));
  if (d == 0) return 0;
  // x is in the lattice iff adj(M) x == 0 mod det(M)
  std::vector<Vec> adj(n, Vec(n, 0)); // adj[i][k]: row i of the adjugate
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      // cofactor of entry (k, i) of M (row k, column i)
      std::vector<Vec> minor;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == i) continue;
        Vec col;
        for (std::size_t r = 0; r < n; ++r)
          if (r != k) col.push_back(cols[c][r]);
        minor.push_back(col);
      }
      const std::int64_t m = det(minor);
      adj[i][k] = ((i + k) % 2 == 0) ? m : -m;
    }
  const std::int64_t full_det = det(cols);
  std::int64_t inside = 0;
  Vec x(n, 0);
  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= d;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rest = idx;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rest % d;
      rest /= d;
    }
    bool member = true;
    for (std::size_t i = 0; i < n && member; ++i) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s += adj[i][k] * x[k];
      if (s % full_det != 0) member = false;
    }
    if (member) ++inside;
  }
  return total / inside;
}

/// Exact 2D tropical-curve data for the displacement oracle.
struct Q2 {
  mpq_class x, y;
};

/// A closed edge of a plane curve: start + t * dir with t in [0, len]
/// (len < 0 means an unbounded ray).
struct Edge {
  Q2 start;
  Vec dir; // primitive integer direction
  mpq_class len;
  std::int64_t weight;
};

/// Local directions of an edge at point p (empty if p is not on the edge).
inline std::vector<Vec> local_directions(const Edge& e, const Q2& p) {
  // p = start + t dir
  mpq_class t;
  if (e.dir[0] != 0)
    t = (p.x - e.start.x) / e.dir[0];
  else
    t = (p.y - e.start.y) / e.dir[1];
  if (e.start.x + t * e.dir[0] != p.x || e.start.y + t * e.dir[1] != p.y) return {};
  if (t < 0 || (e.len >= 0 && t > e.len)) return {};
  std::vector<Vec> out;
  if (e.len < 0 || t < e.len) out.push_back(e.dir);
  if (t > 0) out.push_back({-e.dir[0], -e.dir[1]});
  return out;
}

/// Fan displacement rule at p for two plane curves, with displacement v:
/// sum over local ray pairs (d1, d2) with ray(d1) meeting ray(d2) + v of
/// |det(d1, d2)| * w1 * w2. The ray pair meets iff t d1 - s d2 = v has a
/// solution with t, s >= 0.
inline std::int64_t local_weight(const std::vector<Edge>& c1, const std::vector<Edge>& c2, const Q2& p,
                                 const Q2& v) {
  std::int64_t total = 0;
  for (const auto& e1 : c1)
    for (const auto& d1 : local_directions(e1, p))
      for (const auto& e2 : c2)
        for (const auto& d2 : local_directions(e2, p)) {
          const std::int64_t dt = d1[0] * (-d2[1]) - (-d2[0]) * d1[1];
          if (dt == 0) continue;
          const mpq_class t = (v.x * (-d2[1]) - (-d2[0]) * v.y) / dt;
          const mpq_class s = (d1[0] * v.y - d1[1] * v.x) / dt;
          if (t >= 0 && s >= 0) total += std::llabs(dt) * e1.weight * e2.weight;
        }
  return total;
}

} // namespace oracle
