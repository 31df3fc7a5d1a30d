#pragma once

// Integer and rational linear algebra: column Hermite normal form, Smith
// invariants, saturated sublattices of Z^r, lattice indices and primitive
// normal vectors.

#include "tropical/number.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace tropical {

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntegerMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
    IntegerMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static IntegerMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector column(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  IntVector row(std::size_t i) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<IntVector> columns() const {
    std::vector<IntVector> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntegerMatrix operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
    IntegerMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if ((*this)(i, k) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += (*this)(i, k) * o(k, j);
      }
    return p;
  }

  IntVector apply(const IntVector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    IntVector out(rows_, Integer(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  RatVector apply(const RatVector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector dimension mismatch");
    RatVector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += Rational((*this)(i, j)) * v[j];
    return out;
  }

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// ---------------------------------------------------------------------------
// Rational linear algebra on lists of row vectors.

struct EchelonForm {
  std::vector<RatVector> rows; // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;
};

inline EchelonForm reduced_echelon(std::vector<RatVector> rows, std::size_t ncols) {
  EchelonForm e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) rows[i][k] -= f * rows[r][k];
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

inline std::size_t rank(const std::vector<RatVector>& rows, std::size_t ncols) {
  return reduced_echelon(rows, ncols).pivots.size();
}

inline std::size_t rank(const std::vector<IntVector>& rows, std::size_t ncols) {
  std::vector<RatVector> q;
  for (const auto& r : rows) q.push_back(to_rational(r));
  return rank(q, ncols);
}

/// Basis of {x : row . x = 0 for all rows}, one rational vector per free column.
inline std::vector<RatVector> nullspace(const std::vector<RatVector>& rows, std::size_t ncols) {
  const EchelonForm e = reduced_echelon(rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(ncols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Projects v along span(rows) onto the coordinate subspace where the pivot
/// coordinates of the reduced echelon form vanish. The result depends only on
/// the span, which makes it a canonical representative of v modulo the span.
inline RatVector reduce_modulo_span(RatVector v, const EchelonForm& span) {
  for (std::size_t i = 0; i < span.rows.size(); ++i) {
    const Rational f = v[span.pivots[i]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * span.rows[i][k];
  }
  return v;
}

// ---------------------------------------------------------------------------
// Normal forms.

struct HermiteDecomposition {
  IntegerMatrix h; // column Hermite normal form of m
  IntegerMatrix u; // unimodular, m * u == h
};

/// Column Hermite normal form by unimodular column operations. Pivot rows
/// strictly increase from left to right, pivots are positive, entries left of
/// a pivot lie in [0, pivot), and the trailing columns are zero.
inline HermiteDecomposition hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.cols());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  auto combine = [&](IntegerMatrix& a, std::size_t p, std::size_t j, const Integer& s,
                     const Integer& t, const Integer& x, const Integer& y) {
    // col_p <- s col_p + t col_j ; col_j <- x col_p + y col_j
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer cp = a(i, p);
      Integer cj = a(i, j);
      a(i, p) = s * cp + t * cj;
      a(i, j) = x * cp + y * cj;
    }
  };

  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    for (std::size_t j = pc + 1; j < cols; ++j) {
      if (h(i, j) == 0) continue;
      Integer a = h(i, pc);
      Integer b = h(i, j);
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer x = -b / g;
      const Integer y = a / g;
      combine(h, pc, j, s, t, x, y);
      combine(u, pc, j, s, t, x, y);
    }
    if (h(i, pc) == 0) continue;
    if (h(i, pc) < 0) {
      for (std::size_t k = 0; k < rows; ++k) h(k, pc) = -h(k, pc);
      for (std::size_t k = 0; k < cols; ++k) u(k, pc) = -u(k, pc);
    }
    for (std::size_t k = 0; k < pc; ++k) {
      const Integer q = floor_div(h(i, k), h(i, pc));
      if (q == 0) continue;
      for (std::size_t r = 0; r < rows; ++r) h(r, k) -= q * h(r, pc);
      for (std::size_t r = 0; r < cols; ++r) u(r, k) -= q * u(r, pc);
    }
    ++pc;
  }
  return {std::move(h), std::move(u)};
}

/// Elementary divisors d_1 | d_2 | ... of m, min(rows, cols) values, zeros last.
inline std::vector<Integer> smith_invariants(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(t, j), a(pi, j));
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, t), a(i, pj));
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Integer q = floor_div(a(i, t), a(t, t));
        for (std::size_t j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Integer q = floor_div(a(t, j), a(t, t));
        for (std::size_t i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) a(t, j) += a(bad, j);
    }
    diag.push_back(abs(a(t, t)));
  }
  // enforce the divisibility chain and move zeros to the end
  std::stable_partition(diag.begin(), diag.end(), [](const Integer& x) { return x != 0; });
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == 0 || diag[j] == 0) continue;
      const Integer g = gcd(diag[i], diag[j]);
      const Integer l = lcm(diag[i], diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

// ---------------------------------------------------------------------------
// Sublattices of Z^r.

class Lattice {
public:
  Lattice() = default;

  /// Z-span of the given integer vectors.
  static Lattice span(std::size_t ambient_rank, const std::vector<IntVector>& gens) {
    for (const auto& g : gens)
      if (g.size() != ambient_rank) throw Error("lattice generator has wrong dimension");
    Lattice l;
    l.ambient_rank_ = ambient_rank;
    if (gens.empty()) {
      l.basis_ = IntegerMatrix(ambient_rank, 0);
      return l;
    }
    const IntegerMatrix h = hermite_normal_form(IntegerMatrix::from_columns(ambient_rank, gens)).h;
    std::size_t r = 0;
    while (r < h.cols() && !is_zero(h.column(r))) ++r;
    l.basis_ = IntegerMatrix(ambient_rank, r);
    for (std::size_t i = 0; i < ambient_rank; ++i)
      for (std::size_t j = 0; j < r; ++j) l.basis_(i, j) = h(i, j);
    return l;
  }

  /// span_R(dirs) intersected with Z^r.
  static Lattice saturated(std::size_t ambient_rank, const std::vector<RatVector>& dirs) {
    std::vector<RatVector> rows;
    for (const auto& d : dirs) {
      if (d.size() != ambient_rank) throw Error("direction has wrong dimension");
      if (!is_zero(d)) rows.push_back(d);
    }
    if (rows.empty()) return span(ambient_rank, {});
    // integer kernel of the orthogonal complement
    const auto complement = nullspace(rows, ambient_rank);
    if (complement.empty()) return full(ambient_rank);
    std::vector<IntVector> eqs;
    for (const auto& c : complement) eqs.push_back(primitive(c));
    const auto hd = hermite_normal_form(IntegerMatrix::from_rows(ambient_rank, eqs));
    std::vector<IntVector> kernel;
    for (std::size_t j = 0; j < ambient_rank; ++j)
      if (is_zero(hd.h.column(j))) kernel.push_back(hd.u.column(j));
    return span(ambient_rank, kernel);
  }

  static Lattice full(std::size_t r) {
    Lattice l;
    l.ambient_rank_ = r;
    l.basis_ = IntegerMatrix::identity(r);
    return l;
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntegerMatrix& basis() const { return basis_; }
  std::vector<IntVector> generators() const { return basis_.columns(); }

  /// Rational coordinates of v in the basis, if v lies in the real span.
  std::optional<RatVector> rational_coordinates(RatVector v) const {
    if (v.size() != ambient_rank_) throw Error("dimension mismatch in lattice coordinates");
    RatVector y(rank());
    std::size_t row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      while (basis_(row, j) == 0) ++row;
      y[j] = v[row] / Rational(basis_(row, j));
      for (std::size_t i = row; i < ambient_rank_; ++i) v[i] -= y[j] * Rational(basis_(i, j));
    }
    if (!is_zero(v)) return std::nullopt;
    return y;
  }

  std::optional<IntVector> coordinates(const IntVector& v) const {
    auto y = rational_coordinates(to_rational(v));
    if (!y) return std::nullopt;
    IntVector out;
    for (const auto& q : *y) {
      if (q.get_den() != 1) return std::nullopt;
      out.push_back(q.get_num());
    }
    return out;
  }

  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

  bool contains_direction(const RatVector& v) const { return rational_coordinates(v).has_value(); }

  /// Canonical representative of v modulo this lattice.
  IntVector reduce(IntVector v) const {
    std::size_t row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      while (basis_(row, j) == 0) ++row;
      const Integer q = floor_div(v[row], basis_(row, j));
      if (q != 0)
        for (std::size_t i = row; i < ambient_rank_; ++i) v[i] -= q * basis_(i, j);
    }
    return v;
  }

  bool operator==(const Lattice& o) const {
    return ambient_rank_ == o.ambient_rank_ && basis_ == o.basis_;
  }

private:
  std::size_t ambient_rank_ = 0;
  IntegerMatrix basis_;
};

inline bool contains_vector(const Lattice& lat, const IntVector& v) {
  if (v.size() != lat.ambient_rank()) throw Error("dimension mismatch in contains_vector");
  return lat.contains(v);
}

/// [ambient : span_Z(sub)], or 0 when span_Z(sub) has smaller rank.
inline Integer lattice_index(const Lattice& ambient, const std::vector<IntVector>& sub) {
  const std::size_t k = ambient.rank();
  if (k == 0) return 1;
  std::vector<IntVector> coords;
  for (const auto& v : sub) {
    auto c = ambient.coordinates(v);
    if (!c) throw Error("vector " + to_string(v) + " is not in the ambient lattice");
    coords.push_back(std::move(*c));
  }
  if (coords.empty()) return 0;
  const auto inv = smith_invariants(IntegerMatrix::from_columns(k, coords));
  Integer index = 1;
  std::size_t nonzero = 0;
  for (const auto& d : inv)
    if (d != 0) {
      index *= d;
      ++nonzero;
    }
  return nonzero < k ? Integer(0) : index;
}

/// Representative of the generator of n_sigma / n_tau on the side of `toward`,
/// reduced modulo n_tau.
inline IntVector primitive_normal_vector(const Lattice& n_sigma, const Lattice& n_tau,
                                         const RatVector& toward) {
  if (n_sigma.rank() != n_tau.rank() + 1)
    throw Error("primitive_normal_vector needs a rank difference of exactly one");
  const std::size_t s = n_sigma.rank();
  std::vector<RatVector> tau_coords;
  for (const auto& g : n_tau.generators()) {
    auto c = n_sigma.rational_coordinates(to_rational(g));
    if (!c) throw Error("n_tau is not contained in n_sigma");
    tau_coords.push_back(std::move(*c));
  }
  const auto ker = nullspace(tau_coords, s);
  IntVector w = primitive(ker.front());
  auto y = n_sigma.rational_coordinates(toward);
  if (!y) throw Error("direction does not lie in the span of n_sigma");
  const Rational side = dot(w, *y);
  if (side == 0) throw Error("direction lies in the span of n_tau");
  if (side < 0)
    for (auto& x : w) x = -x;
  const auto hd = hermite_normal_form(IntegerMatrix::from_rows(s, {w}));
  if (hd.h(0, 0) != 1) throw Error("n_tau is not saturated in n_sigma");
  const IntVector omega = n_sigma.basis().apply(hd.u.column(0));
  return n_tau.reduce(omega);
}

} // namespace tropical
