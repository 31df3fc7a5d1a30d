#pragma once

// Small hand-made inputs shared by the test programs.

#include "tropical/cycle.hpp"

#include <initializer_list>
#include <ostream>
#include <vector>

namespace samples {

using namespace tropical;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Polyhedron ray(const RatVector& from, const IntVector& dir) {
  return Polyhedron::from_generators(from.size(), {from}, {dir});
}

inline Polyhedron segment(const RatVector& a, const RatVector& b) {
  return Polyhedron::from_generators(a.size(), {a, b});
}

inline Polyhedron cone(std::size_t r, std::vector<IntVector> rays) {
  return Polyhedron::from_generators(r, {}, std::move(rays));
}

/// Vertices (0,0), (2,0), (-2,2), (-2,4); every edge has weight one.
inline std::vector<Polyhedron> figure1_edges() {
  return {ray(rv({0, 0}), iv({0, -1})),       segment(rv({0, 0}), rv({2, 0})),
          ray(rv({2, 0}), iv({0, -1})),       ray(rv({2, 0}), iv({1, 1})),
          segment(rv({0, 0}), rv({-2, 2})),   ray(rv({-2, 2}), iv({-1, 0})),
          segment(rv({-2, 2}), rv({-2, 4})),  ray(rv({-2, 4}), iv({-1, 0})),
          ray(rv({-2, 4}), iv({1, 1}))};
}

/// Rays (-1,0), (0,-1), (1,1) from the point p.
inline std::vector<Polyhedron> standard_line(const RatVector& p) {
  return {ray(p, iv({-1, 0})), ray(p, iv({0, -1})), ray(p, iv({1, 1}))};
}

inline std::vector<Polyhedron> quadrants() {
  return {cone(2, {iv({1, 0}), iv({0, 1})}), cone(2, {iv({-1, 0}), iv({0, 1})}),
          cone(2, {iv({-1, 0}), iv({0, -1})}), cone(2, {iv({1, 0}), iv({0, -1})})};
}

inline std::vector<WeightedCell> weighted(const std::vector<Polyhedron>& cells, long w = 1) {
  std::vector<WeightedCell> out;
  for (const auto& c : cells) out.emplace_back(c, w);
  return out;
}

inline TropicalCycle figure1() { return TropicalCycle::from_cells(2, 1, weighted(figure1_edges())); }

inline TropicalCycle line_at(const RatVector& p, long w = 1) {
  return TropicalCycle::from_cells(2, 1, weighted(standard_line(p), w));
}

/// The curve with vertices (0,0), (0,1), (1,2) and the weight-2 ray (-1,0) at the origin.
inline TropicalCycle curve_c1() {
  return TropicalCycle::from_cells(2, 1,
                                   {{ray(rv({0, 0}), iv({2, -1})), 1},
                                    {ray(rv({0, 0}), iv({-1, 0})), 2},
                                    {segment(rv({0, 0}), rv({0, 1})), 1},
                                    {ray(rv({0, 1}), iv({-1, 0})), 1},
                                    {segment(rv({0, 1}), rv({1, 2})), 1},
                                    {ray(rv({1, 2}), iv({1, 0})), 1},
                                    {ray(rv({1, 2}), iv({0, 1})), 1}});
}

inline TropicalCycle curve_c2() {
  return TropicalCycle::from_cells(2, 1,
                                   weighted({ray(rv({0, 1}), iv({-1, 0})), ray(rv({0, 1}), iv({0, -1})),
                                             segment(rv({0, 1}), rv({1, 2})), ray(rv({1, 2}), iv({1, 0})),
                                             ray(rv({1, 2}), iv({0, 1}))}));
}

inline TropicalCycle whole_space(std::size_t r, long w = 1) {
  return TropicalCycle::from_cells(r, static_cast<int>(r), {{Polyhedron::whole_space(r), w}});
}

} // namespace samples

namespace tropical {
inline void PrintTo(const Polyhedron& p, std::ostream* os) { *os << to_string(p); }
} // namespace tropical
