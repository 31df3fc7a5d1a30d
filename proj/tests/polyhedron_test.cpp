#include "tropical/polyhedron.hpp"

#include <gtest/gtest.h>

#include <random>

namespace tropical {
namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Polyhedron cone(std::size_t r, std::vector<IntVector> rays) {
  return Polyhedron::from_generators(r, {}, rays);
}

TEST(Polyhedron, SingleRay) {
  const auto p = cone(2, {iv({1, 0})});
  EXPECT_EQ(p.dim(), 1u);
  EXPECT_TRUE(p.is_strictly_convex_cone());
  EXPECT_TRUE(p.contains(rv({5, 0})));
  EXPECT_FALSE(p.contains(rv({-1, 0})));
  EXPECT_FALSE(p.contains(rv({1, 1})));
  ASSERT_EQ(p.equations().size(), 1u);
  EXPECT_EQ(p.equations()[0].normal, iv({0, 1}));
}

TEST(Polyhedron, SegmentAgreesWithGridSampling) {
  const auto p = Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0})});
  ASSERT_EQ(p.inequalities().size(), 2u);
  // oracle: 0 <= x <= 1, y == 0 on a rational grid
  for (int i = -4; i <= 8; ++i)
    for (int j = -2; j <= 2; ++j) {
      const RatVector x{Rational(i) / 4, Rational(j) / 4};
      const bool expected = i >= 0 && i <= 4 && j == 0;
      EXPECT_EQ(p.contains(x), expected) << i << "," << j;
    }
  EXPECT_EQ(p.relative_interior_point(), (RatVector{Rational(1, 2), Rational(0)}));
}

TEST(Polyhedron, WholePlane) {
  const auto p = Polyhedron::from_generators(2, {}, {}, {iv({1, 0}), iv({0, 1})});
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_TRUE(p.inequalities().empty());
  EXPECT_TRUE(p.equations().empty());
  EXPECT_EQ(p, Polyhedron::whole_space(2));
}

TEST(Polyhedron, EmptyGeneratorsRejected) {
  EXPECT_THROW(Polyhedron::from_generators(2, {}), Error);
}

TEST(Polyhedron, Dimensions) {
  EXPECT_EQ(Polyhedron::point(rv({1, 2})).dim(), 0u);
  EXPECT_EQ(cone(2, {iv({0, 1})}).dim(), 1u);
  EXPECT_EQ(Polyhedron::whole_space(2).dim(), 2u);
}

TEST(Polyhedron, RedundantGeneratorsDropped) {
  const auto p = Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0}), rv({2, 0})}, {iv({2, 4}), iv({1, 0})});
  EXPECT_EQ(p.vertices().size(), 1u);
  EXPECT_EQ(p.rays(), (std::vector<IntVector>{iv({1, 0}), iv({1, 2})}));
}

TEST(Polyhedron, LinearSpaceIsSaturated) {
  EXPECT_EQ(cone(2, {iv({2, 2})}).linear_space(), Lattice::span(2, {iv({1, 1})}));
  EXPECT_EQ(Polyhedron::point(rv({3, 1})).linear_space().rank(), 0u);
  EXPECT_EQ(cone(2, {iv({1, 0}), iv({0, 1})}).linear_space(), Lattice::full(2));
}

TEST(Polyhedron, Faces) {
  EXPECT_EQ(Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0})}).faces().size(), 3u);
  EXPECT_EQ(cone(2, {iv({1, 0}), iv({0, 1})}).faces().size(), 4u);
  EXPECT_EQ(cone(2, {iv({1, 0})}).faces().size(), 2u);
  EXPECT_EQ(Polyhedron::whole_space(2).faces().size(), 1u);
}

TEST(Polyhedron, SimplexFVectors) {
  // oracle: a d-simplex has binomial(d+1, k+1) faces of dimension k
  const std::vector<std::vector<RatVector>> simplices{
      {rv({0, 0, 0}), rv({1, 0, 0})},
      {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0})},
      {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})}};
  const std::vector<std::vector<std::size_t>> expected{{2, 1}, {3, 3, 1}, {4, 6, 4, 1}};
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    const auto faces = Polyhedron::from_generators(3, simplices[s]).faces();
    std::vector<std::size_t> f(expected[s].size(), 0);
    for (const auto& face : faces) ++f[face.dim()];
    EXPECT_EQ(f, expected[s]);
    // closed under taking faces
    for (const auto& face : faces)
      for (const auto& sub : face.faces())
        EXPECT_NE(std::find(faces.begin(), faces.end(), sub), faces.end());
  }
}

TEST(Polyhedron, Intersections) {
  const auto pos = cone(2, {iv({1, 0})});
  const auto neg = cone(2, {iv({-1, 0})});
  const auto meet = intersect(pos, neg);
  ASSERT_TRUE(meet);
  EXPECT_EQ(*meet, Polyhedron::point(rv({0, 0})));

  EXPECT_FALSE(intersect(Polyhedron::point(rv({0, 0})), Polyhedron::point(rv({1, 0}))));

  const auto upper = cone(2, {iv({1, 0}), iv({0, 1})});
  const auto lower = cone(2, {iv({1, 0}), iv({0, -1})});
  const auto ray = intersect(upper, lower);
  ASSERT_TRUE(ray);
  EXPECT_EQ(*ray, pos);
}

TEST(Polyhedron, Translate) {
  EXPECT_EQ(Polyhedron::point(rv({0, 0})).translate(rv({1, 2})), Polyhedron::point(rv({1, 2})));
  const auto r = cone(2, {iv({1, 1})});
  EXPECT_EQ(r.translate(rv({0, 0})), r);
  const auto moved = cone(2, {iv({1, 0}), iv({0, 1})}).translate(rv({3, -1}));
  EXPECT_EQ(moved.vertices(), (std::vector<RatVector>{rv({3, -1})}));
}

TEST(Polyhedron, ImageUnderProjection) {
  const IntegralAffineMap proj(IntegerMatrix::from_rows(2, {iv({1, 0})}));
  EXPECT_EQ(cone(2, {iv({1, 2})}).image(proj), cone(1, {iv({1})}));
  EXPECT_EQ(cone(2, {iv({0, -1})}).image(proj), Polyhedron::point(rv({0})));
  const auto seg = Polyhedron::from_generators(2, {rv({0, 0}), rv({2, 1})});
  EXPECT_EQ(seg.image(IntegralAffineMap::identity(2)), seg);
}

TEST(Polyhedron, LinealityCanonicalForm) {
  // the same line given with different base points and directions
  const auto a = Polyhedron::from_generators(2, {rv({1, 1})}, {}, {iv({1, 1})});
  const auto b = Polyhedron::from_generators(2, {rv({3, 3})}, {}, {iv({-2, -2})});
  EXPECT_EQ(a, b);
  const auto half = Polyhedron::from_generators(2, {rv({0, 5})}, {iv({1, 0})}, {iv({0, 1})});
  EXPECT_EQ(half.dim(), 2u);
  EXPECT_EQ(half.faces().size(), 2u);
}

TEST(Polyhedron, HasFace) {
  const auto q = cone(2, {iv({1, 0}), iv({0, 1})});
  EXPECT_TRUE(q.has_face(cone(2, {iv({1, 0})})));
  EXPECT_TRUE(q.has_face(Polyhedron::point(rv({0, 0}))));
  EXPECT_FALSE(q.has_face(cone(2, {iv({1, 1})})));
  EXPECT_FALSE(q.has_face(Polyhedron::from_generators(2, {rv({0, 0}), rv({1, 0})})));
}

std::vector<Polyhedron> random_polyhedra(std::mt19937& rng, std::size_t r, int count) {
  std::uniform_int_distribution<int> entry(-3, 3), nv(1, 3), nr(0, 3);
  std::vector<Polyhedron> out;
  for (int i = 0; i < count; ++i) {
    std::vector<RatVector> vs;
    std::vector<IntVector> rs;
    const int a = nv(rng), b = nr(rng);
    for (int k = 0; k < a; ++k) {
      RatVector v;
      for (std::size_t j = 0; j < r; ++j) v.push_back(Rational(entry(rng)) / 2);
      vs.push_back(v);
    }
    for (int k = 0; k < b; ++k) {
      IntVector v;
      for (std::size_t j = 0; j < r; ++j) v.emplace_back(entry(rng));
      rs.push_back(v);
    }
    out.push_back(Polyhedron::from_generators(r, vs, rs));
  }
  return out;
}

TEST(Polyhedron, RoundTripThroughConstraints) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (const auto& p : random_polyhedra(rng, 3, 60)) {
    const auto q = Polyhedron::from_constraints(3, p.inequalities(), p.equations());
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, p);
    // random probes agree with generator containment via mutual containment
    EXPECT_TRUE(p.contains(*q));
    EXPECT_TRUE(q->contains(p));
    for (int k = 0; k < 10; ++k) {
      const RatVector x{Rational(entry(rng)) / 3, Rational(entry(rng)) / 3, Rational(entry(rng)) / 3};
      EXPECT_EQ(p.contains(x), q->contains(x));
    }
    EXPECT_TRUE(p.relative_interior_contains(p.relative_interior_point()));
  }
}

TEST(Polyhedron, IntersectionDimensionBound) {
  std::mt19937 rng(4);
  const auto ps = random_polyhedra(rng, 2, 30);
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    const auto m = intersect(ps[i], ps[i + 1]);
    if (m) EXPECT_LE(m->dim(), std::min(ps[i].dim(), ps[i + 1].dim()));
  }
}

TEST(Polyhedron, ImageCommutesWithTranslation) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> entry(-2, 2);
  const auto ps = random_polyhedra(rng, 3, 20);
  for (const auto& p : ps) {
    IntegerMatrix m(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = entry(rng);
    const IntegralAffineMap f(m);
    const RatVector v{Rational(entry(rng)) / 2, Rational(entry(rng)), Rational(1, 3)};
    EXPECT_EQ(p.translate(v).image(f), p.image(f).translate(f.apply_linear(v)));
  }
}

} // namespace
} // namespace tropical
