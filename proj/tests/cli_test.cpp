#include "tropical/cli.hpp"

#include "samples.hpp"

#include <gtest/gtest.h>

#include <filesystem>

namespace tropical {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tropical");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TROPICAL_FIXTURES) + "/" + name; }

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("tropical_cli_test_" + name)).string();
}

TEST(Cli, CheckBalanced) {
  const auto r = run({"check", fixture("figure1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "balanced\n");
}

TEST(Cli, CheckUnbalancedListsTheVertex) {
  const auto r = run({"check", fixture("two_rays_unbalanced.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("at conv{(0,0)}: normal vector sum (1,1)"), std::string::npos);
}

TEST(Cli, MalformedInputExitsTwoWithPosition) {
  const auto r = run({"check", fixture("malformed.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed.json:4:"), std::string::npos) << r.err;
}

TEST(Cli, NotAComplexExitsTwo) {
  const auto path = temp_file("overlap.json");
  std::ofstream(path) << R"({"ambient_rank": 1, "points": [[0], [1]], "rays": [[1]],
    "cells": [{"point_indices": [0], "ray_indices": [0], "weight": 1},
              {"point_indices": [1], "ray_indices": [0], "weight": 1}]})";
  const auto r = run({"check", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("not a complex"), std::string::npos) << r.err;
}

TEST(Cli, IndexOutOfRangeExitsTwo) {
  const auto path = temp_file("range.json");
  std::ofstream(path) << R"({"ambient_rank": 1, "points": [[0]], "rays": [],
    "cells": [{"point_indices": [3], "weight": 1}]})";
  const auto r = run({"check", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("cells[0].point_indices[0]: index 3 out of range"), std::string::npos) << r.err;
}

TEST(Cli, FloatsAreRejected) {
  const auto path = temp_file("float.json");
  std::ofstream(path) << R"({"ambient_rank": 1, "points": [[0.5]], "rays": [], "cells": []})";
  EXPECT_EQ(run({"check", path}).code, 2);
}

TEST(Cli, DimensionOutOfRangeExitsTwo) {
  const auto path = temp_file("dim.json");
  std::ofstream(path) << R"({"ambient_rank": 2, "dimension": 5, "points": [], "rays": [], "cells": []})";
  const auto r = run({"check", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("dimension: 5 is not between 0 and 2"), std::string::npos) << r.err;
}

TEST(Cli, MissingFileExitsTwo) { EXPECT_EQ(run({"check", fixture("absent.json")}).code, 2); }

TEST(Cli, UnknownCommandExitsTwo) { EXPECT_EQ(run({"frobnicate"}).code, 2); }

TEST(Cli, IntersectTwoLines) {
  const auto out = temp_file("point.json");
  const auto r = run({"intersect", fixture("line_origin.json"), fixture("line_shifted.json"), "--out", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "codimension 2, 1 cells, total weight 1\n");
  const auto c = load_cycle(out);
  ASSERT_EQ(c.weighted_cells().size(), 1u);
  EXPECT_EQ(c.weighted_cells()[0].first, Polyhedron::point(samples::rv({1, 1})));
}

TEST(Cli, IntersectVerboseTrace) {
  const auto r = run({"intersect", fixture("line_origin.json"), fixture("line_shifted.json"), "--verbose"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("cell conv{(1,1)} at (1,1), v = (2,-4)"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("index 1, weights 1 * 1"), std::string::npos);
}

TEST(Cli, IntersectWithTheUnitEchoes) {
  const auto r = run({"intersect", fixture("figure1.json"), fixture("whole_plane.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, serialize(load_cycle(fixture("figure1.json"))));
}

TEST(Cli, IntersectFigureTwo) {
  const auto r = run({"intersect", fixture("figure2_c1.json"), fixture("figure2_c2.json")});
  EXPECT_EQ(r.code, 0);
  const auto c = parse_cycle(r.out);
  std::multiset<long> weights;
  for (const auto& [p, w] : c.weighted_cells()) weights.insert(w.get_si());
  EXPECT_EQ(weights, (std::multiset<long>{1, 1, 2}));
}

TEST(Cli, SeedSequenceDoesNotChangeTheResult) {
  const auto a = run({"intersect", fixture("figure2_c1.json"), fixture("figure2_c2.json")});
  const auto b = run({"intersect", fixture("figure2_c1.json"), fixture("figure2_c2.json"), "--seed-sequence", "9"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, RankMismatchExitsOne) {
  EXPECT_EQ(run({"intersect", fixture("line_origin.json"), fixture("figure4_target.json")}).code, 1);
  EXPECT_EQ(run({"push", fixture("projection_x.json"), fixture("figure4_target.json")}).code, 1);
}

TEST(Cli, PushProjection) {
  const auto r = run({"push", fixture("projection_x.json"), fixture("figure3_curve.json")});
  ASSERT_EQ(r.code, 0);
  const auto c = parse_cycle(r.out);
  ASSERT_FALSE(c.weighted_cells().empty());
  for (const auto& [p, w] : c.weighted_cells()) EXPECT_EQ(w, 3);
}

TEST(Cli, PullProjection) {
  const auto r = run({"pull", fixture("projection_x.json"), fixture("figure4_target.json"), "--source",
                      fixture("figure4_source.json")});
  ASSERT_EQ(r.code, 0);
  const auto c = parse_cycle(r.out);
  EXPECT_EQ(c.weighted_cells().size(), 4u);
  for (const auto& [p, w] : c.weighted_cells()) EXPECT_EQ(w, 1);
}

TEST(Cli, IdentityMapEchoes) {
  const auto original = serialize(load_cycle(fixture("figure2_c2.json")));
  EXPECT_EQ(run({"push", fixture("identity_2.json"), fixture("figure2_c2.json")}).out, original);
  EXPECT_TRUE(equals(parse_cycle(run({"pull", fixture("identity_2.json"), fixture("figure2_c2.json")}).out),
                     load_cycle(fixture("figure2_c2.json"))));
}

TEST(Cli, PullDegenerateMetadata) {
  const auto map = temp_file("zero_map.json");
  std::ofstream(map) << R"({"matrix": [[0], [0]]})";
  const auto r = run({"pull", map, fixture("line_origin.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"degenerate\":true"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("degenerate"), std::string::npos);
}

TEST(Cli, StarOfFigureOneAtTheOrigin) {
  // points are stored lexicographically: (-2,2), (-2,4), (0,0), (2,0)
  const auto r = run({"star", fixture("figure1.json"), "2::"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = parse_cycle(r.out);
  std::vector<IntVector> rays;
  for (const auto& [p, w] : c.weighted_cells()) rays.push_back(p.rays().front());
  EXPECT_EQ(rays, (std::vector<IntVector>{samples::iv({-1, 1}), samples::iv({0, -1}), samples::iv({1, 0})}));
}

TEST(Cli, StarRejectsNonCells) {
  EXPECT_EQ(run({"star", fixture("figure1.json"), "2:0:"}).code, 2);
  EXPECT_EQ(run({"star", fixture("figure1.json"), "x"}).code, 2);
}

TEST(Cli, AddInverseIsZero) {
  const auto neg = temp_file("neg.json");
  std::ofstream(neg) << serialize(scale(load_cycle(fixture("figure1.json")), -1));
  const auto sum = temp_file("sum.json");
  ASSERT_EQ(run({"add", fixture("figure1.json"), neg, "--out", sum}).code, 0);
  const auto zero = temp_file("zero.json");
  std::ofstream(zero) << serialize(TropicalCycle::zero(2, 1));
  EXPECT_EQ(run({"eq", sum, zero}).code, 0);
}

TEST(Cli, EqualUpToSubdivision) {
  EXPECT_EQ(run({"eq", fixture("figure2_c1.json"), fixture("figure3_curve.json")}).code, 0);
  const auto r = run({"eq", fixture("figure2_c1.json"), fixture("figure2_c2.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not equal\n");
}

TEST(Cli, PlotIsDeterministic) {
  const auto a = run({"plot", fixture("figure1.json")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run({"plot", fixture("figure1.json")}).out);
  EXPECT_EQ(a.out.find("<text"), std::string::npos);
  std::size_t lines = 0;
  for (std::size_t k = a.out.find("stroke=\"black\""); k != std::string::npos; k = a.out.find("stroke=\"black\"", k + 1))
    ++lines;
  EXPECT_EQ(lines, 9u);
}

TEST(Cli, PlotLabelsWeights) {
  const auto r = run({"plot", fixture("figure2_c1.json")});
  EXPECT_NE(r.out.find(">2</text>"), std::string::npos);
}

TEST(Cli, PlotRankTwoOnly) {
  const auto r = run({"plot", fixture("figure4_target.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("plot supports rank 2 only"), std::string::npos);
}

TEST(Cli, PlotZeroAndPointCycles) {
  const auto zero = temp_file("zero_plot.json");
  std::ofstream(zero) << serialize(TropicalCycle::zero(2, 1));
  const auto empty = run({"plot", zero});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out.find("<circle"), std::string::npos);
  const auto point = temp_file("point_plot.json");
  std::ofstream(point) << serialize(TropicalCycle::from_cells(2, 0, {{Polyhedron::point(samples::rv({1, 1})), 1}}));
  const auto dot = run({"plot", point});
  EXPECT_EQ(dot.out.find("<circle"), dot.out.rfind("<circle"));
  EXPECT_NE(dot.out.find("<circle"), std::string::npos);
}

TEST(Cli, LawsOnTheManifest) {
  const auto r = run({"laws", fixture("manifest.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all laws hold"), std::string::npos);
}

TEST(Cli, LawsFaultInjection) {
  const auto r = run({"laws", fixture("manifest.json"), "--inject-fault", "projection-formula"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL projection-formula"), std::string::npos);
  EXPECT_NE(r.out.find("  lhs {"), std::string::npos);
}

TEST(Cli, LawsOnAnEmptyManifest) {
  const auto path = temp_file("empty_manifest.json");
  std::ofstream(path) << "{}";
  const auto r = run({"laws", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(0 checks)"), std::string::npos);
}

TEST(Cli, OutputsRoundTrip) {
  for (const auto* name : {"figure1.json", "figure2_c1.json", "figure3_curve.json", "figure4_source.json"}) {
    const auto c = load_cycle(fixture(name));
    const auto text = serialize(c);
    EXPECT_EQ(serialize(parse_cycle(text)), text);
    EXPECT_EQ(run({"check", fixture(name)}).code, 0);
  }
}

TEST(Cli, MapDocumentRoundTrip) {
  const auto f = load_map(fixture("shear.json"));
  EXPECT_EQ(map_from_json(map_to_json(f)), f);
  EXPECT_EQ(f.translation(), (RatVector{Rational(1), Rational(1, 2)}));
}

} // namespace
} // namespace tropical
