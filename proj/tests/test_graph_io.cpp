#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "support.hpp"

using namespace vecchrom;

TEST(ParseGraph, SpecExamples) {
  EXPECT_EQ(parse_graph("2 1\n0 1"), generate(Family::complete, 2));
  EXPECT_EQ(parse_graph("3 3\n0 1\n1 2\n0 2"), generate(Family::complete, 3));
}

TEST(ParseGraph, SelfLoopReportsLine) {
  try {
    parse_graph("2 1\n0 0");
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const auto g = parse_graph("# a triangle\n\n3 3\n0 1 # first\n1 2\n\n2 0\n");
  EXPECT_EQ(g, generate(Family::complete, 3));
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 x"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1 2"), ParseError);
  EXPECT_THROW(parse_graph("3 2\n0 1"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2"), ParseError);
  try {
    parse_graph("3 2\n0 1\n1 3");
    FAIL() << "expected a range error";
  } catch (const RangeError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_graph("3 1\n0 -1");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseGraph, DuplicatesCollapse) {
  const auto g = parse_graph("3 3\n0 1\n1 0\n1 2");
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(GraphFile, RoundtripIsExact) {
  const auto dir = std::filesystem::temp_directory_path() / "vecchrom_graph_io";
  std::filesystem::create_directories(dir);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto g = random_graph(1 + rng() % 12, 0.4, rng);
    const auto path = (dir / ("g" + std::to_string(i) + ".txt")).string();
    write_graph_file(g, path);
    const auto back = read_graph_file(path);
    EXPECT_EQ(back, g);
    EXPECT_EQ(format_graph(back), format_graph(g));
  }
  EXPECT_EQ(parse_graph(format_graph(generate(Family::petersen, 0))), generate(Family::petersen, 0));
}
