#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "support.hpp"

using namespace vecchrom;

namespace {

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "vecchrom_io";
  std::filesystem::create_directories(dir);
  return dir;
}

void write_text(const std::filesystem::path& p, const std::string& s) {
  std::ofstream(p) << s;
}

}  // namespace

TEST(ColoringFile, RoundtripIsExact) {
  std::mt19937_64 rng(101);
  const auto c = lift_coloring(simplex_coloring(5), 7.3);
  const auto path = scratch() / "col.json";
  write_coloring_file(c, path);
  const auto back = read_coloring_file(path);
  EXPECT_EQ(back.k(), c.k());
  EXPECT_EQ(back.strict(), c.strict());
  EXPECT_EQ(back.dim(), c.dim());
  EXPECT_EQ(back.vectors(), c.vectors());
}

TEST(ColoringFile, Rejects) {
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"k": 2, "strict": true, "dim": 2, "vectors": [[1]]})")),
               ValidationError);
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"k": 2, "strict": true, "vectors": [[1]]})")), ValidationError);
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"k": 2, "strict": true, "dim": 1, "vectors": [[0.5]]})")),
               ValidationError);
  const auto path = scratch() / "bad.json";
  write_text(path, "{\"k\": 2, ");
  EXPECT_THROW(read_coloring_file(path), ParseError);
}

TEST(CertificateFile, RoundtripIsExact) {
  std::mt19937_64 rng(103);
  const auto c5 = generate(Family::cycle, 5), k3 = generate(Family::complete, 3);
  const auto q = support::conjugate(support::inflate(classical_embedding(c5, k3, {0, 1, 0, 1, 2}), 2),
                                    support::random_unitary(2, rng));
  const auto path = scratch() / "cert.json";
  write_certificate_file(q, path);
  const auto back = read_certificate_file(path);
  EXPECT_EQ(back.source, q.source);
  EXPECT_EQ(back.target, q.target);
  EXPECT_EQ(back.d, q.d);
  ASSERT_EQ(back.assignment.size(), q.assignment.size());
  for (std::size_t u = 0; u < q.assignment.size(); ++u) EXPECT_EQ(back.assignment[u].parts, q.assignment[u].parts);
  // Writing again gives the identical file.
  EXPECT_EQ(certificate_to_json(back).dump(), certificate_to_json(q).dump());
}

TEST(CertificateFile, GraphByReference) {
  const auto dir = scratch();
  write_graph_file(generate(Family::complete, 2), (dir / "k2.txt").string());
  write_text(dir / "ref.json", R"({"d": 1, "n_colors": 2, "graph": "k2.txt",
    "assignment": [[[[[1, 0]]], [[[0, 0]]]], [[[[0, 0]]], [[[1, 0]]]]]})");
  const auto q = read_certificate_file(dir / "ref.json");
  EXPECT_EQ(q.source, generate(Family::complete, 2));
  EXPECT_TRUE(verify_quantum_hom(q).pass);
}

TEST(CertificateFile, Rejects) {
  const auto base = Json::parse(R"({"d": 1, "n_colors": 2, "graph": {"n": 2, "edges": [[0, 1]]},
    "assignment": [[[[[1, 0]]], [[[0, 0]]]], [[[[0, 0]]], [[[1, 0]]]]]})");
  EXPECT_NO_THROW(certificate_from_json(base));
  auto wrong_count = base;
  wrong_count["assignment"].erase(1);
  EXPECT_THROW(certificate_from_json(wrong_count), ValidationError);
  auto wrong_d = base;
  wrong_d["d"] = 2;
  EXPECT_THROW(certificate_from_json(wrong_d), ValidationError);
  auto wrong_colors = base;
  wrong_colors["n_colors"] = 3;
  EXPECT_THROW(certificate_from_json(wrong_colors), ValidationError);
  auto bad_entry = base;
  bad_entry["assignment"][0][0][0][0] = Json::array({1});
  EXPECT_THROW(certificate_from_json(bad_entry), ValidationError);
  auto loop = base;
  loop["graph"]["edges"][0] = Json::array({1, 1});
  EXPECT_THROW(certificate_from_json(loop), ValidationError);
  const auto path = scratch() / "broken.json";
  write_text(path, "[1, 2");
  EXPECT_THROW(read_certificate_file(path), ParseError);
}
