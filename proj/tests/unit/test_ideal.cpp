#include <gtest/gtest.h>

#include <random>

#include "hmi/error.hpp"
#include "hmi/hierarchy.hpp"
#include "hmi/ideal.hpp"
#include "oracles.hpp"

using namespace hmi;

namespace {

SimplicialComplex cx(int p, std::initializer_list<const char*> faces) {
  std::vector<Face> fs;
  for (const char* f : faces) fs.push_back(Face::parse(f));
  return make_complex(p, fs);
}

// Every downward-closed family of subsets of {1..p}, as complexes.
std::vector<SimplicialComplex> all_complexes(int p) {
  std::vector<SimplicialComplex> out;
  std::uint64_t subsets = std::uint64_t{1} << p;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    bool closed = true;
    for (std::uint64_t s = 0; s < subsets && closed; ++s) {
      if (!((family >> s) & 1U)) continue;
      for (int v = 0; v < p; ++v)
        if ((s >> v) & 1U && !((family >> (s & ~(std::uint64_t{1} << v))) & 1U)) closed = false;
    }
    if (!closed) continue;
    std::vector<Face> faces;
    for (std::uint64_t s = 0; s < subsets; ++s)
      if ((family >> s) & 1U) faces.push_back(Face::from_mask(s));
    out.push_back(make_complex(p, faces));
  }
  return out;
}

const char* kFerrer = "x1*x6, x1*x7, x1*x8, x2*x6, x2*x7, x3*x6, x3*x7, x4*x6, x5*x6";

}  // namespace

TEST(IdealTest, StanleyReisnerExamples) {
  EXPECT_EQ(stanley_reisner(cx(5, {"123", "234", "345"})).to_string(), "x1*x4, x1*x5, x2*x5");
  EXPECT_EQ(stanley_reisner(cx(3, {"12", "13", "23"})).to_string(), "x1*x2*x3");
  EXPECT_EQ(stanley_reisner(cx(3, {"13", "23"})).to_string(), "x1*x2");
  EXPECT_EQ(stanley_reisner(cx(4, {"12", "23", "34", "14"})).to_string(), "x1*x3, x2*x4");
  EXPECT_TRUE(stanley_reisner(SimplicialComplex::simplex(Face::range(4))).is_zero());
  EXPECT_EQ(stanley_reisner(cx(2, {"1", "2"})).to_string(), "x1*x2");
  EXPECT_TRUE(stanley_reisner(SimplicialComplex::void_complex(Face::range(2))).is_unit());
}

TEST(IdealTest, ComplexOfExamples) {
  EXPECT_EQ(complex_of(parse_ideal("x1*x2", 3)).to_string(), "{13,23}");
  EXPECT_EQ(complex_of(parse_ideal("0", 3)), SimplicialComplex::simplex(Face::range(3)));
  EXPECT_EQ(complex_of(parse_ideal("x1*x4, x2*x5, x1*x3*x5, x2*x3*x4", 5)).to_string(), "{15,24,123,345}");
  EXPECT_TRUE(complex_of(parse_ideal("1", 2)).is_void());
}

TEST(IdealTest, ParseAndPrint) {
  auto ideal = parse_ideal(" x1*x5 , x1*x4,x2*x5, x1*x4*x5 ", 5);
  EXPECT_EQ(ideal.to_string(), "x1*x4, x1*x5, x2*x5");
  EXPECT_THROW(parse_ideal("x1*x1", 2), ParseError);
  EXPECT_THROW(parse_ideal("x1*x3", 2), Error);
  try {
    parse_ideal("x1*x2, x3+", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 9U);
  }
}

TEST(IdealTest, Membership) {
  auto i12 = parse_ideal("x1*x2", 3);
  EXPECT_TRUE(i12.contains(Face{1, 2, 3}));
  EXPECT_FALSE(i12.contains(Face{1, 3}));
  auto chain = parse_ideal("x1*x4, x1*x5, x2*x5", 5);
  EXPECT_TRUE(chain.contains(MultiIndex{1, 0, 0, 2, 0}));
  EXPECT_FALSE(chain.contains(MultiIndex{3, 1, 1, 0, 0}));
}

TEST(IdealTest, RoundTripsExhaustive) {
  std::size_t counts[] = {0, 3, 6, 20, 168};
  for (int p = 1; p <= 4; ++p) {
    auto complexes = all_complexes(p);
    EXPECT_EQ(complexes.size(), counts[p]) << p;
    for (const auto& s : complexes) {
      auto ideal = stanley_reisner(s);
      EXPECT_EQ(complex_of(ideal), s);
      EXPECT_EQ(stanley_reisner(complex_of(ideal)), ideal);
    }
  }
}

TEST(IdealTest, RoundTripsRandom) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    int p = 5 + static_cast<int>(rng() % 2);
    std::vector<Face> gens;
    int m = static_cast<int>(rng() % 6);
    for (int i = 0; i < m; ++i) {
      Face g = Face::from_mask(rng() & Face::range(p).mask());
      if (!g.empty()) gens.push_back(g);
    }
    SquareFreeIdeal ideal(p, gens);
    EXPECT_EQ(stanley_reisner(complex_of(ideal)), ideal);
  }
}

TEST(IdealTest, TwoLinearExamples) {
  EXPECT_TRUE(has_2linear_resolution(parse_ideal("x1*x4, x1*x5, x2*x5", 5)));
  EXPECT_FALSE(has_2linear_resolution(parse_ideal("x1*x3, x2*x4", 4)));
  EXPECT_FALSE(has_2linear_resolution(parse_ideal("x1*x2*x3", 3)));
  EXPECT_TRUE(has_2linear_resolution(parse_ideal("0", 3)));
}

TEST(IdealTest, TwoLinearMatchesDecomposabilityOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Graph g = Graph::on(n);
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
      auto flag = flag_complex(g);
      auto brute = [](const Graph& h) { return !oracle::has_chordless_cycle(h); };
      ASSERT_EQ(is_decomposable(flag), has_2linear_resolution(stanley_reisner(flag), brute));
    }
  }
}

TEST(FerrerTest, NineGeneratorShape) {
  auto shape = recognize_ferrer(parse_ideal(kFerrer, 9));
  ASSERT_TRUE(shape);
  EXPECT_EQ(shape->rows, (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_EQ(shape->columns, (std::vector<int>{6, 7, 8, 9}));
  EXPECT_EQ(shape->lambda, (std::vector<int>{3, 2, 2, 1, 1}));
  EXPECT_EQ(shape->ideal(), parse_ideal(kFerrer, 9));
}

TEST(FerrerTest, CliquesMatchOracle) {
  auto ideal = parse_ideal(kFerrer, 9);
  auto f = ferrer_cliques(*recognize_ferrer(ideal));
  EXPECT_EQ(to_string(f.cliques), "{123459,234589,45789,6789}");
  EXPECT_EQ(f.cliques.front(), Face::parse("123459"));
  EXPECT_EQ(to_string(f.separators), "{23459,4589,789}");
  auto sorted = f.cliques;
  sort_canonical(sorted);
  EXPECT_EQ(sorted, oracle::maximal_cliques(generator_graph(ideal).complement()));
  EXPECT_TRUE(f.has_running_intersection());
}

TEST(FerrerTest, SmallCases) {
  auto single = recognize_ferrer(parse_ideal("x1*x2", 2));
  ASSERT_TRUE(single);
  EXPECT_EQ(single->lambda, std::vector<int>{1});
  auto f = ferrer_cliques(*single);
  EXPECT_EQ(to_string(f.cliques), "{1,2}");
  EXPECT_EQ(f.separators, std::vector<Face>{Face{}});
  EXPECT_FALSE(recognize_ferrer(parse_ideal("x1*x3, x2*x4", 4)));
  EXPECT_FALSE(recognize_ferrer(parse_ideal("x1*x2*x3", 3)));
  EXPECT_FALSE(recognize_ferrer(parse_ideal("x1*x2, x2*x3, x1*x3", 3)));

  auto extra = parse_ideal("x1*x2", 3);
  auto shape = recognize_ferrer(extra);
  ASSERT_TRUE(shape);
  EXPECT_EQ(shape->columns, (std::vector<int>{2, 3}));
  auto g = ferrer_cliques(*shape);
  auto sorted = g.cliques;
  sort_canonical(sorted);
  EXPECT_EQ(sorted, oracle::maximal_cliques(generator_graph(extra).complement()));
  EXPECT_EQ(to_string(sorted), "{13,23}");
}

TEST(FerrerTest, RandomStaircasesAreRecognisedAndTwoLinear) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = 1 + static_cast<int>(rng() % 4);
    std::vector<int> lambda;
    int last = cols;
    for (int r = 0; r < rows; ++r) {
      last = 1 + static_cast<int>(rng() % static_cast<unsigned>(last));
      lambda.push_back(last);
    }
    // Random labels for rows and columns.
    std::vector<int> labels(static_cast<std::size_t>(rows + cols));
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::vector<Face> gens;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c)
        gens.push_back(Face{labels[static_cast<std::size_t>(r)], labels[static_cast<std::size_t>(rows + c)]});
    SquareFreeIdeal ideal(rows + cols, gens);
    auto shape = recognize_ferrer(ideal);
    ASSERT_TRUE(shape);
    EXPECT_EQ(shape->ideal(), ideal);
    EXPECT_TRUE(has_2linear_resolution(ideal));
    auto f = ferrer_cliques(*shape);
    auto sorted = f.cliques;
    sort_canonical(sorted);
    EXPECT_EQ(sorted, oracle::maximal_cliques(generator_graph(ideal).complement()));
    EXPECT_TRUE(f.has_running_intersection());
  }
}
