#include <gtest/gtest.h>

#include <random>

#include "hmi/error.hpp"
#include "hmi/logdensity.hpp"

using namespace hmi;

namespace {

SimplicialComplex cx(int p, std::initializer_list<const char*> faces) {
  std::vector<Face> fs;
  for (const char* f : faces) fs.push_back(Face::parse(f));
  return make_complex(p, fs);
}

MultiIndex binary(Face k, int p) {
  std::vector<int> e(static_cast<std::size_t>(p), 0);
  for (int v : k.vertices()) e[static_cast<std::size_t>(v - 1)] = 1;
  return MultiIndex(e);
}

// D^K g = 0 for every non-face K of the complex.
bool hierarchical_by_definition(const SparsePolynomial& g, const SimplicialComplex& s) {
  int p = s.p();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p); ++m) {
    Face k = Face::from_mask(m);
    if (!s.is_face(k) && !differentiate(g, binary(k, p)).is_zero()) return false;
  }
  return true;
}

MECSpec random_mec(std::mt19937_64& rng, std::size_t p) {
  MECSpec spec;
  spec.p = p;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << p); ++s) {
    if (rng() % 2) continue;
    Rational a(static_cast<long>(rng() % 9) - 4, static_cast<long>(1 + rng() % 4));
    if (a != 0) spec.coeffs[binary(Face::from_mask(s), static_cast<int>(p))] = a;
  }
  return spec;
}

}  // namespace

TEST(LogDensityTest, BecHierarchyFlip) {
  auto bec = parse_poly("1 + 2*x1 + 3*x2 + 5*x1*x2", 2);
  auto independence = cx(2, {"1", "2"});
  EXPECT_TRUE(is_hierarchical(bec, cx(2, {"12"})));
  auto v = check_hierarchical(bec, independence);
  EXPECT_FALSE(v.hierarchical);
  EXPECT_EQ(*v.term, (MultiIndex{1, 1}));
  EXPECT_EQ(*v.nonface, (Face{1, 2}));
  EXPECT_TRUE(is_hierarchical(parse_poly("1 + 2*x1 + 3*x2", 2), independence));
  EXPECT_THROW(is_hierarchical(bec, cx(3, {"12"})), Error);
}

TEST(LogDensityTest, GaussianHierarchy) {
  GaussianSpec spec{Eigen::Vector3d(0.5, -1, 2), Eigen::Matrix3d{{2, 0, 0.5}, {0, 1, -0.25}, {0.5, -0.25, 3}}};
  auto g = gaussian_log_polynomial(spec);
  EXPECT_TRUE(is_hierarchical(g, cx(3, {"13", "23"})));
  EXPECT_FALSE(is_hierarchical(g, cx(3, {"12", "23"})));
  EXPECT_EQ(differentiate(g, MultiIndex{1, 0, 1}), SparsePolynomial::constant(3, Rational(-1, 2)));
  EXPECT_TRUE(artinian_degree_check(g, MultiIndex{3, 3, 3}));
  EXPECT_FALSE(artinian_degree_check(g, MultiIndex{2, 2, 2}));
  EXPECT_TRUE(total_degree_cumulant_check(g, 3));
  EXPECT_FALSE(total_degree_cumulant_check(g, 2));
}

TEST(LogDensityTest, GaussianIdeal) {
  GaussianSpec tri{Eigen::VectorXd::Zero(4), Eigen::Matrix4d{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}};
  auto ideal = gaussian_ideal(tri);
  EXPECT_EQ(ideal.to_string(), "x1*x3, x1*x4, x2*x4");
  auto chain = complex_of(ideal);
  EXPECT_EQ(chain.to_string(), "{12,23,34}");
  EXPECT_TRUE(is_hierarchical(gaussian_log_polynomial(tri), chain));

  GaussianSpec dense{Eigen::VectorXd::Zero(3), Eigen::Matrix3d{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
  EXPECT_TRUE(gaussian_ideal(dense).is_zero());
  GaussianSpec diag{Eigen::VectorXd::Zero(3), Eigen::Matrix3d::Identity()};
  EXPECT_EQ(gaussian_ideal(diag).to_string(), "x1*x2, x1*x3, x2*x3");
  GaussianSpec small{Eigen::VectorXd::Zero(2), Eigen::Matrix2d{{1, 1e-12}, {1e-12, 1}}};
  EXPECT_TRUE(gaussian_ideal(small).is_zero());
  EXPECT_EQ(gaussian_ideal(small, 1e-9).to_string(), "x1*x2");
  GaussianSpec asym{Eigen::VectorXd::Zero(2), Eigen::Matrix2d{{1, 0.5}, {0, 1}}};
  EXPECT_THROW(gaussian_ideal(asym), Error);
}

TEST(LogDensityTest, GaussianIdealGivesHierarchicalModel) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    int p = 2 + static_cast<int>(rng() % 4);
    Eigen::MatrixXd lambda = Eigen::MatrixXd::Identity(p, p) * 4;
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        if (rng() % 2) lambda(i, j) = lambda(j, i) = static_cast<double>(rng() % 5) / 4 - 0.5;
    GaussianSpec spec{Eigen::VectorXd::Constant(p, 0.25), lambda};
    EXPECT_TRUE(is_hierarchical(gaussian_log_polynomial(spec), complex_of(gaussian_ideal(spec))));
  }
}

TEST(LogDensityTest, DegreeChecks) {
  auto bec = parse_poly("1 + 2*x1 + 3*x2 + 5*x1*x2", 2);
  EXPECT_TRUE(artinian_degree_check(bec, MultiIndex{2, 2}));
  EXPECT_FALSE(artinian_degree_check(parse_poly("x1^2 + x2", 2), MultiIndex{2, 2}));
  EXPECT_TRUE(artinian_degree_check(parse_poly("x1^2 + x2", 2), MultiIndex{3, 2}));
  EXPECT_FALSE(total_degree_cumulant_check(bec, 2));
  EXPECT_TRUE(total_degree_cumulant_check(bec, 3));
  EXPECT_TRUE(total_degree_cumulant_check(parse_poly("7/3", 2), 1));
  EXPECT_THROW(artinian_degree_check(bec, MultiIndex{0, 2}), Error);
  EXPECT_THROW(total_degree_cumulant_check(bec, 0), Error);
}

TEST(LogDensityTest, MecExamples) {
  MECSpec bec{2, {{MultiIndex{0, 0}, 1}, {MultiIndex{1, 0}, 2}, {MultiIndex{0, 1}, 3}, {MultiIndex{1, 1}, 5}}};
  EXPECT_EQ(mec_polynomial(bec), parse_poly("1 + 2*x1 + 3*x2 + 5*x1*x2", 2));
  EXPECT_EQ(mec_support_complex(bec).to_string(), "{12}");
  bec.coeffs.erase(MultiIndex{1, 1});
  EXPECT_EQ(mec_support_complex(bec).to_string(), "{1,2}");
  MECSpec chain{3, {{MultiIndex{1, 1, 0}, 1}, {MultiIndex{0, 1, 1}, Rational(-2, 3)}}};
  EXPECT_EQ(mec_support_complex(chain).to_string(), "{12,23}");
  EXPECT_TRUE(is_hierarchical(mec_polynomial(chain), cx(3, {"12", "23"})));
  MECSpec bad{2, {{MultiIndex{2, 0}, 1}}};
  EXPECT_THROW(mec_polynomial(bad), Error);
}

TEST(LogDensityTest, MecArtinianEquivalence) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = 1 + rng() % 5;
    auto spec = random_mec(rng, p);
    auto g = mec_polynomial(spec);
    MultiIndex twos(std::vector<int>(p, 2));
    EXPECT_TRUE(artinian_degree_check(g, twos));
    std::size_t i = 1 + rng() % p;
    auto square = SparsePolynomial::monomial(MultiIndex::unit(p, i) + MultiIndex::unit(p, i), Rational(1 + rng() % 3));
    EXPECT_FALSE(artinian_degree_check(g + square, twos));
  }
}

TEST(LogDensityTest, MecSupportComplexIsTheSmallestModel) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    int p = 1 + static_cast<int>(rng() % 3);
    auto spec = random_mec(rng, static_cast<std::size_t>(p));
    auto g = mec_polynomial(spec);
    auto support = mec_support_complex(spec);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ((1 << p))); ++m) {
      std::vector<Face> faces;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << p); ++s)
        if ((m >> s) & 1U) faces.push_back(Face::from_mask(s));
      auto s = make_complex(p, faces);
      EXPECT_EQ(is_hierarchical(g, s), is_subcomplex(support, s));
    }
  }
}

TEST(LogDensityTest, HierarchicalAgreesWithDefinition) {
  std::mt19937_64 rng(37);
  for (int p = 1; p <= 4; ++p) {
    for (int trial = 0; trial < 40; ++trial) {
      SparsePolynomial g(static_cast<std::size_t>(p));
      int terms = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(p));
        for (auto& x : e) x = (rng() % 2) ? static_cast<int>(rng() % 3) : 0;
        g += SparsePolynomial::monomial(MultiIndex(e), Rational(1 + rng() % 5));
      }
      std::vector<Face> faces;
      int count = static_cast<int>(rng() % 4);
      for (int f = 0; f < count; ++f) faces.push_back(Face::from_mask(rng() & Face::range(p).mask()));
      auto s = make_complex(p, faces);
      auto verdict = check_hierarchical(g, s);
      EXPECT_EQ(verdict.hierarchical, hierarchical_by_definition(g, s));
      if (!verdict.hierarchical) {
        EXPECT_FALSE(s.is_face(*verdict.nonface));
        EXPECT_FALSE(differentiate(g, binary(*verdict.nonface, p)).is_zero());
      }
    }
  }
}
