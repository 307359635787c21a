#pragma once

// Independent reference implementations used only by the tests. They favour
// obviousness over speed and share no code paths with the library beyond the
// basic value types.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "hmi/face.hpp"
#include "hmi/graph.hpp"
#include "hmi/multi_index.hpp"
#include "hmi/rational.hpp"

namespace oracle {

using hmi::Face;
using hmi::MultiIndex;
using hmi::Rational;

// Bell numbers by B_{n+1} = sum_k C(n,k) B_k.
inline std::vector<std::uint64_t> bell_numbers(int n) {
  std::vector<std::uint64_t> bell{1};
  for (int m = 0; m < n; ++m) {
    std::uint64_t next = 0;
    std::uint64_t binom = 1;
    for (int k = 0; k <= m; ++k) {
      next += binom * bell[static_cast<std::size_t>(k)];
      binom = binom * static_cast<std::uint64_t>(m - k) / static_cast<std::uint64_t>(k + 1);
    }
    bell.push_back(next);
  }
  return bell;
}

// Label every copy of every variable, run through all set partitions of the
// labelled items (restricted growth strings) and count how many collapse to
// each multiset partition. That count is c(pi).
inline std::map<std::vector<MultiIndex>, std::uint64_t> labelled_counts(const MultiIndex& k) {
  std::vector<std::size_t> items;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (int c = 0; c < k[i]; ++c) items.push_back(i);
  std::map<std::vector<MultiIndex>, std::uint64_t> counts;
  std::size_t n = items.size();
  std::vector<std::size_t> label(n, 0);
  auto record = [&] {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> e(blocks, std::vector<int>(k.size(), 0));
    for (std::size_t t = 0; t < n; ++t) ++e[label[t]][items[t]];
    std::vector<MultiIndex> part;
    for (auto& b : e) part.emplace_back(b);
    std::sort(part.begin(), part.end(), std::greater<>());
    ++counts[part];
  };
  if (n == 0) return counts;
  while (true) {
    record();
    std::size_t t = n;
    bool advanced = false;
    while (t > 1) {
      --t;
      std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + static_cast<long>(t));
      if (label[t] <= prefix_max) {
        ++label[t];
        std::fill(label.begin() + static_cast<long>(t) + 1, label.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) return counts;
  }
}

// Multiset partitions: the distinct collapses of the labelled set partitions.
inline std::set<std::vector<MultiIndex>> multiset_partitions(const MultiIndex& k) {
  std::set<std::vector<MultiIndex>> out;
  for (const auto& [part, count] : labelled_counts(k)) out.insert(part);
  return out;
}

// Gaussian raw moments E[X^k] by the Stein recursion
//   m_{k+e_i} = mu_i m_k + sum_j Sigma_ij k_j m_{k-e_j}.
class GaussianMoments {
 public:
  GaussianMoments(std::vector<Rational> mean, std::vector<std::vector<Rational>> covariance)
      : mean_(std::move(mean)), cov_(std::move(covariance)) {}

  Rational operator()(const MultiIndex& k) {
    if (k.is_zero()) return 1;
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    std::size_t i = 0;
    while (k[i] == 0) ++i;
    MultiIndex base = k - MultiIndex::unit(k.size(), i + 1);
    Rational value = mean_[i] * (*this)(base);
    for (std::size_t j = 0; j < k.size(); ++j)
      if (base[j] > 0) value += cov_[i][j] * base[j] * (*this)(base - MultiIndex::unit(k.size(), j + 1));
    memo_.emplace(k, value);
    return value;
  }

 private:
  std::vector<Rational> mean_;
  std::vector<std::vector<Rational>> cov_;
  std::map<MultiIndex, Rational> memo_;
};

// Induced cycles of length >= 4 by exhaustive subset search.
inline bool has_chordless_cycle(const hmi::Graph& g) {
  std::vector<int> vs = g.vertices().vertices();
  std::size_t n = vs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    Face s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(vs[i]);
    // An induced subgraph is a cycle iff it is connected and 2-regular.
    bool two_regular = true;
    for (int v : s.vertices())
      if ((g.neighbors(v) & s).size() != 2) two_regular = false;
    if (!two_regular) continue;
    Face seen{s.min_vertex()};
    std::vector<int> stack{s.min_vertex()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : (g.neighbors(v) & s).vertices())
        if (!seen.contains(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
    }
    if (seen == s) return true;
  }
  return false;
}

// Maximal cliques by testing every vertex subset.
inline std::vector<Face> maximal_cliques(const hmi::Graph& g) {
  std::vector<int> vs = g.vertices().vertices();
  std::size_t n = vs.size();
  std::vector<Face> cliques;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    Face s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(vs[i]);
    if (g.is_clique(s)) cliques.push_back(s);
  }
  std::vector<Face> out;
  for (Face c : cliques) {
    bool maximal = true;
    for (int v : vs)
      if (!c.contains(v) && g.is_clique(c.with(v))) maximal = false;
    if (maximal) out.push_back(c);
  }
  hmi::sort_canonical(out);
  return out;
}

// Minimal non-faces of the downward closure of `facets` by checking every
// subset of the ground set.
inline std::vector<Face> minimal_nonfaces(Face ground, const std::vector<Face>& facets) {
  auto is_face = [&](Face f) {
    return std::any_of(facets.begin(), facets.end(), [&](Face g) { return f.subset_of(g); });
  };
  std::vector<Face> out;
  std::uint64_t full = ground.mask();
  for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
    Face k = Face::from_mask(sub);
    bool minimal = !is_face(k);
    for (int v : k.vertices())
      if (!is_face(k.without(v))) minimal = false;
    if (minimal) out.push_back(k);
    if (sub == 0) break;
  }
  hmi::sort_canonical(out);
  return out;
}

struct SimpleEdge {
  int u;
  int v;
};

// Whether input and output are joined using only the edges in `keep`
// (edge i of the list is id i+1).
inline bool connects(const std::vector<SimpleEdge>& edges, int input, int output, Face keep) {
  std::set<int> seen{input};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!keep.contains(static_cast<int>(i) + 1)) continue;
      bool a = seen.count(edges[i].u) > 0;
      bool b = seen.count(edges[i].v) > 0;
      if (a != b) {
        seen.insert(a ? edges[i].v : edges[i].u);
        grew = true;
      }
    }
  }
  return seen.count(output) > 0;
}

// Minimal paths: inclusion-minimal connecting edge sets. Minimal cuts:
// inclusion-minimal edge sets whose removal disconnects.
inline std::vector<Face> minimal_connecting_sets(const std::vector<SimpleEdge>& edges, int input, int output,
                                                 bool cuts) {
  int m = static_cast<int>(edges.size());
  Face all = Face::range(m);
  std::vector<Face> hits;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Face s = Face::from_mask(mask);
    bool property = cuts ? !connects(edges, input, output, all - s) : connects(edges, input, output, s);
    if (!property) continue;
    bool minimal = true;
    for (int e : s.vertices()) {
      Face t = s.without(e);
      bool sub = cuts ? !connects(edges, input, output, all - t) : connects(edges, input, output, t);
      if (sub) minimal = false;
    }
    if (minimal) hits.push_back(s);
  }
  hmi::sort_canonical(hits);
  return hits;
}

// Smallest enclosing ball by trying every support subset of size <= d+1 and
// keeping the smallest circumball that contains all points.
inline double enclosing_radius(const std::vector<Eigen::VectorXd>& pts) {
  std::size_t n = pts.size();
  std::size_t d = static_cast<std::size_t>(pts.front().size());
  double best = INFINITY;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > d + 1) continue;
    std::vector<Eigen::VectorXd> support;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) support.push_back(pts[i]);
    auto m = static_cast<Eigen::Index>(support.size() - 1);
    Eigen::VectorXd centre = support[0];
    if (m > 0) {
      Eigen::MatrixXd a(centre.size(), m);
      for (Eigen::Index i = 0; i < m; ++i) a.col(i) = support[static_cast<std::size_t>(i + 1)] - support[0];
      Eigen::MatrixXd gram = a.transpose() * a;
      if (std::abs(gram.determinant()) < 1e-12) continue;
      Eigen::VectorXd rhs = 0.5 * a.colwise().squaredNorm().transpose();
      centre = support[0] + a * gram.ldlt().solve(rhs);
    }
    double radius = 0;
    for (const auto& z : support) radius = std::max(radius, (z - centre).norm());
    bool covers = true;
    for (const auto& z : pts)
      if ((z - centre).norm() > radius * (1 + 1e-10) + 1e-12) covers = false;
    if (covers) best = std::min(best, radius);
  }
  return best;
}

// Log-density of the Gaussian marginal on the coordinates in `keep`
// (0-based indices), evaluated at the corresponding entries of x.
inline double gaussian_marginal_log_density(const Eigen::VectorXd& mean, const Eigen::MatrixXd& covariance,
                                            const std::vector<int>& keep, const Eigen::VectorXd& x) {
  auto k = static_cast<Eigen::Index>(keep.size());
  if (k == 0) return 0;
  Eigen::VectorXd d(k);
  Eigen::MatrixXd s(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    d(i) = x(keep[static_cast<std::size_t>(i)]) - mean(keep[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < k; ++j) s(i, j) = covariance(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  }
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  double log_det = 0;
  for (Eigen::Index i = 0; i < k; ++i) log_det += 2 * std::log(llt.matrixL()(i, i));
  return -0.5 * d.dot(llt.solve(d)) - 0.5 * log_det - 0.5 * static_cast<double>(k) * std::log(2 * M_PI);
}

}  // namespace oracle
