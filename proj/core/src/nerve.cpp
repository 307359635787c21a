#include "hmi/nerve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>

#include "hmi/error.hpp"
#include "hmi/hierarchy.hpp"

namespace hmi {

PointCloud::PointCloud(std::vector<Eigen::VectorXd> pts) : points(std::move(pts)) {
  if (points.empty()) throw Error("point cloud is empty");
  if (points.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error("point cloud has more than " + std::to_string(kMaxVertices) + " points");
  d = static_cast<std::size_t>(points.front().size());
  if (d == 0) throw Error("points need at least one coordinate");
  for (const auto& z : points) {
    if (static_cast<std::size_t>(z.size()) != d) throw Error("points have different dimensions");
    if (!z.allFinite()) throw Error("point coordinates must be finite");
  }
}

PointCloud parse_point_csv(std::string_view text) {
  std::vector<Eigen::VectorXd> points;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string line(text.substr(line_start, line_end - line_start));
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') {
      std::vector<double> coords;
      std::size_t pos = 0;
      while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        std::string cell = line.substr(pos, comma - pos);
        try {
          std::size_t used = 0;
          double value = std::stod(cell, &used);
          if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
          coords.push_back(value);
        } catch (const std::exception&) {
          throw ParseError("bad coordinate '" + cell + "'", line_start + pos);
        }
        pos = comma + 1;
      }
      points.push_back(Eigen::Map<Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size())));
    }
    line_start = line_end + 1;
  }
  return PointCloud(std::move(points));
}

Ball circumball(std::span<const Eigen::VectorXd> points) {
  Ball ball;
  if (points.empty()) return ball;
  const Eigen::VectorXd& origin = points.front();
  ball.center = origin;
  auto m = static_cast<Eigen::Index>(points.size() - 1);
  if (m == 0) return ball;
  Eigen::MatrixXd directions(origin.size(), m);
  for (Eigen::Index i = 0; i < m; ++i) directions.col(i) = points[static_cast<std::size_t>(i + 1)] - origin;
  // centre = origin + directions * lambda with |c - z_i| equal for all i.
  Eigen::MatrixXd gram = 2 * directions.transpose() * directions;
  Eigen::VectorXd rhs = directions.colwise().squaredNorm().transpose();
  Eigen::VectorXd lambda = gram.completeOrthogonalDecomposition().solve(rhs);
  ball.center = origin + directions * lambda;
  for (const auto& z : points) ball.radius = std::max(ball.radius, (z - ball.center).norm());
  return ball;
}

namespace {

bool inside(const Ball& ball, const Eigen::VectorXd& z) {
  return (z - ball.center).norm() <= ball.radius * (1 + 1e-12) + 1e-15;
}

Ball welzl(std::vector<Eigen::VectorXd>& pts, std::size_t n, std::vector<Eigen::VectorXd>& boundary,
           std::size_t dim) {
  if (n == 0 || boundary.size() == dim + 1) return circumball(boundary);
  const Eigen::VectorXd z = pts[n - 1];
  Ball ball = welzl(pts, n - 1, boundary, dim);
  bool has_ball = !(boundary.empty() && n == 1);
  if (has_ball && inside(ball, z)) return ball;
  boundary.push_back(z);
  ball = welzl(pts, n - 1, boundary, dim);
  boundary.pop_back();
  return ball;
}

}  // namespace

Ball smallest_enclosing_ball(std::span<const Eigen::VectorXd> points) {
  if (points.empty()) throw Error("smallest enclosing ball of no points");
  std::vector<Eigen::VectorXd> pts(points.begin(), points.end());
  std::mt19937_64 rng(0x5eedULL);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<Eigen::VectorXd> boundary;
  return welzl(pts, pts.size(), boundary, static_cast<std::size_t>(pts.front().size()));
}

SimplicialComplex nerve_complex(const PointCloud& cloud, double r, const NerveOptions& options) {
  if (!(r >= 0)) throw Error("radius must be non-negative");
  int p = static_cast<int>(cloud.size());
  int max_dim = options.max_dim < 0 ? p - 1 : options.max_dim;
  max_dim = std::min({max_dim, p - 1, kMaxNerveDimension});

  std::unordered_set<std::uint64_t> present;
  std::vector<Face> level;
  std::vector<Face> all_faces;
  for (int v = 1; v <= p; ++v) {
    level.push_back(Face{v});
    present.insert(Face{v}.mask());
  }
  all_faces = level;
  for (int dim = 1; dim <= max_dim && !level.empty(); ++dim) {
    // Extend each face by a larger vertex; keep candidates whose every
    // facet is already present.
    std::vector<Face> candidates;
    for (Face f : level) {
      for (int v = f.max_vertex() + 1; v <= p; ++v) {
        Face g = f.with(v);
        bool boundary = true;
        for (int u : f.vertices())
          if (!present.count(g.without(u).mask())) {
            boundary = false;
            break;
          }
        if (boundary) candidates.push_back(g);
      }
    }
    std::vector<char> accepted(candidates.size(), 0);
    auto test = [&](std::size_t i) {
      std::vector<Eigen::VectorXd> pts;
      for (int v : candidates[i].vertices()) pts.push_back(cloud.points[static_cast<std::size_t>(v - 1)]);
      accepted[i] = smallest_enclosing_ball(pts).radius <= r + kNerveTolerance;
    };
    std::size_t workers = std::min<std::size_t>(candidates.size(), static_cast<std::size_t>(std::max(1, options.threads)));
    if (workers <= 1) {
      for (std::size_t i = 0; i < candidates.size(); ++i) test(i);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < candidates.size(); i += workers) test(i);
        });
      for (auto& t : pool) t.join();
    }
    level.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!accepted[i]) continue;
      level.push_back(candidates[i]);
      present.insert(candidates[i].mask());
    }
    all_faces.insert(all_faces.end(), level.begin(), level.end());
  }
  return SimplicialComplex(Face::range(p), std::move(all_faces));
}

std::vector<FiltrationStep> filtration(const PointCloud& cloud, std::span<const double> radii,
                                       const NerveOptions& options) {
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw Error("filtration radii must be strictly increasing");
  std::vector<FiltrationStep> steps;
  for (double r : radii) {
    FiltrationStep step;
    step.radius = r;
    step.complex = nerve_complex(cloud, r, options);
    step.decomposable = is_decomposable(step.complex);
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace hmi
