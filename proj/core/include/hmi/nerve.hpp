#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hmi/simplicial.hpp"

namespace hmi {

struct PointCloud {
  std::size_t d = 0;
  std::vector<Eigen::VectorXd> points;

  PointCloud() = default;
  explicit PointCloud(std::vector<Eigen::VectorXd> points);
  std::size_t size() const noexcept { return points.size(); }
};

// One point per row, comma separated coordinates; blank lines and lines
// starting with '#' are skipped.
PointCloud parse_point_csv(std::string_view text);

struct Ball {
  Eigen::VectorXd center;
  double radius = 0;
};

// Welzl's randomized incremental algorithm with a fixed shuffle seed.
Ball smallest_enclosing_ball(std::span<const Eigen::VectorXd> points);

// Smallest ball whose boundary passes through every given point, within
// their affine hull.
Ball circumball(std::span<const Eigen::VectorXd> points);

inline constexpr int kMaxNerveDimension = 8;
inline constexpr double kNerveTolerance = 1e-9;

struct NerveOptions {
  // Largest face dimension tested; negative means p - 1. Capped at 8.
  int max_dim = -1;
  int threads = 1;
};

// Faces J with a common point of the balls B_i(r), i in J, i.e. with
// smallest enclosing radius of {z_i} at most r.
SimplicialComplex nerve_complex(const PointCloud& cloud, double r, const NerveOptions& options = {});

struct FiltrationStep {
  double radius = 0;
  SimplicialComplex complex;
  bool decomposable = false;
};

std::vector<FiltrationStep> filtration(const PointCloud& cloud, std::span<const double> radii,
                                       const NerveOptions& options = {});

}  // namespace hmi
