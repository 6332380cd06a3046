#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "vspace/operator_table.hpp"

namespace vspace {

/// "example1", "example2" or "identity_<n>" (n <= 20). Throws UnknownExample.
OperatorTable example_space(std::string_view name);

/// Labelled planar points; labels form the ground set in input order.
class PointSet {
 public:
  PointSet(std::vector<std::string> labels, std::vector<Eigen::Vector2d> points);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return points_.size(); }
  const Eigen::Vector2d& point(std::size_t i) const { return points_[i]; }
  const std::vector<Eigen::Vector2d>& points() const { return points_; }

 private:
  GroundSet ground_;
  std::vector<Eigen::Vector2d> points_;
};

/// `label,x,y` per line, optional header line.
PointSet read_points_csv(std::istream& in);
PointSet read_points_file(const std::filesystem::path& path);

struct Ball {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  /// -infinity for the empty ball, which contains nothing.
  double radius = -std::numeric_limits<double>::infinity();
  /// Boundary points that determine the ball.
  SubsetMask support;

  bool is_empty() const { return radius < 0; }
  /// Strictly outside by more than `eps`. Every point is outside the empty ball.
  bool is_outside(const Eigen::Vector2d& p, double eps) const {
    return is_empty() || (p - center).norm() > radius + eps;
  }
};

/// Smallest disk enclosing the points of `subset` (move-to-front recursion,
/// fixed internal shuffle).
Ball miniball(const PointSet& ps, SubsetMask subset);

inline constexpr double kOutsideTolerance = 1e-9;
inline constexpr unsigned kSebMaxPoints = 16;

/// nu(G) = points strictly outside miniball(G) by more than kOutsideTolerance.
/// nu(empty) = E. Throws GroundSetTooLarge above kSebMaxPoints.
OperatorTable seb_space(const PointSet& ps, unsigned threads = 1);

/// Violator operator synthesized from `random_hypercube_partition(n, seed)`.
OperatorTable random_ug_space(unsigned n, std::uint64_t seed);

}  // namespace vspace
