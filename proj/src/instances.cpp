#include "vspace/instances.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <thread>

#include "vspace/cospanning.hpp"
#include "vspace/error.hpp"

namespace vspace {

namespace {

using Overrides = std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>;

OperatorTable identity_with(unsigned n, const Overrides& overrides) {
  GroundSet ground = GroundSet::numbered(n);
  std::vector<SubsetMask> map(ground.subset_count());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = SubsetMask(static_cast<std::uint32_t>(i));
  for (const auto& [x, y] : overrides) map[ground.encode(x).index()] = ground.encode(y);
  return OperatorTable(std::move(ground), OperatorKind::phi, std::move(map));
}

}  // namespace

OperatorTable example_space(std::string_view name) {
  if (name == "example1") {
    return identity_with(3, {
                                {{"2"}, {"2", "3"}},
                                {{"3"}, {"2", "3"}},
                                {{"1", "2"}, {"1", "2", "3"}},
                                {{"1", "3"}, {"1", "2", "3"}},
                            });
  }
  if (name == "example2") {
    return identity_with(6, {
                                {{"1"}, {"1", "2"}},
                                {{"1", "2", "3"}, {"1", "2", "3", "4"}},
                                {{"1", "2", "4"}, {"1", "2", "3", "4"}},
                                {{"1", "2", "5"}, {"1", "2", "5", "6"}},
                                {{"1", "2", "6"}, {"1", "2", "5", "6"}},
                            });
  }
  constexpr std::string_view prefix = "identity_";
  if (name.starts_with(prefix)) {
    const auto digits = name.substr(prefix.size());
    unsigned n = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty() &&
        n <= GroundSet::kMaxSize) {
      return OperatorTable::identity(GroundSet::numbered(n));
    }
  }
  throw Error(ErrorKind::UnknownExample, std::string(name));
}

PointSet::PointSet(std::vector<std::string> labels, std::vector<Eigen::Vector2d> points)
    : ground_(std::move(labels)), points_(std::move(points)) {
  if (points_.size() != ground_.size()) {
    throw Error(ErrorKind::InvalidArgument, "label and point counts differ");
  }
  for (const auto& p : points_) {
    if (!p.allFinite()) throw Error(ErrorKind::InvalidArgument, "non-finite coordinate");
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view s) {
  s = trim(s);
  double v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

PointSet read_points_csv(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<Eigen::Vector2d> points;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto row = trim(line);
    if (row.empty()) continue;
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (std::size_t pos; (pos = row.find(',', start)) != std::string_view::npos; start = pos + 1) {
      cells.push_back(row.substr(start, pos - start));
    }
    cells.push_back(row.substr(start));
    if (cells.size() != 3) {
      throw Error(ErrorKind::MalformedDocument, "line " + std::to_string(line_no) + ": expected label,x,y");
    }
    auto x = parse_double(cells[1]);
    auto y = parse_double(cells[2]);
    if (!x || !y) {
      if (first) {  // header
        first = false;
        continue;
      }
      throw Error(ErrorKind::MalformedDocument, "line " + std::to_string(line_no) + ": bad coordinate");
    }
    first = false;
    labels.emplace_back(trim(cells[0]));
    points.emplace_back(*x, *y);
  }
  return PointSet(std::move(labels), std::move(points));
}

PointSet read_points_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  return read_points_csv(in);
}

namespace {

// Containment slack inside the solver; far below kOutsideTolerance.
bool covers(const Ball& b, const Eigen::Vector2d& p) {
  return !b.is_empty() && (p - b.center).norm() <= b.radius + 1e-12 * std::max(1.0, b.radius);
}

Ball disk(const std::vector<Eigen::Vector2d>& pts, unsigned a) {
  return {pts[a], 0.0, SubsetMask::of({a})};
}

Ball disk(const std::vector<Eigen::Vector2d>& pts, unsigned a, unsigned b) {
  return {(pts[a] + pts[b]) / 2, (pts[a] - pts[b]).norm() / 2, SubsetMask::of({a, b})};
}

Ball disk(const std::vector<Eigen::Vector2d>& pts, unsigned a, unsigned b, unsigned c) {
  const Eigen::Vector2d ab = pts[b] - pts[a];
  const Eigen::Vector2d ac = pts[c] - pts[a];
  const double det = 2 * (ab.x() * ac.y() - ab.y() * ac.x());
  const double scale = std::max({ab.squaredNorm(), ac.squaredNorm(), 1e-300});
  if (std::abs(det) <= 1e-14 * scale) {
    // Collinear or repeated points: the widest pair spans the other.
    Ball best = disk(pts, a, b);
    for (const Ball& cand : {disk(pts, a, c), disk(pts, b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double ab2 = ab.squaredNorm();
  const double ac2 = ac.squaredNorm();
  const Eigen::Vector2d offset((ac.y() * ab2 - ab.y() * ac2) / det, (ab.x() * ac2 - ac.x() * ab2) / det);
  return {pts[a] + offset, offset.norm(), SubsetMask::of({a, b, c})};
}

}  // namespace

Ball miniball(const PointSet& ps, SubsetMask subset) {
  std::vector<unsigned> order;
  for (unsigned i = 0; i < ps.size(); ++i) {
    if (subset.test(i)) order.push_back(i);
  }
  std::mt19937_64 rng(0x5eb);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  const auto& pts = ps.points();
  Ball ball;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (covers(ball, pts[order[i]])) continue;
    ball = disk(pts, order[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (covers(ball, pts[order[j]])) continue;
      ball = disk(pts, order[i], order[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (covers(ball, pts[order[k]])) continue;
        ball = disk(pts, order[i], order[j], order[k]);
      }
    }
  }
  return ball;
}

OperatorTable seb_space(const PointSet& ps, unsigned threads) {
  if (ps.size() > kSebMaxPoints) {
    throw Error(ErrorKind::GroundSetTooLarge,
                std::to_string(ps.size()) + " points, at most " + std::to_string(kSebMaxPoints));
  }
  const std::size_t count = ps.ground().subset_count();
  std::vector<SubsetMask> map(count);
  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t g = begin; g < end; ++g) {
      const Ball ball = miniball(ps, SubsetMask(static_cast<std::uint32_t>(g)));
      SubsetMask outside;
      for (unsigned p = 0; p < ps.size(); ++p) {
        if (ball.is_outside(ps.point(p), kOutsideTolerance)) outside = outside.with(p);
      }
      map[g] = outside;
    }
  };
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    fill(0, count);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (count + threads - 1) / threads;
    for (std::size_t begin = 0; begin < count; begin += chunk) {
      workers.emplace_back(fill, begin, std::min(count, begin + chunk));
    }
  }
  return OperatorTable(ps.ground(), OperatorKind::nu, std::move(map));
}

OperatorTable random_ug_space(unsigned n, std::uint64_t seed) {
  return synthesize_from_relation(random_hypercube_partition(n, seed), SynthesisMode::violator);
}

}  // namespace vspace
