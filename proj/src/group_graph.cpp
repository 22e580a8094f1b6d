#include "groupmatch/group_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace groupmatch {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec2 canonical_direction(Vec2 d) {
  if (d.x < 0.0 || (d.x == 0.0 && d.y < 0.0)) {
    d.x = -d.x;
    d.y = -d.y;
  }
  return d.normalized();
}

// Total-least-squares direction of a point set (principal axis).
Vec2 least_squares_direction(const std::vector<Vec2>& pts) {
  double mx = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : pts) {
    const double dx = p.x - mx;
    const double dy = p.y - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  // Leading eigenvector of [[sxx,sxy],[sxy,syy]].
  const double tr = sxx + syy;
  const double det = sxx * syy - sxy * sxy;
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
  const double lambda = tr / 2.0 + disc;
  Vec2 dir;
  if (std::abs(sxy) > 1e-12) {
    dir = Vec2(lambda - syy, sxy);
  } else {
    dir = (sxx >= syy) ? Vec2(1.0, 0.0) : Vec2(0.0, 1.0);
  }
  if (dir.norm() <= 1e-12) dir = Vec2(1.0, 0.0);
  return dir;
}

double point_line_distance(const Vec2& p, const Vec2& a, const Vec2& dir) {
  return std::abs((p - a).cross(dir));
}

}  // namespace

Vec2 fit_reference_direction(const std::vector<Vec2>& centers,
                             double image_diagonal,
                             int iterations,
                             double inlier_fraction) {
  const int n = static_cast<int>(centers.size());
  if (n <= 1) return Vec2(1.0, 0.0);
  if (n == 2) {
    Vec2 d = centers[1] - centers[0];
    if (d.norm() <= 1e-12) return Vec2(1.0, 0.0);
    return canonical_direction(d);
  }

  const double threshold = inlier_fraction * std::max(image_diagonal, 1.0);
  const int total_pairs = n * (n - 1) / 2;

  int best_count = -1;
  double best_residual = 0.0;
  std::vector<int> best_inliers;

  auto evaluate = [&](int i, int j) {
    Vec2 dir = centers[j] - centers[i];
    if (dir.norm() <= 1e-12) return;
    dir = dir.normalized();
    int count = 0;
    double residual = 0.0;
    std::vector<int> inliers;
    inliers.reserve(centers.size());
    for (int t = 0; t < n; ++t) {
      const double d = point_line_distance(centers[t], centers[i], dir);
      if (d <= threshold) {
        ++count;
        residual += d;
        inliers.push_back(t);
      }
    }
    if (count > best_count || (count == best_count && residual < best_residual)) {
      best_count = count;
      best_residual = residual;
      best_inliers = std::move(inliers);
    }
  };

  if (total_pairs <= iterations) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) evaluate(i, j);
  } else {
    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int it = 0; it < iterations; ++it) {
      int i = pick(rng);
      int j = pick(rng);
      if (i == j) continue;
      evaluate(i, j);
    }
  }

  if (best_inliers.size() < 2) return Vec2(1.0, 0.0);
  std::vector<Vec2> pts;
  pts.reserve(best_inliers.size());
  for (int idx : best_inliers) pts.push_back(centers[idx]);
  return canonical_direction(least_squares_direction(pts));
}

std::vector<double> EdgeAttribute::composite(const Descriptor& ai, const Descriptor& aj) const {
  std::vector<double> out;
  out.reserve(ai.size() + aj.size() + 2 * kGeoBins);
  for (float v : ai) out.push_back(v);
  for (float v : aj) out.push_back(v);
  out.insert(out.end(), log_distance_hist.begin(), log_distance_hist.end());
  out.insert(out.end(), polar_angle_hist.begin(), polar_angle_hist.end());
  return out;
}

namespace {

std::array<double, kGeoBins> gaussian_histogram(int center_bin) {
  std::array<double, kGeoBins> h{};
  double sum = 0.0;
  for (int k = 0; k < kGeoBins; ++k) {
    const double x = static_cast<double>(k - center_bin);
    h[k] = std::exp(-x * x / (2.0 * kGeoSigma * kGeoSigma));
    sum += h[k];
  }
  for (auto& v : h) v /= sum;
  return h;
}

std::array<double, kGeoBins> circular_gaussian_histogram(int center_bin) {
  std::array<double, kGeoBins> h{};
  double sum = 0.0;
  for (int k = 0; k < kGeoBins; ++k) {
    int d = std::abs(k - center_bin);
    d = std::min(d, kGeoBins - d);  // circular bin distance
    h[k] = std::exp(-static_cast<double>(d * d) / (2.0 * kGeoSigma * kGeoSigma));
    sum += h[k];
  }
  for (auto& v : h) v /= sum;
  return h;
}

int log_distance_bin(double dist, double diagonal) {
  const double lo = std::log(1.0 / kReferenceDiagonal);
  double rho = dist / std::max(diagonal, 1.0);
  rho = std::max(rho, 1.0 / kReferenceDiagonal);
  rho = std::min(rho, 1.0);
  const double t = (std::log(rho) - lo) / (0.0 - lo);
  int bin = static_cast<int>(t * kGeoBins);
  return std::clamp(bin, 0, kGeoBins - 1);
}

int polar_angle_bin(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  int bin = static_cast<int>(a / kTwoPi * kGeoBins);
  return std::clamp(bin, 0, kGeoBins - 1);
}

}  // namespace

EdgeAttribute edge_attribute(const GroupGraph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("edge_attribute: i == j");
  const Vec2 d = g.centers[j] - g.centers[i];
  const double dist = d.norm();

  EdgeAttribute attr;
  attr.log_distance_hist = gaussian_histogram(log_distance_bin(dist, g.diagonal()));

  // Polar angle of i->j measured from the group reference direction.
  const Vec2& ref = g.reference_direction;
  const double theta = std::atan2(ref.cross(d), ref.dot(d));
  attr.polar_angle_hist = circular_gaussian_histogram(polar_angle_bin(theta));
  return attr;
}

std::array<double, 3> internal_angle_sines(const GroupGraph& g, int i, int j, int k) {
  const Vec2& a = g.centers[i];
  const Vec2& b = g.centers[j];
  const Vec2& c = g.centers[k];
  auto vertex_angle = [](const Vec2& at, const Vec2& p, const Vec2& q) {
    const Vec2 u = p - at;
    const Vec2 v = q - at;
    return std::atan2(std::abs(u.cross(v)), u.dot(v));
  };
  return {std::sin(vertex_angle(a, b, c)),
          std::sin(vertex_angle(b, a, c)),
          std::sin(vertex_angle(c, a, b))};
}

HyperEdgeAttribute hyper_edge_attribute(const GroupGraph& g, int i, int j, int k) {
  if (i == j || j == k || i == k)
    throw std::invalid_argument("hyper_edge_attribute: indices must be distinct");
  std::array<int, 3> idx{i, j, k};
  std::sort(idx.begin(), idx.end());

  HyperEdgeAttribute attr;
  const Vec2 u = g.centers[idx[1]] - g.centers[idx[0]];
  const Vec2 v = g.centers[idx[2]] - g.centers[idx[0]];
  const double area2 = std::abs(u.cross(v));
  const double scale = std::max({u.norm(), v.norm(), 1e-12});
  if (area2 <= 1e-9 * scale * scale) {
    attr.internal_angles = {0.0, 0.0, 0.0};
    attr.degenerate = true;
    return attr;
  }
  attr.internal_angles = internal_angle_sines(g, idx[0], idx[1], idx[2]);
  return attr;
}

namespace {

GroupGraph finish_graph(GroupGraph g) {
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.edges[{i, j}] = edge_attribute(g, i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        g.hyper_edges[{i, j, k}] = hyper_edge_attribute(g, i, j, k);
  return g;
}

}  // namespace

GroupGraph build_group_graph(std::vector<Descriptor> descriptors,
                             std::vector<Vec2> centers,
                             double image_width, double image_height) {
  if (descriptors.size() != centers.size())
    throw std::invalid_argument("build_group_graph: descriptor/center count mismatch");
  GroupGraph g;
  g.descriptors = std::move(descriptors);
  g.centers = std::move(centers);
  g.image_width = image_width;
  g.image_height = image_height;
  g.reference_direction = fit_reference_direction(g.centers, g.diagonal());
  return finish_graph(std::move(g));
}

GroupGraph build_group_graph_with_reference(std::vector<Descriptor> descriptors,
                                            std::vector<Vec2> centers,
                                            double image_width, double image_height,
                                            Vec2 reference_direction) {
  GroupGraph g;
  g.descriptors = std::move(descriptors);
  g.centers = std::move(centers);
  g.image_width = image_width;
  g.image_height = image_height;
  g.reference_direction = reference_direction.normalized();
  return finish_graph(std::move(g));
}

}  // namespace groupmatch
