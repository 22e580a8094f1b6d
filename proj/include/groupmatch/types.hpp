#ifndef GROUPMATCH_TYPES_HPP
#define GROUPMATCH_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace groupmatch {

// Descriptor layout: 18 horizontal stripes x 31 channels x 16 bins.
// Channels: RGB, HSV, YCbCr, Lab, YIQ (3 each) plus 16 Gabor magnitude maps.
inline constexpr int kStripes = 18;
inline constexpr int kColorChannels = 15;
inline constexpr int kGaborChannels = 16;
inline constexpr int kChannels = kColorChannels + kGaborChannels;
inline constexpr int kHistogramBins = 16;
inline constexpr int kDescriptorDim = kStripes * kChannels * kHistogramBins;

inline constexpr int kCropHeight = 128;
inline constexpr int kCropWidth = 48;

// Geometric histograms for edge attributes.
inline constexpr int kGeoBins = 9;  // n_L = n_P = 9
inline constexpr double kGeoSigma = 5.0;

using Descriptor = std::vector<float>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double px, double py) : x(px), y(py) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    double n = norm();
    if (n <= 0.0) return {1.0, 0.0};
    return {x / n, y / n};
  }
};

inline double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double squared_distance(const Descriptor& a, const Descriptor& b) {
  double s = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    s += d * d;
  }
  return s;
}

inline double descriptor_distance(const Descriptor& a, const Descriptor& b) {
  return std::sqrt(squared_distance(a, b));
}

}  // namespace groupmatch

#endif  // GROUPMATCH_TYPES_HPP
