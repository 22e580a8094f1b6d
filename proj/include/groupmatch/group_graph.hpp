#ifndef GROUPMATCH_GROUP_GRAPH_HPP
#define GROUPMATCH_GROUP_GRAPH_HPP

#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "groupmatch/types.hpp"

namespace groupmatch {

// Log-distance bins cover relative distances down to 1px at a fixed reference
// diagonal, so that the binning depends only on dist/diag and stays invariant
// under joint rescaling of centers and image size.
inline constexpr double kReferenceDiagonal = 2048.0;

struct EdgeAttribute {
  std::array<double, kGeoBins> log_distance_hist{};
  std::array<double, kGeoBins> polar_angle_hist{};

  // [A_i; A_j; L_ij; P_ij]
  std::vector<double> composite(const Descriptor& ai, const Descriptor& aj) const;
};

struct HyperEdgeAttribute {
  std::array<double, 3> internal_angles{};  // sin of the angle at each vertex
  bool degenerate = false;
};

struct GroupGraph {
  std::vector<Descriptor> descriptors;
  std::vector<Vec2> centers;
  Vec2 reference_direction{1.0, 0.0};
  double image_width = 0.0;
  double image_height = 0.0;
  std::map<std::pair<int, int>, EdgeAttribute> edges;                 // i < j
  std::map<std::tuple<int, int, int>, HyperEdgeAttribute> hyper_edges;  // i < j < k

  int size() const { return static_cast<int>(descriptors.size()); }
  double diagonal() const { return std::hypot(image_width, image_height); }
};

// Direction of the RANSAC-fitted line through the given centers, canonicalized
// to x >= 0 (y >= 0 when x == 0). Fewer than 3 points fall back to the direct
// two-point direction or (1,0).
Vec2 fit_reference_direction(const std::vector<Vec2>& centers,
                             double image_diagonal,
                             int iterations = 500,
                             double inlier_fraction = 0.025);

// Ordered edge attribute: L_ij is symmetric, P_ij depends on direction i->j.
EdgeAttribute edge_attribute(const GroupGraph& g, int i, int j);

// Canonical (sorted-vertex) hyper-edge attribute; permutation invariant.
HyperEdgeAttribute hyper_edge_attribute(const GroupGraph& g, int i, int j, int k);

// Sines of the triangle's internal angles at vertices i, j, k in that order.
std::array<double, 3> internal_angle_sines(const GroupGraph& g, int i, int j, int k);

// Builds a graph from descriptors and centers: fits the reference direction
// and fills edge / hyper-edge attribute maps for all pairs and triples.
GroupGraph build_group_graph(std::vector<Descriptor> descriptors,
                             std::vector<Vec2> centers,
                             double image_width, double image_height);

// Same, but with a caller-supplied reference direction (used when loading
// serialized graphs).
GroupGraph build_group_graph_with_reference(std::vector<Descriptor> descriptors,
                                            std::vector<Vec2> centers,
                                            double image_width, double image_height,
                                            Vec2 reference_direction);

}  // namespace groupmatch

#endif  // GROUPMATCH_GROUP_GRAPH_HPP
