#pragma once

#include "fank/cone.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fank {

struct NamedRay {
  std::string name;
  IntVector vector;
};

struct ConeSpec {
  std::string name;
  std::vector<std::string> rays;
};

struct FanRay {
  std::string name;
  IntVector primitive;
  IntVector original;
};

/// A cone of the fan, identified by the sorted ids of its fan rays.
struct Cell {
  RaySet rays;
  Cone cone;
  std::string name;
  bool maximal = false;
};

struct Wall {
  std::size_t first;   // maximal cone indices (into Fan::maximal())
  std::size_t second;
  std::size_t cell;    // the shared facet
};

class Fan {
 public:
  /// Validates pairwise intersections. Duplicate and non-maximal listed cones and unused
  /// rays are dropped with a warning.
  static Fan from_description(std::size_t n, const std::vector<NamedRay>& rays, const std::vector<ConeSpec>& cones);
  /// Convenience: rays named r1.., cones c1.. given by 0-based ray indices.
  static Fan from_cones(std::size_t n, const std::vector<IntVector>& rays, const std::vector<RaySet>& cones);
  /// The fan of all faces of one cone.
  static Fan of_cone(const Cone& cone);

  std::size_t ambient() const { return n_; }
  const std::vector<FanRay>& rays() const { return rays_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t i) const { return cells_.at(i); }
  /// Cell ids of the maximal cones, in input order.
  const std::vector<std::size_t>& maximal() const { return maximal_; }
  const Cell& maximal_cell(std::size_t k) const { return cells_.at(maximal_.at(k)); }
  const std::vector<Wall>& walls() const { return walls_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::optional<std::size_t> find_cell(const RaySet& rays) const;
  /// Cell whose rays are exactly the given primitive vectors.
  std::optional<std::size_t> find_cell_by_vectors(const std::vector<IntVector>& vectors) const;
  std::optional<std::size_t> find_cell_by_name(const std::string& name) const;
  std::optional<std::size_t> find_ray(const IntVector& primitive) const;
  std::optional<std::size_t> find_ray_by_name(const std::string& name) const;

  /// The common face of two cells.
  std::size_t meet(std::size_t a, std::size_t b) const;
  /// True when cell a is a face of cell b.
  bool is_face_of(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> faces_of(std::size_t cell) const;
  /// Maximal-cone indices (into maximal()) of cones having the cell as a face.
  std::vector<std::size_t> maximal_containing(std::size_t cell) const;

  /// The subfan generated by the given cells (any dimension), without revalidation.
  /// Unused rays are dropped; cone names carry over.
  Fan subfan(const std::vector<std::size_t>& generating_cells) const;

  std::string cell_label(const RaySet& rays) const;

 private:
  void build_cells(const std::vector<std::pair<RaySet, std::string>>& maximal);

  std::size_t n_ = 0;
  std::vector<FanRay> rays_;
  std::vector<Cell> cells_;
  std::map<RaySet, std::size_t> index_;
  std::vector<std::size_t> maximal_;
  std::vector<Wall> walls_;
  std::vector<std::string> warnings_;
};

using FanPtr = std::shared_ptr<const Fan>;

/// The fan of proper faces of a cone.
Fan boundary(const Cone& cone);

bool is_smooth_fan(const Fan& fan);
bool is_simplicial_fan(const Fan& fan);
bool is_complete(const Fan& fan);
/// Throws Unsupported for incomplete fans.
bool is_polytopal(const Fan& fan);

struct SingularCone {
  std::size_t cell;
  bool isolated = false;
  bool distant = false;
};

struct SingularityReport {
  std::vector<SingularCone> singular;
  /// Both require at least one singular cone.
  bool all_isolated = false;
  bool all_distant = false;
};

SingularityReport singularity_report(const Fan& fan);

/// A connected piece of an incomplete 2D fan, with its maximal cones in chain order
/// (counterclockwise) and rays rho_1..rho_{k+1} with sigma_i = <rho_i, rho_{i+1}>.
struct Clump {
  std::vector<std::size_t> cones;  // maximal-cone indices of the parent fan, in chain order
  std::vector<std::size_t> rays;   // fan ray ids rho_1..rho_{k+1}; one entry for a lone ray
};

std::vector<Clump> clump_decomposition(const Fan& fan);

struct Splitting2D {
  Clump first;   // Delta'
  Clump second;  // Delta''
};

Splitting2D complete_2d_splitting(const Fan& fan);
std::vector<Splitting2D> all_2d_splittings(const Fan& fan);

/// Maximal cones of a complete 2D fan in counterclockwise order starting at the cone
/// whose first edge is the lexicographically smallest ray.
Clump cyclic_order_2d(const Fan& fan);

}  // namespace fank
