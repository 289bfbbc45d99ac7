#pragma once

#include "fank/linalg.hpp"

#include <vector>

namespace fank {

/// Indices into a cone's (or fan's) ray list, sorted ascending.
using RaySet = std::vector<std::size_t>;

struct Facet {
  RaySet rays;
  IntVector normal;  // primitive, >= 0 on the cone, = 0 exactly on the facet within the cone's span
};

/// Strongly convex rational polyhedral cone given by its primitive extreme rays.
class Cone {
 public:
  Cone() = default;

  /// Normalizes rays to primitive, merges duplicates, drops redundant generators.
  /// Throws ZeroVector, DimensionMismatch, NotStronglyConvex.
  static Cone from_rays(std::size_t n, const std::vector<IntVector>& rays);
  static Cone zero(std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<Facet>& facet_data() const { return facets_; }
  /// All faces as subsets of rays(), including the empty (zero) face and the full set.
  const std::vector<RaySet>& face_sets() const { return faces_; }
  /// Basis of the saturated lattice of functionals vanishing on the cone.
  const Lattice& perp() const { return perp_; }

  Cone face(const RaySet& subset) const;
  bool is_face(const RaySet& subset) const;
  std::vector<Cone> faces() const;
  std::vector<Cone> facets() const;

  bool is_simplicial() const { return rays_.size() == dim_; }
  bool is_smooth() const;
  bool contains(const IntVector& v) const;

  /// Index of a primitive vector among rays(), or npos.
  std::size_t ray_index(const IntVector& v) const;

  /// Inequalities a·x >= 0 and equalities e·x = 0 cutting out the cone.
  std::vector<IntVector> inequalities() const;
  std::vector<IntVector> equalities() const { return perp_.basis(); }

  friend bool operator==(const Cone& a, const Cone& b) { return a.n_ == b.n_ && a.rays_ == b.rays_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Facet> facets_;
  std::vector<RaySet> faces_;
  Lattice perp_;
};

/// The common face of two cones; throws NotAFace when the intersection is not a face of both.
Cone intersect(const Cone& a, const Cone& b);

/// Strong convexity check: a vector y with y·r >= 1 for every ray, or nullopt.
std::optional<RatVector> positive_functional(std::size_t n, const std::vector<IntVector>& rays);

}  // namespace fank
