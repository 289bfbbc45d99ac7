#pragma once

#include "fank/fan.hpp"
#include "fank/lattice_ideal.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fank {

/// An element of PLP(fan): one Laurent polynomial per maximal cone, in Fan::maximal() order.
/// Values are representatives; equality is modulo the cone ideals.
class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  PiecewisePoly(FanPtr fan, std::vector<LaurentPoly> values);

  static PiecewisePoly constant(FanPtr fan, const Integer& c);

  const Fan& fan() const { return *fan_; }
  const FanPtr& fan_ptr() const { return fan_; }
  const std::vector<LaurentPoly>& values() const { return values_; }
  const LaurentPoly& value(std::size_t k) const { return values_.at(k); }
  /// Value on any cell: that of the first maximal cone containing it.
  const LaurentPoly& value_on_cell(std::size_t cell) const;

 private:
  FanPtr fan_;
  std::vector<LaurentPoly> values_;
};

struct Incompatibility {
  std::size_t first;   // maximal-cone indices
  std::size_t second;
  std::size_t meet;    // cell id
  LaurentPoly witness;  // nonzero normal form of F_first - F_second
};

std::optional<Incompatibility> find_incompatibility(const PiecewisePoly& F);
/// Throws IncompatiblePair naming the first failing pair and the witness.
PiecewisePoly plp_validate(FanPtr fan, std::vector<LaurentPoly> values);

PiecewisePoly plp_add(const PiecewisePoly& F, const PiecewisePoly& G);
PiecewisePoly plp_mul(const PiecewisePoly& F, const PiecewisePoly& G);
/// F_i - G_i in J_{sigma_i} for every maximal cone.
bool equivalent(const PiecewisePoly& F, const PiecewisePoly& G);

/// Restriction to a subfan given by its own Fan object; cones are matched by ray vectors.
PiecewisePoly sharp_restrict(const PiecewisePoly& F, FanPtr subfan);

/// Indices i with e_i in the lattice; those variables may be set to 1 modulo the ideal.
std::vector<std::size_t> killed_variables(const Lattice& lattice);
LaurentPoly simplify_mod(const LaurentPoly& f, const LatticeIdeal& J);

// ---- clumps in R^2 ----

/// Sum of the ray ideals J_{rho_1} + ... + J_{rho_{k+1}} of a clump.
LatticeIdeal clump_ideal(const Fan& fan, const Clump& clump);
bool clump_boundary_image_test(const LaurentPoly& f, const LaurentPoly& g, const Fan& fan, const Clump& clump);
/// Values on the clump's cones (chain order) restricting to f on rho_1 and g on rho_{k+1}.
PiecewisePoly clump_boundary_preimage(const LaurentPoly& f, const LaurentPoly& g, const Fan& fan, const Clump& clump);

/// The subfan of a clump's cones, with values in Fan::maximal() order of that subfan.
FanPtr clump_fan(const Fan& fan, const Clump& clump);

struct SplitPreimage {
  PiecewisePoly first;   // on Delta'
  PiecewisePoly second;  // on Delta''
};

/// (F, G) with F - G restricting to f on rho_1 and g on rho_{k+1}, where rho_1 and rho_{k+1}
/// are the first and last rays of Delta'.
SplitPreimage complete_2d_preimage(const LaurentPoly& f, const LaurentPoly& g, const Fan& fan,
                                   const Splitting2D& splitting);

// ---- a cone and its boundary ----

struct ImageFailure {
  std::size_t first;  // facet indices (Cone::facet_data order)
  std::size_t second;
  LaurentPoly witness;
};

std::optional<ImageFailure> cone_boundary_image_failure(const std::vector<LaurentPoly>& tuple, const Cone& cone);
bool cone_boundary_image_test(const std::vector<LaurentPoly>& tuple, const Cone& cone);
/// F with F - F_i in J_{tau_i} for each facet tau_i (Cone::facet_data order); throws NotInImage.
LaurentPoly cone_boundary_preimage(const std::vector<LaurentPoly>& tuple, const Cone& cone);

/// Extends F, given on a nonempty subfan of the faces of a smooth cone, to the whole cone.
/// The result lives on Fan::of_cone(sigma).
PiecewisePoly extend_over_smooth_cone(const PiecewisePoly& F, const Cone& sigma);
/// Extends F, given on a nonempty subfan of a smooth fan, to the whole fan.
PiecewisePoly extend_over_smooth_fan(const PiecewisePoly& F, FanPtr sigma);

}  // namespace fank
