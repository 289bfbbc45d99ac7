#pragma once

#include "fank/laurent.hpp"
#include "fank/linalg.hpp"

#include <vector>

namespace fank {

class Cone;

/// The ideal of Z[a1^±1..an^±1] generated by 1 - alpha^nu for nu in a generator list.
/// Membership depends only on the lattice the generators span.
class LatticeIdeal {
 public:
  LatticeIdeal() = default;
  LatticeIdeal(std::size_t n, std::vector<IntVector> generators);

  static LatticeIdeal zero(std::size_t n) { return LatticeIdeal(n, {}); }

  std::size_t nvars() const { return n_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  const Lattice& lattice() const { return lattice_; }

  /// Canonical element of u + L: nonnegative residues on the torsion coordinates of
  /// the Smith form of the lattice basis, zero on the lattice coordinates.
  IntVector coset_representative(const IntVector& u) const;

  /// Generator-coordinates a with d = sum a_j * generators_j, for d in the lattice.
  IntVector generator_coordinates(const IntVector& d) const;

 private:
  std::size_t n_ = 0;
  std::vector<IntVector> generators_;
  Lattice lattice_;
  IntMatrix hermite_transform_;
  IntMatrix snf_U_;
  IntMatrix snf_U_inv_;
  std::vector<Integer> factors_;
};

LatticeIdeal cone_ideal(const Cone& cone);

LaurentPoly reduce(const LaurentPoly& f, const LatticeIdeal& J);
bool contains(const LaurentPoly& f, const LatticeIdeal& J);

/// a_1..a_r with f = sum a_j (1 - alpha^{nu_j}); throws NotAMember.
std::vector<LaurentPoly> cofactors(const LaurentPoly& f, const LatticeIdeal& J);

LatticeIdeal ideal_sum(const LatticeIdeal& a, const LatticeIdeal& b);
bool ideal_leq(const LatticeIdeal& a, const LatticeIdeal& b);

/// Polynomial-ring side: x^u - x^v lies in J_L iff u - v is in L.
bool binomial_in_poly_lattice_ideal(const IntVector& u, const IntVector& v, const Lattice& L);

}  // namespace fank
