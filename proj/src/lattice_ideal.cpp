#include "fank/lattice_ideal.hpp"

#include "fank/error.hpp"

#include <map>

namespace fank {

LatticeIdeal::LatticeIdeal(std::size_t n, std::vector<IntVector> generators)
    : n_(n), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.size() != n_)
      throw Error(ErrorCode::DimensionMismatch, "ideal generator " + to_string(g) + " is not in Z^" +
                                                    std::to_string(n_));
  HermiteResult h = hermite_with_transform(n_, generators_);
  lattice_ = std::move(h.lattice);
  hermite_transform_ = std::move(h.W);
  if (lattice_.rank() == 0) {
    snf_U_ = snf_U_inv_ = IntMatrix::identity(n_);
    return;
  }
  SmithDecomposition s = smith_normal_form(IntMatrix::from_columns(lattice_.basis(), n_));
  snf_U_ = std::move(s.U);
  snf_U_inv_ = std::move(s.U_inv);
  factors_ = s.invariant_factors();
}

IntVector LatticeIdeal::coset_representative(const IntVector& u) const {
  if (u.size() != n_) throw Error(ErrorCode::DimensionMismatch, "exponent " + to_string(u) + " has wrong length");
  if (factors_.empty()) return u;
  IntVector y = snf_U_.apply(u);
  for (std::size_t i = 0; i < factors_.size(); ++i)
    mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), factors_[i].get_mpz_t());
  return snf_U_inv_.apply(y);
}

IntVector LatticeIdeal::generator_coordinates(const IntVector& d) const {
  auto h = lattice_contains(lattice_, d);
  if (!h) throw Error(ErrorCode::NotAMember, to_string(d) + " is not in the ideal's lattice");
  const std::size_t k = generators_.size();
  IntVector a = zero_vector(k);
  for (std::size_t i = 0; i < h->size(); ++i) {
    if ((*h)[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) a[j] += (*h)[i] * hermite_transform_(i, j);
  }
  // Rows of the transform past the rank are relations among the generators; use them
  // to shorten a, which keeps telescoping walks short.
  std::vector<IntVector> relations;
  for (std::size_t i = lattice_.rank(); i < k; ++i) relations.push_back(hermite_transform_.row(i));
  for (bool changed = !relations.empty(); changed;) {
    changed = false;
    for (const auto& r : relations) {
      Integer rr = dot(r, r);
      if (rr == 0) continue;
      Rational q = Rational(dot(a, r), rr) + Rational(1, 2);
      Integer t;
      mpz_fdiv_q(t.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      if (t != 0 && dot(a, a) > dot(a - t * r, a - t * r)) {
        a = a - t * r;
        changed = true;
      }
    }
  }
  return a;
}

LaurentPoly reduce(const LaurentPoly& f, const LatticeIdeal& J) {
  if (f.nvars() != J.nvars()) throw Error(ErrorCode::DimensionMismatch, "polynomial and ideal in different rings");
  LaurentPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(J.coset_representative(e), c);
  return r;
}

bool contains(const LaurentPoly& f, const LatticeIdeal& J) { return reduce(f, J).is_zero(); }

std::vector<LaurentPoly> cofactors(const LaurentPoly& f, const LatticeIdeal& J) {
  LaurentPoly residue = reduce(f, J);
  if (!residue.is_zero())
    throw Error(ErrorCode::NotAMember, "not in the ideal; normal form " + format_laurent(residue));
  const auto& gens = J.generators();
  std::vector<LaurentPoly> a(gens.size(), LaurentPoly(f.nvars()));
  // Each term walks to the leading exponent of its coset; the coefficients there cancel.
  std::map<IntVector, IntVector> target;
  for (const auto& [u, c] : f.terms()) target.try_emplace(J.coset_representative(u), u);
  for (const auto& [u, c] : f.terms()) {
    const IntVector& goal = target.at(J.coset_representative(u));
    IntVector steps = J.generator_coordinates(u - goal);
    IntVector w = u;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      // c*alpha^w = c*alpha^{w-nu} - c*alpha^{w-nu}(1 - alpha^nu)
      for (Integer k = steps[j]; k > 0; --k) {
        w = w - gens[j];
        a[j].add_term(w, -c);
      }
      // c*alpha^w = c*alpha^{w+nu} + c*alpha^w(1 - alpha^nu)
      for (Integer k = steps[j]; k < 0; ++k) {
        a[j].add_term(w, c);
        w = w + gens[j];
      }
    }
    if (w != goal) throw Error(ErrorCode::InvariantViolation, "cofactor walk missed its target");
  }
  LaurentPoly check(f.nvars());
  for (std::size_t j = 0; j < gens.size(); ++j) check += a[j] * euler_class(gens[j]);
  if (check != f) throw Error(ErrorCode::InvariantViolation, "cofactor expansion does not reproduce the input");
  return a;
}

LatticeIdeal ideal_sum(const LatticeIdeal& a, const LatticeIdeal& b) {
  if (a.nvars() != b.nvars()) throw Error(ErrorCode::DimensionMismatch, "ideals in different rings");
  std::vector<IntVector> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return LatticeIdeal(a.nvars(), std::move(g));
}

bool ideal_leq(const LatticeIdeal& a, const LatticeIdeal& b) { return lattice_leq(a.lattice(), b.lattice()); }

bool binomial_in_poly_lattice_ideal(const IntVector& u, const IntVector& v, const Lattice& L) {
  for (const auto* w : {&u, &v})
    for (const auto& x : *w)
      if (x < 0) throw Error(ErrorCode::Unsupported, "polynomial-ring exponents must be nonnegative");
  return lattice_contains(L, u - v).has_value();
}

}  // namespace fank
