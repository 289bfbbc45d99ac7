#include "fank/piecewise.hpp"

#include "fank/error.hpp"

#include <algorithm>

namespace fank {

namespace {

LatticeIdeal cell_ideal(const Fan& fan, std::size_t cell) { return cone_ideal(fan.cell(cell).cone); }

void require_same_fan(const PiecewisePoly& F, const PiecewisePoly& G) {
  if (F.fan_ptr() != G.fan_ptr()) throw Error(ErrorCode::DimensionMismatch, "piecewise polynomials on different fans");
}

std::size_t locate(const Fan& fan, const Fan& sub, std::size_t sub_cell) {
  auto c = fan.find_cell_by_vectors(sub.cell(sub_cell).cone.rays());
  if (!c) throw Error(ErrorCode::NotSubfan, "cone " + sub.cell(sub_cell).name + " is not a cone of the fan");
  return *c;
}

}  // namespace

PiecewisePoly::PiecewisePoly(FanPtr fan, std::vector<LaurentPoly> values) : fan_(std::move(fan)), values_(std::move(values)) {
  if (!fan_) throw Error(ErrorCode::InvalidFan, "missing fan");
  if (values_.size() != fan_->maximal().size())
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(fan_->maximal().size()) +
                                                  " values, got " + std::to_string(values_.size()));
  for (const auto& v : values_)
    if (v.nvars() != fan_->ambient())
      throw Error(ErrorCode::DimensionMismatch, "value has " + std::to_string(v.nvars()) + " variables, fan is in R^" +
                                                    std::to_string(fan_->ambient()));
}

PiecewisePoly PiecewisePoly::constant(FanPtr fan, const Integer& c) {
  std::vector<LaurentPoly> v(fan->maximal().size(), LaurentPoly::constant(fan->ambient(), c));
  return PiecewisePoly(std::move(fan), std::move(v));
}

const LaurentPoly& PiecewisePoly::value_on_cell(std::size_t cell) const {
  auto owners = fan_->maximal_containing(cell);
  if (owners.empty()) throw Error(ErrorCode::InvariantViolation, "cell lies in no maximal cone");
  return values_[owners.front()];
}

std::optional<Incompatibility> find_incompatibility(const PiecewisePoly& F) {
  const Fan& fan = F.fan();
  for (std::size_t a = 0; a < fan.maximal().size(); ++a)
    for (std::size_t b = a + 1; b < fan.maximal().size(); ++b) {
      std::size_t m = fan.meet(fan.maximal()[a], fan.maximal()[b]);
      LaurentPoly r = reduce(F.value(a) - F.value(b), cell_ideal(fan, m));
      if (!r.is_zero()) return Incompatibility{a, b, m, r};
    }
  return std::nullopt;
}

PiecewisePoly plp_validate(FanPtr fan, std::vector<LaurentPoly> values) {
  PiecewisePoly F(std::move(fan), std::move(values));
  if (auto bad = find_incompatibility(F)) {
    const Fan& f = F.fan();
    throw Error(ErrorCode::IncompatiblePair,
                "values on " + f.maximal_cell(bad->first).name + " and " + f.maximal_cell(bad->second).name +
                    " disagree on " + f.cell(bad->meet).name + ": difference reduces to " + format_laurent(bad->witness));
  }
  return F;
}

PiecewisePoly plp_add(const PiecewisePoly& F, const PiecewisePoly& G) {
  require_same_fan(F, G);
  std::vector<LaurentPoly> v;
  for (std::size_t k = 0; k < F.values().size(); ++k) v.push_back(F.value(k) + G.value(k));
  return PiecewisePoly(F.fan_ptr(), std::move(v));
}

PiecewisePoly plp_mul(const PiecewisePoly& F, const PiecewisePoly& G) {
  require_same_fan(F, G);
  std::vector<LaurentPoly> v;
  for (std::size_t k = 0; k < F.values().size(); ++k) v.push_back(F.value(k) * G.value(k));
  return PiecewisePoly(F.fan_ptr(), std::move(v));
}

bool equivalent(const PiecewisePoly& F, const PiecewisePoly& G) {
  require_same_fan(F, G);
  for (std::size_t k = 0; k < F.values().size(); ++k)
    if (!contains(F.value(k) - G.value(k), cell_ideal(F.fan(), F.fan().maximal()[k]))) return false;
  return true;
}

PiecewisePoly sharp_restrict(const PiecewisePoly& F, FanPtr subfan) {
  if (subfan->ambient() != F.fan().ambient()) throw Error(ErrorCode::NotSubfan, "subfan lives in another dimension");
  std::vector<LaurentPoly> v;
  for (auto m : subfan->maximal()) v.push_back(F.value_on_cell(locate(F.fan(), *subfan, m)));
  return PiecewisePoly(std::move(subfan), std::move(v));
}

std::vector<std::size_t> killed_variables(const Lattice& lattice) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lattice.ambient(); ++i) {
    IntVector e = zero_vector(lattice.ambient());
    e[i] = 1;
    if (lattice_contains(lattice, e)) out.push_back(i);
  }
  return out;
}

LaurentPoly simplify_mod(const LaurentPoly& f, const LatticeIdeal& J) {
  return substitute_one(f, killed_variables(J.lattice()));
}

// ---------------------------------------------------------------- clumps

LatticeIdeal clump_ideal(const Fan& fan, const Clump& clump) {
  std::vector<IntVector> gens;
  for (auto r : clump.rays) {
    auto cell = fan.find_cell({r});
    LatticeIdeal J = cell_ideal(fan, *cell);
    for (const auto& g : J.generators()) gens.push_back(g);
  }
  return LatticeIdeal(fan.ambient(), gens);
}

bool clump_boundary_image_test(const LaurentPoly& f, const LaurentPoly& g, const Fan& fan, const Clump& clump) {
  return contains(f - g, clump_ideal(fan, clump));
}

FanPtr clump_fan(const Fan& fan, const Clump& clump) {
  std::vector<std::size_t> cells;
  for (auto k : clump.cones) cells.push_back(fan.maximal()[k]);
  return std::make_shared<const Fan>(fan.subfan(cells));
}

namespace {

PiecewisePoly on_clump(const Fan& fan, const Clump& clump, const std::vector<LaurentPoly>& chain_values) {
  FanPtr sub = clump_fan(fan, clump);
  std::vector<LaurentPoly> v(sub->maximal().size(), LaurentPoly(fan.ambient()));
  for (std::size_t i = 0; i < clump.cones.size(); ++i) {
    auto cell = sub->find_cell_by_vectors(fan.maximal_cell(clump.cones[i]).cone.rays());
    auto pos = std::find(sub->maximal().begin(), sub->maximal().end(), *cell) - sub->maximal().begin();
    v[pos] = chain_values[i];
  }
  return PiecewisePoly(sub, std::move(v));
}

LatticeIdeal ray_ideal(const Fan& fan, std::size_t ray) { return cell_ideal(fan, *fan.find_cell({ray})); }

void expect_member(const LaurentPoly& f, const LatticeIdeal& J, const char* what) {
  if (!contains(f, J)) throw Error(ErrorCode::InvariantViolation, std::string("construction check failed: ") + what);
}

}  // namespace

PiecewisePoly clump_boundary_preimage(const LaurentPoly& f, const LaurentPoly& g, const Fan& fan, const Clump& clump) {
  LatticeIdeal J = clump_ideal(fan, clump);
  LaurentPoly diff = f - g;
  LaurentPoly residue = reduce(diff, J);
  if (!residue.is_zero())
    throw Error(ErrorCode::NotInImage, "f - g is not in the sum of the ray ideals; normal form " + format_laurent(residue));
  if (clump.rays.size() < 2) return on_clump(fan, clump, {f});

  std::vector<LaurentPoly> a = cofactors(diff, J);
  // group cofactor terms by ray: E_i = sum over generators of rho_i
  std::vector<LaurentPoly> E;
  std::size_t g_index = 0;
  for (auto r : clump.rays) {
    LaurentPoly e(fan.ambient());
    LatticeIdeal Jr = ray_ideal(fan, r);
    for (const auto& gen : Jr.generators()) e += a[g_index++] * euler_class(gen);
    E.push_back(std::move(e));
  }
  const std::size_t k = clump.cones.size();
  std::vector<LaurentPoly> F;
  F.push_back(f - E[0]);
  for (std::size_t i = 1; i < k; ++i) F.push_back(F.back() - E[i]);

  expect_member(F.front() - f, ray_ideal(fan, clump.rays.front()), "F_1 - f");
  for (std::size_t i = 0; i + 1 < k; ++i) expect_member(F[i] - F[i + 1], ray_ideal(fan, clump.rays[i + 1]), "F_i - F_{i+1}");
  expect_member(g - F.back(), ray_ideal(fan, clump.rays.back()), "g - F_k");
  return on_clump(fan, clump, F);
}

SplitPreimage complete_2d_preimage(const LaurentPoly& f, const LaurentPoly& g, const Fan& fan, const Splitting2D& sp) {
  const Clump &D1 = sp.first, &D2 = sp.second;
  if (D1.rays.size() < 2 || D2.rays.size() < 2 || D1.rays.front() != D2.rays.back() || D1.rays.back() != D2.rays.front())
    throw Error(ErrorCode::ImproperSplitting, "the two clumps must meet exactly in their end rays");
  LatticeIdeal J1 = clump_ideal(fan, D1), J2 = clump_ideal(fan, D2);
  LatticeIdeal J = ideal_sum(J1, J2);
  LaurentPoly diff = f - g;
  LaurentPoly residue = reduce(diff, J);
  if (!residue.is_zero())
    throw Error(ErrorCode::NotInImage, "f - g is not in J_Delta' + J_Delta''; normal form " + format_laurent(residue));
  auto c = cofactors(diff, J);
  LaurentPoly A(fan.ambient()), B(fan.ambient());
  for (std::size_t j = 0; j < c.size(); ++j) {
    LaurentPoly t = c[j] * euler_class(J.generators()[j]);
    if (j < J1.generators().size())
      A += t;
    else
      B -= t;
  }
  LaurentPoly f1 = A - B, g1 = -B;
  LaurentPoly f2 = g, g2 = g + B;
  PiecewisePoly P1 = clump_boundary_preimage(f1, g1, fan, D1);
  // Delta'' runs from rho_{k+1} back to rho_1
  PiecewisePoly P2 = clump_boundary_preimage(g2, f2, fan, D2);
  std::vector<LaurentPoly> neg;
  for (const auto& v : P2.values()) neg.push_back(-v);
  return {P1, PiecewisePoly(P2.fan_ptr(), std::move(neg))};
}

// ---------------------------------------------------------------- a cone and its boundary

namespace {

struct BoundaryData {
  std::vector<IntVector> sigma_perp;
  std::vector<Cone> facets;
  std::vector<IntVector> nu;       // complement of sigma-perp in each facet's perp
  std::vector<LatticeIdeal> ideals;  // J_{tau_i}
};

IntVector complement(const std::vector<IntVector>& S, const Lattice& T) {
  const std::size_t t = T.rank();
  if (S.empty()) return T.basis().at(0);
  IntMatrix CT(t, S.size());
  for (std::size_t j = 0; j < S.size(); ++j) {
    auto coords = lattice_contains(T, S[j]);
    if (!coords) throw Error(ErrorCode::InvariantViolation, "cone perp is not inside the facet perp");
    for (std::size_t l = 0; l < t; ++l) CT(l, j) = (*coords)[l];
  }
  SmithDecomposition s = smith_normal_form(CT);
  IntVector nu = zero_vector(T.ambient());
  for (std::size_t l = 0; l < t; ++l) nu = nu + s.U_inv(l, t - 1) * T.basis()[l];
  return nu;
}

BoundaryData boundary_data(const Cone& cone) {
  BoundaryData bd;
  bd.sigma_perp = cone.perp().basis();
  for (const auto& f : cone.facet_data()) {
    Cone tau = cone.face(f.rays);
    IntVector nu = complement(bd.sigma_perp, tau.perp());
    std::vector<IntVector> gens = bd.sigma_perp;
    gens.push_back(nu);
    bd.ideals.emplace_back(cone.ambient(), gens);
    bd.nu.push_back(std::move(nu));
    bd.facets.push_back(std::move(tau));
  }
  return bd;
}

}  // namespace

std::optional<ImageFailure> cone_boundary_image_failure(const std::vector<LaurentPoly>& tuple, const Cone& cone) {
  if (tuple.size() != cone.facet_data().size())
    throw Error(ErrorCode::DimensionMismatch, "expected one value per facet (" + std::to_string(cone.facet_data().size()) + ")");
  std::vector<LatticeIdeal> J;
  for (const auto& f : cone.facet_data()) J.push_back(cone_ideal(cone.face(f.rays)));
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      LaurentPoly r = reduce(tuple[i] - tuple[j], ideal_sum(J[i], J[j]));
      if (!r.is_zero()) return ImageFailure{i, j, r};
    }
  return std::nullopt;
}

bool cone_boundary_image_test(const std::vector<LaurentPoly>& tuple, const Cone& cone) {
  return !cone_boundary_image_failure(tuple, cone).has_value();
}

LaurentPoly cone_boundary_preimage(const std::vector<LaurentPoly>& tuple, const Cone& cone) {
  if (cone.facet_data().empty()) throw Error(ErrorCode::EmptySubfan, "the zero cone has no boundary");
  if (auto bad = cone_boundary_image_failure(tuple, cone))
    throw Error(ErrorCode::NotInImage, "values on facets " + std::to_string(bad->first + 1) + " and " +
                                           std::to_string(bad->second + 1) + " differ by " + format_laurent(bad->witness) +
                                           " modulo the sum of their ideals");
  const std::size_t n = cone.ambient(), k = tuple.size();
  BoundaryData bd = boundary_data(cone);
  std::vector<LaurentPoly> D;
  for (std::size_t i = 0; i < k; ++i) D.push_back(simplify_mod(tuple[i], bd.ideals[i]));

  LaurentPoly F = D[0];
  LaurentPoly prod = LaurentPoly::constant(n, 1);
  for (std::size_t j = 0; j + 1 < k; ++j) {
    for (std::size_t i = j + 1; i < k; ++i) {
      std::vector<IntVector> gens = bd.sigma_perp;
      gens.push_back(bd.nu[j]);
      for (const auto& t : bd.facets[i].perp().basis()) gens.push_back(t);
      LatticeIdeal J(n, gens);
      LaurentPoly diff = D[i] - D[j];
      LaurentPoly residue = reduce(diff, J);
      if (!residue.is_zero())
        throw Error(ErrorCode::NotInImage, "stage " + std::to_string(j + 1) + ": facet " + std::to_string(i + 1) +
                                               " residue " + format_laurent(residue) + " is not divisible");
      D[i] = simplify_mod(cofactors(diff, J)[bd.sigma_perp.size()], bd.ideals[i]);
    }
    prod *= euler_class(bd.nu[j]);
    F += prod * D[j + 1];
  }
  LatticeIdeal Jsigma = cone_ideal(cone);
  F = simplify_mod(F, Jsigma);
  for (std::size_t i = 0; i < k; ++i)
    if (!contains(F - tuple[i], bd.ideals[i]))
      throw Error(ErrorCode::NotInImage, "recursion produced no preimage for facet " + std::to_string(i + 1));
  return F;
}

// ---------------------------------------------------------------- extension over smooth cones and fans

namespace {

// Fan cells of the facets of a cell, in the cell cone's facet order.
std::vector<std::size_t> facet_cells(const Fan& fan, std::size_t cell) {
  const Cone& c = fan.cell(cell).cone;
  std::vector<std::size_t> out;
  for (const auto& f : c.facet_data()) {
    std::vector<IntVector> v;
    for (auto i : f.rays) v.push_back(c.rays()[i]);
    out.push_back(*fan.find_cell_by_vectors(v));
  }
  return out;
}

std::vector<std::string> name_key(const Fan& fan, std::size_t cell) {
  std::vector<std::string> key;
  for (auto r : fan.cell(cell).rays) key.push_back(fan.rays()[r].name);
  std::sort(key.begin(), key.end());
  return key;
}

// Fills values on every face of `target`, given values on a nonempty face-closed set of its faces.
void extend_cells(const Fan& fan, std::size_t target, std::map<std::size_t, LaurentPoly>& values) {
  std::vector<std::size_t> todo;
  for (auto f : fan.faces_of(target))
    if (!values.count(f)) todo.push_back(f);
  std::sort(todo.begin(), todo.end(), [&](std::size_t a, std::size_t b) {
    std::size_t da = fan.cell(a).cone.dim(), db = fan.cell(b).cone.dim();
    if (da != db) return da < db;
    return name_key(fan, a) < name_key(fan, b);
  });
  for (auto c : todo) {
    std::vector<LaurentPoly> tuple;
    for (auto f : facet_cells(fan, c)) {
      auto it = values.find(f);
      if (it == values.end()) throw Error(ErrorCode::EmptySubfan, "nothing to extend from");
      tuple.push_back(it->second);
    }
    values[c] = cone_boundary_preimage(tuple, fan.cell(c).cone);
  }
}

std::map<std::size_t, LaurentPoly> transfer(const PiecewisePoly& F, const Fan& target) {
  std::map<std::size_t, LaurentPoly> values;
  const Fan& gamma = F.fan();
  if (gamma.maximal().empty()) throw Error(ErrorCode::EmptySubfan, "the subfan is empty");
  for (std::size_t c = 0; c < gamma.cells().size(); ++c) values[locate(target, gamma, c)] = F.value_on_cell(c);
  return values;
}

}  // namespace

PiecewisePoly extend_over_smooth_cone(const PiecewisePoly& F, const Cone& sigma) {
  if (!sigma.is_smooth()) throw Error(ErrorCode::NotSmooth, "the cone is not smooth");
  auto whole = std::make_shared<const Fan>(Fan::of_cone(sigma));
  auto values = transfer(F, *whole);
  std::size_t top = whole->maximal().front();
  extend_cells(*whole, top, values);
  return PiecewisePoly(whole, {values.at(top)});
}

PiecewisePoly extend_over_smooth_fan(const PiecewisePoly& F, FanPtr sigma) {
  if (!is_smooth_fan(*sigma)) throw Error(ErrorCode::NotSmooth, "the fan is not smooth");
  auto values = transfer(F, *sigma);
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < sigma->maximal().size(); ++k)
    if (values.count(sigma->maximal()[k])) order.push_back(k);
  for (std::size_t k = 0; k < sigma->maximal().size(); ++k)
    if (!values.count(sigma->maximal()[k])) order.push_back(k);
  for (auto k : order) extend_cells(*sigma, sigma->maximal()[k], values);
  std::vector<LaurentPoly> out;
  for (auto m : sigma->maximal()) out.push_back(values.at(m));
  return PiecewisePoly(sigma, std::move(out));
}

}  // namespace fank
