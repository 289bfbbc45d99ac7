#include "fank/cone.hpp"

#include "fank/error.hpp"
#include "fank/lattice_ideal.hpp"
#include "fank/polyhedral.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fank {

namespace {

RatVector to_rational(const IntVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

struct FacetStructure {
  std::size_t dim = 0;
  std::vector<Facet> facets;
  std::vector<bool> extreme;
};

// Facets of cone(rays) for pointed input, via the double description of the dual cone
// written in coordinates of the linear span.
FacetStructure facet_structure(std::size_t n, const std::vector<IntVector>& rays) {
  FacetStructure fs;
  std::vector<IntVector> basis;
  for (const auto& r : rays) {
    basis.push_back(r);
    if (rank_of(n, basis) < basis.size()) basis.pop_back();
  }
  const std::size_t d = basis.size();
  fs.dim = d;
  // invertible d x d row subset of the n x d basis matrix
  std::vector<std::size_t> rows_I;
  std::vector<IntVector> picked;
  for (std::size_t i = 0; i < n && rows_I.size() < d; ++i) {
    IntVector row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = basis[j][i];
    picked.push_back(row);
    if (rank_of(d, picked) == picked.size())
      rows_I.push_back(i);
    else
      picked.pop_back();
  }
  IntMatrix BI = IntMatrix::from_rows(picked, d);
  Integer det = determinant(BI);
  IntMatrix adj(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      IntMatrix minor(d - 1, d - 1);
      for (std::size_t r = 0, rr = 0; r < d; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < d; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = BI(r, c);
        }
        ++rr;
      }
      Integer cof = d == 1 ? Integer(1) : determinant(minor);
      if ((i + j) % 2) cof = -cof;
      adj(i, j) = det > 0 ? cof : Integer(-cof);
    }
  std::vector<IntVector> coords;
  for (const auto& r : rays) {
    IntVector rI(d);
    for (std::size_t j = 0; j < d; ++j) rI[j] = r[rows_I[j]];
    coords.push_back(adj.apply(rI));
  }
  ExtremeRays dual = extreme_rays(d, coords);
  IntMatrix adjT = adj.transpose();
  for (std::size_t f = 0; f < dual.rays.size(); ++f) {
    IntVector y = adjT.apply(dual.rays[f]);
    IntVector normal = zero_vector(n);
    for (std::size_t j = 0; j < d; ++j) normal[rows_I[j]] = y[j];
    fs.facets.push_back({dual.tight[f], primitive(normal)});
  }
  fs.extreme.assign(rays.size(), false);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::vector<IntVector> ys;
    for (std::size_t f = 0; f < fs.facets.size(); ++f)
      if (std::binary_search(fs.facets[f].rays.begin(), fs.facets[f].rays.end(), i)) ys.push_back(dual.rays[f]);
    fs.extreme[i] = rank_of(d, ys) + 1 == d;
  }
  return fs;
}

}  // namespace

std::optional<RatVector> positive_functional(std::size_t n, const std::vector<IntVector>& rays) {
  LinearSystem sys;
  sys.nvars = n;
  for (const auto& r : rays) sys.add_ge(to_rational(r), 1);
  return feasible_point(sys);
}

Cone Cone::zero(std::size_t n) {
  Cone c;
  c.n_ = n;
  c.faces_ = {RaySet{}};
  c.perp_ = perp_lattice(n, {});
  return c;
}

Cone Cone::from_rays(std::size_t n, const std::vector<IntVector>& input) {
  std::set<IntVector> unique;
  for (const auto& r : input) {
    if (r.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "ray " + to_string(r) + " is not in Z^" + std::to_string(n));
    if (is_zero(r)) throw Error(ErrorCode::ZeroVector, "zero vector given as a ray");
    unique.insert(primitive(r));
  }
  if (unique.empty()) return zero(n);
  std::vector<IntVector> rays(unique.begin(), unique.end());
  if (!positive_functional(n, rays)) {
    // lambda >= 0, sum lambda_i r_i = 0, sum lambda_i = 1; any ray with lambda_i > 0 has its negative in the cone
    LinearSystem sys;
    sys.nvars = rays.size();
    for (std::size_t i = 0; i < rays.size(); ++i) {
      RatVector e(rays.size());
      e[i] = 1;
      sys.add_ge(e, 0);
    }
    for (std::size_t c = 0; c < n; ++c) {
      RatVector row(rays.size());
      for (std::size_t i = 0; i < rays.size(); ++i) row[i] = rays[i][c];
      sys.add_eq(row, 0);
    }
    sys.add_eq(RatVector(rays.size(), Rational(1)), 1);
    auto lambda = feasible_point(sys);
    std::string witness = "?";
    if (lambda)
      for (std::size_t i = 0; i < rays.size(); ++i)
        if ((*lambda)[i] > 0) {
          witness = to_string(rays[i]);
          break;
        }
    throw Error(ErrorCode::NotStronglyConvex, "cone is not strongly convex: v = " + witness + " and -v both lie in it");
  }

  FacetStructure fs = facet_structure(n, rays);
  if (std::find(fs.extreme.begin(), fs.extreme.end(), false) != fs.extreme.end()) {
    std::vector<IntVector> kept;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (fs.extreme[i]) kept.push_back(rays[i]);
    rays = std::move(kept);
    fs = facet_structure(n, rays);
  }

  Cone c;
  c.n_ = n;
  c.dim_ = fs.dim;
  c.rays_ = std::move(rays);
  c.facets_ = std::move(fs.facets);
  std::sort(c.facets_.begin(), c.facets_.end(), [](const Facet& a, const Facet& b) { return a.rays < b.rays; });
  c.perp_ = perp_lattice(n, c.rays_);

  RaySet all(c.rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<RaySet> seen{all};
  std::deque<RaySet> queue{all};
  while (!queue.empty()) {
    RaySet f = queue.front();
    queue.pop_front();
    for (const auto& facet : c.facets_) {
      RaySet g;
      std::set_intersection(f.begin(), f.end(), facet.rays.begin(), facet.rays.end(), std::back_inserter(g));
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  c.faces_.assign(seen.begin(), seen.end());
  std::stable_sort(c.faces_.begin(), c.faces_.end(),
                   [](const RaySet& a, const RaySet& b) { return a.size() < b.size(); });
  return c;
}

Cone Cone::face(const RaySet& subset) const {
  if (!is_face(subset)) throw Error(ErrorCode::NotAFace, "ray subset is not a face of the cone");
  std::vector<IntVector> r;
  for (auto i : subset) r.push_back(rays_.at(i));
  return from_rays(n_, r);
}

bool Cone::is_face(const RaySet& subset) const {
  return std::find(faces_.begin(), faces_.end(), subset) != faces_.end();
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out;
  for (const auto& f : faces_) out.push_back(face(f));
  return out;
}

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  for (const auto& f : facets_) out.push_back(face(f.rays));
  return out;
}

bool Cone::is_smooth() const {
  if (!is_simplicial()) return false;
  if (rays_.empty()) return true;
  SmithDecomposition s = smith_normal_form(IntMatrix::from_rows(rays_, n_));
  for (const auto& d : s.invariant_factors())
    if (d != 1) return false;
  return true;
}

bool Cone::contains(const IntVector& v) const {
  for (const auto& e : perp_.basis())
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, v) < 0) return false;
  return true;
}

std::size_t Cone::ray_index(const IntVector& v) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), v);
  if (it == rays_.end() || *it != v) return npos;
  return static_cast<std::size_t>(it - rays_.begin());
}

std::vector<IntVector> Cone::inequalities() const {
  std::vector<IntVector> out;
  for (const auto& f : facets_) out.push_back(f.normal);
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::DimensionMismatch, "cones in different ambient spaces");
  std::vector<IntVector> ineq = a.inequalities(), eq = a.equalities();
  for (const auto& x : b.inequalities()) ineq.push_back(x);
  for (const auto& x : b.equalities()) eq.push_back(x);
  std::vector<IntVector> rays = cone_rays_from_constraints(a.ambient(), ineq, eq);
  for (const Cone* c : {&a, &b}) {
    RaySet s;
    for (const auto& r : rays) {
      std::size_t i = c->ray_index(r);
      if (i == Cone::npos)
        throw Error(ErrorCode::NotAFace, "intersection has ray " + to_string(r) + " which is not a ray of the cone");
      s.push_back(i);
    }
    std::sort(s.begin(), s.end());
    if (!c->is_face(s)) throw Error(ErrorCode::NotAFace, "intersection is not a face of the cone");
  }
  RaySet s;
  for (const auto& r : rays) s.push_back(a.ray_index(r));
  std::sort(s.begin(), s.end());
  return a.face(s);
}

LatticeIdeal cone_ideal(const Cone& cone) { return LatticeIdeal(cone.ambient(), cone.perp().basis()); }

}  // namespace fank
