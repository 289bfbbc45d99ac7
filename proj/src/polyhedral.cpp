#include "fank/polyhedral.hpp"

#include "fank/error.hpp"
#include "fank/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace fank {

void LinearSystem::add_ge(RatVector row, Rational rhs) {
  ge_rows.push_back(std::move(row));
  ge_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_eq(RatVector row, Rational rhs) {
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

std::optional<RatVector> feasible_point(const LinearSystem& sys) {
  const std::size_t n = sys.nvars;
  const std::size_t mg = sys.ge_rows.size(), me = sys.eq_rows.size(), m = mg + me;
  // columns: x+ (n), x- (n), slacks (mg), artificials (m), rhs
  const std::size_t art0 = 2 * n + mg, width = art0 + m + 1, rhs = width - 1;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(width));
  for (std::size_t i = 0; i < m; ++i) {
    const RatVector& a = i < mg ? sys.ge_rows[i] : sys.eq_rows[i - mg];
    const Rational& b = i < mg ? sys.ge_rhs[i] : sys.eq_rhs[i - mg];
    if (a.size() != n) throw Error(ErrorCode::DimensionMismatch, "constraint row has wrong length");
    auto& row = T[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = a[j];
      row[n + j] = -a[j];
    }
    if (i < mg) row[2 * n + i] = -1;
    row[rhs] = b;
    if (b < 0)
      for (auto& x : row) x = -x;
    row[art0 + i] = 1;
  }
  auto& w = T[m];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < art0 || j == rhs) w[j] -= T[i][j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = art0 + i;

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (w[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // cannot happen in phase one: objective bounded below by 0
    Rational piv = T[leave][enter];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width; ++j)
      if (T[leave][j] != 0) {
        T[leave][j] /= piv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (std::size_t j : nz) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  if (w[rhs] != 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n)
      x[basis[i]] += T[i][rhs];
    else if (basis[i] < 2 * n)
      x[basis[i] - n] -= T[i][rhs];
  }
  return x;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct DDRay {
  IntVector z;
  Bits tight;
};

IntVector make_primitive(IntVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

}  // namespace

ExtremeRays extreme_rays(std::size_t k, const std::vector<IntVector>& rows) {
  const std::size_t m = rows.size();
  ExtremeRays out;
  if (k == 0) return out;
  // initial simplicial cone from k independent rows
  std::vector<std::size_t> chosen;
  std::vector<IntVector> chosen_rows;
  for (std::size_t i = 0; i < m && chosen.size() < k; ++i) {
    chosen_rows.push_back(rows[i]);
    if (rank_of(k, chosen_rows) == chosen_rows.size())
      chosen.push_back(i);
    else
      chosen_rows.pop_back();
  }
  if (chosen.size() < k) throw Error(ErrorCode::InvariantViolation, "constraint rows do not have full rank");

  // columns of adj(B) * sign(det B) satisfy B z = |det B| e_j
  IntMatrix B = IntMatrix::from_rows(chosen_rows, k);
  Integer det = determinant(B);
  std::vector<DDRay> rays;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector z(k);
    for (std::size_t i = 0; i < k; ++i) {
      // cofactor C_{j,i}: delete row j, column i
      IntMatrix minor(k - 1, k - 1);
      for (std::size_t r = 0, rr = 0; r < k; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < k; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = B(r, c);
        }
        ++rr;
      }
      Integer cof = determinant(minor);
      if ((i + j) % 2) cof = -cof;
      z[i] = det > 0 ? cof : Integer(-cof);
    }
    Bits t(m);
    for (std::size_t c = 0; c < k; ++c)
      if (c != j) t.set(chosen[c]);
    rays.push_back({make_primitive(std::move(z)), std::move(t)});
  }

  Bits done(m);
  for (auto c : chosen) done.set(c);
  for (std::size_t r = 0; r < m; ++r) {
    if (done.test(r)) continue;
    done.set(r);
    const IntVector& a = rows[r];
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(a, rays[i].z);
      if (s[i] > 0) pos.push_back(i);
      if (s[i] < 0) neg.push_back(i);
      if (s[i] >= 0) {
        next.push_back(rays[i]);
        if (s[i] == 0) next.back().tight.set(r);
      }
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common = rays[p].tight & rays[q].tight;
        if (common.count() + 2 < k) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
          if (o != p && o != q && common.is_subset_of(rays[o].tight)) adjacent = false;
        if (!adjacent) continue;
        IntVector z = s[p] * rays[q].z - s[q] * rays[p].z;
        common.set(r);
        next.push_back({make_primitive(std::move(z)), std::move(common)});
      }
    rays = std::move(next);
  }
  std::sort(rays.begin(), rays.end(), [](const DDRay& x, const DDRay& y) { return x.z < y.z; });
  for (auto& ray : rays) {
    std::vector<std::size_t> t;
    for (std::size_t i = ray.tight.find_first(); i != Bits::npos; i = ray.tight.find_next(i)) t.push_back(i);
    out.rays.push_back(std::move(ray.z));
    out.tight.push_back(std::move(t));
  }
  return out;
}

std::vector<IntVector> cone_rays_from_constraints(std::size_t n, const std::vector<IntVector>& inequalities,
                                                  const std::vector<IntVector>& equalities) {
  Lattice kernel = perp_lattice(n, equalities);
  const std::size_t k = kernel.rank();
  if (k == 0) return {};
  const auto& K = kernel.basis();
  std::vector<IntVector> rows;
  for (const auto& a : inequalities) {
    IntVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, K[j]);
    rows.push_back(std::move(row));
  }
  if (rank_of(k, rows) < k) throw Error(ErrorCode::NotStronglyConvex, "constraint cone contains a line");
  ExtremeRays er = extreme_rays(k, rows);
  std::vector<IntVector> out;
  for (const auto& t : er.rays) {
    IntVector x = zero_vector(n);
    for (std::size_t j = 0; j < k; ++j) x = x + t[j] * K[j];
    out.push_back(make_primitive(std::move(x)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fank
