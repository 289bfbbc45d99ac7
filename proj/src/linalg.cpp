#include "fank/linalg.hpp"

#include "fank/error.hpp"

#include <utility>

namespace fank {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row length " + std::to_string(rows[i].size()) +
                                                    ", expected " + std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  IntVector y(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += k * (*this)(source, j);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += k * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  // fraction-free elimination
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer f = a(i, c), g = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
      Integer ct = content(a.row(i));
      if (ct > 1)
        for (std::size_t j = c; j < a.cols(); ++j)
          mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), ct.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::size_t rank_of(std::size_t n, const std::vector<IntVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, n));
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(D(i, i));
  return f;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n), IntMatrix::identity(m), 0};
  IntMatrix& D = s.D;
  // Row operation E on D is mirrored as U <- E U and U_inv <- U_inv E^{-1}.
  auto row_swap = [&](std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    s.U.swap_rows(i, j);
    s.U_inv.swap_columns(i, j);
  };
  auto row_add = [&](std::size_t target, std::size_t source, const Integer& k) {
    D.add_row_multiple(target, source, k);
    s.U.add_row_multiple(target, source, k);
    s.U_inv.add_column_multiple(source, target, -k);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    D.swap_columns(i, j);
    s.V.swap_columns(i, j);
  };
  auto col_add = [&](std::size_t target, std::size_t source, const Integer& k) {
    D.add_column_multiple(target, source, k);
    s.V.add_column_multiple(target, source, k);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found = false;
    while (true) {
      std::size_t pi = 0, pj = 0;
      found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          if (!found || abs(D(i, j)) < abs(D(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      row_swap(t, pi);
      col_swap(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (!found) break;
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
      s.U_inv.negate_column(t);
    }
  }
  s.rank = t;
  return s;
}

Lattice::Lattice(std::size_t ambient, std::vector<IntVector> hermite_rows)
    : ambient_(ambient), basis_(std::move(hermite_rows)) {
  for (const auto& r : basis_) {
    std::size_t p = 0;
    while (p < r.size() && r[p] == 0) ++p;
    pivots_.push_back(p);
  }
}

HermiteResult hermite_with_transform(std::size_t n, const std::vector<IntVector>& vectors) {
  const std::size_t k = vectors.size();
  IntMatrix H = k ? IntMatrix::from_rows(vectors, n) : IntMatrix(0, n);
  IntMatrix W = IntMatrix::identity(k);
  auto swap = [&](std::size_t a, std::size_t b) {
    H.swap_rows(a, b);
    W.swap_rows(a, b);
  };
  auto add = [&](std::size_t target, std::size_t source, const Integer& q) {
    H.add_row_multiple(target, source, q);
    W.add_row_multiple(target, source, q);
  };

  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < k; ++c) {
    while (true) {
      std::size_t best = k;
      for (std::size_t i = row; i < k; ++i)
        if (H(i, c) != 0 && (best == k || abs(H(i, c)) < abs(H(best, c)))) best = i;
      if (best == k) break;
      swap(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < k; ++i) {
        if (H(i, c) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(row, c).get_mpz_t());
        add(i, row, -q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (row >= k || H(row, c) == 0) continue;
    if (H(row, c) < 0) {
      H.negate_row(row);
      W.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(row, c).get_mpz_t());
      add(i, row, -q);
    }
    ++row;
  }
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < row; ++i) rows.push_back(H.row(i));
  return {Lattice(n, std::move(rows)), std::move(W)};
}

Lattice hermite_basis(std::size_t n, const std::vector<IntVector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "vector " + to_string(v) + " is not in Z^" + std::to_string(n));
  return hermite_with_transform(n, vectors).lattice;
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "zero vector has no primitive generator");
  IntVector r = v;
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::optional<IntVector> lattice_contains(const Lattice& lattice, const IntVector& v) {
  if (v.size() != lattice.ambient())
    throw Error(ErrorCode::DimensionMismatch, "vector " + to_string(v) + " is not in Z^" +
                                                  std::to_string(lattice.ambient()));
  IntVector residual = v;
  IntVector coords(lattice.rank(), Integer(0));
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const std::size_t p = lattice.pivots()[i];
    const IntVector& b = lattice.basis()[i];
    for (std::size_t j = 0; j < p; ++j)
      if (residual[j] != 0) return std::nullopt;
    if (!mpz_divisible_p(residual[p].get_mpz_t(), b[p].get_mpz_t())) return std::nullopt;
    mpz_divexact(coords[i].get_mpz_t(), residual[p].get_mpz_t(), b[p].get_mpz_t());
    for (std::size_t j = p; j < residual.size(); ++j) residual[j] -= coords[i] * b[j];
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool lattice_leq(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::DimensionMismatch, "lattices in different ambient spaces");
  for (const auto& v : a.basis())
    if (!lattice_contains(b, v)) return false;
  return true;
}

SpanInfo spans_ambient(std::size_t n, const std::vector<IntVector>& vectors) {
  Lattice l = hermite_basis(n, vectors);
  SpanInfo info;
  info.rank = l.rank();
  if (l.rank() == n) {
    Integer index = 1;
    for (std::size_t i = 0; i < n; ++i) index *= l.basis()[i][l.pivots()[i]];
    info.index = index;
    info.spans = index == 1;
  }
  return info;
}

Lattice perp_lattice(std::size_t n, const std::vector<IntVector>& generators) {
  if (generators.empty()) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e = zero_vector(n);
      e[i] = 1;
      rows.push_back(e);
    }
    return Lattice(n, rows);
  }
  SmithDecomposition s = smith_normal_form(IntMatrix::from_rows(generators, n));
  std::vector<IntVector> kernel;
  for (std::size_t j = s.rank; j < n; ++j) kernel.push_back(s.V.column(j));
  return hermite_basis(n, kernel);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::DimensionMismatch, "lattices in different ambient spaces");
  std::vector<IntVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return hermite_basis(a.ambient(), all);
}

}  // namespace fank
