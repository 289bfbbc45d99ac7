#pragma once

#include "fank/integer.hpp"

#include <optional>
#include <vector>

namespace fank {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  IntVector apply(const IntVector& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
/// Rank of a list of vectors of common length `n`.
std::size_t rank_of(std::size_t n, const std::vector<IntVector>& vectors);

/// D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix U_inv;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;  // the nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Sublattice of Z^n in canonical form: the rows of the reduced row-style Hermite
/// normal form of any generating set.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(std::size_t ambient) : ambient_(ambient) {}
  Lattice(std::size_t ambient, std::vector<IntVector> hermite_rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

struct HermiteResult {
  Lattice lattice;
  // W * G = H where G has the input vectors as rows; the first rank rows of H are the basis.
  IntMatrix W;
};

Lattice hermite_basis(std::size_t n, const std::vector<IntVector>& vectors);
HermiteResult hermite_with_transform(std::size_t n, const std::vector<IntVector>& vectors);

/// Primitive vector on the ray through `v`; throws ZeroVector.
IntVector primitive(const IntVector& v);

/// Coordinates of `v` in the Hermite basis of `lattice`, or nullopt when v is not in it.
std::optional<IntVector> lattice_contains(const Lattice& lattice, const IntVector& v);
bool lattice_leq(const Lattice& a, const Lattice& b);

struct SpanInfo {
  bool spans = false;
  std::size_t rank = 0;
  std::optional<Integer> index;  // [Z^n : span], present only at full rank
};

SpanInfo spans_ambient(std::size_t n, const std::vector<IntVector>& vectors);

/// { x in Z^n : <x, g> = 0 for all g }.
Lattice perp_lattice(std::size_t n, const std::vector<IntVector>& generators);

Lattice lattice_sum(const Lattice& a, const Lattice& b);

}  // namespace fank
