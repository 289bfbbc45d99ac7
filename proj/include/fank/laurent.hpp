#pragma once

#include "fank/integer.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace fank {

/// Graded order on exponents: total degree ascending, then lexicographically descending.
struct MonomialOrder {
  bool operator()(const IntVector& a, const IntVector& b) const;
};

/// Integral Laurent polynomial in variables a1..an, stored as a sparse
/// exponent -> coefficient map without zero coefficients.
class LaurentPoly {
 public:
  using TermMap = std::map<IntVector, Integer, MonomialOrder>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t n) : n_(n) {}

  static LaurentPoly constant(std::size_t n, const Integer& c);
  static LaurentPoly monomial(const IntVector& exponent, const Integer& coefficient = 1);
  /// The variable a_{i+1} (0-based index).
  static LaurentPoly variable(std::size_t n, std::size_t i);

  std::size_t nvars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Integer coefficient(const IntVector& exponent) const;

  /// Adds c * alpha^exponent in place.
  void add_term(const IntVector& exponent, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Integer& k, const LaurentPoly& a);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const LaurentPoly& other) const;

  std::size_t n_ = 0;
  TermMap terms_;
};

/// 1 - alpha^nu.
LaurentPoly euler_class(const IntVector& nu);

/// alpha^nu.
LaurentPoly character(const IntVector& nu);

/// Sets each listed variable (0-based) to 1.
LaurentPoly substitute_one(const LaurentPoly& f, std::span<const std::size_t> vars);

LaurentPoly parse_laurent(std::string_view text, std::size_t n);
std::string format_laurent(const LaurentPoly& f);

}  // namespace fank
