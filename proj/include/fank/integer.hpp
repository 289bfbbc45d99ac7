#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace fank {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

IntVector zero_vector(std::size_t n);
IntVector make_vector(std::initializer_list<long> values);

bool is_zero(const IntVector& v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
Integer dot(const IntVector& a, const IntVector& b);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& k, const IntVector& a);

/// Clears denominators and divides by the content. Zero stays zero; sign is kept.
IntVector primitive_integer(const RatVector& v);

std::string to_string(const Integer& x);
std::string to_string(const IntVector& v);  // "(1,-2,0)"

/// Number fits in a signed 64-bit word.
bool fits_int64(const Integer& x);

}  // namespace fank
