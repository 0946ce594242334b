#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "knotflype/diagram.hpp"

namespace knotflype {

// Integer Laurent polynomial in A. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(std::int64_t coeff, int exponent);

  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  // Terms by increasing exponent, e.g. "1*A^-4 - 2*A^0 + 1*A^4"; "0" if zero.
  std::string to_string() const;

 private:
  void add(int exponent, std::int64_t coeff);
  std::map<int, std::int64_t> terms_;
};

// Unreduced Kauffman bracket by the full state sum:
// sum over states of A^(a-b) * d^(loops-1) with d = -A^2 - A^-2.
// Throws kTooLarge above max_crossings.
LaurentPolynomial kauffman_bracket(const Diagram& d, int max_crossings = 20);

// Sum of crossing signs along knot_path().
int writhe(const Diagram& d);

}  // namespace knotflype
