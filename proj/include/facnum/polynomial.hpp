#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "facnum/bigint.hpp"

namespace facnum {

/// Integer polynomial in one indeterminate (printed as `p`).
///
/// Coefficient i multiplies p^i. The coefficient vector is kept trimmed, so
/// the leading coefficient is nonzero unless the polynomial is zero, in which
/// case the vector is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// c * p^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t i) const;
  const BigInt& leading() const;

  BigInt evaluate(const BigInt& p) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned e) const;

  /// Long division over the integers. The divisor's leading coefficient must
  /// divide every intermediate leading term; otherwise InvariantError.
  /// Returns {quotient, remainder}.
  std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const;

  /// Quotient of a division that must be exact; throws InvariantError if the
  /// remainder is nonzero.
  IntPolynomial exact_div(const IntPolynomial& divisor) const;

  /// Human form, highest degree first: "p^2 + 3p + 5".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace facnum
