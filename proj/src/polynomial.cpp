#include "facnum/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "facnum/errors.hpp"

namespace facnum {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

const BigInt& IntPolynomial::leading() const {
  static const BigInt zero = 0;
  return coeffs_.empty() ? zero : coeffs_.back();
}

BigInt IntPolynomial::evaluate(const BigInt& p) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result{1};
  IntPolynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw InvariantError("polynomial division by zero");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dn = divisor.coeffs_.size();
  if (rem.size() < dn) return {IntPolynomial{}, *this};

  std::vector<BigInt> quot(rem.size() - dn + 1);
  const BigInt& lead = divisor.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dn - 1];
    if (top == 0) continue;
    if (top % lead != 0) {
      throw InvariantError("polynomial long division leaves a non-integral quotient term");
    }
    BigInt q = top / lead;
    for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    quot[k] = std::move(q);
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) {
    throw InvariantError("inexact polynomial division: remainder " + r.to_string());
  }
  return q;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "p";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

}  // namespace facnum
