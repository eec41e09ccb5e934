#pragma once

// Closed-form factorization numbers and the counting functions they are
// built from, evaluated exactly over big integers and, where a formula is a
// polynomial in p, symbolically as IntPolynomial.

#include <cstdint>
#include <string>
#include <vector>

#include "facnum/bigint.hpp"
#include "facnum/polynomial.hpp"

namespace facnum {

using Prime = std::uint64_t;

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Throws ValidationError unless p is prime.
void require_prime(std::uint64_t p);

/// C(i, 2), with the convention C(0,2) = C(1,2) = 0.
std::uint64_t choose2(std::uint64_t i);

/// Isomorphism type of a finite abelian p-group: the prime and a
/// nondecreasing list of cyclic-factor exponents.
class PartitionType {
 public:
  /// Validates p and the exponents; the exponents are sorted ascending.
  PartitionType(Prime p, std::vector<unsigned> alphas);

  Prime prime() const { return p_; }
  const std::vector<unsigned>& alphas() const { return alphas_; }
  unsigned rank() const { return static_cast<unsigned>(alphas_.size()); }
  /// Sum of exponents, so the group order is p^exponent_sum().
  unsigned exponent_sum() const;
  BigInt order() const;
  bool is_elementary() const;
  bool is_cyclic() const { return alphas_.size() <= 1; }

  friend bool operator==(const PartitionType&, const PartitionType&) = default;

 private:
  Prime p_;
  std::vector<unsigned> alphas_;
};

/// Number of subgroups of order p^i in the elementary abelian group of order p^n.
BigInt gaussian_binomial(unsigned n, unsigned i, Prime p);
IntPolynomial gaussian_binomial_poly(unsigned n, unsigned i);

/// Total number of subgroups of the elementary abelian group of order p^n.
BigInt total_subgroups_elementary(unsigned n, Prime p);
IntPolynomial total_subgroups_elementary_poly(unsigned n);

/// Möbius value mu(1, G) for a p-group of order p^n: zero unless G is
/// elementary abelian, else (-1)^n p^C(n,2).
BigInt hall_mobius(unsigned n, Prime p, bool elementary);

BigInt f2_elementary(unsigned n, Prime p);
IntPolynomial f2_elementary_poly(unsigned n);

/// Number of subgroups of Z_{p^a1} x Z_{p^a2}, 0 <= a1 <= a2.
BigInt subgroup_count_rank2(Prime p, unsigned a1, unsigned a2);

/// Closed form for F2(Z_{p^a1} x Z_{p^a2}), 1 <= a1 <= a2.
BigInt f2_rank2(Prime p, unsigned a1, unsigned a2);

/// Same number via the four-term lattice-count expression that precedes
/// the closed form.
BigInt f2_rank2_via_eq4(Prime p, unsigned a1, unsigned a2);

/// F2(Z_p x Z_{p^n}) = (2n-1)p^2 + (2n+1)p + (2n+3).
BigInt f2_corollary4(Prime p, unsigned n);
IntPolynomial f2_corollary4_poly(unsigned n);

/// F2 of the cyclic group of order p^n: 2n + 1.
BigInt f2_cyclic(unsigned n);

/// F2 of the modular group M(p^3), p odd.
BigInt f2_M_p3(Prime p);
IntPolynomial f2_M_p3_poly();

/// F2 of the extraspecial group E(p^3) of exponent p, p odd. Evaluated by
/// both the expanded cubic and the pair-classification sum; InvariantError
/// if they differ.
BigInt f2_E_p3(Prime p);
IntPolynomial f2_E_p3_poly();
/// 2 + p(p+1)(p+2) + 2 + (p+1)(p^2+p+2) + 1, unexpanded.
IntPolynomial f2_E_p3_census_poly();

/// |L(E(p^3))| = p^2 + 2p + 4, p odd.
BigInt lattice_size_E_p3(Prime p);

}  // namespace facnum
