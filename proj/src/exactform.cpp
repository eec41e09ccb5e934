#include "facnum/exactform.hpp"

#include <algorithm>
#include <string>

#include "facnum/errors.hpp"

namespace facnum {

namespace {

BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt result = 1;
  for (std::uint64_t k = 0; k < e; ++k) result *= base;
  return result;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw InvariantError(std::string("inexact division in ") + what + ": " + num.str() + " / " +
                         den.str());
  }
  return num / den;
}

// (p^m - 1)(p^{m-1} - 1)...(p - 1)
BigInt falling_product(unsigned m, Prime p) {
  BigInt acc = 1;
  for (unsigned k = 1; k <= m; ++k) acc *= ipow(BigInt(p), k) - 1;
  return acc;
}

IntPolynomial falling_product_poly(unsigned m) {
  IntPolynomial acc{1};
  for (unsigned k = 1; k <= m; ++k) acc *= IntPolynomial::monomial(1, k) - IntPolynomial{1};
  return acc;
}

void require_odd_prime(Prime p, const char* group) {
  require_prime(p);
  if (p == 2) {
    throw DomainError(std::string("p must be an odd prime for ") + group +
                      " (for p = 2 the presentation collapses to D8, whose F2 is 41)");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("p must be prime, got " + std::to_string(p));
}

std::uint64_t choose2(std::uint64_t i) { return i < 2 ? 0 : i * (i - 1) / 2; }

PartitionType::PartitionType(Prime p, std::vector<unsigned> alphas)
    : p_(p), alphas_(std::move(alphas)) {
  require_prime(p_);
  for (unsigned a : alphas_) {
    if (a == 0) throw ValidationError("partition exponents must be positive");
  }
  std::sort(alphas_.begin(), alphas_.end());
}

unsigned PartitionType::exponent_sum() const {
  unsigned s = 0;
  for (unsigned a : alphas_) s += a;
  return s;
}

BigInt PartitionType::order() const { return ipow(BigInt(p_), exponent_sum()); }

bool PartitionType::is_elementary() const {
  return std::all_of(alphas_.begin(), alphas_.end(), [](unsigned a) { return a == 1; });
}

BigInt gaussian_binomial(unsigned n, unsigned i, Prime p) {
  require_prime(p);
  if (i > n) {
    throw DomainError("gaussian_binomial requires i <= n (got n=" + std::to_string(n) +
                      ", i=" + std::to_string(i) + ")");
  }
  return exact_quotient(falling_product(n, p), falling_product(i, p) * falling_product(n - i, p),
                        "gaussian_binomial");
}

IntPolynomial gaussian_binomial_poly(unsigned n, unsigned i) {
  if (i > n) throw DomainError("gaussian_binomial_poly requires i <= n");
  return falling_product_poly(n).exact_div(falling_product_poly(i) * falling_product_poly(n - i));
}

BigInt total_subgroups_elementary(unsigned n, Prime p) {
  BigInt total = 0;
  for (unsigned i = 0; i <= n; ++i) total += gaussian_binomial(n, i, p);
  return total;
}

IntPolynomial total_subgroups_elementary_poly(unsigned n) {
  IntPolynomial total;
  for (unsigned i = 0; i <= n; ++i) total += gaussian_binomial_poly(n, i);
  return total;
}

BigInt hall_mobius(unsigned n, Prime p, bool elementary) {
  require_prime(p);
  if (!elementary) return 0;
  BigInt v = ipow(BigInt(p), choose2(n));
  return (n % 2 == 0) ? v : BigInt(-v);
}

BigInt f2_elementary(unsigned n, Prime p) {
  require_prime(p);
  BigInt sum = 0;
  for (unsigned i = 0; i <= n; ++i) {
    const BigInt rest = total_subgroups_elementary(n - i, p);
    BigInt term = gaussian_binomial(n, i, p) * rest * rest * ipow(BigInt(p), choose2(i));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum <= 0) throw InvariantError("f2_elementary produced a non-positive value");
  return sum;
}

IntPolynomial f2_elementary_poly(unsigned n) {
  IntPolynomial sum;
  for (unsigned i = 0; i <= n; ++i) {
    const IntPolynomial rest = total_subgroups_elementary_poly(n - i);
    IntPolynomial term = gaussian_binomial_poly(n, i) * rest * rest *
                         IntPolynomial::monomial(1, static_cast<std::size_t>(choose2(i)));
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt subgroup_count_rank2(Prime p, unsigned a1, unsigned a2) {
  require_prime(p);
  if (a1 > a2) throw DomainError("subgroup_count_rank2 requires a1 <= a2");
  const BigInt P = p;
  const BigInt d = BigInt(a2) - a1;
  const BigInt s = BigInt(a1) + a2;
  const BigInt bracket = (d + 1) * ipow(P, a1 + 2) - (d - 1) * ipow(P, a1 + 1) - (s + 3) * P +
                         (s + 1);
  return exact_quotient(bracket, (P - 1) * (P - 1), "subgroup_count_rank2");
}

BigInt f2_rank2(Prime p, unsigned a1, unsigned a2) {
  require_prime(p);
  if (a1 < 1) throw DomainError("f2_rank2 requires a1 >= 1; use f2_cyclic for cyclic groups");
  if (a1 > a2) throw DomainError("f2_rank2 requires a1 <= a2");
  const BigInt P = p;
  const BigInt d = BigInt(a2) - a1;
  const BigInt s = BigInt(a1) + a2;
  const unsigned e = 2 * a1;
  const BigInt bracket = (2 * d + 1) * ipow(P, e + 4) - (6 * d + 1) * ipow(P, e + 3) +
                         (6 * d - 1) * ipow(P, e + 2) - (2 * d - 1) * ipow(P, e + 1) -
                         (2 * s + 3) * ipow(P, 3) + (6 * s + 7) * ipow(P, 2) - (6 * s + 5) * P +
                         (2 * s + 1);
  const BigInt pm1 = P - 1;
  BigInt value = exact_quotient(bracket, pm1 * pm1 * pm1 * pm1, "f2_rank2");
  if (value <= 0) throw InvariantError("f2_rank2 produced a non-positive value");
  return value;
}

BigInt f2_rank2_via_eq4(Prime p, unsigned a1, unsigned a2) {
  require_prime(p);
  if (a1 < 1) throw DomainError("f2_rank2_via_eq4 requires a1 >= 1");
  if (a1 > a2) throw DomainError("f2_rank2_via_eq4 requires a1 <= a2");
  auto count = [p](unsigned x, unsigned y) {
    const BigInt c = subgroup_count_rank2(p, std::min(x, y), std::max(x, y));
    return BigInt(c * c);
  };
  const BigInt P = p;
  return P * count(a1 - 1, a2 - 1) - P * count(a1 - 1, a2) - count(a1, a2 - 1) + count(a1, a2);
}

BigInt f2_corollary4(Prime p, unsigned n) {
  require_prime(p);
  if (n < 1) throw DomainError("f2_corollary4 requires n >= 1");
  return f2_corollary4_poly(n).evaluate(p);
}

IntPolynomial f2_corollary4_poly(unsigned n) {
  if (n < 1) throw DomainError("f2_corollary4 requires n >= 1");
  const long long m = n;
  return IntPolynomial{2 * m + 3, 2 * m + 1, 2 * m - 1};
}

BigInt f2_cyclic(unsigned n) { return BigInt(2) * n + 1; }

BigInt f2_M_p3(Prime p) {
  require_odd_prime(p, "M(p^3)");
  return f2_M_p3_poly().evaluate(p);
}

IntPolynomial f2_M_p3_poly() { return IntPolynomial{7, 5, 3}; }

IntPolynomial f2_E_p3_poly() { return IntPolynomial{7, 5, 5, 2}; }

IntPolynomial f2_E_p3_census_poly() {
  const IntPolynomial P{0, 1};
  const IntPolynomial one{1};
  const IntPolynomial two{2};
  return two + P * (P + one) * (P + two) + two + (P + one) * (P * P + P + two) + one;
}

BigInt f2_E_p3(Prime p) {
  require_odd_prime(p, "E(p^3)");
  const BigInt expanded = f2_E_p3_poly().evaluate(p);
  const BigInt census = f2_E_p3_census_poly().evaluate(p);
  if (expanded != census) {
    throw InvariantError("E(p^3) closed form disagrees with its pair classification");
  }
  return expanded;
}

BigInt lattice_size_E_p3(Prime p) {
  require_odd_prime(p, "E(p^3)");
  const BigInt P = p;
  return P * P + 2 * P + 4;
}

}  // namespace facnum
