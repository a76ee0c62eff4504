#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sl2q/numtheory.hpp"

namespace sl2q {

using Rational = mpq_class;

struct IncompatibleModulus : std::domain_error {
  using std::domain_error::domain_error;
};

// An exact element of Q(zeta_N), stored as rational coordinates in the power
// basis zeta^0..zeta^{phi(N)-1} after reduction modulo the N-th cyclotomic
// polynomial. The representation is canonical per modulus: two elements are
// equal iff their coordinate vectors agree at a common modulus, and embedding
// into a compatible larger modulus (N | N') preserves equality.
class Cyclotomic {
 public:
  Cyclotomic() : modulus_(1), coeffs_(1, Rational(0)) {}

  static Cyclotomic from_rational(const Rational& r);
  static Cyclotomic from_int(std::int64_t n) { return from_rational(Rational(n)); }
  // zeta_N^k (k arbitrary, reduced mod N).
  static Cyclotomic root(std::int64_t n, std::int64_t k);
  // Canonical reduction of sum c_e * zeta_N^e given coefficients by exponent.
  static Cyclotomic from_exponents(std::int64_t n, std::vector<Rational> coeff_by_exp);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  // Image in Q(zeta_M) for N | M.
  Cyclotomic embedded(std::int64_t m) const;

  // zeta_N -> zeta_N^k for gcd(k, N) = 1; a ring automorphism.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conj() const { return galois(-1); }

  // Multiplicative inverse of a nonzero element, via extended gcd with Phi_N.
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y);
  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Rational& r) const;
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y);
  friend bool operator!=(const Cyclotomic& x, const Cyclotomic& y) { return !(x == y); }

  std::string str() const;  // debugging form, e.g. "1/2+z8-z8^3"

 private:
  Cyclotomic(std::int64_t modulus, std::vector<Rational> coeffs)
      : modulus_(modulus), coeffs_(std::move(coeffs)) {}

  std::int64_t modulus_;
  std::vector<Rational> coeffs_;
};

struct GaloisElement {
  std::int64_t modulus = 1;
  std::int64_t exponent = 1;  // gcd(exponent, modulus) = 1
};

// Applies sigma.modulus-level automorphism; throws IncompatibleModulus unless
// sigma.modulus == x.modulus().
Cyclotomic galois_apply(const GaloisElement& sigma, const Cyclotomic& x);

// Coefficients of Phi_N, degree phi(N), index = exponent. Cached.
const std::vector<mpz_class>& cyclotomic_polynomial(std::int64_t n);

// g = sum_{t=1}^{p-1} (t/p) zeta_p^t; g^2 = (-1)^{(p-1)/2} p.
Cyclotomic gauss_sum(std::int64_t p);

// Exact square root of delta*q with delta = (-1)^{(q-1)/2}, q odd:
// the rational p^{m/2} for even m, else p^{(m-1)/2} * gauss_sum(p).
Cyclotomic sqrt_delta_q(const PrimePower& q);

// {k in (Z/N)^x : sigma_k fixes every value}; values must be at modulus N.
// A subgroup containing 1; the field the values generate has degree
// phi(N) / (subgroup size).
std::vector<std::int64_t> fixing_exponents(std::span<const Cyclotomic> values,
                                           std::int64_t n);

// Smallest modulus hosting every character-table value for this q:
// lcm(q-1, q+1) for even q, lcm(q-1, q+1, p) for odd q.
std::int64_t working_modulus(const PrimePower& q);

}  // namespace sl2q
