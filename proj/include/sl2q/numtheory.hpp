#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sl2q {

// A validated prime power q = p^m together with the classification data
// that drives case selection everywhere else (parity, q mod 4, squareness).
struct PrimePower {
  std::int64_t q = 0;
  std::int64_t p = 0;
  int m = 0;
  bool even = false;    // p == 2
  int mod4 = 0;         // q mod 4
  bool square = false;  // m even
};

struct NotPrimePower : std::domain_error {
  explicit NotPrimePower(std::int64_t q)
      : std::domain_error(std::to_string(q) + " is not a prime power") {}
};

struct QTooSmall : std::domain_error {
  explicit QTooSmall(std::int64_t q)
      : std::domain_error("q = " + std::to_string(q) +
                          " is below the supported range (q >= 4)") {}
};

struct PNotOddPrime : std::domain_error {
  explicit PNotOddPrime(std::int64_t p)
      : std::domain_error(std::to_string(p) + " is not an odd prime") {}
};

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deterministic trial division; intended for desk-scale inputs.
bool is_prime(std::int64_t n);

// q >= 4 required; throws NotPrimePower / QTooSmall.
PrimePower factor_prime_power(std::int64_t q);

std::int64_t euler_phi(std::int64_t n);
std::int64_t tau(std::int64_t n);

// All positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

// Sign-preserving squarefree part: a and squarefree_part(a) differ by a square.
std::int64_t squarefree_part(std::int64_t a);

// (a/p) in {-1, 0, +1} for an odd prime p.
int legendre_symbol(std::int64_t a, std::int64_t p);

// A place of Q: a finite prime or the archimedean place.
struct Place {
  bool finite = true;
  std::int64_t prime = 0;  // meaningful only when finite

  static Place infinite_place() { return Place{false, 0}; }
  static Place at(std::int64_t p) { return Place{true, p}; }

  friend bool operator==(const Place&, const Place&) = default;
  friend std::strong_ordering operator<=>(const Place& x, const Place& y) {
    if (x.finite != y.finite) return x.finite ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    return x.prime <=> y.prime;
  }
};

std::string to_string(const Place& v);

// Local Hilbert symbol (a,b)_v in {-1,+1}; a, b nonzero.
int hilbert_symbol(std::int64_t a, std::int64_t b, const Place& v);
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);

// All places where (a,b) ramifies, in Place order (finite ascending, then oo).
// Always has even cardinality by the product formula.
std::vector<Place> ramified_places(std::int64_t a, std::int64_t b);

// Smallest prime l = 3 (mod 4) with (l/p) = -1, for p = 1 (mod 4) prime.
// bound = 0 means the default 100*p; exhaustion indicates a bug upstream.
std::int64_t find_ell(std::int64_t p, std::int64_t bound = 0);

}  // namespace sl2q
