#include "sl2q/numtheory.hpp"

#include <algorithm>
#include <cstdlib>

namespace sl2q {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m;
  base %= m;
  if (base < 0) base += m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimePower factor_prime_power(std::int64_t q) {
  if (q < 4) {
    if (q < 2) throw NotPrimePower(q);
    throw QTooSmall(q);
  }
  std::int64_t n = q;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;  // q itself prime
  PrimePower pp;
  pp.q = q;
  pp.p = p;
  pp.m = 0;
  while (n % p == 0) {
    n /= p;
    ++pp.m;
  }
  if (n != 1) throw NotPrimePower(q);
  pp.even = (p == 2);
  pp.mod4 = static_cast<int>(q % 4);
  pp.square = (pp.m % 2 == 0);
  return pp;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      result -= result / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::int64_t tau(std::int64_t n) {
  std::int64_t count = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      count *= e + 1;
    }
  }
  if (n > 1) count *= 2;
  return count;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t squarefree_part(std::int64_t a) {
  std::int64_t sign = a < 0 ? -1 : 1;
  std::int64_t n = std::llabs(a);
  std::int64_t core = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e % 2) core *= d;
    }
  }
  core *= n;  // leftover prime, exponent 1
  return sign * core;
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  if (p == 2 || !is_prime(p)) throw PNotOddPrime(p);
  std::int64_t r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::string to_string(const Place& v) {
  return v.finite ? std::to_string(v.prime) : std::string("oo");
}

namespace {

// epsilon(u) = (u-1)/2 mod 2 and omega(u) = (u^2-1)/8 mod 2, u odd.
int eps2(std::int64_t u) {
  std::int64_t r = u % 4;
  if (r < 0) r += 4;
  return r == 3 ? 1 : 0;
}

int omega2(std::int64_t u) {
  std::int64_t r = u % 8;
  if (r < 0) r += 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(std::int64_t a, std::int64_t b, const Place& v) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("hilbert_symbol requires nonzero arguments");
  // Symbols depend only on square classes; reduce so the unit parts below
  // stay in the u,v form of the local formulas.
  a = squarefree_part(a);
  b = squarefree_part(b);
  if (!v.finite) return (a < 0 && b < 0) ? -1 : 1;
  std::int64_t p = v.prime;
  int alpha = 0, beta = 0;
  std::int64_t u = a, w = b;
  while (u % p == 0) {
    u /= p;
    ++alpha;
  }
  while (w % p == 0) {
    w /= p;
    ++beta;
  }
  if (p == 2) {
    int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
    return e % 2 ? -1 : 1;
  }
  int e = alpha * beta * eps2(p);
  int s = e % 2 ? -1 : 1;
  if (beta % 2) s *= legendre_symbol(u, p);
  if (alpha % 2) s *= legendre_symbol(w, p);
  return s;
}

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v) {
  // n/d and n*d are in the same square class.
  mpz_class an = a.get_num() * a.get_den();
  mpz_class bn = b.get_num() * b.get_den();
  if (an == 0 || bn == 0)
    throw std::invalid_argument("hilbert_symbol requires nonzero arguments");
  if (!an.fits_slong_p() || !bn.fits_slong_p())
    throw std::invalid_argument("hilbert_symbol argument out of range");
  return hilbert_symbol(static_cast<std::int64_t>(an.get_si()),
                        static_cast<std::int64_t>(bn.get_si()), v);
}

std::vector<Place> ramified_places(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("ramified_places requires nonzero arguments");
  a = squarefree_part(a);
  b = squarefree_part(b);
  std::vector<std::int64_t> candidates{2};
  auto collect = [&candidates](std::int64_t n) {
    n = std::llabs(n);
    for (std::int64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        candidates.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) candidates.push_back(n);
  };
  collect(a);
  collect(b);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<Place> out;
  for (std::int64_t p : candidates)
    if (hilbert_symbol(a, b, Place::at(p)) == -1) out.push_back(Place::at(p));
  if (hilbert_symbol(a, b, Place::infinite_place()) == -1)
    out.push_back(Place::infinite_place());
  return out;
}

std::int64_t find_ell(std::int64_t p, std::int64_t bound) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("find_ell requires a prime p = 1 (mod 4)");
  if (bound == 0) bound = 100 * p;
  for (std::int64_t ell = 3; ell < bound; ell += 4)
    if (is_prime(ell) && legendre_symbol(ell, p) == -1) return ell;
  throw SearchExhausted("no ell = 3 (mod 4) with (ell/p) = -1 below " +
                        std::to_string(bound) + " for p = " +
                        std::to_string(p));
}

}  // namespace sl2q
