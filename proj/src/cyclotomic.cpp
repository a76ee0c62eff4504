#include "sl2q/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sl2q {

namespace {

// Exact division of integer polynomials: num /= den, den monic-led.
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<mpz_class> quot(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    mpz_class c = rem[k + dd] / den[dd];
    quot[k] = c;
    if (c != 0)
      for (int i = 0; i <= dd; ++i) rem[k + i] -= c * den[i];
  }
  return quot;
}

std::vector<mpz_class> phi_squarefree(std::int64_t n);

const std::vector<mpz_class>& phi_squarefree_cached(std::int64_t n) {
  static std::map<std::int64_t, std::vector<mpz_class>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Compute outside the lock: the recursion below re-enters this cache.
  std::vector<mpz_class> value = phi_squarefree(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(value)).first->second;
}

// Phi_n for squarefree n, by dividing x^n - 1 by Phi_d over proper divisors.
std::vector<mpz_class> phi_squarefree(std::int64_t n) {
  if (n == 1) return {-1, 1};
  std::vector<mpz_class> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::int64_t d : divisors(n))
    if (d != n) poly = poly_div_exact(poly, phi_squarefree_cached(d));
  return poly;
}

std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r *= d;
      while (n % d == 0) n /= d;
    }
  }
  return r * (n > 1 ? n : 1);
}

// Nonzero tail coefficients of Phi_N (everything below the monic lead),
// as (exponent, coefficient) pairs.
struct PhiTail {
  std::int64_t degree;
  std::vector<std::pair<std::int64_t, mpz_class>> terms;
};

const PhiTail& phi_tail(std::int64_t n) {
  static std::map<std::int64_t, PhiTail> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    const auto& phi = cyclotomic_polynomial(n);
    PhiTail t;
    t.degree = static_cast<std::int64_t>(phi.size()) - 1;
    for (std::int64_t e = 0; e < t.degree; ++e)
      if (phi[e] != 0) t.terms.emplace_back(e, phi[e]);
    it = cache.emplace(n, std::move(t)).first;
  }
  return it->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(std::int64_t n) {
  static std::map<std::int64_t, std::vector<mpz_class>> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::int64_t rad = radical(n);
  std::vector<mpz_class> base = phi_squarefree_cached(rad);
  std::vector<mpz_class> out;
  std::int64_t stride = n / rad;
  if (stride == 1) {
    out = base;
  } else {
    // Phi_n(x) = Phi_rad(n)(x^{n/rad(n)})
    out.assign((base.size() - 1) * stride + 1, 0);
    for (std::size_t i = 0; i < base.size(); ++i) out[i * stride] = base[i];
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(out)).first->second;
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();  // mpq_class(a, b) does not reduce on its own
  std::vector<Rational> v(1, std::move(c));
  return Cyclotomic(1, std::move(v));
}

Cyclotomic Cyclotomic::from_exponents(std::int64_t n,
                                      std::vector<Rational> coeff_by_exp) {
  // Fold onto exponents [0, n) via zeta^n = 1, then divide by Phi_n.
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t e = 0; e < coeff_by_exp.size(); ++e) {
    coeff_by_exp[e].canonicalize();
    if (coeff_by_exp[e] != 0) v[e % n] += coeff_by_exp[e];
  }
  const PhiTail& phi = phi_tail(n);
  for (std::int64_t e = n - 1; e >= phi.degree; --e) {
    if (v[e] == 0) continue;
    Rational c = v[e];
    v[e] = 0;
    for (const auto& [i, coef] : phi.terms) v[e - phi.degree + i] -= c * coef;
  }
  v.resize(phi.degree);
  return Cyclotomic(n, std::move(v));
}

Cyclotomic Cyclotomic::root(std::int64_t n, std::int64_t k) {
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = 1;
  return from_exponents(n, std::move(v));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational())
    throw std::domain_error("rational_value on an irrational element");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embedded(std::int64_t m) const {
  if (m == modulus_) return *this;
  if (m % modulus_ != 0)
    throw IncompatibleModulus("cannot embed modulus " +
                              std::to_string(modulus_) + " into " +
                              std::to_string(m));
  std::int64_t stride = m / modulus_;
  std::vector<Rational> v(coeffs_.size() * stride, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    v[i * stride] = coeffs_[i];
  return from_exponents(m, std::move(v));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  std::int64_t n = modulus_;
  k %= n;
  if (k < 0) k += n;
  if (std::gcd(k, n) != 1)
    throw std::invalid_argument("galois exponent not coprime to modulus");
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) v[(i * k) % n] += coeffs_[i];
  return from_exponents(n, std::move(v));
}

namespace {

std::int64_t common_modulus(const Cyclotomic& x, const Cyclotomic& y) {
  return std::lcm(x.modulus(), y.modulus());
}

}  // namespace

Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  std::int64_t m = common_modulus(x, y);
  Cyclotomic a = x.embedded(m), b = y.embedded(m);
  std::vector<Rational> v = a.coeffs();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs()[i];
  return Cyclotomic::from_exponents(m, std::move(v));
}

Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) {
  return x + (-y);
}

Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.is_zero() || y.is_zero()) return Cyclotomic();
  if (x.is_rational()) return y * x.rational_value();
  if (y.is_rational()) return x * y.rational_value();
  std::int64_t m = common_modulus(x, y);
  Cyclotomic a = x.embedded(m), b = y.embedded(m);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Rational> v(ac.size() + bc.size() - 1, Rational(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      if (bc[j] != 0) v[i + j] += ac[i] * bc[j];
  }
  return Cyclotomic::from_exponents(m, std::move(v));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return Cyclotomic(modulus_, std::move(v));
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  Rational s = r;
  s.canonicalize();
  if (s == 0) return Cyclotomic();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= s;
  return Cyclotomic(modulus_, std::move(v));
}

bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
  if (x.modulus() == y.modulus()) return x.coeffs() == y.coeffs();
  std::int64_t m = common_modulus(x, y);
  return x.embedded(m).coeffs() == y.embedded(m).coeffs();
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return from_rational(1 / rational_value());
  // Extended gcd of this element's polynomial with Phi_N over Q[x]; the gcd
  // is a nonzero constant since Phi_N is irreducible.
  using Poly = std::vector<Rational>;
  auto deg = [](const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  Poly r0;
  for (const auto& c : cyclotomic_polynomial(modulus_)) r0.push_back(Rational(c));
  Poly r1 = coeffs_;
  Poly s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of the element
  while (deg(r1) > 0) {
    int d0 = deg(r0), d1 = deg(r1);
    Poly q(d0 - d1 + 1, Rational(0));
    Poly rem = r0;
    for (int k = d0 - d1; k >= 0; --k) {
      Rational c = rem[k + d1] / r1[d1];
      q[k] = c;
      if (c != 0)
        for (int i = 0; i <= d1; ++i) rem[k + i] -= c * r1[i];
    }
    Poly s_new = s0;
    s_new.resize(std::max(s_new.size(), q.size() + s1.size()), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) s_new[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(rem);
    r0.resize(d1 + 1);
    std::swap(r0, r1);
    s0 = std::move(s1);
    s1 = std::move(s_new);
  }
  if (deg(r1) != 0) throw std::domain_error("inverse of zero");
  Rational unit = r1[0];
  for (auto& c : s1) c /= unit;
  return from_exponents(modulus_, std::move(s1));
}

Cyclotomic galois_apply(const GaloisElement& sigma, const Cyclotomic& x) {
  if (sigma.modulus != x.modulus())
    throw IncompatibleModulus("galois element modulus " +
                              std::to_string(sigma.modulus) +
                              " does not match value modulus " +
                              std::to_string(x.modulus()));
  return x.galois(sigma.exponent);
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!first && c > 0) out << "+";
    if (i == 0) {
      out << c.get_str();
    } else {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << c.get_str() << "*";
      out << "z" << modulus_;
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

Cyclotomic gauss_sum(std::int64_t p) {
  std::vector<Rational> v(p, Rational(0));
  for (std::int64_t t = 1; t < p; ++t)
    v[t] = Rational(legendre_symbol(t, p));
  return Cyclotomic::from_exponents(p, std::move(v));
}

Cyclotomic sqrt_delta_q(const PrimePower& q) {
  if (q.even) throw std::invalid_argument("sqrt_delta_q requires odd q");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(q.p),
                static_cast<unsigned long>(q.m / 2));
  if (q.m % 2 == 0) return Cyclotomic::from_rational(Rational(scale));
  return gauss_sum(q.p) * Rational(scale);
}

std::vector<std::int64_t> fixing_exponents(std::span<const Cyclotomic> values,
                                           std::int64_t n) {
  for (const auto& v : values)
    if (v.modulus() != n)
      throw IncompatibleModulus("fixing_exponents: value not at modulus " +
                                std::to_string(n));
  std::vector<std::int64_t> fixed;
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;  // n = 1 contributes only k = 1
    bool ok = true;
    for (const auto& v : values) {
      if (v.galois(k) != v) {
        ok = false;
        break;
      }
    }
    if (ok) fixed.push_back(k);
  }
  return fixed;
}

std::int64_t working_modulus(const PrimePower& q) {
  std::int64_t m = std::lcm(q.q - 1, q.q + 1);
  if (!q.even) m = std::lcm(m, q.p);
  return m;
}

}  // namespace sl2q
