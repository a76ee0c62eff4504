#include "sl2q/groupsim.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "sl2q/chartab.hpp"

namespace sl2q {

namespace {

// Dense polynomial arithmetic over F_p, used only for irreducibility testing.
using Poly = std::vector<int>;  // coeffs, constant first; may have high zeros

Poly poly_trim(Poly f) {
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
  }
  // reduce modulo monic f
  int df = static_cast<int>(f.size()) - 1;
  for (int e = static_cast<int>(prod.size()) - 1; e >= df; --e) {
    int c = prod[e];
    if (c == 0) continue;
    prod[e] = 0;
    for (int i = 0; i < df; ++i)
      prod[e - df + i] =
          static_cast<int>(((prod[e - df + i] - static_cast<std::int64_t>(c) * f[i]) % p + p) % p);
  }
  prod.resize(df);
  return prod;
}

Poly poly_powmod_x(std::int64_t e, const Poly& f, std::int64_t p) {
  Poly result{1};
  result.resize(f.size() - 1, 0);
  Poly base{0, 1};
  base.resize(f.size() - 1, 0);
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  auto inv_mod = [p](std::int64_t x) {
    std::int64_t r = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!(b.size() == 1 && b[0] == 0)) {
    // a mod b
    std::int64_t lead_inv = inv_mod(b.back());
    Poly r = a;
    int db = static_cast<int>(b.size()) - 1;
    for (int e = static_cast<int>(r.size()) - 1; e >= db; --e) {
      std::int64_t c = r[e] * lead_inv % p;
      if (c == 0) continue;
      for (int i = 0; i <= db; ++i)
        r[e - db + i] =
            static_cast<int>(((r[e - db + i] - c * b[i]) % p + p) % p);
    }
    a = std::move(b);
    b = poly_trim(std::move(r));
  }
  return a;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  // Rabin: x^{p^m} = x (mod f) and gcd(x^{p^{m/t}} - x, f) = 1 for prime t | m.
  std::int64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;
  Poly xpm = poly_powmod_x(pm, f, p);
  Poly x{0, 1};
  x.resize(f.size() - 1, 0);
  if (poly_trim(xpm) != poly_trim(x)) return false;
  for (int t = 2; t <= m; ++t) {
    if (m % t != 0 || !is_prime(t)) continue;
    std::int64_t pk = 1;
    for (int i = 0; i < m / t; ++i) pk *= p;
    Poly g = poly_powmod_x(pk, f, p);
    // g - x
    Poly diff = g;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
    Poly d = poly_gcd(f, diff, p);
    if (!(d.size() == 1 && d[0] != 0)) return false;
  }
  return true;
}

}  // namespace

Gf::Gf(std::int64_t p, int m, std::vector<int> modulus_poly)
    : p_(p), m_(m), f_(std::move(modulus_poly)) {
  q_ = 1;
  for (int i = 0; i < m_; ++i) q_ *= p_;
  if (q_ <= 512) {
    mul_table_.assign(q_ * q_, 0);
    for (std::int64_t a = 0; a < q_; ++a)
      for (std::int64_t b = a; b < q_; ++b) {
        std::int32_t v = static_cast<std::int32_t>(mul_poly(a, b));
        mul_table_[a * q_ + b] = v;
        mul_table_[b * q_ + a] = v;
      }
  }
}

std::vector<int> Gf::coeffs(std::int64_t code) const {
  std::vector<int> out(m_);
  for (int i = 0; i < m_; ++i) {
    out[i] = static_cast<int>(code % p_);
    code /= p_;
  }
  return out;
}

std::int64_t Gf::encode(const std::vector<int>& coeffs) const {
  std::int64_t code = 0;
  for (int i = m_ - 1; i >= 0; --i) {
    int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    code = code * p_ + (((c % p_) + p_) % p_);
  }
  return code;
}

std::int64_t Gf::add(std::int64_t a, std::int64_t b) const {
  std::int64_t out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::int64_t Gf::neg(std::int64_t a) const {
  std::int64_t out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::int64_t Gf::sub(std::int64_t a, std::int64_t b) const {
  return add(a, neg(b));
}

std::int64_t Gf::mul_poly(std::int64_t a, std::int64_t b) const {
  if (a == 0 || b == 0) return 0;
  std::vector<std::int64_t> prod(2 * m_ - 1, 0);
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  for (int i = 0; i < m_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::int64_t>(ca[i]) * cb[j]) % p_;
  }
  for (int e = 2 * m_ - 2; e >= m_; --e) {
    std::int64_t c = prod[e];
    if (c == 0) continue;
    prod[e] = 0;
    for (int i = 0; i < m_; ++i)
      prod[e - m_ + i] = ((prod[e - m_ + i] - c * f_[i]) % p_ + p_) % p_;
  }
  std::int64_t out = 0;
  for (int i = m_ - 1; i >= 0; --i) out = out * p_ + prod[i];
  return out;
}

std::int64_t Gf::mul(std::int64_t a, std::int64_t b) const {
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_poly(a, b);
}

std::int64_t Gf::pow(std::int64_t a, std::int64_t e) const {
  e %= q_ - 1;
  if (e < 0) e += q_ - 1;
  std::int64_t r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::int64_t Gf::inv(std::int64_t a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(q)");
  return pow(a, q_ - 2);
}

std::int64_t Gf::generator() const {
  if (generator_ >= 0) return generator_;
  std::vector<std::int64_t> prime_factors;
  std::int64_t n = q_ - 1;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime_factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) prime_factors.push_back(n);
  for (std::int64_t g = 1; g < q_; ++g) {
    bool ok = true;
    for (std::int64_t r : prime_factors)
      if (pow(g, (q_ - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      generator_ = g;
      return g;
    }
  }
  throw std::logic_error("no multiplicative generator found");
}

bool Gf::is_square(std::int64_t a) const {
  if (a == 0) throw std::domain_error("is_square of zero");
  if (p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

Gf gf_construct(std::int64_t p, int m, int skip, std::int64_t bound) {
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > bound)
      throw BoundExceeded("field size " + std::to_string(p) + "^" +
                          std::to_string(m) + " exceeds the desk bound");
  }
  int seen = 0;
  for (std::int64_t code = 0; code < q; ++code) {
    Poly f(m + 1, 0);
    std::int64_t c = code;
    for (int i = 0; i < m; ++i) {
      f[i] = static_cast<int>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (!is_irreducible(f, p)) continue;
    if (seen++ == skip) return Gf(p, m, f);
  }
  throw std::logic_error("no irreducible polynomial found");
}

namespace {

std::int64_t encode_mat(const Mat2& x, std::int64_t q) {
  return ((x.a * q + x.b) * q + x.c) * q + x.d;
}

Mat2 mat_neg(const Gf& F, const Mat2& x) {
  return {F.neg(x.a), F.neg(x.b), F.neg(x.c), F.neg(x.d)};
}

Mat2 mat_mul(const Gf& F, const Mat2& x, const Mat2& y) {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)),
          F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)),
          F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

// Inverse of a determinant-1 matrix.
Mat2 mat_inv(const Gf& F, const Mat2& x) {
  return {x.d, F.neg(x.b), F.neg(x.c), x.a};
}

Mat2 canonical_rep(const Gf& F, GroupKind kind, const Mat2& x) {
  if (kind != GroupKind::PSL2 || F.p() == 2) return x;
  Mat2 nx = mat_neg(F, x);
  return encode_mat(x, F.q()) <= encode_mat(nx, F.q()) ? x : nx;
}

}  // namespace

std::vector<Mat2> enumerate_group(GroupKind kind, const PrimePower& q,
                                  const Gf& field, std::int64_t bound) {
  kind = normalize_kind(kind, q);
  std::int64_t order = group_order(kind, q);
  if (order > bound)
    throw BoundExceeded("group order " + std::to_string(order) +
                        " exceeds the desk bound " + std::to_string(bound));
  const Gf& F = field;
  const std::int64_t n = q.q;
  std::vector<Mat2> out;
  out.reserve(order);
  auto push = [&](const Mat2& x) {
    if (kind == GroupKind::PSL2 && !q.even) {
      if (encode_mat(x, n) <= encode_mat(mat_neg(F, x), n)) out.push_back(x);
    } else {
      out.push_back(x);
    }
  };
  for (std::int64_t a = 1; a < n; ++a) {
    std::int64_t ainv = F.inv(a);
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        push({a, b, c, F.mul(ainv, F.add(1, F.mul(b, c)))});
  }
  for (std::int64_t b = 1; b < n; ++b) {
    std::int64_t c = F.neg(F.inv(b));
    for (std::int64_t d = 0; d < n; ++d) push({0, b, c, d});
  }
  if (static_cast<std::int64_t>(out.size()) != order)
    throw std::logic_error("enumeration size mismatch");
  return out;
}

std::vector<Mat2> enumerate_group(GroupKind kind, const PrimePower& q,
                                  std::int64_t bound) {
  Gf field = gf_construct(q.p, q.m);
  return enumerate_group(kind, q, field, bound);
}

ClassData conjugacy_classes(GroupKind kind, const PrimePower& q,
                            const Gf& field, std::int64_t bound) {
  kind = normalize_kind(kind, q);
  const Gf& F = field;
  std::vector<Mat2> elems = enumerate_group(kind, q, field, bound);
  std::unordered_map<std::int64_t, std::int32_t> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i)
    index.emplace(encode_mat(elems[i], q.q), static_cast<std::int32_t>(i));

  std::vector<bool> visited(elems.size(), false);
  ClassData data;
  data.order = static_cast<std::int64_t>(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (visited[i]) continue;
    const Mat2& x = elems[i];
    std::int64_t size = 0;
    for (const Mat2& g : elems) {
      Mat2 y = canonical_rep(
          F, kind, mat_mul(F, mat_mul(F, g, x), mat_inv(F, g)));
      std::int32_t idx = index.at(encode_mat(y, q.q));
      if (!visited[idx]) {
        visited[idx] = true;
        ++size;
      }
    }
    data.classes.push_back({x, size});
  }
  std::sort(data.classes.begin(), data.classes.end(),
            [&](const ConjClass& u, const ConjClass& v) {
              if (u.size != v.size) return u.size < v.size;
              return encode_mat(u.rep, q.q) < encode_mat(v.rep, q.q);
            });
  return data;
}

ClassData conjugacy_classes(GroupKind kind, const PrimePower& q,
                            std::int64_t bound) {
  Gf field = gf_construct(q.p, q.m);
  return conjugacy_classes(kind, q, field, bound);
}

ClassCheckReport verify_class_data(GroupKind kind, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  ClassCheckReport report;
  auto fail = [&report](std::string msg) {
    report.pass = false;
    report.problems.push_back(std::move(msg));
  };

  Gf F = gf_construct(q.p, q.m);
  ClassData cd = conjugacy_classes(kind, q, F);
  std::vector<ConjClassLabel> expected = table_classes(kind, q);

  if (cd.classes.size() != expected.size())
    fail("class count " + std::to_string(cd.classes.size()) +
         " != expected " + std::to_string(expected.size()));

  std::vector<std::int64_t> got_sizes, want_sizes;
  std::int64_t size_sum = 0;
  for (const auto& c : cd.classes) {
    got_sizes.push_back(c.size);
    size_sum += c.size;
    if (cd.order % c.size != 0)
      fail("class size " + std::to_string(c.size) +
           " does not divide the group order");
  }
  for (const auto& c : expected) want_sizes.push_back(c.size);
  std::sort(got_sizes.begin(), got_sizes.end());
  std::sort(want_sizes.begin(), want_sizes.end());
  if (got_sizes != want_sizes) fail("class size multisets differ");
  if (size_sum != cd.order) fail("class equation fails");

  // Explicit representative for every label. S(a) needs sigma, a generator
  // of F_q^x; T(b) needs the trace of tau0^b with tau0 of order q+1 in the
  // quadratic extension, pulled back through an embedding F_q -> F_{q^2}.
  std::int64_t sigma = F.generator();
  Gf F2 = gf_construct(q.p, 2 * q.m);
  std::int64_t root = -1;
  {
    const std::vector<int>& f = F.modulus_poly();
    for (std::int64_t z = 0; z < F2.q(); ++z) {
      std::int64_t acc = 0;
      for (int i = q.m; i >= 0; --i)
        acc = F2.add(F2.mul(acc, z), f[i] % q.p);
      if (acc == 0) {
        root = z;
        break;
      }
    }
  }
  if (root < 0) {
    fail("no embedding of F_q into F_q^2 found");
    return report;
  }
  auto embed = [&](std::int64_t u) {
    std::vector<int> cs = F.coeffs(u);
    std::int64_t acc = 0;
    for (int i = q.m - 1; i >= 0; --i)
      acc = F2.add(F2.mul(acc, root), cs[i]);
    return acc;
  };
  std::unordered_map<std::int64_t, std::int64_t> unembed;
  for (std::int64_t u = 0; u < q.q; ++u) unembed.emplace(embed(u), u);
  std::int64_t tau0 = F2.pow(F2.generator(), q.q - 1);  // order q+1

  auto torus_trace = [&](std::int64_t b) {
    std::int64_t t2 = F2.add(F2.pow(tau0, b), F2.pow(tau0, -b));
    auto it = unembed.find(t2);
    if (it == unembed.end())
      throw std::logic_error("torus trace not in the base field");
    return it->second;
  };

  auto label_rep = [&](const ConjClassLabel& label) -> Mat2 {
    switch (label.tag) {
      case ClassTag::identity: return {1, 0, 0, 1};
      case ClassTag::minus_identity: return mat_neg(F, {1, 0, 0, 1});
      case ClassTag::unipotent: return {1, 1, 0, 1};
      case ClassTag::unipotent_prime: return {1, sigma, 0, 1};
      case ClassTag::minus_unipotent: return mat_neg(F, {1, 1, 0, 1});
      case ClassTag::minus_unipotent_prime:
        return mat_neg(F, {1, sigma, 0, 1});
      case ClassTag::split:
        return {F.pow(sigma, label.param), 0, 0, F.pow(sigma, -label.param)};
      case ClassTag::nonsplit:
        return {0, F.neg(1), 1, torus_trace(label.param)};
    }
    throw std::logic_error("unknown class tag");
  };

  std::unordered_map<std::int64_t, std::size_t> rep_to_class;
  for (std::size_t i = 0; i < cd.classes.size(); ++i)
    rep_to_class.emplace(encode_mat(cd.classes[i].rep, q.q), i);

  std::unordered_set<std::size_t> matched;
  std::vector<Mat2> elems = enumerate_group(kind, q, F);
  for (const auto& label : expected) {
    Mat2 x = canonical_rep(F, kind, label_rep(label));
    // orbit of the label representative
    std::unordered_set<std::int64_t> orbit;
    std::size_t hit = cd.classes.size();
    for (const Mat2& g : elems) {
      Mat2 y = canonical_rep(
          F, kind, mat_mul(F, mat_mul(F, g, x), mat_inv(F, g)));
      std::int64_t code = encode_mat(y, q.q);
      orbit.insert(code);
      auto it = rep_to_class.find(code);
      if (it != rep_to_class.end()) hit = it->second;
    }
    if (hit == cd.classes.size()) {
      fail("no brute-force class found for label " + to_string(label));
      continue;
    }
    if (static_cast<std::int64_t>(orbit.size()) != label.size)
      fail("label " + to_string(label) + " has class size " +
           std::to_string(orbit.size()) + ", table says " +
           std::to_string(label.size));
    if (cd.classes[hit].size != label.size)
      fail("label " + to_string(label) + " matched a class of size " +
           std::to_string(cd.classes[hit].size));
    if (!matched.insert(hit).second)
      fail("label " + to_string(label) + " collides with another label");
  }
  if (matched.size() != expected.size() && report.pass)
    fail("label matching is not a bijection");
  return report;
}

}  // namespace sl2q
