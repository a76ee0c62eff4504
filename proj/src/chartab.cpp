#include "sl2q/chartab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace sl2q {

std::string to_string(const ConjClassLabel& c) {
  switch (c.tag) {
    case ClassTag::identity: return "I";
    case ClassTag::minus_identity: return "-I";
    case ClassTag::unipotent: return "N";
    case ClassTag::unipotent_prime: return "N'";
    case ClassTag::minus_unipotent: return "-N";
    case ClassTag::minus_unipotent_prime: return "-N'";
    case ClassTag::split: return "S(" + std::to_string(c.param) + ")";
    case ClassTag::nonsplit: return "T(" + std::to_string(c.param) + ")";
  }
  return "?";
}

std::string to_string(const CharLabel& c) {
  switch (c.family) {
    case CharFamily::trivial: return "psi_1";
    case CharFamily::steinberg: return "psi_q";
    case CharFamily::principal:
      return "psi_{q+1}^(" + std::to_string(c.param) + ")";
    case CharFamily::discrete:
      return "psi_{q-1}^(" + std::to_string(c.param) + ")";
    case CharFamily::plus_prime: return "psi'_+";
    case CharFamily::plus_dprime: return "psi''_+";
    case CharFamily::minus_prime: return "psi'_-";
    case CharFamily::minus_dprime: return "psi''_-";
  }
  return "?";
}

std::int64_t char_degree(const CharLabel& c, const PrimePower& q) {
  switch (c.family) {
    case CharFamily::trivial: return 1;
    case CharFamily::steinberg: return q.q;
    case CharFamily::principal: return q.q + 1;
    case CharFamily::discrete: return q.q - 1;
    case CharFamily::plus_prime:
    case CharFamily::plus_dprime: return (q.q + 1) / 2;
    case CharFamily::minus_prime:
    case CharFamily::minus_dprime: return (q.q - 1) / 2;
  }
  throw std::invalid_argument("unknown character label");
}

std::vector<ConjClassLabel> table_classes(GroupKind kind, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  const std::int64_t n = q.q;
  std::vector<ConjClassLabel> out;
  if (q.even) {
    out.push_back({ClassTag::identity, 0, 1});
    out.push_back({ClassTag::unipotent, 0, n * n - 1});
    for (std::int64_t a = 1; a <= n / 2 - 1; ++a)
      out.push_back({ClassTag::split, a, n * (n + 1)});
    for (std::int64_t b = 1; b <= n / 2; ++b)
      out.push_back({ClassTag::nonsplit, b, n * (n - 1)});
    return out;
  }
  if (kind == GroupKind::SL2) {
    out.push_back({ClassTag::identity, 0, 1});
    out.push_back({ClassTag::minus_identity, 0, 1});
    const std::int64_t u = (n * n - 1) / 2;
    out.push_back({ClassTag::unipotent, 0, u});
    out.push_back({ClassTag::unipotent_prime, 0, u});
    out.push_back({ClassTag::minus_unipotent, 0, u});
    out.push_back({ClassTag::minus_unipotent_prime, 0, u});
    for (std::int64_t a = 1; a <= (n - 3) / 2; ++a)
      out.push_back({ClassTag::split, a, n * (n + 1)});
    for (std::int64_t b = 1; b <= (n - 1) / 2; ++b)
      out.push_back({ClassTag::nonsplit, b, n * (n - 1)});
    return out;
  }
  out.push_back({ClassTag::identity, 0, 1});
  const std::int64_t u = (n * n - 1) / 2;
  out.push_back({ClassTag::unipotent, 0, u});
  out.push_back({ClassTag::unipotent_prime, 0, u});
  if (q.mod4 == 3) {
    for (std::int64_t a = 1; a <= (n - 3) / 4; ++a)
      out.push_back({ClassTag::split, a, n * (n + 1)});
    for (std::int64_t b = 1; b <= (n - 3) / 4; ++b)
      out.push_back({ClassTag::nonsplit, b, n * (n - 1)});
    out.push_back({ClassTag::nonsplit, (n + 1) / 4, n * (n - 1) / 2});
  } else {
    for (std::int64_t a = 1; a <= (n - 5) / 4; ++a)
      out.push_back({ClassTag::split, a, n * (n + 1)});
    out.push_back({ClassTag::split, (n - 1) / 4, n * (n + 1) / 2});
    for (std::int64_t b = 1; b <= (n - 1) / 4; ++b)
      out.push_back({ClassTag::nonsplit, b, n * (n - 1)});
  }
  return out;
}

namespace {

std::vector<CharLabel> table_rows(GroupKind kind, const PrimePower& q) {
  const std::int64_t n = q.q;
  std::vector<CharLabel> rows;
  rows.push_back({CharFamily::trivial, 0});
  rows.push_back({CharFamily::steinberg, 0});
  if (q.even) {
    for (std::int64_t k = 1; k <= n / 2 - 1; ++k)
      rows.push_back({CharFamily::principal, k});
    for (std::int64_t j = 1; j <= n / 2; ++j)
      rows.push_back({CharFamily::discrete, j});
    return rows;
  }
  if (kind == GroupKind::SL2) {
    for (std::int64_t i = 1; i <= (n - 3) / 2; ++i)
      rows.push_back({CharFamily::principal, i});
    for (std::int64_t j = 1; j <= (n - 1) / 2; ++j)
      rows.push_back({CharFamily::discrete, j});
    rows.push_back({CharFamily::plus_prime, 0});
    rows.push_back({CharFamily::plus_dprime, 0});
    rows.push_back({CharFamily::minus_prime, 0});
    rows.push_back({CharFamily::minus_dprime, 0});
    return rows;
  }
  std::int64_t k_max = q.mod4 == 3 ? (n - 3) / 2 : (n - 5) / 2;
  std::int64_t j_max = q.mod4 == 3 ? (n - 3) / 2 : (n - 1) / 2;
  for (std::int64_t k = 2; k <= k_max; k += 2)
    rows.push_back({CharFamily::principal, k});
  for (std::int64_t j = 2; j <= j_max; j += 2)
    rows.push_back({CharFamily::discrete, j});
  if (q.mod4 == 3) {
    rows.push_back({CharFamily::minus_prime, 0});
    rows.push_back({CharFamily::minus_dprime, 0});
  } else {
    rows.push_back({CharFamily::plus_prime, 0});
    rows.push_back({CharFamily::plus_dprime, 0});
  }
  return rows;
}

std::int64_t pm(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

struct Cell {
  Cyclotomic value;
  std::string disp;
};

std::string rat_str(const Cyclotomic& v) {
  return v.rational_value().get_str();
}

// "zN^e + zN^-e" with the exponent reduced into (0, N/2]; rational values
// are printed as numbers.
std::string power_sum_str(std::int64_t n, std::int64_t e, bool negate,
                          const Cyclotomic& v) {
  if (v.is_rational()) return rat_str(v);
  e = ((e % n) + n) % n;
  e = std::min(e, n - e);
  std::string z = "z" + std::to_string(n);
  std::string pow = e == 1 ? z : z + "^" + std::to_string(e);
  std::string sign = negate ? "-" : "+";
  return (negate ? "-" : "") + pow + sign + z + "^-" + std::to_string(e);
}

std::string omega_str(std::int64_t sign, bool star, const Cyclotomic& v) {
  if (v.is_rational()) return rat_str(v);
  std::string s = star ? "w*" : "w";
  return sign < 0 ? "-" + s : s;
}

}  // namespace

CharacterTable build_table(GroupKind kind, const PrimePower& q) {
  if (q.q < 4) throw UnsupportedQ("character tables require q >= 4");
  kind = normalize_kind(kind, q);
  const std::int64_t n = q.q;

  CharacterTable t;
  t.kind = kind;
  t.q = q;
  t.order = group_order(kind, q);
  t.classes = table_classes(kind, q);
  t.rows = table_rows(kind, q);

  const std::int64_t delta = q.even ? 1 : (q.mod4 == 1 ? 1 : -1);
  Cyclotomic omega, omega_star;
  if (!q.even) {
    Cyclotomic root = sqrt_delta_q(q);  // square is delta * q
    Rational half(1, 2);
    omega = (Cyclotomic::from_int(1) + root) * half;
    omega_star = (Cyclotomic::from_int(1) - root) * half;
    if (!omega.is_rational()) {
      std::string d = std::to_string(delta * n);
      t.legend.push_back("w = (1+sqrt(" + d + "))/2");
      t.legend.push_back("w* = (1-sqrt(" + d + "))/2");
    }
  }

  auto power_sum = [](std::int64_t m, std::int64_t e) {
    return Cyclotomic::root(m, e) + Cyclotomic::root(m, -e);
  };

  bool psl_odd = kind == GroupKind::PSL2 && !q.even;
  auto exceptional_split = [&](const ConjClassLabel& c) {
    return psl_odd && q.mod4 == 1 && c.tag == ClassTag::split &&
           c.param == (n - 1) / 4;
  };
  auto exceptional_nonsplit = [&](const ConjClassLabel& c) {
    return psl_odd && q.mod4 == 3 && c.tag == ClassTag::nonsplit &&
           c.param == (n + 1) / 4;
  };

  auto omega_cell = [&](std::int64_t sign, bool star) {
    const Cyclotomic& base = star ? omega_star : omega;
    Cyclotomic v = sign < 0 ? -base : base;
    return Cell{v, omega_str(sign, star, v)};
  };
  auto int_cell = [](std::int64_t v) {
    return Cell{Cyclotomic::from_int(v), std::to_string(v)};
  };
  auto dot_cell = [] { return Cell{Cyclotomic(), "."}; };

  auto cell = [&](const CharLabel& r, const ConjClassLabel& c) -> Cell {
    switch (r.family) {
      case CharFamily::trivial:
        return int_cell(1);
      case CharFamily::steinberg:
        switch (c.tag) {
          case ClassTag::identity:
          case ClassTag::minus_identity: return int_cell(n);
          case ClassTag::split: return int_cell(1);
          case ClassTag::nonsplit: return int_cell(-1);
          default: return dot_cell();
        }
      case CharFamily::principal: {
        const std::int64_t i = r.param;
        switch (c.tag) {
          case ClassTag::identity: return int_cell(n + 1);
          case ClassTag::minus_identity: return int_cell(pm(i) * (n + 1));
          case ClassTag::unipotent:
          case ClassTag::unipotent_prime: return int_cell(1);
          case ClassTag::minus_unipotent:
          case ClassTag::minus_unipotent_prime: return int_cell(pm(i));
          case ClassTag::split: {
            if (exceptional_split(c)) {
              Cyclotomic v = Cyclotomic::root(n - 1, (n - 1) / 4 * i) *
                             Rational(2);
              std::string d = v.is_rational()
                                  ? rat_str(v)
                                  : "2z" + std::to_string(n - 1) + "^" +
                                        std::to_string((n - 1) / 4 * i % (n - 1));
              return Cell{v, d};
            }
            Cyclotomic v = power_sum(n - 1, c.param * i);
            return Cell{v, power_sum_str(n - 1, c.param * i, false, v)};
          }
          case ClassTag::nonsplit: return dot_cell();
        }
        break;
      }
      case CharFamily::discrete: {
        const std::int64_t j = r.param;
        switch (c.tag) {
          case ClassTag::identity: return int_cell(n - 1);
          case ClassTag::minus_identity: return int_cell(pm(j) * (n - 1));
          case ClassTag::unipotent:
          case ClassTag::unipotent_prime: return int_cell(-1);
          case ClassTag::minus_unipotent:
          case ClassTag::minus_unipotent_prime: return int_cell(pm(j + 1));
          case ClassTag::split: return dot_cell();
          case ClassTag::nonsplit: {
            if (exceptional_nonsplit(c)) {
              Cyclotomic v = Cyclotomic::root(n + 1, (n + 1) / 4 * j) *
                             Rational(-2);
              std::string d = v.is_rational()
                                  ? rat_str(v)
                                  : "-2z" + std::to_string(n + 1) + "^" +
                                        std::to_string((n + 1) / 4 * j % (n + 1));
              return Cell{v, d};
            }
            Cyclotomic v = -power_sum(n + 1, c.param * j);
            return Cell{v, power_sum_str(n + 1, c.param * j, true, v)};
          }
        }
        break;
      }
      case CharFamily::plus_prime:
      case CharFamily::plus_dprime: {
        bool primed = r.family == CharFamily::plus_prime;
        switch (c.tag) {
          case ClassTag::identity: return int_cell((n + 1) / 2);
          case ClassTag::minus_identity: return int_cell(delta * (n + 1) / 2);
          case ClassTag::unipotent: return omega_cell(1, !primed);
          case ClassTag::unipotent_prime: return omega_cell(1, primed);
          case ClassTag::minus_unipotent: return omega_cell(delta, !primed);
          case ClassTag::minus_unipotent_prime: return omega_cell(delta, primed);
          case ClassTag::split:
            if (exceptional_split(c)) return int_cell(pm((n - 1) / 4));
            return int_cell(pm(c.param));
          case ClassTag::nonsplit: return dot_cell();
        }
        break;
      }
      case CharFamily::minus_prime:
      case CharFamily::minus_dprime: {
        bool primed = r.family == CharFamily::minus_prime;
        switch (c.tag) {
          case ClassTag::identity: return int_cell((n - 1) / 2);
          case ClassTag::minus_identity: return int_cell(-delta * (n - 1) / 2);
          case ClassTag::unipotent: return omega_cell(-1, primed);
          case ClassTag::unipotent_prime: return omega_cell(-1, !primed);
          case ClassTag::minus_unipotent: return omega_cell(delta, primed);
          case ClassTag::minus_unipotent_prime: return omega_cell(delta, !primed);
          case ClassTag::split: return dot_cell();
          case ClassTag::nonsplit:
            if (exceptional_nonsplit(c)) return int_cell(pm((n + 5) / 4));
            return int_cell(pm(c.param + 1));
        }
        break;
      }
    }
    throw std::logic_error("unhandled table cell");
  };

  if (t.rows.size() != t.classes.size())
    throw std::logic_error("character table is not square");
  t.values.resize(t.rows.size());
  t.display.resize(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (const auto& c : t.classes) {
      Cell x = cell(t.rows[r], c);
      t.values[r].push_back(std::move(x.value));
      t.display[r].push_back(std::move(x.disp));
    }
  }
  return t;
}

namespace {

bool cyclotomic_equals_int(const Cyclotomic& v, std::int64_t expected) {
  return v.is_rational() && v.rational_value() == expected;
}

// Sum of small-field terms, accumulated per modulus and combined once.
class ModulusAccumulator {
 public:
  void add(const Cyclotomic& term) {
    if (term.is_zero()) return;
    auto [it, fresh] = parts_.try_emplace(term.modulus(), term);
    if (!fresh) it->second = it->second + term;
  }
  Cyclotomic total() const {
    Cyclotomic sum;
    for (const auto& [m, v] : parts_) sum = sum + v;
    return sum;
  }

 private:
  std::map<std::int64_t, Cyclotomic> parts_;
};

}  // namespace

OrthoReport verify_orthogonality(const CharacterTable& t) {
  OrthoReport report;
  const std::size_t nrows = t.rows.size();
  const std::size_t ncls = t.classes.size();
  if (nrows != ncls) {
    report.pass = false;
    report.failures.push_back({false, 0, 0, "table is not square"});
    return report;
  }

  std::vector<std::vector<Cyclotomic>> conj(nrows);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncls; ++c)
      conj[r].push_back(t.values[r][c].conj());

  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = i; j < nrows; ++j) {
      ModulusAccumulator acc;
      for (std::size_t c = 0; c < ncls; ++c)
        acc.add((t.values[i][c] * conj[j][c]) * Rational(t.classes[c].size));
      std::int64_t expected = i == j ? t.order : 0;
      if (!cyclotomic_equals_int(acc.total(), expected)) {
        report.pass = false;
        report.failures.push_back(
            {false, static_cast<int>(i), static_cast<int>(j),
             "<" + to_string(t.rows[i]) + ", " + to_string(t.rows[j]) + ">"});
      }
    }
  }

  for (std::size_t x = 0; x < ncls; ++x) {
    for (std::size_t y = x; y < ncls; ++y) {
      ModulusAccumulator acc;
      for (std::size_t r = 0; r < nrows; ++r)
        acc.add(t.values[r][x] * conj[r][y]);
      std::int64_t expected = x == y ? t.order / t.classes[x].size : 0;
      if (!cyclotomic_equals_int(acc.total(), expected)) {
        report.pass = false;
        report.failures.push_back(
            {true, static_cast<int>(x), static_cast<int>(y),
             "columns " + to_string(t.classes[x]) + ", " +
                 to_string(t.classes[y])});
      }
    }
  }
  return report;
}

int schur_index(GroupKind kind, const CharLabel& label, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  if (kind == GroupKind::PSL2) return 1;
  switch (label.family) {
    case CharFamily::principal:
    case CharFamily::discrete:
      return label.param % 2 == 1 ? 2 : 1;
    case CharFamily::minus_prime:
    case CharFamily::minus_dprime:
      return q.mod4 == 1 ? 2 : 1;
    case CharFamily::trivial:
    case CharFamily::steinberg:
    case CharFamily::plus_prime:
    case CharFamily::plus_dprime:
      return 1;
  }
  throw std::invalid_argument("unknown character label");
}

namespace {

std::vector<std::int64_t> units_mod(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) out.push_back(k);
  return out;
}

// Character field of a row embedded at modulus m with fixed subgroup h.
NumberField field_of_row(const std::vector<Cyclotomic>& row, std::int64_t m,
                         const std::vector<std::int64_t>& h) {
  std::int64_t degree = euler_phi(m) / static_cast<std::int64_t>(h.size());
  if (degree == 1) return NumberField::rationals();
  std::set<std::int64_t> hset(h.begin(), h.end());
  if (degree == 2) {
    // v and its image under the nontrivial automorphism generate the field;
    // the discriminant (v - v')^2 is rational and pins the quadratic field.
    std::int64_t k_out = 0;
    for (std::int64_t k : units_mod(m))
      if (!hset.count(k)) {
        k_out = k;
        break;
      }
    for (const auto& v : row) {
      if (v.is_rational()) continue;
      Cyclotomic diff = v - v.galois(k_out);
      Cyclotomic disc = diff * diff;
      Rational r = disc.rational_value();
      mpz_class core = r.get_num() * r.get_den();
      if (!core.fits_slong_p())
        throw std::logic_error("discriminant out of range");
      return NumberField::quadratic(squarefree_part(core.get_si()));
    }
    throw std::logic_error("degree-2 field with all-rational values");
  }
  // Conductor: smallest f | m whose reduction kernel fixes the row.
  for (std::int64_t f : divisors(m)) {
    if (f < 3) continue;
    bool kernel_inside = true;
    for (std::int64_t k : units_mod(m)) {
      if (k % f == 1 && !hset.count(k)) {
        kernel_inside = false;
        break;
      }
    }
    if (!kernel_inside) continue;
    // In scope every field of degree >= 3 is a real cyclotomic field, i.e.
    // the fixed subgroup is exactly the preimage of {+-1 mod f}.
    bool real_cyc = euler_phi(f) / 2 == degree;
    if (real_cyc) {
      for (std::int64_t k : units_mod(m)) {
        bool pm1 = k % f == 1 || k % f == f - 1;
        if (pm1 != (hset.count(k) > 0)) {
          real_cyc = false;
          break;
        }
      }
    }
    if (!real_cyc)
      throw std::logic_error("character field is not a real cyclotomic field");
    return field_canonical(NumberField::real_cyclotomic(f));
  }
  throw std::logic_error("no conductor found");
}

}  // namespace

std::vector<GaloisOrbit> galois_orbits(const CharacterTable& t) {
  const std::size_t nrows = t.rows.size();
  const std::size_t ncls = t.classes.size();
  std::vector<bool> visited(nrows, false);
  std::vector<GaloisOrbit> orbits;

  for (std::size_t r = 0; r < nrows; ++r) {
    if (visited[r]) continue;
    std::int64_t m = 1;
    for (const auto& v : t.values[r]) m = std::lcm(m, v.modulus());
    std::vector<Cyclotomic> row;
    for (const auto& v : t.values[r]) row.push_back(v.embedded(m));

    std::set<int> members{static_cast<int>(r)};
    for (std::int64_t k : units_mod(m)) {
      if (k == 1) continue;
      std::vector<Cyclotomic> image;
      for (const auto& v : row) image.push_back(v.galois(k));
      int found = -1;
      for (std::size_t r2 = 0; r2 < nrows; ++r2) {
        bool same = true;
        for (std::size_t c = 0; c < ncls && same; ++c)
          same = image[c] == t.values[r2][c];
        if (same) {
          found = static_cast<int>(r2);
          break;
        }
      }
      if (found < 0)
        throw std::logic_error("Galois conjugate of " + to_string(t.rows[r]) +
                               " is not a table row");
      members.insert(found);
    }

    GaloisOrbit orbit;
    orbit.members.assign(members.begin(), members.end());
    orbit.representative = static_cast<int>(r);
    for (int idx : orbit.members) visited[idx] = true;

    auto fixed = fixing_exponents(row, m);
    std::int64_t degree =
        euler_phi(m) / static_cast<std::int64_t>(fixed.size());
    if (degree != static_cast<std::int64_t>(orbit.members.size()))
      throw std::logic_error("orbit size differs from character field degree");
    orbit.field = field_of_row(row, m, fixed);
    orbit.schur = schur_index(t.kind, t.rows[r], t.q);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

OracleDecomposition oracle_decompose(GroupKind kind, std::int64_t q_raw) {
  PrimePower pp = factor_prime_power(q_raw);
  kind = normalize_kind(kind, pp);
  CharacterTable t = build_table(kind, pp);
  OracleDecomposition out;
  out.kind = kind;
  out.q = pp;
  for (const auto& orbit : galois_orbits(t)) {
    std::int64_t degree = char_degree(t.rows[orbit.representative], pp);
    if (degree % orbit.schur != 0)
      throw std::logic_error("character degree not divisible by Schur index");
    out.components.push_back(
        {degree / orbit.schur, orbit.field, orbit.schur});
  }
  return out;
}

namespace {

using Signature = std::tuple<std::int64_t, int, std::int64_t, int>;

Signature signature_of(std::int64_t n, const NumberField& f, int index) {
  return {n, static_cast<int>(f.kind), f.param, index};
}

std::string signature_str(const Signature& s) {
  auto [n, kind, param, index] = s;
  std::ostringstream out;
  out << "(n=" << n << ", center=";
  switch (static_cast<FieldKind>(kind)) {
    case FieldKind::rationals: out << "Q"; break;
    case FieldKind::quadratic: out << "Q(sqrt(" << param << "))"; break;
    case FieldKind::real_cyclotomic:
      out << "Q(zeta_" << param << "+zeta_" << param << "^-1)";
      break;
  }
  out << ", index=" << index << ")";
  return out.str();
}

}  // namespace

MatchReport compare(const WedderburnDecomposition& closed,
                    const OracleDecomposition& oracle) {
  MatchReport report;
  if (closed.kind != oracle.kind || closed.q.q != oracle.q.q) {
    report.match = false;
    report.mismatches.push_back("group/q mismatch between the two sides");
    return report;
  }
  std::vector<Signature> lhs, rhs;
  for (const auto& c : closed.components)
    for (std::int64_t i = 0; i < c.multiplicity; ++i)
      lhs.push_back(signature_of(c.n, c.division.center, c.division.index()));
  for (const auto& c : oracle.components)
    rhs.push_back(signature_of(c.n, c.center, c.index));
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  std::vector<Signature> only_closed, only_oracle;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(only_closed));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                      std::back_inserter(only_oracle));
  for (const auto& s : only_closed)
    report.mismatches.push_back("closed form only: " + signature_str(s));
  for (const auto& s : only_oracle)
    report.mismatches.push_back("oracle only: " + signature_str(s));
  report.match = report.mismatches.empty();
  return report;
}

}  // namespace sl2q
