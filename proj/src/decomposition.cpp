#include "sl2q/decomposition.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace sl2q {

GroupKind normalize_kind(GroupKind kind, const PrimePower& q) {
  return q.even ? GroupKind::PSL2 : kind;
}

std::int64_t group_order(GroupKind kind, const PrimePower& q) {
  std::int64_t n = q.q * (q.q * q.q - 1);
  if (normalize_kind(kind, q) == GroupKind::PSL2 && !q.even) n /= 2;
  return n;
}

namespace {

std::vector<std::int64_t> divisors_above_2(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d : divisors(n))
    if (d > 2) out.push_back(d);
  return out;
}

}  // namespace

DivisorSets divisor_sets(GroupKind kind, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  DivisorSets s;
  if (q.even) {
    s.A = divisors_above_2(q.q + 1);
    s.B = divisors_above_2(q.q - 1);
    return s;
  }
  s.A = divisors_above_2((q.q + 1) / 2);
  s.B = divisors_above_2((q.q - 1) / 2);
  if (kind == GroupKind::SL2) {
    for (std::int64_t d : divisors_above_2(q.q + 1))
      if ((q.q + 1) / 2 % d != 0) s.A_prime.push_back(d);
    for (std::int64_t d : divisors_above_2(q.q - 1))
      if ((q.q - 1) / 2 % d != 0) s.B_prime.push_back(d);
  }
  return s;
}

namespace {

using SortKey = std::tuple<std::int64_t, std::int64_t, int, std::int64_t, int,
                           std::int64_t, int, std::int64_t>;

SortKey sort_key(const SimpleComponent& c) {
  const DivisionAlgebra& d = c.division;
  int a_tag = 0;
  std::int64_t a_val = 0;
  if (d.kind == AlgebraKind::quaternion) {
    if (std::holds_alternative<std::int64_t>(d.a)) {
      a_tag = 1;
      a_val = std::get<std::int64_t>(d.a);
    } else {
      a_tag = 2;
      a_val = std::get<ZetaDiff>(d.a).conductor;
    }
  }
  return {c.n,
          field_degree(d.center),
          static_cast<int>(d.center.kind),
          d.center.param,
          d.index(),
          d.b,
          a_tag,
          a_val};
}

SimpleComponent field_component(std::int64_t mult, std::int64_t n,
                                const NumberField& f) {
  return SimpleComponent{mult, n, field_algebra(f)};
}

SimpleComponent quat_component(std::int64_t mult, std::int64_t n,
                               const NumberField& center, const ASpec& a,
                               std::int64_t b) {
  return SimpleComponent{mult, n, quaternion_algebra(center, a, b)};
}

}  // namespace

bool component_less(const SimpleComponent& x, const SimpleComponent& y) {
  return sort_key(x) < sort_key(y);
}

WedderburnDecomposition decompose(GroupKind kind, std::int64_t q_raw) {
  PrimePower pp = factor_prime_power(q_raw);
  kind = normalize_kind(kind, pp);
  const std::int64_t q = pp.q;
  DivisorSets ds = divisor_sets(kind, pp);

  WedderburnDecomposition w;
  w.kind = kind;
  w.q = pp;
  w.order = group_order(kind, pp);

  auto& comps = w.components;
  comps.push_back(field_component(1, 1, NumberField::rationals()));
  comps.push_back(field_component(1, q, NumberField::rationals()));
  for (std::int64_t d : ds.A)
    comps.push_back(field_component(1, q - 1, NumberField::real_cyclotomic(d)));
  for (std::int64_t d : ds.B)
    comps.push_back(field_component(1, q + 1, NumberField::real_cyclotomic(d)));

  if (!pp.even) {
    if (kind == GroupKind::SL2) {
      // D_d = (zeta_d - zeta_d^-1, -q) and D'_d = (zeta_d - zeta_d^-1, -1)
      // over Q(zeta_d + zeta_d^-1).
      for (std::int64_t d : ds.A_prime)
        comps.push_back(quat_component(1, (q - 1) / 2,
                                       NumberField::real_cyclotomic(d),
                                       ZetaDiff{d}, -q));
      for (std::int64_t d : ds.B_prime)
        comps.push_back(quat_component(1, (q + 1) / 2,
                                       NumberField::real_cyclotomic(d),
                                       ZetaDiff{d}, -1));
    }
    if (pp.mod4 == 3) {
      NumberField im = NumberField::quadratic(squarefree_part(-q));
      comps.push_back(field_component(1, (q - 1) / 2, im));
      if (kind == GroupKind::SL2)
        comps.push_back(field_component(1, (q + 1) / 2, im));
    } else if (!pp.square) {
      NumberField re = NumberField::quadratic(squarefree_part(q));
      comps.push_back(field_component(1, (q + 1) / 2, re));
      if (kind == GroupKind::SL2)
        // D' = (-1,-1) over Q(sqrt q); index 2 since -1 stays a unit at every
        // finite place of the real quadratic field.
        comps.push_back(quat_component(1, (q - 1) / 4, re, std::int64_t{-1},
                                       -1));
    } else {
      comps.push_back(field_component(2, (q + 1) / 2, NumberField::rationals()));
      if (kind == GroupKind::SL2) {
        // D'' ramifies exactly at {p, oo}: (-1,-p) works for p = 3 (mod 4),
        // and (-ell,-p) with ell = 3 (mod 4), (ell/p) = -1 for p = 1 (mod 4).
        std::int64_t a = pp.p % 4 == 3 ? -1 : -find_ell(pp.p);
        comps.push_back(quat_component(2, (q - 1) / 4,
                                       NumberField::rationals(), a, -pp.p));
      }
    }
  }

  std::sort(comps.begin(), comps.end(), component_less);
  return w;
}

std::int64_t rational_irr_count(GroupKind kind, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  if (q.even) return tau(q.q - 1) + tau(q.q + 1);
  bool square_one_mod4 = q.mod4 == 1 && q.square;
  if (kind == GroupKind::PSL2)
    return tau((q.q - 1) / 2) + tau((q.q + 1) / 2) + (square_one_mod4 ? 1 : 0);
  return tau(q.q - 1) + tau(q.q + 1) + (square_one_mod4 ? 2 : 0);
}

std::vector<std::pair<std::int64_t, std::int64_t>> simple_module_dimensions(
    GroupKind kind, const PrimePower& q) {
  kind = normalize_kind(kind, q);
  std::map<std::int64_t, std::int64_t> dims;
  DivisorSets ds = divisor_sets(kind, q);
  dims[1] += 1;
  dims[q.q] += 1;
  for (std::int64_t d : ds.A) dims[(q.q - 1) * euler_phi(d) / 2] += 1;
  for (std::int64_t d : ds.B) dims[(q.q + 1) * euler_phi(d) / 2] += 1;
  if (!q.even) {
    for (std::int64_t d : ds.A_prime) dims[(q.q - 1) * euler_phi(d)] += 1;
    for (std::int64_t d : ds.B_prime) dims[(q.q + 1) * euler_phi(d)] += 1;
    bool sq = q.mod4 == 1 && q.square;
    if (kind == GroupKind::PSL2) {
      if (q.mod4 == 3)
        dims[q.q - 1] += 1;
      else if (!sq)
        dims[q.q + 1] += 1;
      else
        dims[(q.q + 1) / 2] += 2;
    } else {
      // psi_- family, then psi_+ family
      if (q.mod4 == 3)
        dims[q.q - 1] += 1;
      else if (!sq)
        dims[2 * (q.q - 1)] += 1;
      else
        dims[q.q - 1] += 2;
      if (q.mod4 == 3 || !sq)
        dims[q.q + 1] += 1;
      else
        dims[(q.q + 1) / 2] += 2;
    }
  }
  return {dims.begin(), dims.end()};
}

AuditReport dimension_audit(const WedderburnDecomposition& w) {
  AuditReport r;
  r.group_order = w.order;
  for (const auto& c : w.components) {
    r.dim_sum += component_dim_q(c);
    r.component_count += c.multiplicity;
  }
  r.expected_count = rational_irr_count(w.kind, w.q);
  r.sum_ok = r.dim_sum == r.group_order;
  r.count_ok = r.component_count == r.expected_count;
  return r;
}

}  // namespace sl2q
