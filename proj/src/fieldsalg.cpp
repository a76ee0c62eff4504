#include "sl2q/fieldsalg.hpp"

#include <numeric>

#include "sl2q/cyclotomic.hpp"

namespace sl2q {

namespace {

void validate(const NumberField& f) {
  switch (f.kind) {
    case FieldKind::rationals:
      if (f.param != 0)
        throw MalformedDescriptor("rationals carry no parameter");
      return;
    case FieldKind::quadratic:
      if (f.param == 0 || f.param == 1 || squarefree_part(f.param) != f.param)
        throw MalformedDescriptor("quadratic parameter must be squarefree, not 0 or 1");
      return;
    case FieldKind::real_cyclotomic:
      if (f.param < 3)
        throw MalformedDescriptor("real cyclotomic conductor must be >= 3");
      return;
  }
  throw MalformedDescriptor("unknown field kind");
}

// Discriminant generator of the degree-2 field Q(zeta_d + zeta_d^-1):
// (v - v')^2 for v = zeta_d + zeta_d^-1 and v' a distinct conjugate.
std::int64_t quadratic_param_of_real_cyclotomic(std::int64_t d) {
  Cyclotomic v = Cyclotomic::root(d, 1) + Cyclotomic::root(d, -1);
  for (std::int64_t k = 2; k < d; ++k) {
    if (std::gcd(k, d) != 1) continue;
    Cyclotomic w = v.galois(k);
    if (w == v) continue;
    Cyclotomic disc = (v - w) * (v - w);
    Rational r = disc.rational_value();
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
      throw MalformedDescriptor("unexpected discriminant");
    return squarefree_part(r.get_num().get_si());
  }
  throw MalformedDescriptor("field is not quadratic");
}

}  // namespace

NumberField field_canonical(const NumberField& f) {
  validate(f);
  if (f.kind != FieldKind::real_cyclotomic) return f;
  std::int64_t d = f.param;
  if (d % 4 == 2) d /= 2;  // zeta_d and zeta_2d generate the same field, d odd
  std::int64_t deg = euler_phi(d) / 2;
  if (d < 3 || deg < 1) throw MalformedDescriptor("degenerate conductor");
  if (deg == 1) return NumberField::rationals();
  if (deg == 2) return NumberField::quadratic(quadratic_param_of_real_cyclotomic(d));
  return NumberField::real_cyclotomic(d);
}

std::int64_t field_degree(const NumberField& f) {
  validate(f);
  switch (f.kind) {
    case FieldKind::rationals:
      return 1;
    case FieldKind::quadratic:
      return 2;
    case FieldKind::real_cyclotomic: {
      std::int64_t d = f.param;
      if (d % 4 == 2) d /= 2;
      return euler_phi(d) / 2;
    }
  }
  throw MalformedDescriptor("unknown field kind");
}

std::int64_t zeta_diff_square(std::int64_t d) {
  Cyclotomic s = Cyclotomic::root(d, 1) - Cyclotomic::root(d, -1);
  Cyclotomic sq = s * s;
  if (!sq.is_rational())
    throw std::invalid_argument("(zeta_d - zeta_d^-1)^2 is irrational for d = " +
                                std::to_string(d));
  Rational r = sq.rational_value();
  if (r.get_den() != 1)
    throw std::invalid_argument("(zeta_d - zeta_d^-1)^2 is not integral");
  return r.get_num().get_si();
}

DivisionAlgebra field_algebra(const NumberField& f) {
  DivisionAlgebra d;
  d.kind = AlgebraKind::field;
  d.center = field_canonical(f);
  return d;
}

std::int64_t materialized_a(const DivisionAlgebra& d) {
  if (std::holds_alternative<std::int64_t>(d.a))
    return squarefree_part(std::get<std::int64_t>(d.a));
  return squarefree_part(zeta_diff_square(std::get<ZetaDiff>(d.a).conductor));
}

DivisionAlgebra quaternion_algebra(const NumberField& center, const ASpec& a,
                                   std::int64_t b) {
  DivisionAlgebra d;
  d.kind = AlgebraKind::quaternion;
  d.center = field_canonical(center);
  d.a = a;
  d.b = b;
  if (d.center == NumberField::rationals()) {
    d.ramified = ramified_places(materialized_a(d), b);
    if (d.ramified.empty())
      throw std::invalid_argument("split quaternion is not a division algebra");
  }
  return d;
}

std::int64_t component_dim_q(const SimpleComponent& c) {
  std::int64_t idx = c.division.index();
  return c.multiplicity * c.n * c.n * idx * idx * field_degree(c.division.center);
}

std::int64_t simple_module_dim(const SimpleComponent& c) {
  std::int64_t idx = c.division.index();
  return c.n * idx * idx * field_degree(c.division.center);
}

int quaternion_index_over_q(std::int64_t a, std::int64_t b) {
  return ramified_places(a, b).empty() ? 1 : 2;
}

}  // namespace sl2q
