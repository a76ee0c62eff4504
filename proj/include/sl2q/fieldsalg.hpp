#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include "sl2q/numtheory.hpp"

namespace sl2q {

struct MalformedDescriptor : std::domain_error {
  using std::domain_error::domain_error;
};

enum class FieldKind { rationals, quadratic, real_cyclotomic };

// Symbolic number field: Q, Q(sqrt(d)) for squarefree d, or the real
// cyclotomic field Q(zeta_d + zeta_d^-1). In scope these are pairwise
// non-isomorphic after canonicalization, so structural equality is field
// isomorphism.
struct NumberField {
  FieldKind kind = FieldKind::rationals;
  std::int64_t param = 0;  // quadratic: d; real_cyclotomic: conductor

  static NumberField rationals() { return {FieldKind::rationals, 0}; }
  static NumberField quadratic(std::int64_t d) {
    return {FieldKind::quadratic, d};
  }
  static NumberField real_cyclotomic(std::int64_t d) {
    return {FieldKind::real_cyclotomic, d};
  }

  friend bool operator==(const NumberField&, const NumberField&) = default;
};

// Degree-1 real cyclotomics collapse to Q, degree-2 ones to their quadratic
// field (conductor 5 -> Q(sqrt 5), 8 -> Q(sqrt 2), 12 -> Q(sqrt 3)), and
// conductors d = 2 (mod 4) are replaced by d/2. Idempotent.
NumberField field_canonical(const NumberField& f);

std::int64_t field_degree(const NumberField& f);

// (zeta_d - zeta_d^-1)^2 as an exact integer; requires the real cyclotomic
// field of conductor d to be Q (d in {3, 4, 6}).
std::int64_t zeta_diff_square(std::int64_t d);

enum class AlgebraKind { field, quaternion };

// The element zeta_d - zeta_d^-1, whose square lies in Q(zeta_d + zeta_d^-1);
// used as the first slot of the quaternion symbols below.
struct ZetaDiff {
  std::int64_t conductor = 0;
  friend bool operator==(const ZetaDiff&, const ZetaDiff&) = default;
};

using ASpec = std::variant<std::int64_t, ZetaDiff>;

// A field, or a quaternion division algebra (a, b | center). Quaternions over
// Q carry their computed ramified places (even cardinality, nonempty).
struct DivisionAlgebra {
  AlgebraKind kind = AlgebraKind::field;
  NumberField center;
  ASpec a = std::int64_t{0};
  std::int64_t b = 0;
  std::vector<Place> ramified;

  int index() const { return kind == AlgebraKind::quaternion ? 2 : 1; }

  friend bool operator==(const DivisionAlgebra&, const DivisionAlgebra&) =
      default;
};

DivisionAlgebra field_algebra(const NumberField& f);
DivisionAlgebra quaternion_algebra(const NumberField& center, const ASpec& a,
                                   std::int64_t b);

// Square-class representative of a over Q; requires a rational center when a
// is symbolic.
std::int64_t materialized_a(const DivisionAlgebra& d);

struct SimpleComponent {
  std::int64_t multiplicity = 1;
  std::int64_t n = 1;
  DivisionAlgebra division;

  friend bool operator==(const SimpleComponent&, const SimpleComponent&) =
      default;
};

// multiplicity * n^2 * index^2 * [center : Q]
std::int64_t component_dim_q(const SimpleComponent& c);

// Q-dimension of the simple module of one copy of M_n(D): n * index^2 * [Z:Q].
std::int64_t simple_module_dim(const SimpleComponent& c);

// 1 if (a,b) is split over Q (everywhere unramified), else 2.
int quaternion_index_over_q(std::int64_t a, std::int64_t b);

}  // namespace sl2q
