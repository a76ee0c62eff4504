#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2q/decomposition.hpp"
#include "sl2q/numtheory.hpp"

namespace sl2q {

struct BoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kFieldBound = 1 << 14;       // max p^m
inline constexpr std::int64_t kGroupOrderBound = 200000;   // max |G|

// F_{p^m} = F_p[x]/(f) with f monic irreducible. Elements are codes in
// [0, p^m): the base-p digits of a code are the coefficients of the residue
// polynomial, constant term first.
class Gf {
 public:
  Gf(std::int64_t p, int m, std::vector<int> modulus_poly);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  std::int64_t q() const { return q_; }
  const std::vector<int>& modulus_poly() const { return f_; }

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;
  std::int64_t pow(std::int64_t a, std::int64_t e) const;

  std::vector<int> coeffs(std::int64_t code) const;
  std::int64_t encode(const std::vector<int>& coeffs) const;

  // A generator of the multiplicative group (smallest code).
  std::int64_t generator() const;
  bool is_square(std::int64_t a) const;  // nonzero a, odd q

 private:
  std::int64_t mul_poly(std::int64_t a, std::int64_t b) const;

  std::int64_t p_, q_;
  int m_;
  std::vector<int> f_;
  std::vector<std::int32_t> mul_table_;  // populated for small q
  mutable std::int64_t generator_ = -1;
};

// Field with the lexicographically smallest monic irreducible polynomial of
// degree m (ordered by the base-p code of the non-leading coefficients);
// skip > 0 selects later irreducibles instead, for invariance checks.
Gf gf_construct(std::int64_t p, int m, int skip = 0,
                std::int64_t bound = kFieldBound);

struct Mat2 {
  std::int64_t a = 0, b = 0, c = 0, d = 0;  // entry codes in a fixed Gf

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// All of SL2(q), or canonical coset representatives of PSL2(q) (the
// lexicographically smaller of {M, -M}).
std::vector<Mat2> enumerate_group(GroupKind kind, const PrimePower& q,
                                  const Gf& field,
                                  std::int64_t bound = kGroupOrderBound);
std::vector<Mat2> enumerate_group(GroupKind kind, const PrimePower& q,
                                  std::int64_t bound = kGroupOrderBound);

struct ConjClass {
  Mat2 rep;
  std::int64_t size = 0;
};

struct ClassData {
  std::int64_t order = 0;
  std::vector<ConjClass> classes;  // sorted by (size, rep code)
};

ClassData conjugacy_classes(GroupKind kind, const PrimePower& q,
                            const Gf& field,
                            std::int64_t bound = kGroupOrderBound);
ClassData conjugacy_classes(GroupKind kind, const PrimePower& q,
                            std::int64_t bound = kGroupOrderBound);

struct ClassCheckReport {
  bool pass = true;
  std::vector<std::string> problems;
};

// Matches the brute-force classes against the printed table layout: count,
// size multiset, and an explicit label-to-class bijection through concrete
// representatives (sigma-powers for S(a), a norm-one torus trace for T(b)).
ClassCheckReport verify_class_data(GroupKind kind, const PrimePower& q);

}  // namespace sl2q
