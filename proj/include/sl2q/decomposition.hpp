#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sl2q/fieldsalg.hpp"
#include "sl2q/numtheory.hpp"

namespace sl2q {

enum class GroupKind { SL2, PSL2 };

// PSL2(q) = SL2(q) in characteristic 2.
GroupKind normalize_kind(GroupKind kind, const PrimePower& q);

std::int64_t group_order(GroupKind kind, const PrimePower& q);

// The divisor families indexing the components: for even q, A and B are the
// divisors of q+1 resp. q-1 exceeding 2; for odd q they are the divisors of
// (q+1)/2 resp. (q-1)/2 exceeding 2, and A'/B' (SL2 only) collect divisors of
// q+1 resp. q-1 exceeding 2 that do not divide the half.
struct DivisorSets {
  std::vector<std::int64_t> A, A_prime, B, B_prime;
};

DivisorSets divisor_sets(GroupKind kind, const PrimePower& q);

struct WedderburnDecomposition {
  GroupKind kind = GroupKind::PSL2;
  PrimePower q;
  std::int64_t order = 0;
  std::vector<SimpleComponent> components;  // canonical sort order
};

// Closed-form Wedderburn decomposition of Q[SL2(q)] / Q[PSL2(q)], q >= 4.
// Throws NotPrimePower / QTooSmall on bad q.
WedderburnDecomposition decompose(GroupKind kind, std::int64_t q_raw);

// Number of irreducible rational characters (= number of components counted
// with multiplicity).
std::int64_t rational_irr_count(GroupKind kind, const PrimePower& q);

// (dimension, count) for the simple rational modules, ascending by dimension.
std::vector<std::pair<std::int64_t, std::int64_t>> simple_module_dimensions(
    GroupKind kind, const PrimePower& q);

struct AuditReport {
  std::int64_t dim_sum = 0;
  std::int64_t group_order = 0;
  std::int64_t component_count = 0;  // with multiplicity
  std::int64_t expected_count = 0;
  bool sum_ok = false;
  bool count_ok = false;
  bool pass() const { return sum_ok && count_ok; }
};

AuditReport dimension_audit(const WedderburnDecomposition& w);

// Deterministic component order: n, then center degree, then center
// (kind, parameter), then index, then the quaternion data.
bool component_less(const SimpleComponent& x, const SimpleComponent& y);

}  // namespace sl2q
