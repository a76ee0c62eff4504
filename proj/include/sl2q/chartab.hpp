#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2q/cyclotomic.hpp"
#include "sl2q/decomposition.hpp"

namespace sl2q {

struct UnsupportedQ : std::domain_error {
  using std::domain_error::domain_error;
};

enum class ClassTag {
  identity,        // I
  minus_identity,  // -I
  unipotent,       // N
  unipotent_prime, // N'
  minus_unipotent,       // -N
  minus_unipotent_prime, // -N'
  split,           // S(a), split torus
  nonsplit,        // T(b), nonsplit torus
};

struct ConjClassLabel {
  ClassTag tag = ClassTag::identity;
  std::int64_t param = 0;  // a or b where applicable
  std::int64_t size = 1;
};

std::string to_string(const ConjClassLabel& c);

// Class labels and sizes of the printed tables (including the exceptional
// half-size torus class of the odd PSL2 tables).
std::vector<ConjClassLabel> table_classes(GroupKind kind, const PrimePower& q);

enum class CharFamily {
  trivial,        // psi_1
  steinberg,      // psi_q
  principal,      // psi_{q+1}^(i)
  discrete,       // psi_{q-1}^(j)
  plus_prime,     // psi'_+
  plus_dprime,    // psi''_+
  minus_prime,    // psi'_-
  minus_dprime,   // psi''_-
};

struct CharLabel {
  CharFamily family = CharFamily::trivial;
  std::int64_t param = 0;  // i or j for the series families

  friend bool operator==(const CharLabel&, const CharLabel&) = default;
};

std::string to_string(const CharLabel& c);
std::int64_t char_degree(const CharLabel& c, const PrimePower& q);

struct CharacterTable {
  GroupKind kind = GroupKind::PSL2;
  PrimePower q;
  std::int64_t order = 0;
  std::vector<ConjClassLabel> classes;
  std::vector<CharLabel> rows;
  std::vector<std::vector<Cyclotomic>> values;      // rows x classes
  std::vector<std::vector<std::string>> display;    // symbolic cell text
  std::vector<std::string> legend;                  // e.g. w = (1+sqrt(-7))/2
};

// Exact transcription of the character table for the given group; q >= 4
// (and odd q >= 5 for SL2; even SL2 is normalized to PSL2).
CharacterTable build_table(GroupKind kind, const PrimePower& q);

struct OrthoFailure {
  bool column = false;  // false: row pair, true: class pair
  int i = 0, j = 0;
  std::string detail;
};

struct OrthoReport {
  bool pass = true;
  std::vector<OrthoFailure> failures;
};

// Exact first (row) and second (column) orthogonality.
OrthoReport verify_orthogonality(const CharacterTable& t);

struct GaloisOrbit {
  std::vector<int> members;  // row indices
  int representative = 0;
  NumberField field;   // canonical character field
  int schur = 1;
};

// Partition of the rows under Galois conjugacy, with character fields
// computed from the fixed subgroup of the values and Schur indices assigned
// from the label. Orbit size always equals the field degree.
std::vector<GaloisOrbit> galois_orbits(const CharacterTable& t);

int schur_index(GroupKind kind, const CharLabel& label, const PrimePower& q);

struct OracleComponent {
  std::int64_t n = 1;
  NumberField center;
  int index = 1;
};

struct OracleDecomposition {
  GroupKind kind = GroupKind::PSL2;
  PrimePower q;
  std::vector<OracleComponent> components;  // one per orbit
};

// Wedderburn decomposition reconstructed from the character table alone:
// one component per Galois orbit with n = degree / schur index. Quaternion
// (a, b) data is not reconstructed; comparison is by signature.
OracleDecomposition oracle_decompose(GroupKind kind, std::int64_t q_raw);

struct MatchReport {
  bool match = true;
  std::vector<std::string> mismatches;
};

// Multiset equality of (n, canonical center, index) signatures, components
// expanded by multiplicity.
MatchReport compare(const WedderburnDecomposition& closed,
                    const OracleDecomposition& oracle);

}  // namespace sl2q
