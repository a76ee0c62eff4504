#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "sl2q/chartab.hpp"

using namespace sl2q;

namespace {

Cyclotomic C(std::int64_t n) { return Cyclotomic::from_int(n); }

int row_index(const CharacterTable& t, CharFamily family, std::int64_t param) {
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    if (t.rows[r].family == family && t.rows[r].param == param)
      return static_cast<int>(r);
  REQUIRE(false);
  return -1;
}

int class_index(const CharacterTable& t, ClassTag tag, std::int64_t param) {
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    if (t.classes[c].tag == tag && t.classes[c].param == param)
      return static_cast<int>(c);
  REQUIRE(false);
  return -1;
}

const GaloisOrbit& orbit_of(const std::vector<GaloisOrbit>& orbits, int row) {
  for (const auto& o : orbits)
    if (std::find(o.members.begin(), o.members.end(), row) != o.members.end())
      return o;
  REQUIRE(false);
  static GaloisOrbit dummy;
  return dummy;
}

}  // namespace

TEST_CASE("class layout matches the printed tables") {
  auto classes4 = table_classes(GroupKind::PSL2, factor_prime_power(4));
  REQUIRE(classes4.size() == 5);
  std::vector<std::int64_t> sizes4;
  for (const auto& c : classes4) sizes4.push_back(c.size);
  CHECK(sizes4 == std::vector<std::int64_t>{1, 15, 20, 12, 12});

  auto classes7 = table_classes(GroupKind::PSL2, factor_prime_power(7));
  std::vector<std::int64_t> sizes7;
  for (const auto& c : classes7) sizes7.push_back(c.size);
  CHECK(sizes7 == std::vector<std::int64_t>{1, 24, 24, 56, 42, 21});

  auto classes5 = table_classes(GroupKind::SL2, factor_prime_power(5));
  std::vector<std::int64_t> sizes5;
  for (const auto& c : classes5) sizes5.push_back(c.size);
  CHECK(sizes5 ==
        std::vector<std::int64_t>{1, 1, 12, 12, 12, 12, 30, 20, 20});

  // class sizes always sum to the group order
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
    PrimePower pp = factor_prime_power(q);
    for (GroupKind kind : {GroupKind::PSL2, GroupKind::SL2}) {
      std::int64_t sum = 0;
      auto cls = table_classes(kind, pp);
      for (const auto& c : cls) sum += c.size;
      REQUIRE(sum == group_order(kind, pp));
      REQUIRE(cls.size() == table_classes(kind, pp).size());
    }
  }
}

TEST_CASE("table is square with the expected class count") {
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 25, 27}) {
    PrimePower pp = factor_prime_power(q);
    for (GroupKind kind : {GroupKind::PSL2, GroupKind::SL2}) {
      CharacterTable t = build_table(kind, pp);
      REQUIRE(t.rows.size() == t.classes.size());
      std::int64_t expected =
          pp.even ? q + 1
                  : (t.kind == GroupKind::PSL2 ? (q + 5) / 2 : q + 4);
      REQUIRE(static_cast<std::int64_t>(t.rows.size()) == expected);
      // row 1 is trivial
      for (const auto& v : t.values[0]) REQUIRE(v == C(1));
      // degree column matches the labels
      for (std::size_t r = 0; r < t.rows.size(); ++r)
        REQUIRE(t.values[r][0] == C(char_degree(t.rows[r], pp)));
    }
  }
}

TEST_CASE("spot values from the printed tables") {
  // PSL2(4): psi_q row over I, N, S(1), T(1), T(2)
  CharacterTable t4 = build_table(GroupKind::PSL2, factor_prime_power(4));
  int st = row_index(t4, CharFamily::steinberg, 0);
  std::vector<Cyclotomic> expected{C(4), C(0), C(1), C(-1), C(-1)};
  CHECK(t4.values[st] == expected);

  // SL2(5): psi'_-(I) = 2, psi'_-(-I) = -delta(q-1)/2 = -2
  CharacterTable t5 = build_table(GroupKind::SL2, factor_prime_power(5));
  int mp = row_index(t5, CharFamily::minus_prime, 0);
  CHECK(t5.values[mp][class_index(t5, ClassTag::identity, 0)] == C(2));
  CHECK(t5.values[mp][class_index(t5, ClassTag::minus_identity, 0)] == C(-2));

  // PSL2(7): psi_{q-1}^(2) at the exceptional class T(2) is -2 eta0^4 = 2
  CharacterTable t7 = build_table(GroupKind::PSL2, factor_prime_power(7));
  int d2 = row_index(t7, CharFamily::discrete, 2);
  CHECK(t7.values[d2][class_index(t7, ClassTag::nonsplit, 2)] == C(2));

  // PSL2(9), square subcase: omega is rational, psi'_+(N) = 2, psi''_+(N) = -1
  CharacterTable t9 = build_table(GroupKind::PSL2, factor_prime_power(9));
  int pp9 = row_index(t9, CharFamily::plus_prime, 0);
  int pd9 = row_index(t9, CharFamily::plus_dprime, 0);
  int n9 = class_index(t9, ClassTag::unipotent, 0);
  CHECK(t9.values[pp9][n9] + t9.values[pd9][n9] == C(1));
  CHECK(t9.values[pp9][n9] * t9.values[pd9][n9] == C(-2));
  CHECK(t9.legend.empty());
}

TEST_CASE("orthogonality holds exactly") {
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 13, 16}) {
    PrimePower pp = factor_prime_power(q);
    for (GroupKind kind : {GroupKind::PSL2, GroupKind::SL2}) {
      CharacterTable t = build_table(kind, pp);
      OrthoReport r = verify_orthogonality(t);
      REQUIRE(r.pass);
      REQUIRE(r.failures.empty());
    }
  }
}

TEST_CASE("orthogonality detects a corrupted entry") {
  CharacterTable t = build_table(GroupKind::PSL2, factor_prime_power(7));
  t.values[2][3] = t.values[2][3] + C(1);
  OrthoReport r = verify_orthogonality(t);
  CHECK(!r.pass);
  bool names_row2 = false;
  for (const auto& f : r.failures)
    if (!f.column && (f.i == 2 || f.j == 2)) names_row2 = true;
  CHECK(names_row2);
}

TEST_CASE("the discrete-series torus sign is forced by orthogonality") {
  // Flipping psi_{q-1}^(j) back to +(eta0^{bj} + eta0^{-bj}) on the T classes
  // breaks exact orthogonality; the minus sign is the consistent reading.
  CharacterTable t = build_table(GroupKind::SL2, factor_prime_power(5));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].family != CharFamily::discrete) continue;
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      if (t.classes[c].tag == ClassTag::nonsplit)
        t.values[r][c] = -t.values[r][c];
  }
  CHECK(!verify_orthogonality(t).pass);
}

TEST_CASE("galois orbits of PSL2(7)") {
  CharacterTable t = build_table(GroupKind::PSL2, factor_prime_power(7));
  auto orbits = galois_orbits(t);
  REQUIRE(orbits.size() == 5);
  std::vector<std::int64_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.members.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::int64_t>{1, 1, 1, 1, 2});

  int mp = row_index(t, CharFamily::minus_prime, 0);
  int md = row_index(t, CharFamily::minus_dprime, 0);
  const GaloisOrbit& pair = orbit_of(orbits, mp);
  CHECK(pair.members == std::vector<int>{mp, md});
  CHECK(pair.field == NumberField::quadratic(-7));
  CHECK(pair.schur == 1);
}

TEST_CASE("galois orbits of PSL2(4)") {
  CharacterTable t = build_table(GroupKind::PSL2, factor_prime_power(4));
  auto orbits = galois_orbits(t);
  REQUIRE(orbits.size() == 4);
  int d1 = row_index(t, CharFamily::discrete, 1);
  const GaloisOrbit& merged = orbit_of(orbits, d1);
  CHECK(merged.members.size() == 2);
  CHECK(merged.field == NumberField::quadratic(5));
  // trivial character: singleton rational orbit
  const GaloisOrbit& triv = orbit_of(orbits, 0);
  CHECK(triv.members.size() == 1);
  CHECK(triv.field == NumberField::rationals());
}

TEST_CASE("orbit count and sizes match the rational character counts") {
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 17}) {
    PrimePower pp = factor_prime_power(q);
    for (GroupKind kind : {GroupKind::PSL2, GroupKind::SL2}) {
      CharacterTable t = build_table(kind, pp);
      auto orbits = galois_orbits(t);
      REQUIRE(static_cast<std::int64_t>(orbits.size()) ==
              rational_irr_count(kind, pp));
      // second orthogonality at the identity column, grouped by orbit
      std::int64_t sum = 0;
      for (const auto& o : orbits) {
        std::int64_t deg = char_degree(t.rows[o.representative], pp);
        sum += static_cast<std::int64_t>(o.members.size()) * deg * deg;
        REQUIRE(static_cast<std::int64_t>(o.members.size()) ==
                field_degree(o.field));
      }
      REQUIRE(sum == group_order(kind, pp));
    }
  }
}

TEST_CASE("discrete-series orbit sizes follow phi((q+1)/gcd)") {
  PrimePower pp = factor_prime_power(13);
  CharacterTable t = build_table(GroupKind::SL2, pp);
  auto orbits = galois_orbits(t);
  for (std::int64_t j = 1; j <= (pp.q - 1) / 2; ++j) {
    int r = row_index(t, CharFamily::discrete, j);
    const GaloisOrbit& o = orbit_of(orbits, r);
    std::int64_t d = (pp.q + 1) / std::gcd(pp.q + 1, j);
    CHECK(static_cast<std::int64_t>(o.members.size()) == euler_phi(d) / 2);
  }
}

TEST_CASE("schur indices from the label") {
  PrimePower q5 = factor_prime_power(5);
  PrimePower q7 = factor_prime_power(7);
  CHECK(schur_index(GroupKind::SL2, {CharFamily::discrete, 1}, q5) == 2);
  CHECK(schur_index(GroupKind::SL2, {CharFamily::discrete, 2}, q5) == 1);
  CHECK(schur_index(GroupKind::SL2, {CharFamily::principal, 1}, q5) == 2);
  CHECK(schur_index(GroupKind::SL2, {CharFamily::minus_prime, 0}, q7) == 1);
  CHECK(schur_index(GroupKind::SL2, {CharFamily::minus_prime, 0}, q5) == 2);
  CHECK(schur_index(GroupKind::SL2, {CharFamily::plus_prime, 0}, q5) == 1);
  CHECK(schur_index(GroupKind::PSL2, {CharFamily::discrete, 1}, q5) == 1);
  CHECK(schur_index(GroupKind::PSL2, {CharFamily::minus_prime, 0}, q5) == 1);
}

TEST_CASE("schur index 2 forces even character degree") {
  for (std::int64_t q : {5, 7, 9, 11, 13, 17, 19, 25, 27}) {
    PrimePower pp = factor_prime_power(q);
    CharacterTable t = build_table(GroupKind::SL2, pp);
    for (const auto& label : t.rows)
      if (schur_index(GroupKind::SL2, label, pp) == 2)
        REQUIRE(char_degree(label, pp) % 2 == 0);
  }
}

TEST_CASE("oracle_decompose signatures") {
  OracleDecomposition o7 = oracle_decompose(GroupKind::PSL2, 7);
  REQUIRE(o7.components.size() == 5);
  int with_quadratic = 0;
  for (const auto& c : o7.components) {
    CHECK(c.index == 1);
    if (c.center == NumberField::quadratic(-7)) {
      ++with_quadratic;
      CHECK(c.n == 3);
    }
  }
  CHECK(with_quadratic == 1);

  OracleDecomposition o5 = oracle_decompose(GroupKind::SL2, 5);
  REQUIRE(o5.components.size() == 7);
  bool has_n2_index2 = false, has_n1_quat = false;
  for (const auto& c : o5.components) {
    if (c.n == 2 && c.center == NumberField::rationals() && c.index == 2)
      has_n2_index2 = true;
    if (c.n == 1 && c.center == NumberField::quadratic(5) && c.index == 2)
      has_n1_quat = true;
  }
  CHECK(has_n2_index2);
  CHECK(has_n1_quat);

  OracleDecomposition o9 = oracle_decompose(GroupKind::PSL2, 9);
  int fives = 0;
  for (const auto& c : o9.components)
    if (c.n == 5 && c.center == NumberField::rationals() && c.index == 1)
      ++fives;
  CHECK(fives == 2);
}

TEST_CASE("closed form matches the oracle") {
  for (std::int64_t q : {4, 5, 7, 8, 9, 11, 13}) {
    for (GroupKind kind : {GroupKind::PSL2, GroupKind::SL2}) {
      PrimePower pp = factor_prime_power(q);
      if (kind == GroupKind::SL2 && pp.even) continue;
      MatchReport r = compare(decompose(kind, q), oracle_decompose(kind, q));
      REQUIRE(r.match);
      REQUIRE(r.mismatches.empty());
    }
  }
}

TEST_CASE("compare itemizes mismatches") {
  WedderburnDecomposition w = decompose(GroupKind::PSL2, 7);
  OracleDecomposition o = oracle_decompose(GroupKind::PSL2, 7);
  w.components.pop_back();
  MatchReport r = compare(w, o);
  CHECK(!r.match);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].find("oracle only") != std::string::npos);
}
