#include <doctest.h>

#include "sl2q/render.hpp"

using namespace sl2q;

TEST_CASE("field and component rendering") {
  RenderOptions utf8{}, ascii{true};
  CHECK(render_field(NumberField::rationals()) == "Q");
  CHECK(render_field(NumberField::quadratic(-7)) == "Q(√-7)");
  CHECK(render_field(NumberField::quadratic(-7), ascii) == "Q(sqrt(-7))");
  CHECK(render_field(NumberField::real_cyclotomic(7), ascii) ==
        "Q(zeta_7+zeta_7^-1)");

  SimpleComponent steinberg{1, 7, field_algebra(NumberField::rationals())};
  CHECK(render_component(steinberg, utf8) == "M_7(Q)");
  SimpleComponent trivial{1, 1, field_algebra(NumberField::rationals())};
  CHECK(render_component(trivial, utf8) == "Q");
  SimpleComponent twice{2, 5, field_algebra(NumberField::rationals())};
  CHECK(render_component(twice, ascii) == "2 x M_5(Q)");

  SimpleComponent quat{
      1, 2, quaternion_algebra(NumberField::real_cyclotomic(6), ZetaDiff{6}, -5)};
  CHECK(render_component(quat, ascii) == "M_2((-3, -5 | Q))");
  SimpleComponent quat_sym{
      1, 5, quaternion_algebra(NumberField::real_cyclotomic(8), ZetaDiff{8}, -1)};
  CHECK(render_component(quat_sym, ascii) ==
        "M_5((zeta_8-zeta_8^-1, -1 | Q(sqrt(2))))");
}

TEST_CASE("decomposition text matches the documented form") {
  WedderburnDecomposition w = decompose(GroupKind::PSL2, 7);
  CHECK(render_decomposition(w, {}) ==
        "Q ⊕ M_3(Q(√-7)) ⊕ M_6(Q) ⊕ M_7(Q) ⊕ M_8(Q)");
  CHECK(render_decomposition(w, {true}) ==
        "Q (+) M_3(Q(sqrt(-7))) (+) M_6(Q) (+) M_7(Q) (+) M_8(Q)");
}

TEST_CASE("notes flag the D'' convention only for square SL2 cases") {
  CHECK(decomposition_notes(decompose(GroupKind::SL2, 9)).size() == 1);
  CHECK(decomposition_notes(decompose(GroupKind::SL2, 49)).size() == 1);
  CHECK(decomposition_notes(decompose(GroupKind::SL2, 5)).empty());
  CHECK(decomposition_notes(decompose(GroupKind::PSL2, 9)).empty());
}

TEST_CASE("decomposition JSON document") {
  WedderburnDecomposition w = decompose(GroupKind::SL2, 5);
  nlohmann::ordered_json doc = decomposition_document(w);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["group"] == "SL2");
  CHECK(doc["q"] == 5);
  CHECK(doc["p"] == 5);
  CHECK(doc["m"] == 1);
  CHECK(doc["order"] == 120);
  REQUIRE(doc["components"].size() == 7);

  std::int64_t total = 0;
  for (const auto& c : doc["components"])
    total += c["dim_over_Q"].get<std::int64_t>() *
             c["multiplicity"].get<std::int64_t>();
  CHECK(total == 120);

  // the (zeta_6 - zeta_6^-1, -5) component materializes a = -3 over Q
  const auto& d6 = doc["components"][2]["division"];
  CHECK(d6["kind"] == "quaternion");
  CHECK(d6["a"] == -3);
  CHECK(d6["b"] == -5);
  CHECK(d6["index"] == 2);
  REQUIRE(d6.contains("ramified_places"));
  CHECK(d6["ramified_places"][0] == 5);
  CHECK(d6["ramified_places"][1] == "oo");
}

TEST_CASE("JSON round-trips byte-identically") {
  for (std::int64_t q : {5, 7, 9, 49}) {
    for (GroupKind kind : {GroupKind::PSL2, GroupKind::SL2}) {
      std::string once = decomposition_document(decompose(kind, q)).dump(2);
      std::string twice = nlohmann::ordered_json::parse(once).dump(2);
      REQUIRE(once == twice);
    }
    std::string c1 = counts_document(GroupKind::SL2, factor_prime_power(q)).dump(2);
    REQUIRE(nlohmann::ordered_json::parse(c1).dump(2) == c1);
  }
}

TEST_CASE("counts document") {
  nlohmann::ordered_json doc =
      counts_document(GroupKind::PSL2, factor_prime_power(9));
  CHECK(doc["rational_irr_count"] == 6);
  REQUIRE(doc["module_dimensions"].size() == 5);
  CHECK(doc["module_dimensions"][1]["dim"] == 5);
  CHECK(doc["module_dimensions"][1]["count"] == 2);
}

TEST_CASE("table rendering") {
  CharacterTable t = build_table(GroupKind::SL2, factor_prime_power(7));
  std::string text = render_table(t);
  CHECK(text.find("Character table of SL2(7), order 336") != std::string::npos);
  CHECK(text.find("|x^G|") != std::string::npos);
  CHECK(text.find("w = (1+sqrt(-7))/2") != std::string::npos);
  CHECK(text.find("psi_{q-1}^(1)") != std::string::npos);
  CHECK(text.find("-z8-z8^-1") != std::string::npos);  // psi_{q-1}^(1) at T(1)
  CHECK(text.find("w*") != std::string::npos);

  // the exceptional half-size classes of the odd PSL2 tables are present
  CharacterTable t13 = build_table(GroupKind::PSL2, factor_prime_power(13));
  std::string text13 = render_table(t13);
  CHECK(text13.find("S(3)") != std::string::npos);
  CHECK(text13.find("psi'_+") != std::string::npos);
}
