#include <doctest.h>

#include "sl2q/fieldsalg.hpp"

using namespace sl2q;

TEST_CASE("field_canonical collapses small real cyclotomics") {
  CHECK(field_canonical(NumberField::real_cyclotomic(3)) ==
        NumberField::rationals());
  CHECK(field_canonical(NumberField::real_cyclotomic(4)) ==
        NumberField::rationals());
  CHECK(field_canonical(NumberField::real_cyclotomic(6)) ==
        NumberField::rationals());
  CHECK(field_canonical(NumberField::real_cyclotomic(5)) ==
        NumberField::quadratic(5));
  CHECK(field_canonical(NumberField::real_cyclotomic(8)) ==
        NumberField::quadratic(2));
  CHECK(field_canonical(NumberField::real_cyclotomic(12)) ==
        NumberField::quadratic(3));
  CHECK(field_canonical(NumberField::real_cyclotomic(10)) ==
        NumberField::quadratic(5));
  CHECK(field_canonical(NumberField::real_cyclotomic(7)) ==
        NumberField::real_cyclotomic(7));
  CHECK(field_canonical(NumberField::real_cyclotomic(14)) ==
        NumberField::real_cyclotomic(7));
  CHECK(field_canonical(NumberField::quadratic(-7)) ==
        NumberField::quadratic(-7));
  CHECK_THROWS_AS(field_canonical(NumberField::quadratic(4)),
                  MalformedDescriptor);
  CHECK_THROWS_AS(field_canonical(NumberField::real_cyclotomic(2)),
                  MalformedDescriptor);
}

TEST_CASE("field_canonical is idempotent and degree-preserving") {
  std::vector<NumberField> fields{NumberField::rationals(),
                                  NumberField::quadratic(-1),
                                  NumberField::quadratic(10)};
  for (std::int64_t d = 3; d <= 40; ++d) {
    if (d % 4 == 2 && d / 2 < 3) continue;
    fields.push_back(NumberField::real_cyclotomic(d));
  }
  for (const auto& f : fields) {
    NumberField c = field_canonical(f);
    CHECK(field_canonical(c) == c);
    CHECK(field_degree(c) == field_degree(f));
  }
}

TEST_CASE("field_degree") {
  CHECK(field_degree(NumberField::rationals()) == 1);
  CHECK(field_degree(NumberField::real_cyclotomic(16)) == 4);
  CHECK(field_degree(NumberField::quadratic(-7)) == 2);
  CHECK(field_degree(NumberField::real_cyclotomic(25)) == 10);
}

TEST_CASE("zeta_diff_square") {
  CHECK(zeta_diff_square(3) == -3);
  CHECK(zeta_diff_square(4) == -4);
  CHECK(zeta_diff_square(6) == -3);
  CHECK_THROWS_AS(zeta_diff_square(5), std::invalid_argument);
}

TEST_CASE("quaternion construction over Q computes ramification") {
  DivisionAlgebra d = quaternion_algebra(NumberField::rationals(),
                                         std::int64_t{-1}, -1);
  CHECK(d.index() == 2);
  CHECK(d.ramified ==
        std::vector<Place>{Place::at(2), Place::infinite_place()});

  // (zeta_6 - zeta_6^-1, -5) over the rational real cyclotomic center
  DivisionAlgebra dd =
      quaternion_algebra(NumberField::real_cyclotomic(6), ZetaDiff{6}, -5);
  CHECK(dd.center == NumberField::rationals());
  CHECK(materialized_a(dd) == -3);
  CHECK(dd.ramified ==
        std::vector<Place>{Place::at(5), Place::infinite_place()});

  CHECK_THROWS_AS(
      quaternion_algebra(NumberField::rationals(), std::int64_t{1}, 7),
      std::invalid_argument);

  // non-rational center: no ramification data, symbolic a kept
  DivisionAlgebra dq =
      quaternion_algebra(NumberField::real_cyclotomic(8), ZetaDiff{8}, -7);
  CHECK(dq.center == NumberField::quadratic(2));
  CHECK(dq.ramified.empty());
  CHECK(dq.index() == 2);
}

TEST_CASE("component dimensions") {
  SimpleComponent a{1, 3, field_algebra(NumberField::quadratic(-7))};
  CHECK(component_dim_q(a) == 18);
  SimpleComponent b{
      1, 2, quaternion_algebra(NumberField::rationals(), std::int64_t{-1}, -1)};
  CHECK(component_dim_q(b) == 16);
  SimpleComponent c{2, 5, field_algebra(NumberField::rationals())};
  CHECK(component_dim_q(c) == 50);
  CHECK(component_dim_q(c) == 2 * component_dim_q(SimpleComponent{
                                    1, 5, field_algebra(NumberField::rationals())}));
  CHECK(simple_module_dim(a) == 6);
  CHECK(simple_module_dim(b) == 8);
}

TEST_CASE("quaternion_index_over_q") {
  CHECK(quaternion_index_over_q(-1, -1) == 2);
  CHECK(quaternion_index_over_q(1, 7) == 1);
  CHECK(quaternion_index_over_q(-1, -5) == 2);
  CHECK(quaternion_index_over_q(2, -1) == 1);  // norm form of Q(i) hits 2
}
