#include <doctest.h>

#include <cmath>

#include "varcmp/aux_functions.hpp"
#include "varcmp/errors.hpp"
#include "varcmp/varband.hpp"

using namespace varcmp;

namespace {

struct AuxRef {
  AuxFn f;
  double y;
  double v;
};

// mpmath, 40 digits, straight from the defining formulas
constexpr AuxRef kAux[] = {
    {AuxFn::H1, 3, 2.0562051729783782},   {AuxFn::H1, 5, 1.6450127023600744},
    {AuxFn::H1, 12, 1.3787715292889758},  {AuxFn::H1, 100, 1.2273182983055432},
    {AuxFn::H2, 3, 2.8743553568193771},   {AuxFn::H2, 5, 2.4452299532685847},
    {AuxFn::H2, 12, 2.1722802699845108},  {AuxFn::H2, 100, 2.0200680438379465},
    {AuxFn::H3, 3, 3.4657359027997265},   {AuxFn::H3, 5, 3.0641405807386498},
    {AuxFn::H3, 12, 2.8382557567571507},  {AuxFn::H3, 100, 2.7359927561106115},
    {AuxFn::H4, 3, -2.1501665118848334},  {AuxFn::H4, 12, -1.4223757956547338},
    {AuxFn::H4, 50, -1.2801753579096006}, {AuxFn::R4, 15, 0.64551234884175676},
    {AuxFn::R4, 50, 0.59025865998863085}, {AuxFn::Kfun, 5, 2.8033008588991064},
    {AuxFn::Kfun, 30, 2.4532143969842244}, {AuxFn::V, 25, 0.0027056354728792316},
    {AuxFn::V, 30, 0.0019523989915896198}, {AuxFn::V, 40, 0.0011218612704232484},
    {AuxFn::G1, 25, -1.4617913170738094e+9}, {AuxFn::G1, 33, -9.4761748292478528e+9},
    {AuxFn::G2, 25, -5.4027517999450289e+11}, {AuxFn::G2, 40, -2.9300521565232633e+13},
};

}  // namespace

TEST_CASE("values against mpmath") {
  for (const auto& r : kAux) {
    CAPTURE(to_string(r.f));
    CAPTURE(r.y);
    CHECK(std::fabs(aux_eval(r.f, r.y) - r.v) <= 1e-12 * std::fmax(1.0, std::fabs(r.v)));
  }
}

TEST_CASE("published tables") {
  for (AuxFn f : {AuxFn::H2, AuxFn::H3, AuxFn::H4, AuxFn::G1}) {
    const auto table = reference_table(f);
    REQUIRE(table.has_value());
    CAPTURE(to_string(f));
    for (const auto& tv : table->values) {
      CAPTURE(tv.y);
      const double got = aux_eval(f, tv.y);
      const double err = table->relative ? std::fabs(got - tv.value) / std::fabs(tv.value)
                                         : std::fabs(got - tv.value);
      CHECK(err <= table->tolerance);
    }
  }
  CHECK(reference_table(AuxFn::H2)->values.size() == 3);
  CHECK(reference_table(AuxFn::H3)->values.size() == 10);
  CHECK(reference_table(AuxFn::H4)->values.size() == 10);
  CHECK(reference_table(AuxFn::G1)->values.size() == 9);
  CHECK_FALSE(reference_table(AuxFn::L1).has_value());
}

TEST_CASE("H2 table endpoints") {
  CHECK(std::fabs(aux_eval(AuxFn::H2, 3) - 2.87436) < 1e-5);
  CHECK(std::fabs(aux_eval(AuxFn::H2, 4) - 2.58363) < 1e-5);
  CHECK(std::fabs(aux_eval(AuxFn::H2, 5) - 2.44523) < 1e-5);
  CHECK(std::fabs(aux_eval(AuxFn::H3, 3) - 3.46574) < 1e-5);
  CHECK(std::fabs(aux_eval(AuxFn::H4, 3) + 2.15017) < 1e-5);
  CHECK(std::fabs(aux_eval(AuxFn::G1, 25) / -1.46179e9 - 1.0) < 1e-5);
}

TEST_CASE("analytic derivatives match central differences") {
  for (AuxFn f : {AuxFn::H1, AuxFn::H2, AuxFn::H3, AuxFn::H4, AuxFn::R4}) {
    for (double y = aux_domain_min(f) + 0.5; y <= 200.0; y += 3.25) {
      const double h = 1e-4 * y;
      const double fd = (aux_eval(f, y + h) - aux_eval(f, y - h)) / (2.0 * h);
      CAPTURE(to_string(f));
      CAPTURE(y);
      REQUIRE(std::fabs(aux_derivative(f, y) - fd) <= 1e-7 * std::fmax(1.0, std::fabs(fd)) + 1e-10);
    }
  }
  CHECK_THROWS_AS(aux_derivative(AuxFn::V, 30.0), DomainError);
}

TEST_CASE("derivative bounds dominate the derivatives") {
  // L_x >= H_x', L4 >= -H4', Q4 <= -R4'
  for (double y = 12.0; y <= 200.0; y += 0.5) {
    CAPTURE(y);
    REQUIRE(aux_eval(AuxFn::L3, y) >= aux_derivative(AuxFn::H3, y));
    REQUIRE(aux_eval(AuxFn::L4, y) >= -aux_derivative(AuxFn::H4, y));
    REQUIRE(aux_eval(AuxFn::L1, y) >= aux_derivative(AuxFn::H1, y));
    REQUIRE(aux_eval(AuxFn::L2, y) >= aux_derivative(AuxFn::H2, y));
    if (y >= 15.0) REQUIRE(aux_eval(AuxFn::Q4, y) <= -aux_derivative(AuxFn::R4, y));
  }
}

TEST_CASE("C(y) and D(y) are the d1 = 3 endpoints") {
  for (int y = 25; y <= 200; ++y) {
    const Endpoints e = band_endpoints(FParams{3, y});
    CAPTURE(y);
    REQUIRE(std::fabs(c_of_y(y) - e.C) <= 1e-13 * e.C);
    REQUIRE(std::fabs(d_of_y(y) - e.D) <= 1e-13 * e.D);
  }
}

TEST_CASE("the displayed G1/G2 differs from V") {
  // mpmath gives (G1/G2)/V - 1 = 2.4798e-6 at y = 25 and 6.4786e-8 at y = 40
  const double r25 = aux_eval(AuxFn::G1, 25) / aux_eval(AuxFn::G2, 25) / aux_eval(AuxFn::V, 25) - 1.0;
  const double r40 = aux_eval(AuxFn::G1, 40) / aux_eval(AuxFn::G2, 40) / aux_eval(AuxFn::V, 40) - 1.0;
  CHECK(r25 == doctest::Approx(2.4798e-6).epsilon(1e-4));
  CHECK(r40 == doctest::Approx(6.4786e-8).epsilon(1e-3));
  for (int y = 25; y <= 40; ++y) {
    CHECK(aux_eval(AuxFn::G1, y) < 0.0);
    CHECK(aux_eval(AuxFn::G2, y) < 0.0);
    CHECK(aux_eval(AuxFn::V, y) > 0.0);
  }
}

TEST_CASE("domains") {
  CHECK(aux_domain_min(AuxFn::H1) == 3.0);
  CHECK(aux_domain_min(AuxFn::R4) == 15.0);
  CHECK(aux_domain_min(AuxFn::L3) == 12.0);
  CHECK_THROWS_AS(aux_eval(AuxFn::H1, 2.5), DomainError);
  CHECK_THROWS_AS(aux_eval(AuxFn::R4, 14.0), DomainError);
  CHECK_THROWS_AS(aux_eval(AuxFn::V, 4.0), DomainError);
  CHECK_THROWS_AS(aux_eval(AuxFn::H2, NAN), DomainError);
  CHECK_THROWS_AS(aux_eval(AuxFn::H2, INFINITY), DomainError);
  CHECK_THROWS_AS(s1(4.0), DomainError);
  CHECK_THROWS_AS(p_x(0, 5.0), DomainError);
  CHECK(parse_aux_fn("K") == AuxFn::Kfun);
  CHECK_FALSE(parse_aux_fn("H9").has_value());
}

TEST_CASE("building blocks") {
  CHECK(p_x(1, 6.0) == doctest::Approx((1.0 / 6.0) * (1.0 + std::sqrt(14.0 / 4.0))));
  CHECK(r_fn(18.0) == doctest::Approx(4.0 / 18.0 * (1.0 - std::sqrt(22.0 / 32.0))));
  CHECK(s1(9.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(s2(6.0) == doctest::Approx(1.5));
}
