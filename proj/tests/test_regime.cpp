#include <doctest.h>

#include <cmath>

#include <cavepr/regime.hpp>

using namespace cavepr;

TEST_CASE("derived rates on the reference preset") {
  const DerivedRates rt = derived_rates(indium_cavity(), indium_params());
  CHECK(rt.g == doctest::Approx(kTwoPi * 0.6e6).epsilon(1e-10));
  CHECK(rt.kappa == doctest::Approx(kTwoPi * 1.0e3).epsilon(1e-12));
  CHECK(rt.Theta == doctest::Approx(kTwoPi * 8.05e3).epsilon(2e-3));
  CHECK(rt.r == doctest::Approx(1.1));
  CHECK(rt.T_pi == doctest::Approx(std::numbers::pi / rt.Theta));
}

TEST_CASE("derived rates: eta = 0") {
  SystemParams p = indium_params();
  p.eta = 0.0;
  const DerivedRates rt = derived_rates(indium_cavity(), p);
  CHECK(rt.Theta == 0.0);
  CHECK(rt.gamma_Theta == 0.0);
}

TEST_CASE("derived rates reject bad cavities") {
  CavityParams bad = indium_cavity();
  bad.finesse = 0.0;
  CHECK_THROWS_AS(derived_rates(bad, indium_params()), std::invalid_argument);
}

TEST_CASE("scheme1 report on the reference preset") {
  const RegimeReport rep = validate_scheme1(indium_params(), indium_cavity());
  CHECK(rep.chain[0] == doctest::Approx(5555.6).epsilon(1e-3));
  CHECK(rep.chain[1] == doctest::Approx(200.0).epsilon(1e-12));
  CHECK(rep.chain[2] == doctest::Approx(26.35).epsilon(1e-3));
  CHECK(rep.pass);

  // individually reported tight links
  bool found_pulse_link = false;
  for (const auto& c : rep.conditions) {
    if (c.id == "inv_pulse_time_over_kappa") {
      found_pulse_link = true;
      CHECK(c.margin == doctest::Approx(2.56).epsilon(0.01));
      CHECK_FALSE(c.pass);  // below the default threshold, reported as such
    }
    if (c.id == "chain_link_3") CHECK(c.pass);
  }
  CHECK(found_pulse_link);

  const std::string json = rep.to_json();
  CHECK(json.find("\"chain\"") != std::string::npos);
  CHECK(rep.table().find("verdict: pass") != std::string::npos);
}

TEST_CASE("low finesse fails the chain") {
  CavityParams low = indium_cavity();
  low.finesse = 1e3;
  const RegimeReport rep = validate_scheme1(indium_params(), low);
  CHECK(rep.chain[1] == doctest::Approx(0.2));
  bool checked = false;
  for (const auto& c : rep.conditions)
    if (c.id == "chain_link_2") {
      CHECK(c.margin < 1.0);
      CHECK_FALSE(c.pass);
      checked = true;
    }
  CHECK(checked);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("margins are scale invariant") {
  const SystemParams p = indium_params();
  const CavityParams cav = indium_cavity();
  const RegimeReport a = validate_scheme1(p, cav);

  SystemParams p2 = p;
  const double f = 3.7;
  p2.nu *= f;
  p2.Delta *= f;
  p2.Omega.amplitude *= f;
  p2.gamma *= f;
  p2.g1 *= f;
  p2.g2 *= f;
  p2.delta1 *= f;
  p2.delta2 *= f;
  p2.kappa1 *= f;
  p2.kappa2 *= f;
  CavityParams cav2 = cav;
  cav2.delta_omega *= f;
  const RegimeReport b = validate_scheme1(p2, cav2);
  REQUIRE(a.conditions.size() == b.conditions.size());
  for (std::size_t k = 0; k < a.conditions.size(); ++k)
    CHECK(b.conditions[k].margin ==
          doctest::Approx(a.conditions[k].margin).epsilon(1e-12));
}

TEST_CASE("scheme2 report") {
  SystemParams p = indium_params();
  p.eta = 0.03;
  const RegimeReport rep =
      validate_scheme2(p, indium_cavity(), 100.0);
  // eta sinh|chi|T1 = 0.03 * 10 = 0.3 < 1
  for (const auto& c : rep.conditions)
    if (c.id == "inv_lamb_dicke_excursion")
      CHECK(c.margin == doctest::Approx(1.0 / 0.3));

  // middle link of nu >> g/300 >> kappa is marginal on these numbers
  for (const auto& c : rep.conditions) {
    if (c.id == "g_300_over_kappa") {
      CHECK(c.margin == doctest::Approx(2.0).epsilon(1e-6));
      CHECK_FALSE(c.pass);
    }
    if (c.id == "nu_over_g_300")
      CHECK(c.margin == doctest::Approx(1500.0).epsilon(1e-6));
  }
  CHECK_FALSE(rep.pass);

  CHECK_THROWS_AS(validate_scheme2(indium_params(), indium_cavity(), 100.0),
                  std::domain_error);  // eta = 0.1 -> excursion 1
  CHECK_THROWS_AS(validate_scheme2(p, indium_cavity(), -1.0),
                  std::invalid_argument);
}
