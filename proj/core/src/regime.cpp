#include "cavepr/regime.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cavepr/effective.hpp"

namespace cavepr {

namespace {

RegimeCondition make_condition(std::string id, double left, double right,
                               double threshold) {
  RegimeCondition c;
  c.id = std::move(id);
  c.left = left;
  c.relation = ">>";
  c.right = right;
  c.margin = left / right;
  c.pass = c.margin >= threshold;
  return c;
}

}  // namespace

DerivedRates derived_rates(const CavityParams& cavity,
                           const SystemParams& atom) {
  if (cavity.sigma_tilde <= 0 || cavity.delta_omega <= 0 ||
      cavity.finesse <= 0)
    throw std::invalid_argument(
        "derived_rates: cavity parameters must be positive");
  atom.validate();
  const double abs_delta = std::abs(atom.Delta);
  if (abs_delta <= 0)
    throw std::invalid_argument("derived_rates: Delta must be nonzero");

  DerivedRates rt;
  rt.g = std::sqrt(cavity.sigma_tilde * atom.gamma * cavity.delta_omega);
  rt.kappa = cavity.delta_omega / cavity.finesse;
  const double omega = atom.Omega.amplitude;
  rt.Theta = std::sqrt(2.0) * atom.eta *
             std::sqrt(2.0 * atom.nu / abs_delta) * (omega / abs_delta) *
             rt.g;
  rt.gamma_Theta =
      atom.gamma * atom.eta * atom.eta * omega * omega / (abs_delta * abs_delta);
  rt.gamma_kappa = atom.gamma * rt.g * rt.g / (abs_delta * abs_delta);
  rt.r = 1.0 + 2.0 * atom.nu / abs_delta;
  rt.T_pi = rt.Theta > 0 ? std::numbers::pi / rt.Theta : 0.0;
  return rt;
}

RegimeReport validate_scheme1(const SystemParams& params,
                              const CavityParams& cavity, double threshold) {
  RegimeReport rep;
  rep.scheme = "scheme1";
  rep.threshold = threshold;
  rep.rates = derived_rates(cavity, params);
  const DerivedRates& rt = rep.rates;
  const double abs_delta = std::abs(params.Delta);
  const double inv_T = 1.0 / rt.T_pi;

  rep.conditions.push_back(
      make_condition("inv_pulse_time_over_kappa", inv_T, rt.kappa, threshold));
  rep.conditions.push_back(
      make_condition("nu_over_inv_pulse_time", params.nu, inv_T, threshold));
  rep.conditions.push_back(
      make_condition("nu_over_gamma", params.nu, params.gamma, threshold));
  rep.conditions.push_back(
      make_condition("Theta_over_gamma_Theta", rt.Theta, rt.gamma_Theta,
                     threshold));
  rep.conditions.push_back(
      make_condition("kappa_over_gamma_kappa", rt.kappa, rt.gamma_kappa,
                     threshold));
  // Lamb-Dicke holds at all times when eta sqrt(|Delta| / 4 nu) << 1.
  rep.conditions.push_back(make_condition(
      "inv_lamb_dicke_excursion", 1.0,
      params.eta * std::sqrt(abs_delta / (4.0 * params.nu)), threshold));

  // Summary chain: 80 (nu/gamma)^2 >> 2e-4 F >> 0.5 sqrt(dw/gamma) >> 1.
  rep.chain[0] = 80.0 * std::pow(params.nu / params.gamma, 2.0);
  rep.chain[1] = 2e-4 * cavity.finesse;
  rep.chain[2] = 0.5 * std::sqrt(cavity.delta_omega / params.gamma);
  rep.conditions.push_back(
      make_condition("chain_link_1", rep.chain[0], rep.chain[1], threshold));
  rep.conditions.push_back(
      make_condition("chain_link_2", rep.chain[1], rep.chain[2], threshold));
  rep.conditions.push_back(
      make_condition("chain_link_3", rep.chain[2], 1.0, threshold));

  rep.pass = true;
  for (const auto& c : rep.conditions)
    if (c.id.rfind("chain_link", 0) == 0 && !c.pass) rep.pass = false;
  return rep;
}

RegimeReport validate_scheme2(const SystemParams& params,
                              const CavityParams& cavity, double target_n,
                              double threshold) {
  if (target_n <= 0)
    throw std::invalid_argument("validate_scheme2: target_n must be > 0");
  const double excursion = params.eta * std::sqrt(target_n);
  if (excursion >= 1.0)
    throw std::domain_error(
        "validate_scheme2: eta * sqrt(target_n) >= 1 violates the "
        "Lamb-Dicke regime by construction");

  RegimeReport rep;
  rep.scheme = "scheme2";
  rep.threshold = threshold;
  rep.rates = derived_rates(cavity, params);
  const DerivedRates& rt = rep.rates;

  const double chi = std::abs(scheme2_coupling(params));
  if (chi <= 0)
    throw std::domain_error("validate_scheme2: vanishing coupling");
  const double t1 = std::asinh(std::sqrt(target_n)) / chi;
  const double t2 = std::numbers::pi / (2.0 * chi);

  rep.conditions.push_back(
      make_condition("nu_over_inv_T1", params.nu, 1.0 / t1, threshold));
  rep.conditions.push_back(
      make_condition("inv_T1_over_kappa", 1.0 / t1, rt.kappa, threshold));
  rep.conditions.push_back(
      make_condition("nu_over_inv_T2", params.nu, 1.0 / t2, threshold));
  rep.conditions.push_back(
      make_condition("inv_T2_over_kappa", 1.0 / t2, rt.kappa, threshold));
  rep.conditions.push_back(
      make_condition("inv_lamb_dicke_excursion", 1.0, excursion, threshold));
  rep.conditions.push_back(
      make_condition("nu_over_g_300", params.nu, rt.g / 300.0, threshold));
  rep.conditions.push_back(
      make_condition("g_300_over_kappa", rt.g / 300.0, rt.kappa, threshold));

  rep.pass = true;
  for (const auto& c : rep.conditions)
    if (!c.pass) rep.pass = false;
  return rep;
}

std::string RegimeReport::to_json() const {
  nlohmann::json j;
  j["scheme"] = scheme;
  j["threshold"] = threshold;
  j["rates"] = {{"g", rates.g},
                {"kappa", rates.kappa},
                {"Theta", rates.Theta},
                {"gamma_Theta", rates.gamma_Theta},
                {"gamma_kappa", rates.gamma_kappa},
                {"r", rates.r},
                {"T_pi", rates.T_pi}};
  j["chain"] = chain;
  j["conditions"] = nlohmann::json::array();
  for (const auto& c : conditions)
    j["conditions"].push_back({{"id", c.id},
                               {"left", c.left},
                               {"relation", c.relation},
                               {"right", c.right},
                               {"margin", c.margin},
                               {"pass", c.pass}});
  j["pass"] = pass;
  return j.dump(2);
}

std::string RegimeReport::table() const {
  std::ostringstream out;
  out.precision(4);
  out << "regime report (" << scheme << "), threshold " << threshold << "\n";
  out << "  g           = " << rates.g << "\n"
      << "  kappa       = " << rates.kappa << "\n"
      << "  Theta       = " << rates.Theta << "\n"
      << "  gamma_Theta = " << rates.gamma_Theta << "\n"
      << "  gamma_kappa = " << rates.gamma_kappa << "\n"
      << "  r           = " << rates.r << "\n"
      << "  T_pi        = " << rates.T_pi << "\n";
  if (chain[0] != 0.0)
    out << "  chain: " << chain[0] << " >> " << chain[1] << " >> " << chain[2]
        << " >> 1\n";
  for (const auto& c : conditions)
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": "
        << c.left << " " << c.relation << " " << c.right
        << "  (margin " << c.margin << ")\n";
  out << "  verdict: " << (pass ? "pass" : "FAIL") << "\n";
  return out.str();
}

SystemParams indium_params() {
  SystemParams p;
  p.nu = kTwoPi * 3.0e6;
  p.Delta = -kTwoPi * 60.0e6;
  p.Omega.amplitude = kTwoPi * 18.0e6;
  p.delta1 = p.nu;
  p.delta2 = -p.nu;
  p.eta = 0.1;
  p.gamma = kTwoPi * 360.0e3;
  p.g1 = kTwoPi * 0.6e6;
  p.g2 = kTwoPi * 0.6e6;
  p.kappa1 = kTwoPi * 1.0e3;
  p.kappa2 = kTwoPi * 1.0e3;
  p.validate();
  return p;
}

CavityParams indium_cavity() { return {1e-3, kTwoPi * 1.0e9, 1e6}; }

}  // namespace cavepr
