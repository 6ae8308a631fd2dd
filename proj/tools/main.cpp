// Batch driver: parses a config file, dispatches one run, writes CSV plus a
// JSON metadata sidecar next to it.
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cavepr/compare.hpp>
#include <cavepr/gaussian.hpp>
#include <cavepr/homodyne.hpp>
#include <cavepr/integrator.hpp>
#include <cavepr/regime.hpp>

using namespace cavepr;
namespace fs = std::filesystem;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPhysics = 3;
constexpr int kExitIo = 4;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key-value config with [section] headers and '#' comments.
class Config {
 public:
  static Config load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path + "'");
    Config cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      if (line.front() == '[') {
        if (line.back() != ']')
          throw ParseError("config line " + std::to_string(lineno) +
                           ": malformed section header");
        section = line.substr(1, line.size() - 2);
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ParseError("config line " + std::to_string(lineno) +
                         ": expected key = value");
      auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string()
                                      : s.substr(a, b - a + 1);
      };
      cfg.values_[section + "." + trim(line.substr(0, eq))] =
          trim(line.substr(eq + 1));
    }
    return cfg;
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string str(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  double num(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
      std::size_t used = 0;
      const double v = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw ParseError("config key '" + key + "': not a number ('" +
                       it->second + "')");
    }
  }

  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    const auto it = values_.find(key);
    if (it == values_.end()) return out;
    std::stringstream ss(it->second);
    std::string tok;
    while (std::getline(ss, tok, ','))
      try {
        out.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw ParseError("config key '" + key + "': bad list entry '" + tok +
                         "'");
      }
    return out;
  }

  const std::map<std::string, std::string>& raw() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

// Frequencies are given in Hz unless system.units = rad.
SystemParams params_from_config(const Config& cfg, bool indium) {
  SystemParams p = indium ? indium_params() : SystemParams{};
  const std::string units = cfg.str("system.units", "hz");
  double scale = kTwoPi;
  if (units == "rad")
    scale = 1.0;
  else if (units != "hz")
    throw ParseError("system.units must be 'hz' or 'rad'");

  auto get = [&](const char* key, double current) {
    return cfg.has(std::string("system.") + key)
               ? scale * cfg.num(std::string("system.") + key, 0.0)
               : current;
  };
  p.nu = get("nu", indium ? p.nu : scale * 1.0);
  p.Delta = get("Delta", p.Delta);
  p.delta1 = cfg.has("system.delta1") ? get("delta1", 0.0) : p.nu;
  p.delta2 = cfg.has("system.delta2") ? get("delta2", 0.0) : -p.nu;
  p.Omega.amplitude = get("Omega", p.Omega.amplitude);
  p.g1 = Complex(get("g1", p.g1.real()), get("g1_im", p.g1.imag()));
  p.g2 = Complex(get("g2", p.g2.real()), get("g2_im", p.g2.imag()));
  p.gamma = get("gamma", p.gamma);
  p.kappa1 = get("kappa1", p.kappa1);
  p.kappa2 = get("kappa2", p.kappa2);
  // dimensionless knobs
  p.eta = cfg.num("system.eta", p.eta);
  p.phi1 = cfg.num("system.phi1", p.phi1);
  p.phi2 = cfg.num("system.phi2", p.phi2);
  p.theta_c = cfg.num("system.theta_c", p.theta_c);
  p.theta_L = cfg.num("system.theta_L", p.theta_L);
  p.validate();
  return p;
}

CavityParams cavity_from_config(const Config& cfg, bool indium) {
  CavityParams cav = indium ? indium_cavity() : CavityParams{};
  if (cfg.has("cavity.sigma_tilde"))
    cav.sigma_tilde = cfg.num("cavity.sigma_tilde", 0.0);
  if (cfg.has("cavity.delta_omega"))
    cav.delta_omega = kTwoPi * cfg.num("cavity.delta_omega", 0.0);
  if (cfg.has("cavity.finesse")) cav.finesse = cfg.num("cavity.finesse", 0.0);
  return cav;
}

nlohmann::json params_json(const SystemParams& p) {
  return {{"nu", p.nu},         {"Delta", p.Delta},
          {"delta1", p.delta1}, {"delta2", p.delta2},
          {"Omega", p.Omega.amplitude},
          {"g1", {p.g1.real(), p.g1.imag()}},
          {"g2", {p.g2.real(), p.g2.imag()}},
          {"phi1", p.phi1},     {"phi2", p.phi2},
          {"theta_c", p.theta_c}, {"theta_L", p.theta_L},
          {"eta", p.eta},       {"gamma", p.gamma},
          {"kappa1", p.kappa1}, {"kappa2", p.kappa2},
          {"units", "rad/s"}};
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("short write on '" + path.string() + "'");
}

void write_metadata(const fs::path& path, nlohmann::json j,
                    const Config& cfg) {
  j["version"] = "0.1.0";
  nlohmann::json raw = nlohmann::json::object();
  for (const auto& [k, v] : cfg.raw()) raw[k] = v;
  j["config"] = raw;
  write_text(path, j.dump(2) + "\n");
}

std::vector<double> time_grid(const Config& cfg, const char* section,
                              double fallback_max, double fallback_step) {
  const double t_max =
      cfg.num(std::string(section) + ".t_max", fallback_max);
  const double t_step =
      cfg.num(std::string(section) + ".t_step", fallback_step);
  if (t_max <= 0 || t_step <= 0)
    throw ParseError("time grid: t_max and t_step must be positive");
  std::vector<double> grid;
  for (double t = 0.0; t <= t_max + 1e-12; t += t_step) grid.push_back(t);
  return grid;
}

int run_effective(const Config& cfg, const fs::path& out, bool indium) {
  const SystemParams p = params_from_config(cfg, indium);
  const Couplings c = coupling_constants(p);
  if (!c.periodic)
    throw std::domain_error("effective: periodic regime requires |chi2| > |chi1|");

  const auto grid = time_grid(cfg, "effective", 2.0 * c.half_period(),
                              c.half_period() / 50.0);
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,n1,n2,nb,epr_x_minus,epr_p_plus\n";
  for (const double t : grid) {
    const GaussianState s =
        apply_bogoliubov(vacuum(3), scheme1_propagator(c, t));
    auto mean_n = [&](int mode) {
      return (quadrature_second_moment(s, mode, 0.0) +
              quadrature_second_moment(s, mode, std::numbers::pi / 2.0) -
              2.0) /
             4.0;
    };
    const EprVariances e = epr_variance(s, 0.0, 0.0);
    csv << t << ',' << mean_n(0) << ',' << mean_n(1) << ',' << mean_n(2)
        << ',' << e.x_minus << ',' << e.p_plus << '\n';
  }
  write_text(out / "effective.csv", csv.str());

  nlohmann::json j;
  j["params"] = params_json(p);
  j["couplings"] = {{"chi1", {c.chi1.real(), c.chi1.imag()}},
                    {"chi2", {c.chi2.real(), c.chi2.imag()}},
                    {"theta", c.theta},
                    {"r", c.r},
                    {"phi", c.phi},
                    {"T_pi", c.half_period()}};
  write_metadata(out / "effective.json", j, cfg);
  return 0;
}

int run_full_compare(const Config& cfg, const fs::path& out, bool indium) {
  SystemParams p;
  if (cfg.has("compare.delta_over_nu") || !cfg.has("system.nu")) {
    p = validation_params(kTwoPi * cfg.num("compare.nu", 1.0 / kTwoPi),
                          cfg.num("compare.delta_over_nu", 20.0),
                          cfg.num("compare.r", 2.0),
                          cfg.num("compare.g1_over_nu", 0.2));
  } else {
    p = params_from_config(cfg, indium);
    p.gamma = 0.0;
  }
  const std::array<int, 4> dims{
      2, static_cast<int>(cfg.num("compare.dim_motion", 12)),
      static_cast<int>(cfg.num("compare.dim_cav1", 14)),
      static_cast<int>(cfg.num("compare.dim_cav2", 14))};
  ComparisonOptions opts;
  opts.dt_scale = cfg.num("compare.dt_scale", 0.1);
  const ComparisonReport rep = compare_full_vs_effective(
      p, cfg.num("compare.T", -1.0), dims, opts);
  write_metadata(out / "full_compare.json", nlohmann::json::parse(rep.to_json()),
                 cfg);
  std::cout << rep.to_json() << "\n";
  return 0;
}

int run_figure2(const Config& cfg, const fs::path& out, bool) {
  std::vector<double> r_list = cfg.list("figure2.r_list");
  if (r_list.empty() && !cfg.has("figure2.r_list"))
    r_list = {1.8, 1.5, 1.3, 1.1, 1.05};
  if (r_list.empty()) {
    std::cerr << "usage: figure2 needs a non-empty figure2.r_list "
                 "(comma-separated r > 1 values)\n";
    return kExitParse;
  }
  const double delta_t = cfg.num("figure2.delta_t", 0.1);
  const auto grid = time_grid(cfg, "figure2", 5.0, 0.05);
  const auto series = figure2(r_list, grid, delta_t);

  std::vector<std::string> files;
  for (const auto& s : series) {
    char name[64];
    std::snprintf(name, sizeof(name), "figure2_r%.3f.csv", s.r);
    write_series_csv(s, (out / name).string());
    files.push_back(name);
  }

  std::ostringstream plot;
  plot << "# gnuplot script stub\n"
       << "set xlabel 'kappa t'\nset ylabel 'C_{1,2}'\nset yrange [0:1.05]\n"
       << "set datafile separator ','\nplot \\\n";
  for (std::size_t k = 0; k < files.size(); ++k)
    plot << "  '" << files[k] << "' using 1:2 with lines title 'r="
         << r_list[k] << (k + 1 < files.size() ? "', \\\n" : "'\n");
  write_text(out / "figure2.gp", plot.str());

  nlohmann::json j;
  j["r_list"] = r_list;
  j["delta_t_kappa"] = delta_t;
  j["files"] = files;
  write_metadata(out / "figure2.json", j, cfg);
  return 0;
}

int run_scheme2(const Config& cfg, const fs::path& out, bool indium) {
  const SystemParams p = params_from_config(cfg, indium);
  Complex chi = scheme2_coupling(p);
  if (cfg.has("scheme2.chi"))
    chi = Complex(cfg.num("scheme2.chi", 0.0), 0.0);
  double t1;
  if (cfg.has("scheme2.target_n")) {
    const double n = cfg.num("scheme2.target_n", 100.0);
    if (n <= 0) throw ParseError("scheme2.target_n must be > 0");
    t1 = std::asinh(std::sqrt(n)) / std::abs(chi);
  } else {
    t1 = cfg.num("scheme2.T1", 0.0);
  }
  const double kappa = cfg.has("system.kappa1") || indium
                           ? std::max(p.kappa1, 1e-300)
                           : cfg.num("scheme2.kappa", 1.0);
  const double tau = cfg.num("scheme2.tau_kappa", 5.0) / kappa;
  const auto grid = time_grid(cfg, "scheme2", 5.0, 0.05);
  const CorrelationSeries s = scheme2_correlation(
      chi, t1, tau, grid, cfg.num("scheme2.delta_t", 0.1), kappa, 0.0, 0.0);
  write_series_csv(s, (out / "scheme2.csv").string());

  nlohmann::json j;
  j["params"] = params_json(p);
  j["chi"] = {chi.real(), chi.imag()};
  j["T1"] = t1;
  j["tau"] = tau;
  j["effective_r"] = s.r;
  write_metadata(out / "scheme2.json", j, cfg);
  return 0;
}

int run_regimes(const Config& cfg, const fs::path& out, bool indium) {
  const SystemParams p = params_from_config(cfg, indium);
  const CavityParams cav = cavity_from_config(cfg, indium);
  const double threshold = cfg.num("regimes.threshold", 5.0);
  const RegimeReport rep = validate_scheme1(p, cav, threshold);
  std::cout << rep.table();
  nlohmann::json j = nlohmann::json::parse(rep.to_json());
  if (cfg.has("regimes.target_n")) {
    const RegimeReport rep2 = validate_scheme2(
        p, cav, cfg.num("regimes.target_n", 100.0), threshold);
    std::cout << rep2.table();
    j = nlohmann::json{{"scheme1", j},
                       {"scheme2", nlohmann::json::parse(rep2.to_json())}};
  }
  write_metadata(out / "regimes.json", j, cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trapped-atom cavity entanglement toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", preset;
  int threads = 1;
  app.add_option("--config", config_path, "config file (INI-style)");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "worker threads for sweeps");
  app.add_option("--preset", preset, "parameter preset ('indium')");

  int (*handler)(const Config&, const fs::path&, bool) = nullptr;
  for (const auto& [name, fn] :
       std::initializer_list<std::pair<const char*, decltype(handler)>>{
           {"effective", run_effective},
           {"full-compare", run_full_compare},
           {"figure2", run_figure2},
           {"scheme2", run_scheme2},
           {"regimes", run_regimes}}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->callback([&handler, fn = fn] { handler = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (!preset.empty() && preset != "indium") {
    std::cerr << "unknown preset '" << preset << "'\n";
    return kExitParse;
  }
  if (threads < 1) {
    std::cerr << "--threads must be >= 1\n";
    return kExitParse;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = Config::load(config_path);
    const fs::path out(out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "'");
    return handler(cfg, out, preset == "indium");
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPhysics;
  }
}
