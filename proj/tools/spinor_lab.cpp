// spinor-lab: invariance checks, quantization-axis queries and figure datasets.
//
// Exit codes: 0 success, 1 runtime or IO failure (including a failed check),
// 2 usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spinorlab/spinorlab.hpp"
#include "spinorlab/state_io.hpp"
#include "spinorlab/suites.hpp"

namespace {

using namespace spinorlab;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_usage = 2;

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json four_vector(const FourVector& p) { return json::array({p[0], p[1], p[2], p[3]}); }

// Writes the whole payload at once so a partially formatted file never appears.
void emit(const std::string& payload, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw io_error("cannot open '" + out + "' for writing");
  f << payload;
  f.flush();
  if (!f) throw io_error("failed writing '" + out + "'");
}

int run_check(double tol, std::uint64_t seed, std::size_t trials) {
  const suites::CheckOptions opts{tol, seed, trials};
  const auto report = suites::run_check(opts);
  suites::print_report(std::cout, report, opts);
  return report.passed() ? exit_ok : exit_runtime;
}

int run_axis(double m, double eta, double omega) {
  const ScenarioConfig cfg{m, eta, omega};
  const FourVector p = satellite_momentum(cfg);
  const MeasurementAxis axis = solve_axis(m, p);
  const double c = std::cos(0.5 * axis.theta);
  json j;
  j["eta"] = eta;
  j["omega"] = omega;
  j["p_prime"] = four_vector(p);
  j["theta_rad"] = axis.theta;
  j["theta_deg"] = axis.theta * 180.0 / std::numbers::pi;
  j["phi"] = axis.phi;
  j["cos2_half_theta"] = c * c;
  std::cout << j.dump(2) << '\n';
  return exit_ok;
}

int run_sweep(double m, double eta_max, double omega_max, std::size_t steps,
              const std::string& format, const std::string& out) {
  const auto rows = sweep(linspace(0.0, eta_max, steps), linspace(0.0, omega_max, steps), m);
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"eta", r.eta},
                     {"omega", r.omega},
                     {"p_prime", four_vector(r.p_prime)},
                     {"theta_rad", r.theta},
                     {"phi_rad", r.phi},
                     {"cos2_half_theta", r.cos2_half_theta}});
    os << arr.dump(2) << '\n';
  } else {
    write_sweep_csv(os, rows);
  }
  emit(os.str(), out);
  return exit_ok;
}

int run_fig2(double omega_max, std::size_t steps, const std::string& format,
             const std::string& out) {
  const auto rows = rest_particle_curve(omega_max, steps);
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(
          {{"omega", r.omega}, {"theta_rad", r.theta}, {"cos2_half_theta", r.cos2_half_theta}});
    os << arr.dump(2) << '\n';
  } else {
    write_rest_curve_csv(os, rows);
  }
  emit(os.str(), out);
  return exit_ok;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_state(const Spinor& psi) {
  json j;
  j["state"] = to_json(psi);
  const FourVector jmu = current(psi);
  j["psi_bar_psi"] = pseudo_norm(psi);
  j["u_dagger_u"] = inner(psi.components, psi.components).real();
  j["j0"] = jmu[0];
  j["current"] = four_vector(jmu);
  j["dirac_residual"] = dirac_residual(psi);
  // The Bloch vector is defined for normalized particle states only.
  j["bloch"] = nullptr;
  if (psi.kind == Kind::particle && std::abs(pseudo_norm(psi) - 1.0) <= 1e-10) {
    const BlochVector r = bloch(density({{1.0, psi}}));
    j["bloch"] = {r.r[0], r.r[1], r.r[2]};
  }
  std::cout << j.dump(2) << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinor-lab: Dirac spinors, Lorentz boosts and spin quantization axes"};
  app.require_subcommand(1);

  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  auto* check = app.add_subcommand("check", "run every invariance property suite");
  check->add_option("--tol", tol, "pass threshold for residuals")
      ->envname("SPINOR_LAB_TOL")
      ->check(CLI::PositiveNumber);
  check->add_option("--seed", seed, "random seed");
  check->add_option("--trials", trials, "random draws per suite")->check(CLI::Range(1, 100000000));

  double mass = 1.0;
  double eta = 0.0;
  double omega = 0.0;
  auto* axis = app.add_subcommand("axis", "quantization axis seen from the satellite");
  axis->add_option("--m", mass, "particle mass")->check(CLI::PositiveNumber);
  axis->add_option("--eta", eta, "particle rapidity")->required();
  axis->add_option("--omega", omega, "satellite rapidity")->required();

  double eta_max = default_grid_max;
  double omega_max = default_grid_max;
  std::size_t steps = default_grid_points;
  std::string format = "csv";
  std::string out;
  auto* sweep_cmd = app.add_subcommand("sweep", "theta over an (eta, omega) grid");
  sweep_cmd->add_option("--m", mass, "particle mass")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--eta-max", eta_max, "largest particle rapidity")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--omega-max", omega_max, "largest satellite rapidity")
      ->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--steps", steps, "grid points per axis")->check(CLI::Range(1, 100000));
  sweep_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--out", out, "output path (stdout if omitted)");

  double fig2_omega_max = 5.0;
  std::size_t fig2_steps = 201;
  auto* fig2 = app.add_subcommand("fig2", "theta for a particle at rest seen by a moving observer");
  fig2->add_option("--omega-max", fig2_omega_max, "largest observer rapidity")
      ->check(CLI::NonNegativeNumber);
  fig2->add_option("--steps", fig2_steps, "number of samples")->check(CLI::Range(2, 10000000));
  fig2->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  fig2->add_option("--out", out, "output path (stdout if omitted)");

  std::string state_file;
  std::vector<double> state_p;
  int alpha = 0;
  std::string kind = "particle";
  double state_m = 1.0;
  auto* state = app.add_subcommand("state", "inspect a spinor");
  auto* file_opt = state->add_option("--file", state_file, "state JSON record");
  auto* m_opt = state->add_option("--m", state_m, "mass")->check(CLI::PositiveNumber);
  auto* p_opt = state->add_option("--p", state_p, "momentum E,px,py,pz")->delimiter(',')->expected(4);
  auto* alpha_opt = state->add_option("--alpha", alpha, "spin label")->check(CLI::Range(0, 1));
  auto* kind_opt =
      state->add_option("--kind", kind, "particle or antiparticle")
          ->check(CLI::IsMember({"particle", "antiparticle"}));
  file_opt->excludes(m_opt)->excludes(p_opt)->excludes(alpha_opt)->excludes(kind_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*check) return run_check(tol, seed, trials);
    if (*axis) return run_axis(mass, eta, omega);
    if (*sweep_cmd) return run_sweep(mass, eta_max, omega_max, steps, format, out);
    if (*fig2) return run_fig2(fig2_omega_max, fig2_steps, format, out);
    if (*state) {
      if (!state_file.empty()) return run_state(spinor_from_json_text(read_file(state_file)));
      if (state_p.size() != 4) {
        std::cerr << "state: give either --file or --m/--p/--alpha\n";
        return exit_usage;
      }
      const FourVector p{state_p[0], state_p[1], state_p[2], state_p[3]};
      const Kind k = kind == "particle" ? Kind::particle : Kind::antiparticle;
      return run_state(spinor(k, state_m, p, alpha));
    }
  } catch (const spinorlab::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const format_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_runtime;
  }
  return exit_usage;
}
