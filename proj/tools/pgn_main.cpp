// pgn: parametric-geometry-of-numbers toolkit.
//
// Subcommands bind the library modules to files and stdout; no mathematics
// lives here. Exit codes: 0 success, 1 domain errors (invalid spectra,
// malformed files, bad flags), 2 resource caps (enumeration radius,
// horizon too short).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pgn/contraction.hpp"
#include "pgn/csv.hpp"
#include "pgn/dimensions.hpp"
#include "pgn/lattice_oracle.hpp"
#include "pgn/potential.hpp"
#include "pgn/pwl_system.hpp"
#include "pgn/rational.hpp"
#include "pgn/roy_json.hpp"
#include "pgn/svg_plot.hpp"
#include "pgn/templates.hpp"

namespace {

int default_precision() {
  if (const char* env = std::getenv("PGN_PRECISION")) {
    const int p = std::atoi(env);
    if (p > 0 && p <= 200) return p;
  }
  return 12;
}

pgn::ExponentSpectrum spectrum_from_pairs(int n, const std::vector<std::string>& pairs) {
  if (n < 1) throw pgn::domain_error("--n must be at least 1");
  std::vector<pgn::ExtRat> omegas(n, pgn::ExtRat(0));
  std::vector<bool> seen(n, false);
  for (const auto& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos)
      throw pgn::domain_error("--omega expects d=value, got '" + p + "'");
    const int d = std::atoi(p.substr(0, eq).c_str());
    if (d < 0 || d >= n) throw pgn::domain_error("omega index out of range in '" + p + "'");
    omegas[d] = pgn::parse_extended(p.substr(eq + 1));
    seen[d] = true;
  }
  for (int d = 0; d < n; ++d)
    if (!seen[d]) throw pgn::domain_error("missing --omega " + std::to_string(d) + "=...");
  return pgn::make_spectrum(std::move(omegas));
}

pgn::PartialSpectrum partial_from_pairs(int n, const std::vector<std::string>& pairs) {
  pgn::PartialSpectrum out;
  out.n = n;
  for (const auto& p : pairs) {
    const auto eq = p.find('=');
    if (eq == std::string::npos)
      throw pgn::domain_error("--omega expects d=value, got '" + p + "'");
    const int d = std::atoi(p.substr(0, eq).c_str());
    if (d < 0 || d >= n) throw pgn::domain_error("omega index out of range in '" + p + "'");
    out.assigned[d] = pgn::parse_extended(p.substr(eq + 1));
  }
  if (out.assigned.empty()) throw pgn::domain_error("need at least one --omega d=value");
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(std::atof(cur.c_str()));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::atof(cur.c_str()));
  return out;
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-")
    std::cout << contents;
  else
    pgn::atomic_write(path, contents);
}

void print_validation(const pgn::ValidationReport& report) {
  if (report.passed) {
    std::cout << "passed\n";
    return;
  }
  std::cout << "failed: " << report.violations.size() << " violation(s)\n";
  for (const auto& v : report.violations)
    std::cout << "  S" << v.axiom << " at " << v.location << ": " << v.detail << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parametric geometry of numbers toolkit"};
  app.require_subcommand(1);
  int precision = default_precision();
  app.add_option("--precision", precision, "decimal digits for rendered rationals");

  // validate
  std::string validate_file;
  auto* cmd_validate = app.add_subcommand("validate", "check a system file against the axioms");
  cmd_validate->add_option("file", validate_file, "system JSON file")->required();

  // generate
  std::string gen_template = "intersection", gen_out, gen_omega_single = "inf";
  std::vector<std::string> gen_omega_pairs;
  std::string gen_epsilon = "1/100", gen_q0 = "1", gen_qmax;
  int gen_n = 2, gen_d = 0, gen_cycles = 20;
  std::uint64_t gen_seed = 1;
  std::string gen_mean_len = "1";
  auto* cmd_generate = app.add_subcommand("generate", "emit a system in the file schema");
  cmd_generate->add_option("--template", gen_template,
                           "constant | single | intersection | random");
  cmd_generate->add_option("--n", gen_n, "ambient dimension n");
  cmd_generate->add_option("--d", gen_d, "exponent index (single template)");
  cmd_generate->add_option("--omega", gen_omega_pairs, "omega d=value (repeatable)");
  cmd_generate->add_option("--omega-value", gen_omega_single, "omega value (single template)");
  cmd_generate->add_option("--epsilon", gen_epsilon, "cycle spacing parameter in (0,1)");
  cmd_generate->add_option("--cycles", gen_cycles, "number of construction cycles");
  cmd_generate->add_option("--q0", gen_q0, "left end of the window");
  cmd_generate->add_option("--q-max", gen_qmax, "right end (constant/random templates)");
  cmd_generate->add_option("--seed", gen_seed, "seed (random template)");
  cmd_generate->add_option("--mean-interval", gen_mean_len, "mean interval length (random)");
  cmd_generate->add_option("--out", gen_out, "output path (default stdout)");

  // rates
  std::string rates_file, rates_tail = "1/2", rates_csv;
  auto* cmd_rates = app.add_subcommand("rates", "contraction-rate extrema of a system");
  cmd_rates->add_option("--in", rates_file, "system JSON file")->required();
  cmd_rates->add_option("--tail", rates_tail, "tail fraction for the estimates");
  cmd_rates->add_option("--csv", rates_csv, "also write the trajectory CSV here");

  // exponents
  std::string exp_file, exp_tail = "1/2";
  auto* cmd_exponents = app.add_subcommand("exponents", "partial-sum exponent functionals");
  cmd_exponents->add_option("--in", exp_file, "system JSON file")->required();
  cmd_exponents->add_option("--tail", exp_tail, "tail fraction for the estimates");

  // dimension
  int dim_n = 2;
  std::vector<std::string> dim_pairs;
  std::string dim_format = "text";
  auto* cmd_dimension = app.add_subcommand("dimension", "Hausdorff/packing dimension evaluators");
  cmd_dimension->add_option("--n", dim_n, "ambient dimension n")->required();
  cmd_dimension->add_option("--omega", dim_pairs, "omega d=value (repeatable; subsets allowed)")
      ->required();
  cmd_dimension->add_option("--format", dim_format, "text | csv");

  // oracle
  std::string oracle_theta, oracle_u, oracle_csv_path, oracle_svg_path;
  double oracle_qmax = 10, oracle_step = 0.1, oracle_tail = 0.5;
  long long oracle_cap = 4096;
  auto* cmd_oracle = app.add_subcommand("oracle", "lattice successive-minima trajectories");
  cmd_oracle->add_option("--theta", oracle_theta, "comma-separated theta coordinates");
  cmd_oracle->add_option("--u", oracle_u, "comma-separated direction coordinates");
  cmd_oracle->add_option("--q-max", oracle_qmax, "largest log-parameter q");
  cmd_oracle->add_option("--step", oracle_step, "grid step");
  cmd_oracle->add_option("--radius-cap", oracle_cap, "enumeration radius cap");
  cmd_oracle->add_option("--tail", oracle_tail, "tail fraction for exponent estimates");
  cmd_oracle->add_option("--csv", oracle_csv_path, "trajectory CSV output path");
  cmd_oracle->add_option("--svg", oracle_svg_path, "optional SVG plot path");

  // check-potential
  std::string pot_file, pot_kind = "intersection", pot_csv;
  int pot_d = 0;
  auto* cmd_potential = app.add_subcommand("check-potential",
                                           "potential slope inequality per interval");
  cmd_potential->add_option("--in", pot_file, "system JSON file")->required();
  cmd_potential->add_option("--kind", pot_kind, "single | intersection");
  cmd_potential->add_option("--d", pot_d, "exponent index (single kind)");
  cmd_potential->add_option("--csv", pot_csv, "per-interval CSV report path");

  // plot
  std::string plot_in, plot_out;
  bool plot_delta = false, plot_logq = false;
  auto* cmd_plot = app.add_subcommand("plot", "render a trajectory CSV as SVG");
  cmd_plot->add_option("--in", plot_in, "trajectory CSV file")->required();
  cmd_plot->add_option("--out", plot_out, "SVG output path")->required();
  cmd_plot->add_flag("--delta-overlay", plot_delta, "overlay the local rate as a step line");
  cmd_plot->add_flag("--log-q", plot_logq, "logarithmic q axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_validate->parsed()) {
      const auto sys = pgn::load_system(validate_file);
      const auto report = sys.validate();
      print_validation(report);
      return report.passed ? 0 : 1;
    }

    if (cmd_generate->parsed()) {
      std::optional<pgn::PiecewiseLinearSystem> sys;
      if (gen_template == "constant") {
        const pgn::Rat q0 = pgn::parse_rational(gen_q0);
        const pgn::Rat qmax = gen_qmax.empty() ? q0 + 100 : pgn::parse_rational(gen_qmax);
        sys = pgn::constant_template(gen_n, q0, qmax);
      } else if (gen_template == "single") {
        pgn::SingleExponentParams params;
        params.n = gen_n;
        params.d = gen_d;
        params.omega_d = pgn::parse_extended(gen_omega_single);
        params.epsilon = pgn::parse_rational(gen_epsilon);
        params.q_start = pgn::parse_rational(gen_q0);
        sys = pgn::single_exponent_template(params, gen_cycles);
      } else if (gen_template == "intersection") {
        pgn::IntersectionParams params;
        params.spectrum = spectrum_from_pairs(gen_n, gen_omega_pairs);
        params.epsilon = pgn::parse_rational(gen_epsilon);
        params.q_start = pgn::parse_rational(gen_q0);
        sys = pgn::intersection_template(params, gen_cycles);
      } else if (gen_template == "random") {
        const pgn::Rat q0 = pgn::parse_rational(gen_q0);
        const pgn::Rat qmax = gen_qmax.empty() ? q0 + 50 : pgn::parse_rational(gen_qmax);
        sys = pgn::random_roy_system(gen_seed, gen_n, q0, qmax,
                                     pgn::parse_rational(gen_mean_len));
      } else {
        throw pgn::domain_error("unknown template '" + gen_template + "'");
      }
      emit(gen_out, pgn::to_json(*sys));
      return 0;
    }

    if (cmd_rates->parsed()) {
      const auto sys = pgn::load_system(rates_file);
      const auto ex = pgn::rate_extrema(sys, pgn::parse_rational(rates_tail));
      std::cout << "delta_lower " << pgn::to_fraction_string(ex.lower) << " ("
                << pgn::to_decimal_string(ex.lower, precision) << ")\n";
      std::cout << "delta_upper " << pgn::to_fraction_string(ex.upper) << " ("
                << pgn::to_decimal_string(ex.upper, precision) << ")\n";
      std::cout << "lower_anchors";
      for (const auto& a : ex.lower_anchors) std::cout << " " << pgn::to_fraction_string(a);
      std::cout << "\nupper_anchors";
      for (const auto& a : ex.upper_anchors) std::cout << " " << pgn::to_fraction_string(a);
      std::cout << "\n";
      if (!rates_csv.empty()) emit(rates_csv, pgn::trajectory_csv(sys, precision));
      return 0;
    }

    if (cmd_exponents->parsed()) {
      const auto sys = pgn::load_system(exp_file);
      const auto ests = pgn::exponent_functionals(sys, pgn::parse_rational(exp_tail));
      std::cout << "k,liminf,limsup,omega_{n-k},omega_hat_{n-k}\n";
      for (const auto& e : ests)
        std::cout << e.k << "," << pgn::to_fraction_string(e.liminf_value) << ","
                  << pgn::to_fraction_string(e.limsup_value) << ","
                  << pgn::to_string(e.inferred_omega) << ","
                  << pgn::to_string(e.inferred_omega_hat) << "\n";
      return 0;
    }

    if (cmd_dimension->parsed()) {
      const pgn::PartialSpectrum partial = partial_from_pairs(dim_n, dim_pairs);
      pgn::DimensionResult result;
      const bool is_full_set = static_cast<int>(partial.assigned.size()) == dim_n;
      if (is_full_set) {
        std::vector<pgn::ExtRat> omegas;
        for (const auto& [d, w] : partial.assigned) omegas.push_back(w);
        const auto spec = pgn::validate_spectrum(pgn::make_spectrum(std::move(omegas)));
        if (!spec.is_valid()) throw pgn::domain_error("invalid spectrum: " + spec.violation);
        result = pgn::hausdorff_intersection(spec);
      } else {
        result = pgn::optimal_completion(partial);
      }
      std::string completion;
      if (!is_full_set && result.completion)
        for (int d = 0; d < result.completion->n; ++d)
          completion += (d ? " " : "") + std::to_string(d) + "=" +
                        pgn::to_string(result.completion->omegas[d]);
      if (dim_format == "csv") {
        std::cout << "hausdorff,packing,full,completion\n"
                  << pgn::to_fraction_string(result.hausdorff) << ","
                  << pgn::to_fraction_string(result.packing) << ","
                  << (result.full_hausdorff ? "yes" : "no") << "," << completion << "\n";
      } else {
        std::cout << "hausdorff " << pgn::to_fraction_string(result.hausdorff) << " packing "
                  << pgn::to_fraction_string(result.packing) << " full: "
                  << (result.full_hausdorff ? "yes" : "no") << "\n";
        if (!completion.empty()) std::cout << "completion " << completion << "\n";
      }
      return 0;
    }

    if (cmd_oracle->parsed()) {
      if (oracle_theta.empty() == oracle_u.empty())
        throw pgn::domain_error("give exactly one of --theta or --u");
      const auto dir = oracle_theta.empty()
                           ? pgn::oracle::DirectionVector::from_u(parse_double_list(oracle_u))
                           : pgn::oracle::DirectionVector::from_theta(
                                 parse_double_list(oracle_theta));
      pgn::oracle::OracleOptions opts;
      opts.radius_cap = oracle_cap;
      const auto traj = pgn::oracle::trajectory(dir, oracle_qmax, oracle_step, opts);
      const std::string csv = pgn::oracle_csv(traj, std::min(precision, 17));
      if (!oracle_csv_path.empty()) {
        emit(oracle_csv_path, csv);
        if (traj.points.size() >= 50) {
          for (const auto& e : pgn::oracle::empirical_exponents(traj, oracle_tail))
            std::cout << "k=" << e.k << " liminf=" << e.liminf_value
                      << " limsup=" << e.limsup_value << " omega_" << (dir.n() - e.k)
                      << "=" << e.omega << " omega_hat_" << (dir.n() - e.k) << "=" << e.omega_hat
                      << "  [" << e.note << "]\n";
        }
      } else {
        std::cout << csv;
      }
      if (!oracle_svg_path.empty())
        emit(oracle_svg_path, pgn::render_trajectory_svg(pgn::parse_csv(csv)));
      if (traj.any_capped) {
        std::cerr << "radius cap " << oracle_cap << " hit; results flagged partial\n";
        return 2;
      }
      return 0;
    }

    if (cmd_potential->parsed()) {
      const auto sys = pgn::load_system(pot_file);
      pgn::PotentialSpec spec = pot_kind == "single" ? pgn::PotentialSpec::single(pot_d)
                                                     : pgn::PotentialSpec::intersection();
      if (pot_kind != "single" && pot_kind != "intersection")
        throw pgn::domain_error("unknown potential kind '" + pot_kind + "'");
      const auto report = pgn::check_slope_inequality(spec, sys);
      std::cout << (report.ok ? "ok" : "violated") << " on " << report.rows.size()
                << " interval(s)\n";
      if (!pot_csv.empty()) {
        std::ostringstream out;
        out << "q_start,q_end,phi_slope,delta,margin\n";
        for (const auto& r : report.rows)
          out << pgn::to_decimal_string(r.q_start, precision) << ","
              << pgn::to_decimal_string(r.q_end, precision) << ","
              << pgn::to_fraction_string(r.slope) << "," << r.delta << ","
              << pgn::to_fraction_string(r.margin) << "\n";
        emit(pot_csv, out.str());
      }
      return report.ok ? 0 : 1;
    }

    if (cmd_plot->parsed()) {
      std::ifstream in(plot_in);
      if (!in) throw pgn::domain_error("cannot open '" + plot_in + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      pgn::PlotStyle style;
      style.delta_overlay = plot_delta;
      style.log_q = plot_logq;
      emit(plot_out, pgn::render_trajectory_svg(pgn::parse_csv(buf.str()), style));
      return 0;
    }
  } catch (const pgn::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pgn::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
