#include "bospec/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "bospec/errors.hpp"
#include "bospec/io.hpp"
#include "bospec/lax.hpp"
#include "bospec/multiphase.hpp"
#include "bospec/profile.hpp"
#include "bospec/smalldisp.hpp"

namespace bospec::cli {

std::size_t truncation_cap(std::size_t fallback) {
  const char* env = std::getenv("BO_SPECTRA_MAX_N");
  if (env == nullptr || *env == '\0') return fallback;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 2) {
    throw InputError("BO_SPECTRA_MAX_N must be an integer >= 2, got '" + std::string(text) + "'");
  }
  return value;
}

namespace {

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, std::string_view content, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    io::write_file(path, content);
  }
}

std::size_t resolve_cap(const std::optional<std::size_t>& flag, std::size_t fallback) {
  return flag ? *flag : truncation_cap(fallback);
}

struct ProfileArgs {
  std::string symbol;
  double eps = 0.0;
  std::size_t n = 512;
  std::string out;
  std::string csv;
  std::size_t samples = 2001;
};

int run_profile(const ProfileArgs& a, std::ostream& out) {
  const FourierSymbol v = io::parse_symbol_spec(a.symbol);
  const TruncatedLaxPair pair = build_lax_pair(v, a.eps, a.n);
  const Profile p = profile_from_spectra(spectra(pair), pair.mean, gap_threshold(v));
  emit(a.out, io::profile_to_json(p), out);
  if (!a.csv.empty()) {
    io::write_file(a.csv, io::profile_csv(p, p.minima.back() - 1.0, p.minima.front() + 1.0, a.samples));
  }
  if (!a.out.empty()) out << "N " << a.n << ", center " << p.center << ", " << p.gap_count() << " gaps\n";
  return kSuccess;
}

struct ConvexArgs {
  std::string symbol;
  std::size_t grid = 1024;
  std::string out;
  std::size_t samples = 2001;
};

int run_convex(const ConvexArgs& a, std::ostream& out) {
  const FourierSymbol v = io::parse_symbol_spec(a.symbol);
  const ConvexProfile p = ConvexProfile::from_symbol(v, a.grid);
  emit(a.out, io::profile_csv(p, p.lower() - 1.0, p.upper() + 1.0, a.samples), out);
  return kSuccess;
}

struct MultiphaseArgs {
  std::string params;
  double t = 0.0;
  std::size_t samples = 512;
  std::string wave;
  std::string profile;
};

int run_multiphase(const MultiphaseArgs& a, std::ostream& out) {
  const MultiPhaseParams p = io::params_from_json(io::read_file(a.params));
  emit(a.wave, io::wave_csv(p, a.t, a.samples), out);
  if (!a.profile.empty()) io::write_file(a.profile, io::profile_to_json(dk_profile(p)));
  return kSuccess;
}

struct VerifyArgs {
  std::string params;
  double tol = 1e-6;
  std::optional<std::size_t> cap;
  std::string out;
};

int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const MultiPhaseParams p = io::params_from_json(io::read_file(a.params));
  const FiniteGapReport r = verify_finite_gap(p, a.tol, resolve_cap(a.cap, 2048));
  emit(a.out, io::finite_gap_report_json(r), out);
  if (r.inconclusive) {
    err << "inconclusive: Fourier fit residual " << r.fit_residual << " exceeds 1e-8\n";
    return kCheckFailed;
  }
  if (!r.truncation_converged) {
    err << "truncation did not converge below the cap N = " << r.truncation << "\n";
    return kCheckFailed;
  }
  if (!r.passed) {
    err << "finite-gap check failed: endpoint error " << r.endpoint_error << ", widest spurious gap "
        << r.widest_spurious_gap << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

struct ConserveArgs {
  std::string params;
  std::string times = "0,0.3,0.7";
  std::size_t top = 10;
  double tol = 1e-6;
  std::optional<std::size_t> cap;
  std::string out;
};

int run_conserve(const ConserveArgs& a, std::ostream& out, std::ostream& err) {
  const MultiPhaseParams p = io::params_from_json(io::read_file(a.params));
  const std::vector<double> times = io::parse_double_list(a.times);
  const ConservationReport r = conservation_check(p, times, a.top, a.tol, resolve_cap(a.cap, 2048));
  emit(a.out, io::conservation_report_json(r), out);
  if (!r.passed) {
    err << "eigenvalue drift " << r.drift << " exceeds " << a.tol << "\n";
    return kCheckFailed;
  }
  return kSuccess;
}

struct SweepArgs {
  std::string symbol;
  std::string eps;
  std::string u = "0+2i";
  double tol = 1e-12;
  std::optional<std::size_t> cap;
  std::string out;
};

int run_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  DispersionSweep sweep;
  sweep.symbol = io::parse_symbol_spec(a.symbol);
  sweep.eps_list = io::parse_double_list(a.eps);
  sweep.u_grid = io::parse_complex_list(a.u);
  dispersion_sweep(sweep, a.tol, resolve_cap(a.cap, 4096));
  emit(a.out, io::sweep_csv(sweep), out);
  int status = kSuccess;
  for (const SweepCell& c : sweep.results) {
    if (!c.converged) {
      err << "truncation did not converge below the cap at eps " << c.eps << "\n";
      status = kCheckFailed;
    }
  }
  for (std::size_t k = 0; k < sweep.u_grid.size(); ++k) {
    if (!sweep.monotone[k] && sweep.eps_list.size() > 1) {
      err << "abs_err is not strictly decreasing at u = " << sweep.u_grid[k] << "\n";
      status = kCheckFailed;
    }
  }
  return status;
}

struct SinusoidalArgs {
  double eps = 1.0;
  std::string u = "2i,3i,1+2i";
  double tol = 1e-13;
  std::size_t min_n = 1024;
  std::optional<std::size_t> cap;
  double check = 1e-6;
  std::string out;
};

int run_sinusoidal(const SinusoidalArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<Complex> u = io::parse_complex_list(a.u);
  const std::vector<RecurrenceRow> rows =
      sinusoidal_functional_equation(a.eps, a.tol, u, a.min_n, resolve_cap(a.cap, 8192));
  emit(a.out, io::recurrence_csv(rows), out);
  int status = kSuccess;
  for (const RecurrenceRow& r : rows) {
    if (!(r.residual_minus < a.check)) {
      err << "recurrence residual " << r.residual_minus << " at u = " << r.u << "\n";
      status = kCheckFailed;
    }
  }
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral diagnostics for the periodic Benjamin-Ono Lax operator", "bo-spectra"};
  app.require_subcommand(1);

  ProfileArgs profile;
  auto* profile_cmd = app.add_subcommand("profile", "dispersive action profile of a symbol at fixed N");
  profile_cmd->add_option("--symbol", profile.symbol, "cosine:A, constant:A or a symbol JSON file")->required();
  profile_cmd->add_option("--eps", profile.eps, "dispersion")->required();
  profile_cmd->add_option("--n", profile.n, "truncation size")->capture_default_str();
  profile_cmd->add_option("--out", profile.out, "profile JSON (stdout if omitted)");
  profile_cmd->add_option("--csv", profile.csv, "sampled f as c,f");
  profile_cmd->add_option("--samples", profile.samples, "CSV rows")->capture_default_str();

  ConvexArgs convex;
  auto* convex_cmd = app.add_subcommand("convex", "convex action profile of a symbol");
  convex_cmd->add_option("--symbol", convex.symbol, "cosine:A, constant:A or a symbol JSON file")->required();
  convex_cmd->add_option("--grid", convex.grid, "x-grid size (>= 256)")->capture_default_str();
  convex_cmd->add_option("--out", convex.out, "c,f CSV (stdout if omitted)");
  convex_cmd->add_option("--samples", convex.samples, "CSV rows")->capture_default_str();

  MultiphaseArgs multi;
  auto* multi_cmd = app.add_subcommand("multiphase", "sample a multi-phase wave");
  multi_cmd->add_option("--params", multi.params, "params JSON")->required();
  multi_cmd->add_option("--t", multi.t, "time")->capture_default_str();
  multi_cmd->add_option("--samples", multi.samples, "points per period")->capture_default_str();
  multi_cmd->add_option("--wave", multi.wave, "x,v CSV (stdout if omitted)");
  multi_cmd->add_option("--profile", multi.profile, "Dobrokhotov-Krichever profile JSON");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-finite-gap", "compare computed gaps with the parameters");
  verify_cmd->add_option("--params", verify.params, "params JSON")->required();
  verify_cmd->add_option("--tol", verify.tol, "endpoint and spurious-gap tolerance")->capture_default_str();
  verify_cmd->add_option("--cap", verify.cap, "truncation cap (default 2048 or BO_SPECTRA_MAX_N)");
  verify_cmd->add_option("--out", verify.out, "report JSON (stdout if omitted)");

  ConserveArgs conserve;
  auto* conserve_cmd = app.add_subcommand("conserve", "eigenvalue drift of a multi-phase wave over time");
  conserve_cmd->add_option("--params", conserve.params, "params JSON")->required();
  conserve_cmd->add_option("--times", conserve.times, "comma-separated times")->capture_default_str();
  conserve_cmd->add_option("--top", conserve.top, "number of top eigenvalues")->capture_default_str();
  conserve_cmd->add_option("--tol", conserve.tol, "allowed drift")->capture_default_str();
  conserve_cmd->add_option("--cap", conserve.cap, "truncation cap (default 2048 or BO_SPECTRA_MAX_N)");
  conserve_cmd->add_option("--out", conserve.out, "report JSON (stdout if omitted)");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Baker-Akhiezer average against the geometric mean");
  sweep_cmd->add_option("--symbol", sweep.symbol, "cosine:A, constant:A or a symbol JSON file")->required();
  sweep_cmd->add_option("--eps", sweep.eps, "strictly decreasing comma-separated eps values")->required();
  sweep_cmd->add_option("--u", sweep.u, "comma-separated complex points, |Im u| >= 0.5")->capture_default_str();
  sweep_cmd->add_option("--tol", sweep.tol, "truncation tolerance")->capture_default_str();
  sweep_cmd->add_option("--cap", sweep.cap, "truncation cap (default 4096 or BO_SPECTRA_MAX_N)");
  sweep_cmd->add_option("--out", sweep.out, "convergence CSV (stdout if omitted)");

  SinusoidalArgs sinus;
  auto* sinus_cmd = app.add_subcommand("sinusoidal", "difference equation of the 2cos x average");
  sinus_cmd->add_option("--eps", sinus.eps, "dispersion")->capture_default_str();
  sinus_cmd->add_option("--u", sinus.u, "comma-separated complex points, Im u >= 2")->capture_default_str();
  sinus_cmd->add_option("--tol", sinus.tol, "truncation tolerance")->capture_default_str();
  sinus_cmd->add_option("--min-n", sinus.min_n, "smallest truncation")->capture_default_str();
  sinus_cmd->add_option("--cap", sinus.cap, "truncation cap (default 8192 or BO_SPECTRA_MAX_N)");
  sinus_cmd->add_option("--check", sinus.check, "allowed residual")->capture_default_str();
  sinus_cmd->add_option("--out", sinus.out, "residual CSV (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*profile_cmd) return run_profile(profile, out);
    if (*convex_cmd) return run_convex(convex, out);
    if (*multi_cmd) return run_multiphase(multi, out);
    if (*verify_cmd) return run_verify(verify, out, err);
    if (*conserve_cmd) return run_conserve(conserve, out, err);
    if (*sweep_cmd) return run_sweep(sweep, out, err);
    if (*sinus_cmd) return run_sinusoidal(sinus, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const RealityViolation& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}

}  // namespace bospec::cli
