#include "fraclap/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fraclap/closed_form.hpp"
#include "fraclap/eigenbounds.hpp"
#include "fraclap/errors.hpp"
#include "fraclap/oracle.hpp"

namespace fraclap::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("--x: cannot parse '" + item + "' as a real");
    x.push_back(v);
  }
  if (x.empty()) throw DomainError("--x: empty point");
  return x;
}

const char* parity_name(bool anti) { return anti ? "antisymmetric" : "symmetric"; }

void finish(OutputRecord& rec) { rec.diagnostics.set("input_hash", input_hash(rec)); }

void emit(std::ostream& out, const std::string& format, const std::vector<OutputRecord>& recs) {
  if (format == "csv")
    write_csv(out, recs);
  else
    write_json_lines(out, recs);
}

// Tracks the largest deviation relative to its tolerance.
struct Tally {
  VerifySummary& s;
  double worst_ratio = 0.0;

  void add(double dev, double tol, double& bucket, const std::string& what) {
    ++s.checks;
    bucket = std::max(bucket, dev);
    const double ratio = std::isfinite(dev) ? dev / tol : INFINITY;
    if (ratio > worst_ratio || s.worst.empty()) {
      worst_ratio = ratio;
      s.worst = what + " dev=" + format_real(dev) + " tol=" + format_real(tol);
    }
    if (!(ratio <= 1.0)) s.passed = false;
  }
};

std::string describe(const PowerProfile& p, std::span<const double> x) {
  std::string s = "(d=" + std::to_string(p.d) + ", alpha=" + format_real(p.alpha) + ", p=" + format_real(p.p) + ", " +
                  parity_name(p.parity == Parity::Antisymmetric) + ", x=[";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + format_real(x[i]);
  return s + "])";
}

}  // namespace

QuadratureSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  QuadratureSpec spec;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DomainError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key != "rel_tol" && key != "abs_tol" && key != "max_subdivisions")
      throw DomainError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    try {
      std::size_t used = 0;
      if (key == "rel_tol") {
        spec.rel_tol = std::stod(val, &used);
      } else if (key == "abs_tol") {
        spec.abs_tol = std::stod(val, &used);
      } else {
        spec.max_subdivisions = std::stoi(val, &used);
      }
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::logic_error&) {
      throw DomainError(path + ":" + std::to_string(lineno) + ": bad value '" + val + "' for " + key);
    }
  }
  spec.validate();
  return spec;
}

VerifySummary run_verify(const VerifyOptions& opt) {
  opt.spec.validate();
  VerifySummary s;
  Tally tally{s};
  const double scale = opt.perturb ? 1.0 + 1e-4 : 1.0;

  QuadratureSpec spec = opt.spec;
  std::vector<double> radii{0.0, 0.2, 0.45, 0.7, 0.8};
  double tol = 1e-6;
  if (opt.fine) {
    spec.rel_tol = std::min(spec.rel_tol, 1e-11);
    spec.abs_tol = std::min(spec.abs_tol, 1e-14);
    radii.clear();
    for (int k = 0; k <= 16; ++k) radii.push_back(0.05 * k);
    tol = 1e-7;
  }

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  for (int d = 1; d <= 3; ++d)
    for (double alpha : {0.3, 1.0, 1.7})
      for (double p : {alpha / 2, alpha / 2 + 1, alpha / 2 + 2, 0.9})
        for (bool anti : {false, true})
          for (double r : radii)
            for (int rep = 0; rep < (opt.fine ? 4 : 1); ++rep) {
            std::vector<double> x(d);
            double norm = 0.0;
            do {
              norm = 0.0;
              for (double& xi : x) {
                xi = gauss(rng);
                norm += xi * xi;
              }
            } while (norm == 0.0);
            for (double& xi : x) xi *= r / std::sqrt(norm);
            const PowerProfile prof{d, alpha, p, anti ? Parity::Antisymmetric : Parity::Symmetric};
            const double closed = scale * frac_lap(prof, x);
            const oracle::Estimate est = oracle::frac_lap_oracle(prof, x, spec);
            s.evaluations += est.stats.evaluations;
            const double dev = std::fabs(est.value - closed) / std::max(1.0, std::fabs(closed));
            tally.add(dev, tol, s.max_oracle_dev, "oracle " + describe(prof, x));
            }

  for (int m : {1, 2})
    for (double alpha : {0.5, 1.0, 1.5})
      for (double p : {(alpha - 2) / 2, alpha / 2, 1.2})
        for (double x : {0.0, 0.5, -0.5}) {
          const double closed = scale * lemma21_closed(m, p, alpha, x);
          const oracle::Estimate est = oracle::pv_Im(m, p, alpha, x, spec);
          s.evaluations += est.stats.evaluations;
          tally.add(std::fabs(est.value - closed), 1e-8, s.max_lemma21_dev,
                    "lemma21 (m=" + std::to_string(m) + ", alpha=" + format_real(alpha) + ", p=" + format_real(p) +
                        ", x=" + format_real(x) + ")");
        }

  for (int d : {1, 2, 3})
    for (double t : {0.0, 0.5, 1.0, 2.5}) {
      const bounds::IdentityCheck c = bounds::utov_identity_check(d, t);
      const double rhs = scale * c.rhs;
      tally.add(std::fabs(c.lhs - rhs) / std::fabs(rhs), 1e-12, s.max_moment_dev,
                "moment identity (d=" + std::to_string(d) + ", t=" + format_real(t) + ")");
    }

  for (double alpha : bounds::kTableAlphas)
    for (int d = 1; d <= bounds::kTableColumns; ++d) {
      const bounds::RitzSystem sys = bounds::assemble_ritz(d, alpha, 13);
      double worst = 0.0;
      for (int i = 0; i < sys.n; ++i)
        for (int j = i + 1; j < sys.n; ++j) {
          const double a = sys.stiffness(i, j);
          const double b = scale * sys.stiffness(j, i);
          worst = std::max(worst, std::fabs(a - b) / std::max(1.0, std::fabs(a)));
        }
      tally.add(worst, 1e-12, s.max_asymmetry,
                "stiffness symmetry (d=" + std::to_string(d) + ", alpha=" + format_real(alpha) + ")");
    }
  return s;
}

std::vector<OutputRecord> table_records(int n, unsigned jobs, bool& failed) {
  struct Slot {
    bounds::TableCell cell;
    std::string error;
  };
  const std::size_t total = bounds::kTableAlphas.size() * bounds::kTableColumns;
  std::vector<Slot> slots(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      const double alpha = bounds::kTableAlphas[k / bounds::kTableColumns];
      const int column = static_cast<int>(k % bounds::kTableColumns) + 1;
      slots[k].cell.alpha = alpha;
      slots[k].cell.column = column;
      try {
        slots[k].cell = bounds::table_cell(alpha, column, n);
      } catch (const std::exception& e) {
        slots[k].error = e.what();
      }
    }
  };
  jobs = std::clamp<unsigned>(jobs, 1u, static_cast<unsigned>(total));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  failed = false;
  std::vector<OutputRecord> recs;
  for (std::size_t a = 0; a < bounds::kTableAlphas.size(); ++a)
    for (const char* row : {"lower", "ritz", "two_term"})
      for (int c = 0; c < bounds::kTableColumns; ++c) {
        const Slot& slot = slots[a * bounds::kTableColumns + c];
        const std::string r = row;
        OutputRecord rec;
        rec.command = "table4";
        rec.inputs.set("alpha", slot.cell.alpha);
        rec.inputs.set("column", static_cast<long long>(slot.cell.column));
        rec.inputs.set("row", r);
        rec.inputs.set("ritz_n", static_cast<long long>(n));
        rec.inputs.set("lambda_1_dim", static_cast<long long>(slot.cell.column));
        if (slot.cell.column >= 3) rec.inputs.set("lambda_star_dim", static_cast<long long>(slot.cell.column - 2));
        if (slot.error.empty()) {
          rec.outputs.set("value", r == "lower" ? slot.cell.lower : r == "ritz" ? slot.cell.ritz : slot.cell.two_term);
          if (r == "ritz") rec.diagnostics.set("pivot_ratio", slot.cell.pivot_ratio);
        } else {
          failed = true;
          rec.diagnostics.set("error", slot.error);
        }
        finish(rec);
        recs.push_back(std::move(rec));
      }
  return recs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form fractional Laplacians of power functions on the unit ball, and eigenvalue bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::string config;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", config, "Quadrature settings file (key = value)");

  int dim = 1;
  double alpha = 1.0;
  double p = 0.0;
  std::string xtext;
  bool anti = false;
  auto* eval = app.add_subcommand("eval", "Evaluate the fractional Laplacian of u_p or v_p at a point");
  eval->add_option("--dim", dim, "Dimension")->required();
  eval->add_option("--alpha", alpha, "Order, 0 < alpha < 2")->required();
  eval->add_option("--p", p, "Exponent, p > -1")->required();
  eval->add_option("--x", xtext, "Point, comma separated")->required();
  eval->add_flag("--antisymmetric", anti, "Use v_p = x_d u_p");

  int n = 0;
  auto* poly = app.add_subcommand("poly", "Polynomial for exponent n + alpha/2");
  poly->add_option("--dim", dim, "Dimension")->required();
  poly->add_option("--alpha", alpha, "Order, 0 < alpha < 2")->required();
  poly->add_option("--n", n, "Polynomial degree")->required()->check(CLI::Range(0, 64));
  poly->add_flag("--antisymmetric", anti, "Use v_{n+alpha/2}");

  int ritz = 13;
  auto* bnd = app.add_subcommand("bounds", "Eigenvalue bounds on the unit ball");
  bnd->add_option("--dim", dim, "Dimension")->required();
  bnd->add_option("--alpha", alpha, "Order, 0 < alpha < 2")->required();
  bnd->add_option("--ritz", ritz, "Ritz basis size")->check(CLI::Range(1, bounds::kMaxRitzSize));

  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* tab = app.add_subcommand("table4", "All lower / Ritz / two-term bounds of the reference table");
  tab->add_option("--ritz", ritz, "Ritz basis size")->check(CLI::Range(1, bounds::kMaxRitzSize));
  tab->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string grid = "coarse";
  VerifyOptions vopt;
  auto* ver = app.add_subcommand("verify", "Check closed forms against quadrature and identities");
  ver->add_option("--grid", grid, "Grid density")->check(CLI::IsMember({"coarse", "fine"}));
  ver->add_option("--seed", vopt.seed, "Seed for the sample directions");
  ver->add_flag("--self-test-perturb", vopt.perturb, "Perturb the closed forms; the run must fail");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    QuadratureSpec spec;
    if (!config.empty()) spec = load_config(config);
    std::vector<OutputRecord> recs;
    int status = kOk;

    if (*eval) {
      const std::vector<double> x = parse_point(xtext);
      const PowerProfile prof{dim, alpha, p, anti ? Parity::Antisymmetric : Parity::Symmetric};
      OutputRecord rec;
      rec.command = "eval";
      rec.inputs.set("d", static_cast<long long>(dim));
      rec.inputs.set("alpha", alpha);
      rec.inputs.set("p", p);
      rec.inputs.set("x", x);
      rec.inputs.set("parity", std::string(parity_name(anti)));
      rec.outputs.set("value", frac_lap(prof, x));
      finish(rec);
      recs.push_back(std::move(rec));
    } else if (*poly) {
      const PolyInS q = anti ? poly_v(dim, alpha, static_cast<unsigned>(n)) : poly_u(dim, alpha, static_cast<unsigned>(n));
      OutputRecord rec;
      rec.command = "poly";
      rec.inputs.set("d", static_cast<long long>(dim));
      rec.inputs.set("alpha", alpha);
      rec.inputs.set("n", static_cast<long long>(n));
      rec.inputs.set("parity", std::string(parity_name(anti)));
      rec.outputs.set("scale", q.scale.value());
      rec.outputs.set("coeffs", q.coeffs);
      rec.outputs.set("expanded", q.expanded());
      finish(rec);
      recs.push_back(std::move(rec));
    } else if (*bnd) {
      OutputRecord rec;
      rec.command = "bounds";
      rec.inputs.set("d", static_cast<long long>(dim));
      rec.inputs.set("alpha", alpha);
      rec.inputs.set("ritz_n", static_cast<long long>(ritz));
      const bounds::BoundsReport r = bounds::compute_bounds(dim, alpha, ritz);
      rec.outputs.set("lower", r.lower);
      rec.outputs.set("upper_two_term", r.upper_two_term);
      rec.outputs.set("upper_ritz", r.upper_ritz);
      rec.outputs.set("lower_star", r.lower_star);
      rec.outputs.set("upper_star_two_term", r.upper_star_two_term);
      rec.outputs.set("upper_star_ritz", r.upper_star_ritz);
      rec.outputs.set("eta_min", r.eta_min);
      rec.diagnostics.set("pivot_ratio", r.pivot_ratio);
      rec.diagnostics.set("pivot_ratio_star", r.pivot_ratio_star);
      finish(rec);
      recs.push_back(std::move(rec));
    } else if (*tab) {
      bool failed = false;
      recs = table_records(ritz, jobs, failed);
      if (failed) {
        err << "error: at least one table cell failed; see diagnostics\n";
        status = kSolverFailure;
      }
    } else if (*ver) {
      vopt.fine = grid == "fine";
      vopt.spec = spec;
      const VerifySummary s = run_verify(vopt);
      OutputRecord rec;
      rec.command = "verify";
      rec.inputs.set("grid", grid);
      rec.inputs.set("seed", static_cast<long long>(vopt.seed));
      if (vopt.perturb) rec.inputs.set("self_test_perturb", true);
      rec.outputs.set("max_oracle_dev", s.max_oracle_dev);
      rec.outputs.set("max_lemma21_dev", s.max_lemma21_dev);
      rec.outputs.set("max_moment_dev", s.max_moment_dev);
      rec.outputs.set("max_asymmetry", s.max_asymmetry);
      rec.outputs.set("passed", s.passed);
      rec.diagnostics.set("checks", s.checks);
      rec.diagnostics.set("evaluations", s.evaluations);
      rec.diagnostics.set("worst", s.worst);
      finish(rec);
      recs.push_back(std::move(rec));
      if (!s.passed) {
        err << "verification failed: " << s.worst << '\n';
        status = kVerifyFailure;
      }
    }
    emit(out, format, recs);
    return status;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << " (pivot ratio " << format_real(e.pivot_ratio()) << ")\n";
    return kSolverFailure;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace fraclap::cli
