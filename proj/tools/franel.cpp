// franel - Farey deviation sums, per-denominator profiles, envelope fits and
// decay-ratio scans, emitted as CSV plus gnuplot scripts.
//
// Exit codes: 0 success, 1 usage error, 2 computation error, 3 verification
// failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "franel/asymptotics.hpp"
#include "franel/cache.hpp"
#include "franel/csv.hpp"
#include "franel/error.hpp"
#include "franel/farey.hpp"
#include "franel/fit.hpp"
#include "franel/numeric.hpp"
#include "franel/primes.hpp"
#include "franel/profile.hpp"
#include "franel/totient.hpp"
#include "franel/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerification = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

franel::IndexConvention parse_convention(const std::string& token) {
  auto conv = franel::convention_from_string(token);
  if (!conv) throw UsageError("unknown convention '" + token + "' (interior | paper-literal)");
  return *conv;
}

// Stream to --output when given, stdout otherwise.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw franel::IoError("cannot open output file", path);
  fn(out);
  out.flush();
  if (!out) throw franel::IoError("write failed", path);
}

franel::DenominatorProfile obtain_profile(std::uint64_t m, franel::IndexConvention convention,
                                          const std::string& cache_dir) {
  if (cache_dir.empty()) return franel::compute_profile(m, convention);
  return franel::ProfileCache(cache_dir).load_or_compute(m, convention);
}

// ---------------------------------------------------------------------------
// profile
// ---------------------------------------------------------------------------

struct ProfileArgs {
  std::uint64_t m = 0;
  std::string convention = "interior";
  std::string cache_dir;
  std::string output;
  bool terms = false;
  std::string terms_output;
};

int cmd_profile(const ProfileArgs& args) {
  if (args.m < 2) throw UsageError("profile: --m must be >= 2");
  const auto convention = parse_convention(args.convention);

  auto profile = obtain_profile(args.m, convention, args.cache_dir);
  with_output(args.output, [&](std::ostream& out) { franel::write_profile_csv(out, profile); });

  if (args.terms) {
    std::string path = args.terms_output;
    if (path.empty()) {
      path = "terms-m" + std::to_string(args.m) + "-" +
             std::string(franel::to_string(convention)) + ".csv";
    }
    with_output(path, [&](std::ostream& out) {
      franel::write_terms_csv(out, args.m, convention);
    });
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// fit
// ---------------------------------------------------------------------------

struct FitArgs {
  std::vector<std::uint64_t> prime_set;  // p q
  std::string convention = "interior";
  std::string cache_dir;
  std::string output;
  std::string table_output;
  std::string residuals_output;
  bool direct_residuals = false;
  bool no_compute = false;
  unsigned threads = 0;
};

std::string set_name(const franel::PrimeSet& set) {
  return "M(" + std::to_string(set.p) + "," + std::to_string(set.q) + ")";
}

int cmd_fit(const FitArgs& args) {
  const auto convention = parse_convention(args.convention);
  if (args.no_compute && args.cache_dir.empty()) {
    throw UsageError("fit: --no-compute requires --cache-dir");
  }

  franel::PrimeSet set;
  try {
    set = franel::prime_set(args.prime_set[0], args.prime_set[1]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("fit: ") + e.what());
  }
  if (set.primes.size() < 2) {
    throw UsageError("fit: prime set has a single element; the regression needs >= 2");
  }

  // Assemble profiles: from cache when available, computed (in parallel)
  // otherwise. With --no-compute every miss is an error, reported in one list.
  std::vector<franel::DenominatorProfile> profiles(set.primes.size());
  std::vector<std::uint64_t> missing;
  if (!args.cache_dir.empty()) {
    franel::ProfileCache cache(args.cache_dir);
    for (std::size_t i = 0; i < set.primes.size(); ++i) {
      try {
        if (auto cached = cache.load(set.primes[i], convention)) {
          profiles[i] = *cached;
          continue;
        }
      } catch (const franel::ChecksumError&) {
        // corrupt entry: recompute below
      }
      missing.push_back(set.primes[i]);
    }
    if (!missing.empty() && args.no_compute) {
      std::ostringstream msg;
      msg << "fit: --no-compute set but " << missing.size() << " profile(s) missing from cache:";
      for (auto m : missing) msg << ' ' << m;
      std::cerr << "error: " << msg.str() << '\n';
      return kExitComputation;
    }
    if (!missing.empty()) {
      auto computed = franel::compute_profiles(missing, convention, args.threads);
      for (auto& profile : computed) cache.store(profile);
      for (std::size_t i = 0, j = 0; i < set.primes.size(); ++i) {
        if (profiles[i].m == 0) profiles[i] = std::move(computed[j++]);
      }
    }
  } else {
    profiles = franel::compute_profiles(set.primes, convention, args.threads);
  }

  std::size_t cursor = 0;
  auto row = franel::fit_table_row(set, convention, [&](std::uint64_t m) {
    (void)m;
    return profiles[cursor++];
  });

  with_output(args.output, [&](std::ostream& out) {
    out << "# franel fit set=" << set_name(set) << " convention="
        << franel::to_string(convention) << " version=" << franel::kVersion << "\n";
    out << "m,a,b,k_star,p_at_m,p_at_kstar\n";
    for (const auto& fit : row.fits) {
      out << fit.m << ',' << franel::format_double(fit.a) << ',' << franel::format_double(fit.b)
          << ',' << fit.k_star << ',' << franel::format_double(fit.p_at_m) << ','
          << franel::format_double(fit.p_at_k_star) << '\n';
    }
  });

  if (!args.table_output.empty()) {
    with_output(args.table_output, [&](std::ostream& out) {
      out << "# franel fit-table convention=" << franel::to_string(convention)
          << " version=" << franel::kVersion << "\n";
      out << "set,s,t,u,v\n";
      out << '"' << set_name(set) << "\"," << franel::format_double(row.s) << ','
          << franel::format_double(row.t) << ',' << franel::format_double(row.u) << ','
          << franel::format_double(row.v) << '\n';
    });
  }

  if (!args.residuals_output.empty()) {
    with_output(args.residuals_output, [&](std::ostream& out) {
      out << "# franel fit-residuals space=" << (args.direct_residuals ? "direct" : "log")
          << " set=" << set_name(set) << " version=" << franel::kVersion << "\n";
      out << "m,residual_a,residual_b\n";
      for (std::size_t i = 0; i < row.fits.size(); ++i) {
        const double m = static_cast<double>(row.fits[i].m);
        double res_a = row.a_model.residuals[i];
        double res_b = row.b_model.residuals[i];
        if (args.direct_residuals) {
          res_a = row.fits[i].a - row.a_model.evaluate(m);
          res_b = row.fits[i].b - row.b_model.evaluate(m);
        }
        out << row.fits[i].m << ',' << franel::format_double(res_a) << ','
            << franel::format_double(res_b) << '\n';
      }
    });
  }

  std::cerr << set_name(set) << ": s=" << franel::format_double(row.s)
            << " t=" << franel::format_double(row.t) << " u=" << franel::format_double(row.u)
            << " v=" << franel::format_double(row.v) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ratio
// ---------------------------------------------------------------------------

struct RatioArgs {
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = 100;
  double epsilon = 1e-6;
  std::vector<double> params;  // s t u v
  std::string params_from;
  std::string row;
  std::string output;
  std::string plot_script;
};

// Table rows quote the set name (it contains a comma); unquote just that field.
std::optional<franel::AsymptoticParams> find_table_row(const std::string& path,
                                                       const std::string& row_name,
                                                       double epsilon) {
  std::ifstream in(path);
  if (!in) throw UsageError("ratio: cannot read --params-from file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::string name;
    std::string rest;
    if (line[0] == '"') {
      const auto close = line.find('"', 1);
      if (close == std::string::npos || close + 1 >= line.size()) continue;
      name = line.substr(1, close - 1);
      rest = line.substr(close + 2);  // skip closing quote and comma
    } else {
      const auto comma = line.find(',');
      if (comma == std::string::npos) continue;
      name = line.substr(0, comma);
      rest = line.substr(comma + 1);
    }
    if (name != row_name) continue;
    const auto fields = franel::split_csv(rest);
    if (fields.size() != 4) throw UsageError("ratio: malformed table row for " + row_name);
    franel::AsymptoticParams params;
    params.s = franel::parse_double(fields[0]);
    params.t = franel::parse_double(fields[1]);
    params.u = franel::parse_double(fields[2]);
    params.v = franel::parse_double(fields[3]);
    params.epsilon = epsilon;
    return params;
  }
  return std::nullopt;
}

void write_ratio_plot_script(const std::string& script_path, const std::string& csv_path) {
  std::ofstream out(script_path, std::ios::trunc);
  if (!out) throw franel::IoError("cannot open plot script", script_path);
  out << "# gnuplot script; run:  gnuplot -p " << script_path << "\n"
      << "set datafile separator ','\n"
      << "set logscale x\n"
      << "set xlabel 'x'\n"
      << "set ylabel 'bound(x) / x^(-1+eps)'\n"
      << "set key off\n"
      << "plot '" << csv_path << "' using 1:2 with lines\n";
}

int cmd_ratio(const RatioArgs& args) {
  if (!(args.from > 2.0) || !(args.from < args.to)) {
    throw UsageError("ratio: need 2 < --from < --to");
  }
  if (args.steps < 2) throw UsageError("ratio: --steps must be >= 2");
  if (!(args.epsilon > 0.0)) throw UsageError("ratio: --epsilon must be > 0");

  franel::AsymptoticParams params;
  if (!args.params.empty()) {
    params = {args.params[0], args.params[1], args.params[2], args.params[3], args.epsilon};
  } else if (!args.params_from.empty()) {
    if (args.row.empty()) throw UsageError("ratio: --params-from needs --row");
    auto found = find_table_row(args.params_from, args.row, args.epsilon);
    if (!found) throw UsageError("ratio: row '" + args.row + "' not found in " + args.params_from);
    params = *found;
  } else {
    throw UsageError(
        "ratio: parameters required (--params s t u v | --params-from FILE --row NAME)");
  }

  auto series = franel::ratio_scan(args.from, args.to, args.steps, params);

  with_output(args.output, [&](std::ostream& out) {
    out << "# franel ratio epsilon=" << franel::format_double(params.epsilon)
        << " s=" << franel::format_double(params.s) << " t=" << franel::format_double(params.t)
        << " u=" << franel::format_double(params.u) << " v=" << franel::format_double(params.v)
        << " version=" << franel::kVersion << "\n";
    out << "x,ratio\n";
    for (const auto& point : series) {
      out << franel::format_double(point.x) << ',' << franel::format_double(point.ratio) << '\n';
    }
  });

  if (!args.plot_script.empty() && args.output.empty()) {
    throw UsageError("ratio: --plot-script needs --output (the script plots that file)");
  }
  if (!args.output.empty()) {
    const std::string script =
        args.plot_script.empty() ? args.output + ".gnuplot" : args.plot_script;
    write_ratio_plot_script(script, args.output);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// hull / bumps
// ---------------------------------------------------------------------------

struct HullArgs {
  std::uint64_t m = 0;
  std::string convention = "interior";
  std::string cache_dir;
  std::string output;
};

int cmd_hull(const HullArgs& args) {
  if (args.m < 2) throw UsageError("hull: --m must be >= 2");
  const auto convention = parse_convention(args.convention);
  auto profile = obtain_profile(args.m, convention, args.cache_dir);
  franel::TotientTable table(args.m);
  auto hull = franel::prime_hull(profile, table);

  with_output(args.output, [&](std::ostream& out) {
    out << "# franel hull m=" << args.m << " convention=" << franel::to_string(convention)
        << " version=" << franel::kVersion << "\n";
    out << "k,p_value\n";
    for (const auto& [k, p] : hull) {
      out << k << ',' << franel::format_double(p) << '\n';
    }
  });
  return kExitOk;
}

int cmd_bumps(const HullArgs& args) {
  if (args.m < 12) throw UsageError("bumps: --m must be >= 12");
  const auto convention = parse_convention(args.convention);
  auto profile = obtain_profile(args.m, convention, args.cache_dir);
  auto bumps = franel::detect_bumps(profile);

  with_output(args.output, [&](std::ostream& out) {
    out << "# franel bumps m=" << args.m << " convention=" << franel::to_string(convention)
        << " version=" << franel::kVersion << "\n";
    out << "k_peak,j,distance,prominence\n";
    for (const auto& bump : bumps) {
      out << bump.k_peak << ',' << bump.j << ',' << franel::format_double(bump.distance) << ','
          << franel::format_double(bump.prominence) << '\n';
    }
  });
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::uint64_t max_m = 200;
  bool quadrature = false;
};

class Verifier {
 public:
  void check(bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << '\n';
    if (!ok) failed_ = true;
  }
  bool failed() const noexcept { return failed_; }

 private:
  bool failed_ = false;
};

void verify_farey(Verifier& v, std::uint64_t max_m) {
  bool stream_ok = true, unimodular_ok = true, count_ok = true, symmetry_ok = true;
  std::string first_bad;
  franel::TotientTable table(max_m);

  for (std::uint64_t m = 2; m <= max_m; ++m) {
    auto oracle = franel::brute_force_farey(m);
    franel::FareyStream stream(m);
    std::size_t i = 0;
    bool match = true;
    franel::FareyFraction prev{};
    while (auto f = stream.next()) {
      if (i >= oracle.size() || !(*f == oracle[i])) match = false;
      if (i > 0 && prev.den * f->num - prev.num * f->den != 1) unimodular_ok = false;
      // the mirror fraction 1 - h/k must sit at the mirrored position
      if (i < oracle.size()) {
        const auto& mirror = oracle[oracle.size() - 1 - i];
        if (mirror.num != f->den - f->num || mirror.den != f->den) symmetry_ok = false;
      }
      prev = *f;
      ++i;
    }
    if (i != oracle.size()) match = false;
    if (i != table.interior_count(m) + 2) count_ok = false;
    if (!match && stream_ok) {
      stream_ok = false;
      first_bad = "first mismatch at m=" + std::to_string(m);
    }
  }
  const std::string range = "m=2.." + std::to_string(max_m);
  v.check(stream_ok, "farey stream vs brute force",
          range + (first_bad.empty() ? "" : ", " + first_bad));
  v.check(unimodular_ok, "farey unimodular relation b*c - a*d = 1", range);
  v.check(count_ok, "farey count identity |F_m| = 2 + sum phi", range);
  v.check(symmetry_ok, "farey symmetry under x -> 1-x", range);
}

void verify_profiles(Verifier& v, std::uint64_t max_m) {
  std::vector<std::uint64_t> orders = {50, 500, 1000, 1009};
  orders.erase(std::remove_if(orders.begin(), orders.end(),
                              [&](std::uint64_t m) { return m > std::max<std::uint64_t>(max_m, 1009); }),
               orders.end());

  for (auto convention :
       {franel::IndexConvention::interior, franel::IndexConvention::paper_literal}) {
    double worst = 0.0;
    bool counts_ok = true;
    for (std::uint64_t m : orders) {
      auto profile = franel::compute_profile(m, convention);
      franel::KahanSum sum;
      for (std::uint64_t k = 2; k <= m; ++k) sum.add(profile.p_values[k]);
      const double rel = std::abs(sum.value() - profile.r_total) /
                         (profile.r_total > 0.0 ? profile.r_total : 1.0);
      worst = std::max(worst, rel);
      if (convention == franel::IndexConvention::interior) {
        franel::TotientTable totients(m);
        for (std::uint64_t k = 2; k <= m; ++k) {
          if (profile.term_counts[k] != totients.phi(k)) counts_ok = false;
        }
      }
    }
    std::ostringstream detail;
    detail << "sum_k P(k) vs total, worst rel err " << worst << ", tol 1e-12";
    v.check(worst <= 1e-12,
            std::string("profile consistency, ") + std::string(franel::to_string(convention)),
            detail.str());
    if (convention == franel::IndexConvention::interior) {
      v.check(counts_ok, "profile term counts equal phi(k)", "interior convention");
    }
  }
}

void verify_quadrature(Verifier& v) {
  const auto reference = franel::AsymptoticParams::reference();
  const double grid[] = {1e2, 1e3, 1e4, 1e5, 1e6};

  double worst = 0.0;
  for (double m : grid) {
    const double closed = franel::closed_form_bound(m, reference);
    const double quad = franel::quadrature_bound(m, reference);
    worst = std::max(worst, std::abs(closed - quad) / quad);
  }
  {
    std::ostringstream detail;
    detail << "reference params, worst rel err " << worst << ", tol 1e-8";
    v.check(worst <= 1e-8, "closed form vs quadrature, reference params", detail.str());
  }

  std::mt19937_64 rng(20240801);
  std::uniform_real_distribution<double> s_draw(-10.0, -1.0), t_draw(0.0, 0.3),
      u_draw(1.0, 10.0), v_draw(-1.5, -0.5);
  worst = 0.0;
  int range_refusals = 0;
  bool overflow_ok = true;
  for (int draw = 0; draw < 20; ++draw) {
    franel::AsymptoticParams params{s_draw(rng), t_draw(rng), u_draw(rng), v_draw(rng), 1e-6};
    for (double m : grid) {
      bool closed_over = false, quad_over = false;
      double closed = 0.0, quad = 0.0;
      try {
        closed = franel::closed_form_bound(m, params);
      } catch (const std::range_error&) {
        closed_over = true;
      }
      try {
        quad = franel::quadrature_bound(m, params);
      } catch (const std::range_error&) {
        quad_over = true;
      }
      if (closed_over != quad_over) overflow_ok = false;
      if (closed_over || quad_over) {
        ++range_refusals;
        continue;
      }
      worst = std::max(worst, std::abs(closed - quad) / quad);
    }
  }
  std::ostringstream detail;
  detail << "20 draws x 5 orders, worst rel err " << worst << ", tol 1e-8, " << range_refusals
         << " consistent range refusals";
  v.check(worst <= 1e-8 && overflow_ok, "closed form vs quadrature, random draws", detail.str());
}

int cmd_verify(const VerifyArgs& args) {
  if (args.max_m < 2 || args.max_m > 2000) {
    throw UsageError("verify: --max-m must be in [2, 2000] (brute-force oracle guard)");
  }
  Verifier v;
  verify_farey(v, args.max_m);
  verify_profiles(v, args.max_m);
  if (args.quadrature) verify_quadrature(v);
  return v.failed() ? kExitVerification : kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{
      "Farey deviation sums R(m), per-denominator profiles P_m(k), exponential\n"
      "envelope fits and closed-form decay bounds."};
  app.set_version_flag("--version", franel::kVersion);
  app.require_subcommand(1);

  ProfileArgs profile_args;
  auto* profile = app.add_subcommand("profile", "Compute a profile: k,p_value,term_count CSV");
  profile->add_option("--m", profile_args.m, "Farey order (>= 2)")->required();
  profile->add_option("--convention", profile_args.convention, "interior | paper-literal");
  profile->add_option("--cache-dir", profile_args.cache_dir, "Profile cache directory");
  profile->add_option("--output", profile_args.output, "Output CSV path (default stdout)");
  profile->add_flag("--terms", profile_args.terms, "Also emit the per-term CSV");
  profile->add_option("--terms-output", profile_args.terms_output,
                      "Per-term CSV path (default terms-m<m>-<convention>.csv)");

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Envelope fits over a prime set plus the power-law row");
  fit->add_option("--prime-set", fit_args.prime_set, "Index range p q (1-based, prime #1 = 2)")
      ->expected(2)
      ->required();
  fit->add_option("--convention", fit_args.convention, "interior | paper-literal");
  fit->add_option("--cache-dir", fit_args.cache_dir, "Profile cache directory");
  fit->add_option("--threads", fit_args.threads, "Worker threads (default: hardware)");
  fit->add_option("--output", fit_args.output, "Per-order fit CSV (default stdout)");
  fit->add_option("--table-output", fit_args.table_output, "Table row CSV (set,s,t,u,v)");
  fit->add_option("--residuals-output", fit_args.residuals_output, "Regression residual CSV");
  fit->add_flag("--direct-residuals", fit_args.direct_residuals,
                "Residuals in direct space instead of log space");
  fit->add_flag("--no-compute", fit_args.no_compute, "Fail instead of computing on cache miss");

  RatioArgs ratio_args;
  auto* ratio =
      app.add_subcommand("ratio", "Decay-ratio scan bound(x)/x^(-1+eps) over [from, to]");
  ratio->add_option("--from", ratio_args.from, "Lower end of the scan (> 2)")->required();
  ratio->add_option("--to", ratio_args.to, "Upper end of the scan")->required();
  ratio->add_option("--steps", ratio_args.steps, "Number of geometric steps (default 100)");
  ratio->add_option("--epsilon", ratio_args.epsilon, "Exponent offset (default 0.000001)");
  ratio->add_option("--params", ratio_args.params, "Model parameters s t u v")->expected(4);
  ratio->add_option("--params-from", ratio_args.params_from, "Table CSV with set,s,t,u,v rows");
  ratio->add_option("--row", ratio_args.row, "Row name in --params-from, e.g. M(101,800)");
  ratio->add_option("--output", ratio_args.output, "Output CSV path (default stdout)");
  ratio->add_option("--plot-script", ratio_args.plot_script,
                    "gnuplot script path (default <output>.gnuplot)");

  HullArgs hull_args;
  auto* hull = app.add_subcommand("hull", "Profile restricted to prime denominators: k,p_value");
  hull->add_option("--m", hull_args.m, "Farey order (>= 2)")->required();
  hull->add_option("--convention", hull_args.convention, "interior | paper-literal");
  hull->add_option("--cache-dir", hull_args.cache_dir, "Profile cache directory");
  hull->add_option("--output", hull_args.output, "Output CSV path (default stdout)");

  HullArgs bumps_args;
  auto* bumps = app.add_subcommand("bumps", "Bump locations near m/j: k_peak,j,distance");
  bumps->add_option("--m", bumps_args.m, "Farey order (>= 12)")->required();
  bumps->add_option("--convention", bumps_args.convention, "interior | paper-literal");
  bumps->add_option("--cache-dir", bumps_args.cache_dir, "Profile cache directory");
  bumps->add_option("--output", bumps_args.output, "Output CSV path (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the desk-scale oracle suites");
  verify->add_option("--max-m", verify_args.max_m,
                     "Top order for the stream oracle (default 200)");
  verify->add_flag("--quadrature", verify_args.quadrature, "Also cross-check the closed form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (profile->parsed()) return cmd_profile(profile_args);
    if (fit->parsed()) return cmd_fit(fit_args);
    if (ratio->parsed()) return cmd_ratio(ratio_args);
    if (hull->parsed()) return cmd_hull(hull_args);
    if (bumps->parsed()) return cmd_bumps(bumps_args);
    if (verify->parsed()) return cmd_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}
