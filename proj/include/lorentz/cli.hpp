#pragma once

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorentz/checks.hpp"
#include "lorentz/gallery.hpp"
#include "lorentz/report.hpp"
#include "lorentz/serialize.hpp"

// Command-line front end.  Every command is a thin wrapper over the library:
// no numeric logic lives here, only argument plumbing and formatting.
//
// Exit codes: 0 success (all checks passed), 1 at least one check failed,
// 2 usage or parse error, 3 unexpected internal error.

namespace lorentz::cli {

namespace detail {

using lorentz::detail::fmt_num;

inline std::string iso_timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// LORENTZ_LAB_SEED beats --seed so CI can pin reruns without editing scripts.
inline std::uint64_t apply_seed_env(std::uint64_t seed) {
  const char* env = std::getenv("LORENTZ_LAB_SEED");
  if (env == nullptr || *env == '\0') return seed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    throw std::invalid_argument(std::string("LORENTZ_LAB_SEED must be a nonnegative integer, got '") +
                                env + "'");
  }
  return static_cast<std::uint64_t>(v);
}

inline QuadratureSpec quad_with_rel_tol(double rel_tol) {
  if (!(rel_tol > 0.0) || !(rel_tol < 1.0)) {
    throw std::invalid_argument("--quad-rel-tol must lie in (0, 1)");
  }
  QuadratureSpec spec;
  spec.rel_tol = rel_tol;
  return spec;
}

inline std::string describe_rearrangement(const MeasureProfile& mp) {
  if (!mp.available()) return "unavailable";
  if (mp.exact) return to_json(*mp.exact).dump();
  return "numeric, support " + fmt_num(mp.support);
}

// The showcase set covers every gallery family once with small parameters.
inline std::vector<GalleryItem> showcase_items(const QuadratureSpec& quad) {
  std::vector<GalleryItem> items;
  items.push_back(make_u_slice(1.0, 1.0, 2.0));
  items.push_back(make_u_slice(1.0, 0.5, 3.0));
  items.push_back(make_u_radial(1.0, 1.0, 2, 2.0));
  items.push_back(make_u_radial(1.0, 0.5, 3, 3.0));
  items.push_back(make_v(1.0, 1.0, 2, 3.0, quad));
  items.push_back(make_power_singularity(1.0, 1, 2.0));
  items.push_back(make_power_singularity(1.0, 2, 3.0));
  items.push_back(make_up(2, 4.0));
  items.push_back(make_up(2, 2.0));
  items.push_back(make_shifted_up(1.0, 1, 3.0));
  items.push_back(truncate(make_v(1.0, 1.0, 2, 3.0, quad), 2));
  return items;
}

struct NormArgs {
  std::string item_id;
  double p = 2.0;
  std::string q_text;
  double quad_rel_tol = 0.0;  // 0 = leave the default
};

inline int cmd_norm(const NormArgs& args, std::ostream& out) {
  const GalleryItem item = parse_gallery_id(args.item_id);
  if (!item.value_rearrangement.available())
    throw std::invalid_argument("no value rearrangement is known for '" + item.id +
                                "'; run 'gallery' to see which items carry one");
  const ExponentPair pq{args.p, Exponent::parse(args.q_text)};
  const QuadratureSpec quad =
      args.quad_rel_tol > 0.0 ? quad_with_rel_tol(args.quad_rel_tol) : QuadratureSpec{};
  out << item.value_rearrangement.norm(pq, quad).str() << "\n";
  return 0;
}

struct WitnessArgs {
  double p = 2.0;
  std::string q1_text;
  std::string q2_text;
};

inline int cmd_witness(const WitnessArgs& args, std::ostream& out) {
  const Exponent q1 = Exponent::parse(args.q1_text);
  const Exponent q2 = Exponent::parse(args.q2_text);
  if (q1.is_infinite()) throw std::invalid_argument("witness: q1 must be finite");
  const WitnessBundle b = witness_strict_inclusion(args.p, q1.value(), q2);
  out << "alpha=" << fmt_num(b.alpha) << "\n";
  out << "closed_form_q2=" << fmt_num(b.closed_form_q2) << "\n";
  out << "value_norm_q2=" << b.function_at_q2.str() << "\n";
  out << "value_norm_q1=" << b.function_at_q1.str() << "\n";
  out << "gradient_norm_q2=" << b.gradient_at_q2.str() << "\n";
  out << "gradient_norm_q1=" << b.gradient_at_q1.str() << "\n";
  write_pretty(out, witness_reports(b, false));
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  double quad_rel_tol = 0.0;
  std::string output;  // base path; empty = stdout only
  bool no_timestamp = false;
};

inline int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  SuiteConfig cfg;
  cfg.seed = apply_seed_env(args.seed);
  if (args.quad_rel_tol > 0.0) cfg.quad = quad_with_rel_tol(args.quad_rel_tol);

  const std::vector<CheckReport> reports = run_suite(args.suite, cfg);

  out << "suite " << args.suite << " (seed " << cfg.seed << ")\n";
  if (!args.no_timestamp) out << "generated " << iso_timestamp_utc() << "\n";
  write_pretty(out, reports);

  if (!args.output.empty()) {
    RunConfig rc;
    rc.command = "verify";
    rc.suite = args.suite;
    rc.seed = cfg.seed;
    rc.quad = cfg.quad;
    rc.output = args.output;
    rc.format = "jsonl";
    rc.timestamp = !args.no_timestamp;

    nlohmann::json meta = to_json(rc);
    if (!args.no_timestamp) meta["generated"] = iso_timestamp_utc();

    const std::string jsonl_path = args.output + ".jsonl";
    const std::string csv_path = args.output + ".csv";
    std::ofstream jsonl(jsonl_path);
    if (!jsonl) throw std::runtime_error("cannot open " + jsonl_path + " for writing");
    write_jsonl(jsonl, reports, &meta);
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open " + csv_path + " for writing");
    write_csv(csv, reports);
    out << "wrote " << jsonl_path << " and " << csv_path << "\n";
  }

  return summarize(reports).failed == 0 ? 0 : 1;
}

struct SweepArgs {
  std::string target;
  double p = 2.0;
  double r = 1.0;
  int n = 2;
  double alpha = 1.0;
  std::string q_text = "inf";
  std::vector<double> alphas{0.25, 0.5, 1.0};
  std::vector<std::string> qs{"1", "2", "4", "inf"};
  std::vector<double> rs{0.5, 1.0, 2.0};
  double quad_rel_tol = 0.0;
};

// Rows come out in the order the grid lists were given; cells for divergent
// norms carry the INFINITE(reason) spelling so the CSV stays rectangular.
inline int sweep_u_radial(const SweepArgs& args, std::ostream& out) {
  if (args.alphas.empty() || args.qs.empty()) {
    throw std::invalid_argument("sweep u_radial: --alphas and --qs must be nonempty");
  }
  const QuadratureSpec quad =
      args.quad_rel_tol > 0.0 ? quad_with_rel_tol(args.quad_rel_tol) : QuadratureSpec{};
  std::vector<Exponent> q_grid;
  q_grid.reserve(args.qs.size());
  for (const auto& text : args.qs) q_grid.push_back(Exponent::parse(text));

  out << "family,r,n,p,alpha,q,norm\n";
  for (double alpha : args.alphas) {
    const GalleryItem item = make_u_radial(args.r, alpha, args.n, args.p);
    for (const Exponent& q : q_grid) {
      const NormValue nv = item.value_rearrangement.norm({args.p, q}, quad);
      out << "u_radial," << fmt_num(args.r) << "," << args.n << "," << fmt_num(args.p) << ","
          << fmt_num(alpha) << "," << q.str() << "," << nv.str() << "\n";
    }
  }
  return 0;
}

inline int sweep_poincare_ratio(const SweepArgs& args, std::ostream& out) {
  if (args.rs.empty()) throw std::invalid_argument("sweep poincare-ratio: --rs must be nonempty");
  const QuadratureSpec quad =
      args.quad_rel_tol > 0.0 ? quad_with_rel_tol(args.quad_rel_tol) : QuadratureSpec{};
  const ExponentPair pq{args.p, Exponent::parse(args.q_text)};

  out << "r,rho\n";
  for (double r : args.rs) {
    const GalleryItem item = make_v(r, args.alpha, args.n, args.p, quad);
    const NormValue val = item.value_rearrangement.norm(pq, quad);
    const NormValue grad = item.gradient_rearrangement.norm(pq, quad);
    std::string cell = "undefined";
    if (val.is_finite() && grad.is_finite() && grad.value() > 0.0) {
      const double scale = std::pow(item.measure(), 1.0 / item.dim());
      cell = fmt_num(val.value() / (scale * grad.value()));
    }
    out << fmt_num(r) << "," << cell << "\n";
  }
  return 0;
}

inline int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  if (args.target == "u_radial") return sweep_u_radial(args, out);
  if (args.target == "poincare-ratio") return sweep_poincare_ratio(args, out);
  throw std::invalid_argument("sweep: unknown target '" + args.target +
                              "' (expected u_radial or poincare-ratio)");
}

inline int cmd_gallery(std::ostream& out) {
  for (const GalleryItem& item : showcase_items({})) {
    out << item.id << "\n";
    out << "  domain: dim=" << item.dim() << " radius=" << fmt_num(item.radius())
        << " measure=" << fmt_num(item.measure()) << "\n";
    out << "  value rearrangement: " << describe_rearrangement(item.value_rearrangement) << "\n";
    out << "  gradient rearrangement: " << describe_rearrangement(item.gradient_rearrangement)
        << "\n";
  }
  return 0;
}

}  // namespace detail

/// Parses `args` (program name excluded) and runs one command.  All normal
/// output goes to `out`, diagnostics to `err`; the return value is the
/// process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorentz-space inequality lab"};
  app.require_subcommand(1);

  detail::NormArgs norm_args;
  CLI::App* norm = app.add_subcommand("norm", "Evaluate a gallery item's Lorentz quasinorm");
  norm->add_option("id", norm_args.item_id, "gallery id, e.g. u_radial(r=1,alpha=1,n=2,p=2)")
      ->required();
  norm->add_option("--p", norm_args.p, "primary exponent, in (1, inf)")->required();
  norm->add_option("--q", norm_args.q_text, "secondary exponent, a number or inf")->required();
  norm->add_option("--quad-rel-tol", norm_args.quad_rel_tol, "quadrature relative tolerance");

  detail::WitnessArgs witness_args;
  CLI::App* witness =
      app.add_subcommand("witness", "Build the strict-inclusion witness pair for q1 < q2");
  witness->add_option("--p", witness_args.p, "primary exponent, in (1, inf)")->required();
  witness->add_option("--q1", witness_args.q1_text, "smaller secondary exponent (finite)")
      ->required();
  witness->add_option("--q2", witness_args.q2_text, "larger secondary exponent, a number or inf")
      ->required();

  detail::VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", verify_args.suite,
                   "holder | equivalence | inclusion | ac | morrey1d | morreynd | poincare | all")
      ->required();
  verify->add_option("--seed", verify_args.seed, "base seed for sampled checks");
  verify->add_option("--quad-rel-tol", verify_args.quad_rel_tol, "quadrature relative tolerance");
  verify->add_option("--output", verify_args.output,
                     "base path; writes <base>.jsonl and <base>.csv");
  verify->add_flag("--no-timestamp", verify_args.no_timestamp,
                   "omit timestamps for byte-stable output");

  detail::SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Tabulate norms or ratios over a parameter grid");
  sweep->add_option("target", sweep_args.target, "u_radial | poincare-ratio")->required();
  sweep->add_option("--p", sweep_args.p, "primary exponent, in (1, inf)");
  sweep->add_option("--r", sweep_args.r, "domain radius (u_radial)");
  sweep->add_option("--n", sweep_args.n, "dimension");
  sweep->add_option("--alpha", sweep_args.alpha, "log exponent (poincare-ratio)");
  sweep->add_option("--q", sweep_args.q_text, "secondary exponent (poincare-ratio)");
  sweep->add_option("--alphas", sweep_args.alphas, "comma-separated alpha grid (u_radial)")
      ->delimiter(',');
  sweep->add_option("--qs", sweep_args.qs, "comma-separated q grid (u_radial)")->delimiter(',');
  sweep->add_option("--rs", sweep_args.rs, "comma-separated radius grid (poincare-ratio)")
      ->delimiter(',');
  sweep->add_option("--quad-rel-tol", sweep_args.quad_rel_tol, "quadrature relative tolerance");

  CLI::App* gallery =
      app.add_subcommand("gallery", "List the showcase gallery items and their rearrangements");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return 2;
  }

  try {
    if (app.got_subcommand(norm)) return detail::cmd_norm(norm_args, out);
    if (app.got_subcommand(witness)) return detail::cmd_witness(witness_args, out);
    if (app.got_subcommand(verify)) return detail::cmd_verify(verify_args, out);
    if (app.got_subcommand(sweep)) return detail::cmd_sweep(sweep_args, out);
    if (app.got_subcommand(gallery)) return detail::cmd_gallery(out);
    err << "error: no command selected\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace lorentz::cli
