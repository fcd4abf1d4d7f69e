#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "riley/real_roots.hpp"
#include "riley/render.hpp"
#include "riley/riley.hpp"
#include "riley/signature.hpp"
#include "riley/verifier.hpp"

namespace riley::cli {

namespace {

Rational parse_rational_arg(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const AlgebraError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

void validate_knot(long p, long q) {
  try {
    (void)KnotId::make(p, q);
  } catch (const InvalidKnot& e) {
    throw UsageError(e.what());
  }
}

void require_positive(const std::string& name, int v) {
  if (v < 1) throw UsageError(name + " must be a positive integer");
}

Rational x_or_two(const CliConfig& c) { return c.x.value_or(Rational(2)); }

UniPoly specialized_phi(const KnotId& k, const Rational& x0) {
  if (x0 == 2) return riley_parabolic(k);
  return normalize_riley(eval_bi(riley_general(k).phi_xy, x0));
}

int run_knot(const CliConfig& c, std::ostream& out) {
  const auto k = KnotId::make(c.p, c.q);
  const auto canon = k.canonical();
  out << "knot: " << k.to_string();
  if (canon != k) out << " (canonical " << canon.to_string() << ")";
  out << '\n';
  if (k.schubert_q() != k.q()) out << "schubert q: " << k.schubert_q() << '\n';
  if (const auto d = double_twist_of(k)) out << "double twist: " << d->to_string() << '\n';
  const auto word = schubert_word(k);
  out << "epsilon: " << render_epsilon(epsilon_sequence(k)) << '\n';
  out << "word: " << render_word(word) << '\n';
  out << "compact: " << render_word_compact(word) << '\n';
  return kOk;
}

int run_poly(const CliConfig& c, std::ostream& out) {
  const auto k = KnotId::make(c.p, c.q);
  const auto phi = riley_general(k).phi_xy;
  if (c.json) {
    out << to_json(phi).dump() << '\n';
    return kOk;
  }
  const Rational x0 = x_or_two(c);
  out << "Phi(x,y) = " << render_bipoly(phi) << '\n';
  out << "Phi(" << to_string(x0) << ",y) = " << render_poly(normalize_riley(eval_bi(phi, x0))) << '\n';
  return kOk;
}

int run_family(const CliConfig& c, std::ostream& out) {
  const auto d = DoubleTwist::make(c.family, c.m, c.n);
  const auto params = closed_form_params(d);
  const auto phi = riley_closed_form(d).phi_xy;
  const Rational x0 = x_or_two(c);
  out << "family: " << d.to_string() << " = " << family_to_pq(d).to_string() << '\n';
  if (c.json) {
    out << to_json(phi).dump() << '\n';
    return kOk;
  }
  out << "t = " << render_bipoly(params.t) << '\n';
  out << "mu = " << render_bipoly(params.mu) << '\n';
  out << "Phi(x,y) = " << render_bipoly(phi) << '\n';
  out << "Phi(" << to_string(x0) << ",y) = " << render_poly(normalize_riley(eval_bi(phi, x0))) << '\n';
  return kOk;
}

int run_roots(const CliConfig& c, std::ostream& out) {
  const auto k = KnotId::make(c.p, c.q);
  const Rational x0 = x_or_two(c);
  const UniPoly f = specialized_phi(k, x0);
  out << "Phi(" << to_string(x0) << ",y) = " << render_poly(f) << '\n';
  if (f.is_constant()) {
    out << "real roots: 0\n";
    return kOk;
  }
  const RootCount rc = c.isolate ? isolate_roots(f) : count_real_roots(f);
  out << "real roots: " << rc.total_real << '\n';
  for (const auto& iv : rc.intervals) out << "  (" << to_string(iv.lo) << ", " << to_string(iv.hi) << ")\n";
  return kOk;
}

int run_signature(const CliConfig& c, std::ostream& out) {
  out << render_signature(signature_two_bridge(KnotId::make(c.p, c.q))) << '\n';
  return kOk;
}

int run_conjecture(const CliConfig& c, std::ostream& out, std::ostream& err) {
  if (c.pmax_rounded) err << "note: --pmax rounded down to " << c.pmax << '\n';
  const ScanResult scan = scan_conjecture(c.pmax, c.jobs);
  std::ostream& summary = c.out ? out : err;
  if (c.out) {
    emit_report(scan.records, c.format, std::filesystem::path(*c.out));
  } else {
    emit_report(scan.records, c.format, out);
  }
  const auto& s = scan.summary;
  summary << "records: " << s.records << "  holds: " << s.holds << "  violations: " << s.violations
          << "  counterexample candidates: " << s.counterexample_candidates << "  errors: " << s.errors << '\n';
  for (const auto& r : scan.records) {
    if (!r.error.empty() || !r.holds) summary << render_record(r) << '\n';
  }
  if (s.errors > 0) return kInternal;
  return s.violations > 0 ? kCheckFailed : kOk;
}

int run_theorem(const CliConfig& c, std::ostream& out, bool first) {
  const auto records = first ? sweep_theorem1(c.mmax, c.nmax, c.x0s) : sweep_theorem2(c.mmax, c.nmax, c.x0s);
  int failed = 0, unranged = 0;
  for (const auto& r : records) {
    out << render_record(r) << '\n';
    if (!r.holds) ++failed;
    if (!r.in_range) ++unranged;
  }
  out << "checked: " << records.size() << "  failed: " << failed << "  out of range: " << unranged << '\n';
  return failed > 0 ? kCheckFailed : kOk;
}

int run_crosscheck(const CliConfig& c, std::ostream& out) {
  int failed = 0;
  for (Family f : {Family::EE, Family::EN, Family::OE, Family::ON}) {
    for (int m = 1; m <= c.mmax; ++m) {
      for (int n = 1; n <= c.nmax; ++n) {
        const auto r = cross_validate(DoubleTwist::make(f, m, n));
        out << r.family.to_string() << " = " << r.knot.to_string() << "  " << (r.equal ? "equal" : "DIFFERENT") << '\n';
        if (!r.equal) {
          out << r.diff;
          ++failed;
        }
      }
    }
  }
  out << "failed: " << failed << '\n';
  return failed > 0 ? kCheckFailed : kOk;
}

}  // namespace

const std::string& help_text() {
  static const std::string text =
      "usage: riley <command> [args]\n"
      "\n"
      "commands:\n"
      "  knot <p> <q>                              normalized id, epsilon sequence, Schubert word\n"
      "  poly <p> <q> [--x <rational>] [--json]     Riley polynomial Phi(x,y) and Phi(x0,y) (default x0 = 2)\n"
      "  family <EE|EN|OE|ON> <m> <n> [--x <rational>] [--json]\n"
      "                                            closed-form Phi, t and mu of a double twist knot\n"
      "  roots <p> <q> [--x <rational>] [--isolate] real root count of Phi(x0,y), optional isolating intervals\n"
      "  signature <p> <q>                         sigma_abs, sigma_signed, even continued fraction, determinant\n"
      "  verify conjecture --pmax <N> [--format jsonl|csv] [--out <path>] [--jobs <k>]\n"
      "                                            scan all two-bridge knots with p <= N\n"
      "  verify theorem1 --mmax <M> --nmax <N> [--x0 <list>]\n"
      "                                            J(2m,2n) and J(2m,-2n) root counts\n"
      "  verify theorem2 --mmax <M> --nmax <N> [--x0 <list>]\n"
      "                                            J(2m+1,2n) and J(2m+1,-2n) root counts\n"
      "  crosscheck --mmax <M> --nmax <N>          closed forms against the matrix-product construction\n"
      "\n"
      "Rationals are written a/b or as integers; use --x=-3/2 for negative values.\n"
      "--x0 takes a comma-separated list. RILEY_JOBS is used when --jobs is absent.\n"
      "exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 internal validation error\n";
  return text;
}

int default_jobs() {
  if (const char* env = std::getenv("RILEY_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig cfg;
  cfg.jobs = default_jobs();
  CLI::App app{"riley"};
  app.set_help_flag();
  app.allow_windows_style_options(false);
  bool help = false;
  app.add_flag("-h,--help", help);
  app.require_subcommand(1);

  std::string x_text, family_text, format_text = "jsonl";
  std::vector<std::string> x0_texts;
  std::optional<int> jobs;

  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("p", cfg.p)->required();
    sub->add_option("q", cfg.q)->required();
  };
  auto add_x = [&](CLI::App* sub) { sub->add_option("--x", x_text); };
  auto add_mn_max = [&](CLI::App* sub) {
    sub->add_option("--mmax", cfg.mmax)->required();
    sub->add_option("--nmax", cfg.nmax)->required();
  };

  auto* knot = app.add_subcommand("knot");
  add_pq(knot);
  auto* poly = app.add_subcommand("poly");
  add_pq(poly);
  add_x(poly);
  poly->add_flag("--json", cfg.json);
  auto* family = app.add_subcommand("family");
  family->add_option("family", family_text)->required();
  family->add_option("m", cfg.m)->required();
  family->add_option("n", cfg.n)->required();
  add_x(family);
  family->add_flag("--json", cfg.json);
  auto* roots = app.add_subcommand("roots");
  add_pq(roots);
  add_x(roots);
  roots->add_flag("--isolate", cfg.isolate);
  auto* signature = app.add_subcommand("signature");
  add_pq(signature);
  auto* verify = app.add_subcommand("verify");
  verify->require_subcommand(1);
  auto* conjecture = verify->add_subcommand("conjecture");
  conjecture->add_option("--pmax", cfg.pmax)->required();
  conjecture->add_option("--format", format_text);
  conjecture->add_option("--out", cfg.out);
  conjecture->add_option("--jobs", jobs);
  auto* theorem1 = verify->add_subcommand("theorem1");
  add_mn_max(theorem1);
  theorem1->add_option("--x0", x0_texts)->delimiter(',');
  auto* theorem2 = verify->add_subcommand("theorem2");
  add_mn_max(theorem2);
  theorem2->add_option("--x0", x0_texts)->delimiter(',');
  auto* crosscheck = app.add_subcommand("crosscheck");
  add_mn_max(crosscheck);

  for (auto* sub : {knot, poly, family, roots, signature, verify, conjecture, theorem1, theorem2, crosscheck}) {
    sub->set_help_flag();
    sub->add_flag("-h,--help", help);
  }

  if (std::find(args.begin(), args.end(), "-h") != args.end() ||
      std::find(args.begin(), args.end(), "--help") != args.end() || args.empty()) {
    throw HelpRequested();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (*knot) cfg.command = Command::knot;
  if (*poly) cfg.command = Command::poly;
  if (*family) cfg.command = Command::family;
  if (*roots) cfg.command = Command::roots;
  if (*signature) cfg.command = Command::signature;
  if (*conjecture) cfg.command = Command::verify_conjecture;
  if (*theorem1) cfg.command = Command::verify_theorem1;
  if (*theorem2) cfg.command = Command::verify_theorem2;
  if (*crosscheck) cfg.command = Command::crosscheck;

  switch (cfg.command) {
    case Command::knot:
    case Command::poly:
    case Command::roots:
    case Command::signature:
      validate_knot(cfg.p, cfg.q);
      break;
    case Command::family:
      try {
        cfg.family = parse_family(family_text);
      } catch (const AlgebraError& e) {
        throw UsageError(e.what());
      }
      require_positive("m", cfg.m);
      require_positive("n", cfg.n);
      break;
    case Command::verify_conjecture:
      if (cfg.pmax < 3) throw UsageError("--pmax must be at least 3");
      if (cfg.pmax % 2 == 0) {
        --cfg.pmax;
        cfg.pmax_rounded = true;
      }
      try {
        cfg.format = parse_report_format(format_text);
      } catch (const AlgebraError& e) {
        throw UsageError(e.what());
      }
      if (jobs) {
        if (*jobs < 1) throw UsageError("--jobs must be at least 1");
        cfg.jobs = *jobs;
      }
      break;
    case Command::verify_theorem1:
    case Command::verify_theorem2:
    case Command::crosscheck:
      require_positive("--mmax", cfg.mmax);
      require_positive("--nmax", cfg.nmax);
      break;
  }
  if (!x_text.empty()) cfg.x = parse_rational_arg("--x", x_text);
  for (const auto& t : x0_texts) cfg.x0s.push_back(parse_rational_arg("--x0", t));
  return cfg;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::knot: return run_knot(config, out);
      case Command::poly: return run_poly(config, out);
      case Command::family: return run_family(config, out);
      case Command::roots: return run_roots(config, out);
      case Command::signature: return run_signature(config, out);
      case Command::verify_conjecture: return run_conjecture(config, out, err);
      case Command::verify_theorem1: return run_theorem(config, out, true);
      case Command::verify_theorem2: return run_theorem(config, out, false);
      case Command::crosscheck: return run_crosscheck(config, out);
    }
  } catch (const ReportError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const HelpRequested&) {
    out << help_text();
    return args.empty() ? kUsage : kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n\n" << help_text();
    return kUsage;
  }
  return run(cfg, out, err);
}

}  // namespace riley::cli
