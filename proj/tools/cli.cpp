#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "itergroup/bp_encode.hpp"
#include "itergroup/cycle_transform.hpp"
#include "itergroup/leakage_lab.hpp"
#include "itergroup/permutation.hpp"
#include "itergroup/product_map.hpp"
#include "itergroup/reductions.hpp"
#include "itergroup/text_format.hpp"
#include "itergroup/verify.hpp"
#include "itergroup/version.hpp"

namespace itergroup::cli {

namespace {

/// Bad user input, reported with the offending token.
struct UsageError {
  std::string message;
  std::string token;
};

struct Violation {
  std::string message;
};

struct Common {
  std::size_t t = 0;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string format = "cycles";
  std::string out_path;
};

Permutation perm_arg(const std::string& flag, const std::string& text, std::size_t t) {
  if (t == 0) throw UsageError{"--t is required with " + flag, flag};
  try {
    return parse_permutation(text, t);
  } catch (const Error& e) {
    throw UsageError{flag + ": " + e.what(), text};
  }
}

PermFormat format_arg(const std::string& name) {
  try {
    return parse_perm_format(name);
  } catch (const Error&) {
    throw UsageError{"--format must be cycles or images", name};
  }
}

/// Writes to --out when given, to the command's stdout otherwise.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError{"cannot open output file", path};
    os_ = file_.get();
  }
  std::ostream& operator*() { return *os_; }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open input file", path};
  return in;
}

void report_header(std::ostream& os, const std::string& command, const Common& c) {
  os << "# itergroup " << kVersion << ' ' << command << " seed=" << c.seed << " workers=" << c.workers
     << '\n';
}

Rng seeded(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return Rng(seq);
}

void add_common(CLI::App* app, Common& c, bool needs_t) {
  auto* t = app->add_option("--t", c.t, "Degree of the symmetric group");
  if (needs_t) t->required();
  app->add_option("--seed", c.seed, "RNG seed, recorded in every report");
  app->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "Permutation output style: cycles or images");
  app->add_option("--out", c.out_path, "Output file (stdout if omitted)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-group reductions and product-class experiments", "itergroup"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  // perm
  Common perm_c;
  std::string perm_op = "compose";
  std::string perm_a;
  std::string perm_b;
  auto* perm = app.add_subcommand("perm", "Permutation calculator");
  add_common(perm, perm_c, true);
  perm->add_option("--op", perm_op,
                   "compose|inverse|commutator|conjugate|conjugator|parity|type|moved");
  perm->add_option("--a", perm_a, "First permutation")->required();
  perm->add_option("--b", perm_b, "Second permutation");

  // convert
  Common conv_c;
  std::string conv_from;
  std::string conv_to;
  auto* conv = app.add_subcommand("convert", "Element-level script taking one element to another");
  add_common(conv, conv_c, true);
  conv->add_option("--from", conv_from, "Source element (even, not the identity)")->required();
  conv->add_option("--to", conv_to, "Target: odd cycle, 3-cycle or two even cycles")->required();

  // map
  Common map_c;
  std::string map_alpha;
  std::string map_beta;
  std::size_t map_m = 0;
  std::string map_in;
  auto* map = app.add_subcommand("map", "Build a 1-local vector map, optionally applying it");
  add_common(map, map_c, true);
  map->add_option("--alpha", map_alpha, "Source product")->required();
  map->add_option("--beta", map_beta, "Target product")->required();
  map->add_option("--m", map_m, "Input vector length (default t)");
  map->add_option("--in", map_in, "Vector file to push through the map");

  // compile-bp
  Common bp_c;
  std::string bp_path;
  std::string bp_x;
  bool bp_check = false;
  auto* cbp = app.add_subcommand("compile-bp", "Encode (program, input) as a permutation");
  add_common(cbp, bp_c, false);
  cbp->add_option("--bp", bp_path, "Branching program file")->required();
  cbp->add_option("--x", bp_x, "Input bits, x1 first")->required();
  cbp->add_flag("--check", bp_check, "Compare with direct evaluation; exit 2 on disagreement");

  // reduce-id
  Common rid_c;
  std::string rid_path;
  std::string rid_x;
  auto* rid = app.add_subcommand("reduce-id", "Identity-product instances for (program, input)");
  add_common(rid, rid_c, false);
  rid->add_option("--bp", rid_path, "Branching program file")->required();
  rid->add_option("--x", rid_x, "Input bits")->required();

  // reduce-single
  Common rs_c;
  std::string rs_in;
  std::string rs_mode = "constructive";
  std::size_t rs_budget = 0;
  auto* rs = app.add_subcommand("reduce-single", "Search candidates mapping prod x to (1 2)(3 4)");
  add_common(rs, rs_c, false);
  rs->add_option("--in", rs_in, "Vector file (length t, degree t >= 8)")->required();
  rs->add_option("--mode", rs_mode, "constructive|derived|full");
  rs->add_option("--budget", rs_budget, "Candidates to examine, 0 = whole stream");

  // sample
  Common smp_c;
  std::string smp_alpha;
  std::size_t smp_count = 1;
  auto* smp = app.add_subcommand("sample", "Draw vectors from the class of alpha");
  add_common(smp, smp_c, true);
  smp->add_option("--alpha", smp_alpha, "Product of the class")->required();
  smp->add_option("--count", smp_count, "Number of vectors")->check(CLI::PositiveNumber);

  // tvd
  Common tvd_c;
  std::string tvd_alpha;
  std::vector<std::string> tvd_leaks;
  bool tvd_exact_flag = false;
  std::size_t tvd_n = 10000;
  auto* tvd = app.add_subcommand("tvd", "Distance between leakage outputs under alpha and id");
  add_common(tvd, tvd_c, true);
  tvd->add_option("--alpha", tvd_alpha, "Product alpha")->required();
  tvd->add_option("--leak", tvd_leaks, "Leakage spec, repeatable")->required();
  tvd->add_flag("--exact", tvd_exact_flag, "Exact enumeration (t <= 4)");
  tvd->add_option("--n", tvd_n, "Monte Carlo draws per class")->check(CLI::PositiveNumber);

  // amplify
  Common amp_c;
  std::string amp_alpha;
  std::string amp_leak;
  std::size_t amp_k = 1;
  std::size_t amp_m = 100;
  double amp_eps = 0;
  std::size_t amp_cal = 10000;
  std::size_t amp_trials = 100;
  std::string amp_in;
  auto* amp = app.add_subcommand("amplify", "Threshold amplifier over rerandomized samples");
  add_common(amp, amp_c, true);
  amp->add_option("--alpha", amp_alpha, "Product alpha")->required();
  amp->add_option("--leak", amp_leak, "One-bit leakage spec")->required();
  amp->add_option("--k", amp_k, "Advantage exponent")->check(CLI::PositiveNumber);
  amp->add_option("--m", amp_m, "Samples per decision")->check(CLI::PositiveNumber);
  amp->add_option("--eps", amp_eps, "eps_alpha; calibrated from samples when omitted");
  amp->add_option("--calibration", amp_cal, "Samples for calibrating eps_alpha")->check(CLI::PositiveNumber);
  amp->add_option("--trials", amp_trials, "Promise trials, alternating alpha and id")->check(CLI::PositiveNumber);
  amp->add_option("--in", amp_in, "Decide this vector instead of running trials");

  // verify
  Common ver_c;
  std::vector<int> ver_only;
  auto* ver = app.add_subcommand("verify", "Run the cross-module contract checks");
  add_common(ver, ver_c, false);
  ver->add_option("--only", ver_only, "Criterion ids to run")->check(CLI::Range(1, kCriterionCount));

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    }

    if (perm->parsed()) {
      const auto& c = perm_c;
      const PermFormat fmt = format_arg(c.format);
      const Permutation a = perm_arg("--a", perm_a, c.t);
      auto b = [&] {
        if (perm_b.empty()) throw UsageError{"--op " + perm_op + " needs --b", perm_op};
        return perm_arg("--b", perm_b, c.t);
      };
      Sink sink(c.out_path, out);
      std::ostream& os = *sink;
      if (perm_op == "compose") {
        os << format_permutation(a * b(), fmt) << '\n';
      } else if (perm_op == "inverse") {
        os << format_permutation(a.inverse(), fmt) << '\n';
      } else if (perm_op == "commutator") {
        os << format_permutation(commutator(a, b()), fmt) << '\n';
      } else if (perm_op == "conjugate") {
        os << format_permutation(conjugate(a, b()), fmt) << '\n';
      } else if (perm_op == "conjugator") {
        os << format_permutation(conjugator_in_A(a, b()), fmt) << '\n';
      } else if (perm_op == "parity") {
        os << to_string(parity(a)) << '\n';
      } else if (perm_op == "type") {
        const auto type = cycle_type(a);
        for (std::size_t i = 0; i < type.size(); ++i) os << (i ? " " : "") << type[i];
        os << (type.empty() ? "1\n" : "\n");
      } else if (perm_op == "moved") {
        os << moved_count(a) << '\n';
      } else {
        throw UsageError{"unknown --op", perm_op};
      }
      return kExitOk;
    }

    if (conv->parsed()) {
      const auto& c = conv_c;
      const Permutation a = perm_arg("--from", conv_from, c.t);
      const Permutation b = perm_arg("--to", conv_to, c.t);
      const TransformScript s = convert(a, b);
      if (apply_script(a, s) != b) throw Violation{"script does not reproduce the target"};
      Sink sink(c.out_path, out);
      write_script(*sink, s);
      err << "re-application check passed: " << s.comm_count() << " comm, " << s.conj_count()
          << " conj (bound " << ceil_log2(c.t) + kScriptCommSlack << " comm)\n";
      return kExitOk;
    }

    if (map->parsed()) {
      const auto& c = map_c;
      const PermFormat fmt = format_arg(c.format);
      const Permutation a = perm_arg("--alpha", map_alpha, c.t);
      const Permutation b = perm_arg("--beta", map_beta, c.t);
      const std::size_t m = map_m == 0 ? c.t : map_m;
      const VectorMap f = build_alpha_to_beta(a, b, m);
      Sink sink(c.out_path, out);
      if (map_in.empty()) {
        write_map(*sink, f);
        return kExitOk;
      }
      auto in = open_input(map_in);
      const ProductVector x = read_vector(in);
      const ProductVector y = f.apply(x);
      const Permutation fx = x.fold();
      const Permutation fy = y.fold();
      if ((fx == a && fy != b) || (fx.is_identity() && !fy.is_identity())) {
        throw Violation{"map output has product " + format_cycles(fy)};
      }
      write_vector(*sink, y, fmt);
      return kExitOk;
    }

    if (cbp->parsed()) {
      const auto& c = bp_c;
      auto in = open_input(bp_path);
      BranchingProgram b = [&] {
        try {
          return read_program(in);
        } catch (const Error& e) {
          throw UsageError{e.what(), bp_path};
        }
      }();
      const EncodedInstance enc = encode(b, bp_x);
      const bool cycle_accept = same_cycle(enc.sigma, enc.start_point, enc.accept_point);
      const Verdict direct = eval_bp(b, bp_x);
      Sink sink(c.out_path, out);
      std::ostream& os = *sink;
      os << "sigma " << enc.sigma.degree() << ' ' << format_permutation(enc.sigma, format_arg(c.format))
         << '\n';
      os << "points " << enc.start_point << ' ' << enc.accept_point << '\n';
      os << "cycle " << (cycle_accept ? "ACCEPT" : "REJECT") << '\n';
      os << "eval " << to_string(direct) << '\n';
      if (bp_check && cycle_accept != (direct == Verdict::Accept)) {
        throw Violation{"cycle test and evaluator disagree"};
      }
      return kExitOk;
    }

    if (rid->parsed()) {
      const auto& c = rid_c;
      auto in = open_input(rid_path);
      const BranchingProgram b = read_program(in);
      const IdInstanceSet set = bp_to_id_instances(b, rid_x);
      Sink sink(c.out_path, out);
      report_header(*sink, "reduce-id", c);
      write_instances(*sink, set, format_arg(c.format));
      return kExitOk;
    }

    if (rs->parsed()) {
      const auto& c = rs_c;
      auto in = open_input(rs_in);
      const ProductVector x = read_vector(in);
      CandidateMode mode{};
      try {
        mode = parse_candidate_mode(rs_mode);
      } catch (const Error&) {
        throw UsageError{"--mode must be constructive, derived or full", rs_mode};
      }
      const auto r = reduce_id_to_single(x, exact_fold_decider(), {mode, rs_budget, c.workers});
      Sink sink(c.out_path, out);
      std::ostream& os = *sink;
      const PermFormat fmt = format_arg(c.format);
      report_header(os, "reduce-single", c);
      os << "decision " << (r.decided_alpha ? "alpha" : "id") << '\n';
      if (r.witness) {
        os << "witness " << (r.direct_witness ? std::string("direct") : std::to_string(*r.witness_index))
           << '\n'
           << "gamma1 " << format_permutation(r.witness->gamma1, fmt) << '\n'
           << "gamma2 " << format_permutation(r.witness->gamma2, fmt) << '\n'
           << "gamma3 " << format_permutation(r.witness->gamma3, fmt) << '\n';
      }
      if (!r.direct_witness) {
        os << "examined " << r.examined << " of " << r.stream_size
           << (r.exhausted ? " (exhausted)" : "") << '\n';
      }
      return kExitOk;
    }

    if (smp->parsed()) {
      const auto& c = smp_c;
      const Permutation a = perm_arg("--alpha", smp_alpha, c.t);
      Rng rng = seeded(c.seed);
      Sink sink(c.out_path, out);
      report_header(*sink, "sample", c);
      const PermFormat fmt = format_arg(c.format);
      for (std::size_t i = 0; i < smp_count; ++i) write_vector(*sink, sample_class(a, c.t, rng), fmt);
      return kExitOk;
    }

    if (tvd->parsed()) {
      const auto& c = tvd_c;
      const Permutation a = perm_arg("--alpha", tvd_alpha, c.t);
      std::vector<LeakageFunction> leaks;
      for (const auto& spec : tvd_leaks) {
        try {
          leaks.push_back(default_leakage_registry().make(spec, c.t, a));
        } catch (const Error& e) {
          throw UsageError{e.what(), spec};
        }
      }
      Sink sink(c.out_path, out);
      std::ostream& os = *sink;
      if (tvd_exact_flag) {
        for (const auto& l : leaks) {
          const Rational r = tvd_exact(l, a, c.t);
          if (leaks.size() > 1) os << l.name << ' ';
          os << r.str() << '\n';
        }
        return kExitOk;
      }
      write_tvd_report_header(os, c.seed, c.workers);
      for (const auto& l : leaks) {
        write_tvd_report_row(os, l, a, c.t, tvd_monte_carlo(l, a, c.t, tvd_n, c.seed, c.workers));
      }
      return kExitOk;
    }

    if (amp->parsed()) {
      const auto& c = amp_c;
      const Permutation a = perm_arg("--alpha", amp_alpha, c.t);
      LeakageFunction leak;
      try {
        leak = default_leakage_registry().make(amp_leak, c.t, a);
      } catch (const Error& e) {
        throw UsageError{e.what(), amp_leak};
      }
      Rng rng = seeded(c.seed);
      const double eps = amp_eps > 0 ? amp_eps : calibrate_eps_alpha(leak, a, c.t, amp_cal, rng);
      const AmplifierParams p{c.t, amp_k, amp_m, eps};
      try {
        p.validate();
      } catch (const Error& e) {
        throw UsageError{e.what(), std::to_string(eps)};
      }
      Sink sink(c.out_path, out);
      std::ostream& os = *sink;
      report_header(os, "amplify", c);
      os << "eps_alpha " << eps << " low " << p.low() << " high " << p.high() << '\n';
      if (!amp_in.empty()) {
        auto in = open_input(amp_in);
        const auto o = amplifier_decide(read_vector(in), leak, p, rng);
        os << "count " << o.count << "\ndecision " << to_string(o.decision) << '\n';
        return kExitOk;
      }
      std::size_t wrong = 0;
      const Permutation id(c.t);
      for (std::size_t i = 0; i < amp_trials; ++i) {
        const bool is_alpha = i % 2 == 0;
        const auto o = amplifier_decide(sample_class(is_alpha ? a : id, c.t, rng), leak, p, rng);
        wrong += (o.decision == Decision::Alpha) != is_alpha ? 1 : 0;
      }
      os << "trials " << amp_trials << " errors " << wrong << " rate "
         << static_cast<double>(wrong) / static_cast<double>(amp_trials) << '\n';
      return kExitOk;
    }

    if (ver->parsed()) {
      const auto& c = ver_c;
      VerifyOptions opts{c.seed, c.workers, ver_only};
      Sink sink(c.out_path, out);
      std::ostream& os = *sink;
      report_header(os, "verify", c);
      bool all = true;
      run_acceptance(opts, [&](const CriterionResult& r) {
        os << format_result(r) << '\n' << std::flush;
        all = all && r.passed;
      });
      return all ? kExitOk : kExitViolation;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << " (at '" << e.token << "')\n";
    return kExitUsage;
  } catch (const Violation& v) {
    err << "violation: " << v.message << '\n';
    return kExitViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace itergroup::cli
