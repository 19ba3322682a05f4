#include "terracini/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "terracini/certificates.hpp"
#include "terracini/errors.hpp"
#include "terracini/interpolation.hpp"
#include "terracini/report_io.hpp"
#include "terracini/terracini.hpp"

namespace terracini::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  unsigned trials = 3;
  std::string domain = "auto";
  std::uint64_t prime = kDefaultPrime;
  std::size_t size_guard = kDefaultMonomialGuard;
  std::string output = "table";
  std::string out_path;
  unsigned jobs = 1;

  ArithmeticDomain arithmetic() const {
    if (domain == "rational") return ArithmeticDomain::rational();
    return ArithmeticDomain::prime_field(prime);
  }
  bool reverify() const { return domain == "auto"; }
};

std::uint64_t default_seed() {
  const char* env = std::getenv("TERRACINI_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("TERRACINI_SEED is not an unsigned integer: ") + env);
  }
}

unsigned non_negative(long long v, const char* name) {
  if (v < 0) throw UsageError(std::string("--") + name + " must be non-negative");
  return static_cast<unsigned>(v);
}

unsigned positive(long long v, const char* name) {
  if (v < 1) throw UsageError(std::string("--") + name + " must be at least 1");
  return static_cast<unsigned>(v);
}

SecantQuery make_query(const RunConfig& cfg, long long n, long long d, long long h, long long k) {
  SecantQuery q;
  q.n = positive(n, "n");
  q.d = positive(d, "d");
  q.h = non_negative(h, "h");
  q.k = non_negative(k, "k");
  q.trials = cfg.trials;
  q.seed = cfg.seed;
  q.domain = cfg.arithmetic();
  q.size_guard = cfg.size_guard;
  q.reverify_flagged = cfg.reverify();
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return q;
}

template <class T>
void emit(std::ostream& out, OutputFormat fmt, const json& j, const T& tabular) {
  switch (fmt) {
    case OutputFormat::Json: out << j.dump(2) << '\n'; break;
    case OutputFormat::Csv: write_csv(out, to_table(tabular)); break;
    case OutputFormat::Table: write_table(out, to_table(tabular)); break;
  }
}

void emit_table(std::ostream& out, OutputFormat fmt, const json& j, const Table& table) {
  switch (fmt) {
    case OutputFormat::Json: out << j.dump(2) << '\n'; break;
    case OutputFormat::Csv: write_csv(out, table); break;
    case OutputFormat::Table: write_table(out, table); break;
  }
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::vector<unsigned> parse_range(const std::string& spec) {
  auto number = [&](const std::string& s) -> unsigned {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad range '" + spec + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  std::vector<unsigned> out;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const unsigned lo = number(spec.substr(0, dots));
    const unsigned hi = number(spec.substr(dots + 2));
    for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number(item));
  if (out.empty()) throw UsageError("empty range");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secant and Grassmann-secant defects of Veronese varieties", "terracini"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_help_all_flag("--help-all");

  RunConfig cfg;
  std::optional<std::uint64_t> seed_flag;
  app.option_defaults()->always_capture_default();
  app.add_option("--seed", seed_flag, "RNG seed (default: $TERRACINI_SEED or 2001)");
  app.add_option("--trials", cfg.trials, "Independent samples per rank")->check(CLI::PositiveNumber);
  app.add_option("--domain", cfg.domain, "prime, rational, or auto (prime with exact re-check of defects)")
      ->check(CLI::IsMember({"prime", "rational", "auto"}));
  app.add_option("--prime", cfg.prime, "Prime modulus for the prime domain");
  app.add_option("--size-guard", cfg.size_guard, "Maximum number of monomials C(n+d, d)");
  app.add_option("--output", cfg.output, "table, json, or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", cfg.out_path, "Write the report to a file instead of stdout");
  app.add_option("--jobs", cfg.jobs, "Worker threads for scan")->check(CLI::PositiveNumber);

  long long n = 2, d = 2, h = 0, k = 1;
  std::string route = "both";
  std::string d_range, h_range;
  long long points = 0;
  long long m = 1;
  std::optional<long long> case_h, delta;
  long long count = 1;

  auto* secant = app.add_subcommand("secant", "Dimension of Sec_h(V_{n,d})")->fallthrough();
  secant->add_option("--n", n)->required();
  secant->add_option("--d", d)->required();
  secant->add_option("--h", h)->required();

  auto* grassmann = app.add_subcommand("grassmann", "(k,h)-Grassmann defect of V_{n,d}")->fallthrough();
  grassmann->add_option("--n", n)->required();
  grassmann->add_option("--d", d)->required();
  grassmann->add_option("--k", k)->required();
  grassmann->add_option("--h", h)->required();
  grassmann->add_option("--route", route)->check(CLI::IsMember({"direct", "segre", "both"}));

  auto* scan_cmd = app.add_subcommand("scan", "Grassmann defects over a (d, h) grid")->fallthrough();
  scan_cmd->add_option("--n", n, "Plane dimension")->capture_default_str();
  scan_cmd->add_option("--d", d_range, "Degrees, e.g. 2..6")->required();
  scan_cmd->add_option("--h", h_range, "Secant indices, e.g. 1..12")->required();
  scan_cmd->add_option("--k", k)->capture_default_str();

  auto* interp = app.add_subcommand("interp", "Dimension of the system of degree-d curves with double points")
                     ->fallthrough();
  interp->add_option("--n", n)->capture_default_str();
  interp->add_option("--d", d)->required();
  interp->add_option("--points", points)->required();

  auto* duality = app.add_subcommand("duality", "Cross-check secant dimension against interpolation")->fallthrough();
  duality->add_option("--n", n)->capture_default_str();
  duality->add_option("--d", d)->required();
  duality->add_option("--h", h)->required();

  auto* certify = app.add_subcommand("certify", "Reproduce the pencil certifying V_{2,3} is (1,4)-defective")
                      ->fallthrough();
  certify->add_option("--count", count, "Number of consecutive seeds")->capture_default_str();

  auto* casecheck = app.add_subcommand("casecheck", "Base-curve case analysis for a hypothetical defect")
                        ->fallthrough();
  casecheck->add_option("--d", d)->required();
  casecheck->add_option("--m", m)->required();
  casecheck->add_option("--h", case_h);
  casecheck->add_option("--delta", delta);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    cfg.seed = seed_flag ? *seed_flag : default_seed();
    const auto fmt = output_format_from_string(cfg.output);
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file) throw UsageError("cannot open --out file " + cfg.out_path);
      sink = &file;
    }
    std::ostream& o = *sink;

    if (secant->parsed()) {
      const auto rep = secant_dim(make_query(cfg, n, d, h, 0));
      emit(o, fmt, to_json(rep), rep);
      return kSuccess;
    }
    if (grassmann->parsed()) {
      const auto q = make_query(cfg, n, d, h, k);
      const auto which = route_from_string(route);
      if (which == Route::Direct) {
        const auto rep = grassmann_defect_direct(q);
        emit(o, fmt, to_json(rep), rep);
      } else if (which == Route::Segre) {
        const auto rep = grassmann_defect_via_segre(q);
        emit(o, fmt, to_json(rep), rep);
      } else {
        const auto cmp = grassmann_defect_both(q);
        emit(o, fmt, to_json(cmp), cmp);
        if (!cmp.agree) {
          err << "direct and Segre routes disagree: " << cmp.direct.defect << " vs " << cmp.segre.defect << '\n';
          return kInconsistent;
        }
      }
      return kSuccess;
    }
    if (scan_cmd->parsed()) {
      ScanConfig sc;
      sc.n = positive(n, "n");
      sc.k = non_negative(k, "k");
      sc.trials = cfg.trials;
      sc.seed = cfg.seed;
      sc.domain = cfg.arithmetic();
      sc.size_guard = cfg.size_guard;
      sc.reverify_flagged = cfg.reverify();
      sc.jobs = cfg.jobs;
      const auto ds = parse_range(d_range);
      const auto hs = parse_range(h_range);
      const auto cells = scan(ds, hs, sc);
      json j = json::array();
      for (const auto& c : cells) j.push_back(to_json(c));
      emit(o, fmt, j, cells);
      for (const auto& c : cells) {
        if (c.result && !c.result->agree) {
          err << "direct and Segre routes disagree at d=" << c.d << ", h=" << c.h << '\n';
          return kInconsistent;
        }
      }
      return kSuccess;
    }
    if (interp->parsed()) {
      InterpConfig ic;
      ic.n = positive(n, "n");
      ic.trials = cfg.trials;
      ic.seed = cfg.seed;
      ic.domain = cfg.arithmetic();
      ic.size_guard = cfg.size_guard;
      const auto res = interp_dim(positive(d, "d"), non_negative(points, "points"), ic);
      emit(o, fmt, to_json(res), res);
      return kSuccess;
    }
    if (duality->parsed()) {
      InterpConfig ic;
      ic.n = positive(n, "n");
      ic.trials = cfg.trials;
      ic.seed = cfg.seed;
      ic.domain = cfg.arithmetic();
      ic.size_guard = cfg.size_guard;
      const auto res = duality_check(positive(d, "d"), non_negative(h, "h"), ic);
      emit(o, fmt, to_json(res), res);
      return res.agree ? kSuccess : kInconsistent;
    }
    if (certify->parsed()) {
      std::vector<V23Report> reps;
      json j = json::array();
      for (unsigned i = 0; i < positive(count, "count"); ++i) {
        V23Config vc;
        vc.seed = cfg.seed + i;
        vc.domain = cfg.arithmetic();
        reps.push_back(certify_v23(vc));
        j.push_back(to_json(reps.back()));
      }
      emit(o, fmt, j, reps);
      for (const auto& r : reps)
        if (!r.passed()) return kInconsistent;
      return kSuccess;
    }
    if (casecheck->parsed()) {
      if (case_h.has_value() != delta.has_value()) throw UsageError("--h and --delta must be given together");
      if (case_h) {
        const CaseCheckInput input{d, m, *case_h, *delta};
        CaseVerdict verdict;
        try {
          verdict = case_check(input);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        Table t{{"d", "m", "h", "delta", "verdict", "violated"},
                {{std::to_string(d), std::to_string(m), std::to_string(*case_h), std::to_string(*delta),
                  verdict.consistent ? "consistent" : "contradiction",
                  verdict.violated ? to_string(*verdict.violated) : "-"}}};
        emit_table(o, fmt, to_json(input, verdict), t);
      } else {
        if (m < 1 || m > d) throw UsageError("need 1 <= m <= d");
        const auto b = case_delta_bounds(d, m);
        json j{{"d", d},
               {"m", m},
               {"delta_lower", rational_string(b.lower)},
               {"delta_upper", rational_string(b.upper)},
               {"verdict", b.contradictory() ? "contradiction" : "consistent"}};
        Table t{{"d", "m", "delta_lower", "delta_upper", "verdict"},
                {{std::to_string(d), std::to_string(m), rational_string(b.lower), rational_string(b.upper),
                  b.contradictory() ? "contradiction" : "consistent"}}};
        emit_table(o, fmt, j, t);
      }
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardViolation& e) {
    err << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const ConsistencyError& e) {
    err << "inconsistent: " << e.what() << '\n';
    return kInconsistent;
  } catch (const SamplingError& e) {
    err << "sampling: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace terracini::cli
