#include "dyck/cli.hpp"

#include "dyck/io.hpp"
#include "dyck/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

namespace dyck::cli {

namespace {

/// A flag value that violates a module precondition.
class UsageError : public Error {
 public:
  UsageError(const std::string& flag, const std::string& constraint) : Error(flag + ": " + constraint) {}
};

/// Rethrows library errors caused by one flag's value as usage errors naming it.
template <typename F>
auto for_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ResourceLimit&) {
    throw;
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    throw UsageError(flag, e.what());
  }
}

struct Common {
  unsigned threads = 1;
  std::uint64_t budget = EnumerationOptions{}.budget;
  std::string metadata;

  EnumerationOptions enumeration() const { return {budget, threads}; }
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--threads", common.threads, "Worker threads for sharded searches")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  sub->add_option("--budget", common.budget, "Maximum search nodes before giving up")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--metadata", common.metadata, "Metadata sidecar path (default <out>.meta.json)");
}

CLI::Option* add_M(CLI::App* sub, int& M, bool required = true) {
  auto* opt = sub->add_option("--M", M, "Number of bracket pairs")->check(CLI::Range(1, 255));
  if (required) {
    opt->required();
  } else {
    opt->capture_default_str();
  }
  return opt;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw UsageError("--out", "cannot open '" + path + "' for writing");
  return file;
}

io::Json flags_of(const CLI::App* sub) {
  io::Json flags = io::Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& results = opt->results();
    if (results.size() == 1) {
      flags[opt->get_name()] = results.front();
    } else {
      flags[opt->get_name()] = results;
    }
  }
  return flags;
}

/// Writes the sidecar next to `out_path`, or to --metadata when given. With
/// neither, nothing is written.
void write_metadata(const CLI::App* sub, const Common& common, const std::string& out_path, std::uint64_t seed,
                    io::Json extra = io::Json::object()) {
  std::string path = common.metadata;
  if (path.empty() && !out_path.empty()) path = out_path + ".meta.json";
  if (path.empty()) return;
  io::Json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = sub->get_name();
  if (sub->get_parent() != nullptr && sub->get_parent()->get_parent() != nullptr) {
    j["command"] = sub->get_parent()->get_name() + " " + sub->get_name();
  }
  j["seed"] = seed;
  j["generator"] = oracle::kGenerator;
  j["flags"] = flags_of(sub);
  if (!out_path.empty()) j["output"] = out_path;
  for (auto& [key, value] : extra.items()) j[key] = value;
  std::ofstream file(path);
  if (!file) throw UsageError("--metadata", "cannot open '" + path + "' for writing");
  file << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dyck shift periodic points, maximal entropy measures and heterochaos baker maps", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  std::function<int()> action;

  // count
  int count_M = 0;
  int count_n = 0;
  std::string count_class = "all";
  bool count_enumerate = false;
  auto* count = app.add_subcommand("count", "Closed-form (and optionally enumerated) size of Per_{class,n}");
  add_M(count, count_M);
  count->add_option("--n", count_n, "Period")->required()->check(CLI::PositiveNumber);
  count->add_option("--class", count_class, "alpha, beta, zero or all")
      ->check(CLI::IsMember({"alpha", "beta", "zero", "all"}))
      ->capture_default_str();
  count->add_flag("--enumerate", count_enumerate, "Also count by exhaustive search");
  add_common(count, common);
  count->callback([&] {
    action = [&] {
      const PeriodicSetQuery q{count_M, count_n, parse_class_filter(count_class)};
      out << io::to_json(count_report(q, count_enumerate, common.enumeration())).dump() << '\n';
      write_metadata(count, common, "", oracle::kDefaultSeed);
      return kOk;
    };
  });

  // enumerate
  int enum_M = 0;
  int enum_n = 0;
  std::string enum_class;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "List Per_{class,n} as a word CSV in canonical order");
  add_M(enumerate, enum_M);
  enumerate->add_option("--n", enum_n, "Period")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--class", enum_class, "alpha, beta, zero or all")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "zero", "all"}));
  enumerate->add_option("--out", enum_out, "Output CSV (default stdout)");
  add_common(enumerate, common);
  enumerate->callback([&] {
    action = [&] {
      const PeriodicSetQuery q{enum_M, enum_n, parse_class_filter(enum_class)};
      std::ofstream file;
      if (!enum_out.empty()) file = open_output(enum_out);
      std::ostream& sink = enum_out.empty() ? out : file;
      std::uint64_t rows = 0;
      io::write_word_csv_header(sink);
      enumerate_periodic(
          q,
          [&](std::span<const Symbol> w, PeriodClass) {
            io::write_word_csv_row(sink, w);
            ++rows;
          },
          common.enumeration());
      write_metadata(enumerate, common, enum_out, oracle::kDefaultSeed, {{"rows", rows}});
      return kOk;
    };
  });

  // measure
  int measure_M = 0;
  std::vector<int> measure_n;
  std::string measure_class;
  int measure_m = 0;
  std::string measure_target;
  std::string measure_format = "csv";
  int measure_precision = 12;
  std::string measure_out;
  auto* measure = app.add_subcommand("measure", "Empirical cylinder distributions of periodic ensembles");
  add_M(measure, measure_M);
  measure->add_option("--n", measure_n, "Periods, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  measure->add_option("--class", measure_class, "alpha, beta, zero or union")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "zero", "union"}));
  measure->add_option("--cyl-len", measure_m, "Cylinder length m (1 <= m <= every n)")
      ->required()
      ->check(CLI::PositiveNumber);
  measure->add_option("--target", measure_target, "alpha, beta or mixture (default follows --class)")
      ->check(CLI::IsMember({"alpha", "beta", "mixture"}));
  measure->add_option("--format", measure_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  measure->add_option("--precision", measure_precision, "Significant digits of decimal output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  measure->add_option("--out", measure_out, "Output file (default stdout)");
  add_common(measure, common);
  measure->callback([&] {
    action = [&] {
      const Ensemble ensemble = parse_ensemble(measure_class);
      const Target target = measure_target.empty()
                                ? for_flag("--target", [&] { return default_target(ensemble); })
                                : parse_target(measure_target);
      for (const int n : measure_n) {
        if (measure_m > n) {
          throw UsageError("--cyl-len", "must not exceed the smallest period (" + std::to_string(n) + ")");
        }
      }
      const ConvergenceReport report = for_flag("--class", [&] {
        return convergence_report(measure_M, measure_n, ensemble, measure_m, target, common.enumeration());
      });
      std::ofstream file;
      if (!measure_out.empty()) file = open_output(measure_out);
      std::ostream& sink = measure_out.empty() ? out : file;
      if (measure_format == "csv") {
        io::write_convergence_csv(sink, report, measure_precision);
      } else {
        sink << io::to_json(report, measure_precision).dump(2) << '\n';
      }
      write_metadata(measure, common, measure_out, oracle::kDefaultSeed, {{"target", to_string(target)}});
      return kOk;
    };
  });

  // mme
  int mme_M = 2;
  std::string mme_side;
  std::string mme_word;
  auto* mme = app.add_subcommand("mme", "Exact cylinder mass under a maximal entropy measure");
  add_M(mme, mme_M, false);
  mme->add_option("--side", mme_side, "alpha, beta or mixture")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "mixture"}));
  mme->add_option("--word", mme_word, "Cylinder word, e.g. a1,b2")->required();
  add_common(mme, common);
  mme->callback([&] {
    action = [&] {
      const Alphabet alphabet(mme_M);
      const Word v = for_flag("--word", [&] { return parse_word(mme_word, alphabet); });
      out << to_fraction_string(target_cylinder(alphabet, parse_target(mme_side), v)) << '\n';
      write_metadata(mme, common, "", oracle::kDefaultSeed);
      return kOk;
    };
  });

  // baker
  auto* baker = app.add_subcommand("baker", "Periodic points of the heterochaos baker maps");
  baker->require_subcommand(1);

  int solve_M = 0;
  std::string solve_a;
  std::string solve_b;
  std::string solve_word;
  auto* solve = baker->add_subcommand("solve", "Exact periodic point of f_{a,b} with a given itinerary");
  add_M(solve, solve_M);
  solve->add_option("--a", solve_a, "Parameter a in (0, 1/M), as p/q")->required();
  solve->add_option("--b", solve_b, "Parameter b in (0, 1/M), as p/q")->required();
  solve->add_option("--word", solve_word, "Itinerary word, e.g. a2,a1")->required();
  add_common(solve, common);
  solve->callback([&] {
    action = [&] {
      const Alphabet alphabet(solve_M);
      const Rational a = for_flag("--a", [&] { return parse_rational(solve_a); });
      const Rational b = for_flag("--b", [&] { return parse_rational(solve_b); });
      const ExactParams params{solve_M, a, b};
      for_flag("--a/--b", [&] { params.validate(); });
      const Word w = for_flag("--word", [&] { return parse_word(solve_word, alphabet); });
      const ExactOrbit orbit = for_flag("--word", [&] { return solve_periodic_point(params, w); });
      out << io::to_json(orbit, params).dump(2) << '\n';
      write_metadata(solve, common, "", oracle::kDefaultSeed);
      return kOk;
    };
  });

  int scatter_M = 0;
  std::string scatter_a;
  std::string scatter_b;
  std::vector<int> scatter_periods;
  std::string scatter_class;
  std::string scatter_out;
  bool scatter_cube = false;
  int scatter_precision = 12;
  auto* scatter_cmd = baker->add_subcommand("scatter", "All periodic points of given periods as a point CSV");
  add_M(scatter_cmd, scatter_M);
  scatter_cmd->add_option("--a", scatter_a, "Parameter a in (0, 1/M), as p/q")->required();
  scatter_cmd->add_option("--b", scatter_b, "Parameter b in (0, 1/M), as p/q (default 1/(2M))");
  scatter_cmd->add_option("--periods", scatter_periods, "Periods, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  scatter_cmd->add_option("--class", scatter_class, "alpha or beta")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta"}));
  scatter_cmd->add_option("--out", scatter_out, "Output CSV")->required();
  scatter_cmd->add_flag("--cube", scatter_cube, "Emit xs and test interiority in the cube rather than the plane");
  scatter_cmd->add_option("--precision", scatter_precision, "Significant digits")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  add_common(scatter_cmd, common);
  scatter_cmd->callback([&] {
    action = [&] {
      const Rational a = for_flag("--a", [&] { return parse_rational(scatter_a); });
      const Rational b =
          scatter_b.empty() ? default_b(scatter_M) : for_flag("--b", [&] { return parse_rational(scatter_b); });
      const ExactParams params{scatter_M, a, b};
      for_flag("--a/--b", [&] { params.validate(); });
      const Scatter s =
          scatter(params, scatter_periods, parse_period_class(scatter_class), !scatter_cube, common.enumeration());
      std::ofstream file = open_output(scatter_out);
      io::write_scatter_csv(file, s, scatter_precision);
      const io::Json summary = io::scatter_summary_json(s);
      out << summary.dump(2) << '\n';
      write_metadata(scatter_cmd, common, scatter_out, oracle::kDefaultSeed,
                     {{"a", to_fraction_string(a)}, {"b", to_fraction_string(b)}, {"summary", summary}});
      return kOk;
    };
  });

  // verify
  std::string verify_suite = "all";
  std::uint64_t verify_seed = oracle::kDefaultSeed;
  std::uint64_t verify_samples = verify::VerifyOptions{}.samples;
  std::string verify_out;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification checks and print a JSON report");
  verify_cmd->add_option("--suite", verify_suite, "core, counts, measures, baker or all")
      ->check(CLI::IsMember(verify::suite_names()))
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "Monte Carlo seed")->capture_default_str();
  verify_cmd->add_option("--samples", verify_samples, "Monte Carlo samples per side")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_out, "Also write the report to this file");
  add_common(verify_cmd, common);
  verify_cmd->callback([&] {
    action = [&] {
      const verify::VerifyOptions opt{common.threads, verify_seed, verify_samples};
      const auto results = verify::run_suite(verify_suite, opt);
      const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
      io::Json report;
      report["suite"] = verify_suite;
      report["seed"] = verify_seed;
      report["generator"] = oracle::kGenerator;
      report["status"] = passed ? "pass" : "fail";
      report["checks"] = io::Json::array();
      for (const auto& r : results) report["checks"].push_back(verify::to_json(r));
      out << report.dump(2) << '\n';
      if (!verify_out.empty()) {
        std::ofstream file = open_output(verify_out);
        file << report.dump(2) << '\n';
      }
      write_metadata(verify_cmd, common, verify_out, verify_seed);
      return passed ? kOk : kCheckFailed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  if (!action) {
    err << "usage error: no command given\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace dyck::cli
