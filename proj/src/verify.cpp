#include "dyck/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace dyck::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

EnumerationOptions enumeration_options(const VerifyOptions& opt) { return {1'000'000'000, opt.threads}; }

/// All words of length m in canonical order.
std::vector<Word> all_words(int M, int m) {
  std::vector<Word> out;
  const std::size_t count = cylinder_count(M, m);
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) out.push_back(cylinder_word(code, M, m));
  return out;
}

Word concat(std::span<const Symbol> a, std::span<const Symbol> b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

CollapsedWord rotate(const CollapsedWord& z, std::size_t shift) {
  CollapsedWord out = z;
  if (!out.symbols.empty()) {
    std::rotate(out.symbols.begin(), out.symbols.begin() + static_cast<long>(shift % out.size()), out.symbols.end());
  }
  return out;
}

}  // namespace

CheckResult count_exactness(const VerifyOptions& opt) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "count_exactness";
  struct ByClass {
    std::uint64_t alpha = 0, beta = 0, zero = 0;
  };
  int mismatches = 0;
  io::Json rows = io::Json::array();
  for (const int M : {2, 3}) {
    for (int n = 1; n <= 12; ++n) {
      const auto shards = fold_shards(
          PeriodicSetQuery{M, n, ClassFilter::All}, ByClass{},
          [](ByClass& acc, std::span<const Symbol>, PeriodClass c) {
            (c == PeriodClass::Alpha ? acc.alpha : c == PeriodClass::Beta ? acc.beta : acc.zero)++;
          },
          enumeration_options(opt));
      ByClass total;
      for (const auto& s : shards) {
        total.alpha += s.alpha;
        total.beta += s.beta;
        total.zero += s.zero;
      }
      const Integer signed_form = count_closed_form({M, n, ClassFilter::Alpha});
      const Integer zero_form = count_closed_form({M, n, ClassFilter::Zero});
      const bool ok = Integer(total.alpha) == signed_form && Integer(total.beta) == signed_form &&
                      Integer(total.zero) == zero_form;
      if (!ok) ++mismatches;
      rows.push_back({{"M", M},
                      {"n", n},
                      {"alpha", total.alpha},
                      {"beta", total.beta},
                      {"zero", total.zero},
                      {"closed_form_signed", signed_form.str()},
                      {"closed_form_zero", zero_form.str()},
                      {"match", ok}});
    }
  }
  r.seconds = seconds_since(start);
  r.passed = mismatches == 0 && r.seconds < 120.0;
  r.details = {{"rows", rows}, {"mismatches", mismatches}, {"runtime_limit_seconds", 120}};
  r.summary = std::to_string(mismatches) + " mismatches over M in {2,3}, n <= 12";
  return r;
}

CheckResult count_bounds(const VerifyOptions&) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "count_bounds";
  const BoundsReport report = count_bounds_report(2, 20);
  io::Json rows = io::Json::array();
  bool all = true;
  for (const auto& row : report.rows) {
    all = all && row.lower && row.upper;
    rows.push_back({{"n", row.n}, {"count", row.count.str()}, {"lower", row.lower}, {"upper", row.upper}});
  }
  r.seconds = seconds_since(start);
  r.passed = report.holds_from.has_value() && all;
  r.details = {{"M", 2}, {"rows", rows}, {"holds_from", report.holds_from ? io::Json(*report.holds_from) : io::Json()}};
  r.summary = report.holds_from ? "bounds hold from n = " + std::to_string(*report.holds_from) + " through n = 20"
                                : "bounds fail at n = 20";
  return r;
}

CheckResult oracle_equivalence(const VerifyOptions&) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "oracle_equivalence";
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  io::Json first_mismatches = io::Json::array();
  for (int n = 1; n <= 8; ++n) {
    std::map<Word, PeriodClass> brute;
    for (auto& p : oracle::brute_periodic(2, n)) brute.emplace(std::move(p.word), p.cls);
    for (const Word& w : all_words(2, n)) {
      ++checked;
      const PeriodicCheck fast = is_periodic_point(w);
      const auto it = brute.find(w);
      const bool same = fast.admissible == (it != brute.end()) && (!fast.admissible || *fast.period_class == it->second);
      if (!same) {
        ++mismatches;
        if (first_mismatches.size() < 10) first_mismatches.push_back(format_word(w));
      }
    }
  }
  r.seconds = seconds_since(start);
  r.passed = mismatches == 0;
  r.details = {{"M", 2}, {"max_n", 8}, {"words_checked", checked}, {"mismatches", mismatches},
               {"examples", first_mismatches}};
  r.summary = std::to_string(mismatches) + " mismatches over " + std::to_string(checked) + " words";
  return r;
}

CheckResult mme_identities(const VerifyOptions&) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "mme_identities";
  int failures = 0;
  io::Json notes = io::Json::array();
  auto fail = [&](const std::string& what) {
    ++failures;
    if (notes.size() < 20) notes.push_back(what);
  };

  for (const int M : {2, 3}) {
    const Alphabet alphabet(M);
    const Rational share(1, M + 1);
    Rational alpha_rights = 0;
    Rational beta_lefts = 0;
    for (int k = 1; k <= M; ++k) {
      const Word left{Symbol::left(k)};
      const Word right{Symbol::right(k)};
      if (mme_cylinder(alphabet, Side::Alpha, left) != share) fail("nu_alpha[a" + std::to_string(k) + "]");
      if (mme_cylinder(alphabet, Side::Beta, right) != share) fail("nu_beta[b" + std::to_string(k) + "]");
      alpha_rights += mme_cylinder(alphabet, Side::Alpha, right);
      beta_lefts += mme_cylinder(alphabet, Side::Beta, left);
    }
    if (alpha_rights != share) fail("sum_j nu_alpha[b_j], M=" + std::to_string(M));
    if (beta_lefts != share) fail("sum_j nu_beta[a_j], M=" + std::to_string(M));
  }

  const Alphabet alphabet(2);
  std::uint64_t consistency_checks = 0;
  for (const Side side : {Side::Alpha, Side::Beta}) {
    for (int m = 0; m <= 4; ++m) {
      Rational total = 0;
      for (const Word& v : all_words(2, m)) {
        const Rational mass = mme_cylinder(alphabet, side, v);
        total += mass;
        Rational right_ext = 0;
        Rational left_ext = 0;
        for (int code = 0; code < 4; ++code) {
          const Word s{symbol_from_code(code, 2)};
          right_ext += mme_cylinder(alphabet, side, concat(v, s));
          left_ext += mme_cylinder(alphabet, side, concat(s, v));
        }
        ++consistency_checks;
        if (right_ext != mass || left_ext != mass) fail("consistency " + to_string(side) + " [" + format_word(v) + "]");
      }
      if (total != 1) fail("normalization " + to_string(side) + " m=" + std::to_string(m));
    }
  }
  r.seconds = seconds_since(start);
  r.passed = failures == 0;
  r.details = {{"failures", failures}, {"consistency_checks", consistency_checks}, {"notes", notes}};
  r.summary = std::to_string(failures) + " failed identities (" + std::to_string(consistency_checks) +
              " consistency checks, lengths <= 4)";
  return r;
}

CheckResult monte_carlo(const VerifyOptions& opt) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "monte_carlo";
  r.seed = opt.seed;
  r.samples = opt.samples;
  const Alphabet alphabet(2);
  io::Json sides = io::Json::array();
  bool passed = true;
  double worst_z = 0.0;
  for (const Side side : {Side::Alpha, Side::Beta}) {
    const oracle::MonteCarloConfig cfg{opt.samples, 512, side == Side::Alpha ? opt.seed : opt.seed + 1};
    const oracle::McTable table(alphabet, side, 3, cfg);
    int outside = 0;
    io::Json worst = io::Json::array();
    for (int m = 1; m <= 3; ++m) {
      for (const Word& v : all_words(2, m)) {
        const double exact = mme_cylinder(alphabet, side, v).convert_to<double>();
        const oracle::McEstimate est = table.estimate(v);
        const double gap = std::abs(est.estimate - exact);
        const bool ok = est.std_error > 0 ? gap <= 3.0 * est.std_error : gap == 0.0;
        const double z = est.std_error > 0 ? gap / est.std_error : (gap == 0.0 ? 0.0 : INFINITY);
        worst_z = std::max(worst_z, z);
        if (!ok) {
          ++outside;
          worst.push_back({{"cylinder", format_word(v)}, {"exact", exact}, {"estimate", est.estimate},
                           {"std_error", est.std_error}, {"z", z}});
        }
      }
    }
    const double discarded = table.discarded_fraction();
    const bool side_ok = outside == 0 && discarded < 1e-4;
    passed = passed && side_ok;
    sides.push_back({{"side", to_string(side)},
                     {"seed", cfg.seed},
                     {"accepted", table.accepted()},
                     {"discarded", table.discarded()},
                     {"discarded_fraction", discarded},
                     {"cylinders_outside_3se", outside},
                     {"outside", worst}});
  }
  r.seconds = seconds_since(start);
  r.passed = passed;
  r.details = {{"generator", oracle::kGenerator}, {"window_radius", 512}, {"max_abs_z", worst_z}, {"sides", sides}};
  std::ostringstream s;
  s << "max |z| = " << worst_z << " over all cylinders of length <= 3, both sides";
  r.summary = s.str();
  return r;
}

CheckResult periodic_convergence(const VerifyOptions& opt) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "periodic_convergence";
  const std::vector<int> periods{6, 14};
  io::Json ensembles = io::Json::array();
  bool passed = true;
  std::ostringstream summary;
  for (const Ensemble e : {Ensemble::Alpha, Ensemble::Beta, Ensemble::Union}) {
    const ConvergenceReport report = convergence_report(2, periods, e, 1, default_target(e), enumeration_options(opt));
    const Rational& early = report.rows[0].sup_distance;
    const Rational& late = report.rows[1].sup_distance;
    const bool ok = late <= Rational(1, 20) && late < early;
    passed = passed && ok;
    ensembles.push_back({{"ensemble", to_string(e)},
                         {"target", to_string(report.target)},
                         {"sup_n6", early.convert_to<double>()},
                         {"sup_n14", late.convert_to<double>()},
                         {"sup_n14_exact", to_fraction_string(late)},
                         {"ok", ok}});
    summary << to_string(e) << " " << early.convert_to<double>() << " -> " << late.convert_to<double>()
            << (ok ? "" : " (not strictly smaller)") << "; ";
  }
  r.seconds = seconds_since(start);
  r.passed = passed && r.seconds <= 600.0;
  r.details = {{"M", 2}, {"cylinder_length", 1}, {"tolerance", 0.05}, {"ensembles", ensembles}};
  r.summary = "sup distance n=6 -> n=14: " + summary.str();
  return r;
}

CheckResult krieger_round_trip(const VerifyOptions& opt) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "krieger_round_trip";
  r.seed = opt.seed;
  std::uint64_t round_trip_failures = 0;
  std::uint64_t injectivity_failures = 0;
  std::uint64_t words = 0;
  std::vector<std::pair<Side, Word>> pool;
  for (const Side side : {Side::Alpha, Side::Beta}) {
    const ClassFilter filter = side == Side::Alpha ? ClassFilter::Alpha : ClassFilter::Beta;
    for (int n = 1; n <= 10; ++n) {
      std::set<std::string> images;
      std::uint64_t count = 0;
      enumerate_periodic(PeriodicSetQuery{2, n, filter}, [&](std::span<const Symbol> w, PeriodClass) {
        const CollapsedWord z = collapse(side, w);
        if (decorate_periodic(z) != Word(w.begin(), w.end())) ++round_trip_failures;
        images.insert(format_collapsed(z));
        ++count;
        pool.emplace_back(side, Word(w.begin(), w.end()));
      });
      words += count;
      if (images.size() != count) ++injectivity_failures;
    }
  }

  std::mt19937_64 rng(opt.seed);
  std::uint64_t equivariance_failures = 0;
  constexpr int kRotations = 10'000;
  for (int t = 0; t < kRotations; ++t) {
    const auto& [side, w] = pool[rng() % pool.size()];
    const std::size_t shift = rng() % w.size();
    const CollapsedWord z = collapse(side, w);
    const bool collapse_ok = collapse(side, dyck::rotate(w, shift)) == rotate(z, shift);
    const bool decorate_ok = decorate_periodic(rotate(z, shift)) == dyck::rotate(decorate_periodic(z), shift);
    if (!collapse_ok || !decorate_ok) ++equivariance_failures;
  }
  r.samples = kRotations;
  r.seconds = seconds_since(start);
  r.passed = round_trip_failures == 0 && injectivity_failures == 0 && equivariance_failures == 0;
  r.details = {{"M", 2},
               {"max_n", 10},
               {"words", words},
               {"round_trip_failures", round_trip_failures},
               {"injectivity_failures", injectivity_failures},
               {"rotations", kRotations},
               {"equivariance_failures", equivariance_failures}};
  r.summary = std::to_string(words) + " words round-tripped, " + std::to_string(round_trip_failures + injectivity_failures +
                                                                                 equivariance_failures) +
              " failures";
  return r;
}

CheckResult baker_solver(const VerifyOptions&) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "baker_solver";
  const ExactParams params = parse_params(2, "1/5", "1/5");
  const BakerParams<double> float_params = params.cast<double>();
  std::uint64_t failures = 0;
  io::Json notes = io::Json::array();
  auto fail = [&](const std::string& what) {
    ++failures;
    if (notes.size() < 20) notes.push_back(what);
  };
  io::Json rows = io::Json::array();
  std::size_t total_boundary = 0;
  std::uint64_t total_breaks = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const PeriodClass cls : {PeriodClass::Alpha, PeriodClass::Beta}) {
      std::uint64_t solved = 0;
      std::uint64_t convention_breaks = 0;
      io::Json boundary = io::Json::array();
      std::set<std::vector<std::string>> points;
      enumerate_periodic(PeriodicSetQuery{2, n, filter_of(cls)}, [&](std::span<const Symbol> w, PeriodClass) {
        const std::string name = format_word(w);
        ExactOrbit sol;
        try {
          sol = solve_periodic_point(params, w);
        } catch (const ConstraintViolation& e) {
          fail(e.what());
          return;
        }
        ++solved;
        // Along the word's own branches, inside the closed tiles.
        Point3<Rational> x = sol.point;
        for (const Symbol s : w) {
          const AffineStep<Rational> step = branch(params, s);
          for (Eigen::Index axis = 0; axis < 3; ++axis) {
            if (!step.domain[static_cast<std::size_t>(axis)].contains_closure(x(axis))) {
              fail("closed tile missed: " + name);
            }
          }
          x = step(x);
        }
        if (x != sol.point) fail("branch composition does not return: " + name);

        // Through the map itself, whose half-open tiles decide boundary points.
        Point3<Rational> y = sol.point;
        Word symbols;
        for (int i = 0; i < n; ++i) {
          auto [next, s] = apply(params, y);
          symbols.push_back(s);
          y = std::move(next);
        }
        const bool map_returns = y == sol.point && symbols == sol.word;
        if (sol.in_lambda && !map_returns) fail("map does not reproduce an interior orbit: " + name);
        if (!sol.in_lambda && !map_returns) ++convention_breaks;
        const long h = h_value(w);
        if ((sol.unstable_dim == 1) != (h > 0) || (sol.unstable_dim == 2) != (h < 0)) fail("unstable dim: " + name);
        if (!(sol.multipliers(kU) > 1) || !(sol.multipliers(kS) < 1)) fail("multiplier signs: " + name);
        if (!sol.in_lambda) boundary.push_back(name);
        points.insert({to_fraction_string(sol.point(kU)), to_fraction_string(sol.point(kC)),
                       to_fraction_string(sol.point(kS))});

        Point3<double> f = sol.point.unaryExpr([](const Rational& q) { return q.convert_to<double>(); });
        const Point3<double> f0 = f;
        for (const Symbol s : w) f = branch(float_params, s)(f);
        if ((f - f0).cwiseAbs().maxCoeff() > 1e-9) fail("float drift: " + name);
      });
      const Integer expected = count_closed_form({2, n, filter_of(cls)});
      if (Integer(solved) != expected) fail("count n=" + std::to_string(n) + " " + to_string(cls));
      if (points.size() != solved) fail("distinctness n=" + std::to_string(n) + " " + to_string(cls));
      rows.push_back({{"n", n},
                      {"class", to_string(cls)},
                      {"solved_closed_tiles", solved},
                      {"per_sigma", expected.str()},
                      {"in_lambda", solved - boundary.size()},
                      {"boundary_count", boundary.size()},
                      {"boundary_left_by_map", convention_breaks},
                      {"boundary", boundary}});
      total_boundary += boundary.size();
      total_breaks += convention_breaks;
    }
  }
  r.seconds = seconds_since(start);
  r.passed = failures == 0;
  r.details = {{"M", 2}, {"a", "1/5"}, {"b", "1/5"}, {"failures", failures}, {"notes", notes}, {"rows", rows}};
  r.summary = std::to_string(failures) + " failures solving all admissible words with n <= 8; " +
              std::to_string(total_boundary) + " boundary orbits itemized, " + std::to_string(total_breaks) +
              " of them leave their word under the half-open map";
  return r;
}

CheckResult lebesgue_projection(const VerifyOptions& opt) {
  const auto start = Clock::now();
  CheckResult r;
  r.check = "lebesgue_projection";
  const ExactParams params{2, Rational(1, 3), default_b(2)};
  const std::vector<int> periods{13};
  struct Moments {
    double mean_u = 0, mean_c = 0, second_u = 0, second_c = 0;
    std::size_t points = 0;

    void add(const ScatterRow& row) {
      mean_u += row.xu;
      mean_c += row.xc;
      second_u += row.xu * row.xu;
      second_c += row.xc * row.xc;
      ++points;
    }
    Moments normalized() const {
      const double n = static_cast<double>(points);
      return {mean_u / n, mean_c / n, second_u / n, second_c / n, points};
    }
    double max_deviation() const {
      return std::max({std::abs(mean_u - 0.5), std::abs(mean_c - 0.5), std::abs(second_u - 1.0 / 3),
                       std::abs(second_c - 1.0 / 3)});
    }
    io::Json json() const {
      return {{"points", points},     {"mean_xu", mean_u},     {"mean_xc", mean_c},
              {"second_xu", second_u}, {"second_xc", second_c}, {"max_deviation", max_deviation()}};
    }
  };
  // The ensemble is every solved point of the class (closed tiles). Points on
  // tile boundaries are a sizable fraction at this period, so the interior-only
  // moments are reported alongside.
  struct Ensemble {
    Moments all;
    Moments interior;
  };
  auto measure = [&](PeriodClass cls) {
    const Scatter s = scatter(params, periods, cls, true, enumeration_options(opt));
    Ensemble e;
    for (const auto& row : s.rows) {
      e.all.add(row);
      e.interior.add(row);
    }
    for (const auto& row : s.boundary) e.all.add(row);
    return Ensemble{e.all.normalized(), e.interior.normalized()};
  };
  const Ensemble alpha = measure(PeriodClass::Alpha);
  const Ensemble beta = measure(PeriodClass::Beta);
  const double worst_alpha = alpha.all.max_deviation();
  const double worst_beta = beta.all.max_deviation();
  r.seconds = seconds_since(start);
  r.passed = worst_alpha <= 0.05 && worst_beta > 0.05 + 0.02;
  r.details = {{"M", 2},
               {"a", "1/3"},
               {"period", 13},
               {"tolerance", 0.05},
               {"singularity_margin", 0.02},
               {"alpha", alpha.all.json()},
               {"beta", beta.all.json()},
               {"alpha_interior_only", alpha.interior.json()},
               {"beta_interior_only", beta.interior.json()}};
  std::ostringstream out;
  out << "alpha max deviation " << worst_alpha << " (<= 0.05), beta max deviation " << worst_beta
      << " (> 0.07); interior-only alpha " << alpha.interior.max_deviation();
  r.summary = out.str();
  return r;
}

std::vector<std::string> suite_names() { return {"core", "counts", "measures", "baker", "all"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  using Check = std::function<CheckResult(const VerifyOptions&)>;
  const std::vector<std::pair<std::string, std::vector<Check>>> suites{
      {"core", {oracle_equivalence, krieger_round_trip}},
      {"counts", {count_exactness, count_bounds}},
      {"measures", {mme_identities, monte_carlo, periodic_convergence}},
      {"baker", {baker_solver, lebesgue_projection}},
  };
  std::vector<CheckResult> results;
  bool known = suite == "all";
  for (const auto& [name, checks] : suites) {
    if (suite != "all" && suite != name) continue;
    known = true;
    for (const auto& check : checks) results.push_back(check(opt));
  }
  if (!known) throw InvalidArgument("unknown suite '" + suite + "'");
  return results;
}

io::Json to_json(const CheckResult& r) {
  return {{"check", r.check},
          {"status", r.passed ? "pass" : "fail"},
          {"summary", r.summary},
          {"details", r.details},
          {"seed", r.seed},
          {"samples", r.samples},
          {"seconds", r.seconds}};
}

}  // namespace dyck::verify
