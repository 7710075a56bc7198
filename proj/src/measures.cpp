#include "dyck/measures.hpp"

#include "dyck/errors.hpp"

namespace dyck {

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::Alpha: return "alpha";
    case Ensemble::Beta: return "beta";
    case Ensemble::Zero: return "zero";
    case Ensemble::Union: return "union";
  }
  return {};
}

std::string to_string(Target t) {
  switch (t) {
    case Target::Alpha: return "alpha";
    case Target::Beta: return "beta";
    case Target::Mixture: return "mixture";
  }
  return {};
}

Ensemble parse_ensemble(std::string_view text) {
  if (text == "union") return Ensemble::Union;
  return ensemble_of(parse_period_class(text));
}

Target parse_target(std::string_view text) {
  if (text == "alpha") return Target::Alpha;
  if (text == "beta") return Target::Beta;
  if (text == "mixture") return Target::Mixture;
  throw ParseError("unknown target '" + std::string(text) + "' (expected alpha, beta or mixture)");
}

Ensemble ensemble_of(PeriodClass c) {
  switch (c) {
    case PeriodClass::Alpha: return Ensemble::Alpha;
    case PeriodClass::Beta: return Ensemble::Beta;
    case PeriodClass::Zero: break;
  }
  return Ensemble::Zero;
}

Target default_target(Ensemble e) {
  switch (e) {
    case Ensemble::Alpha: return Target::Alpha;
    case Ensemble::Beta: return Target::Beta;
    case Ensemble::Union: return Target::Mixture;
    case Ensemble::Zero: break;
  }
  throw InvalidArgument("the zero-class ensemble has no default target; pass one explicitly");
}

std::size_t cylinder_count(int M, int m) {
  std::size_t count = 1;
  for (int i = 0; i < m; ++i) count *= static_cast<std::size_t>(2 * M);
  return count;
}

std::size_t cylinder_code(std::span<const Symbol> v, int M) {
  std::size_t code = 0;
  for (const Symbol s : v) code = code * static_cast<std::size_t>(2 * M) + static_cast<std::size_t>(symbol_code(s, M));
  return code;
}

Word cylinder_word(std::size_t code, int M, int m) {
  Word v(static_cast<std::size_t>(m), Symbol::left(1));
  for (int i = m - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = symbol_from_code(static_cast<int>(code % static_cast<std::size_t>(2 * M)), M);
    code /= static_cast<std::size_t>(2 * M);
  }
  return v;
}

Rational target_cylinder(const Alphabet& alphabet, Target target, std::span<const Symbol> v) {
  switch (target) {
    case Target::Alpha: return mme_cylinder(alphabet, Side::Alpha, v);
    case Target::Beta: return mme_cylinder(alphabet, Side::Beta, v);
    case Target::Mixture: break;
  }
  return mixture_cylinder(alphabet, v);
}

Vector<Rational> target_table(const Alphabet& alphabet, int m, Target target) {
  const std::size_t count = cylinder_count(alphabet.M, m);
  Vector<Rational> table(static_cast<Eigen::Index>(count));
  for (std::size_t code = 0; code < count; ++code) {
    table(static_cast<Eigen::Index>(code)) = target_cylinder(alphabet, target, cylinder_word(code, alphabet.M, m));
  }
  return table;
}

namespace {

struct OccurrenceCounts {
  std::uint64_t words = 0;
  std::vector<std::uint64_t> hits;

  OccurrenceCounts& operator+=(const OccurrenceCounts& other) {
    words += other.words;
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] += other.hits[i];
    return *this;
  }
};

void check_window(int n, int m) {
  if (m < 1 || m > n) {
    throw InvalidArgument("cylinder length must satisfy 1 <= m <= n (m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
  }
}

/// Adds the m-window code starting at every cyclic position of w.
void add_cyclic_occurrences(OccurrenceCounts& acc, std::span<const Symbol> w, int M, int m) {
  const std::size_t n = w.size();
  const auto base = static_cast<std::size_t>(2 * M);
  for (std::size_t pos = 0; pos < n; ++pos) {
    std::size_t code = 0;
    for (int j = 0; j < m; ++j) code = code * base + static_cast<std::size_t>(symbol_code(w[(pos + j) % n], M));
    ++acc.hits[code];
  }
  ++acc.words;
}

Vector<Rational> normalize(const OccurrenceCounts& counts, std::uint64_t per_word) {
  const Integer total = Integer(counts.words) * per_word;
  Vector<Rational> table(static_cast<Eigen::Index>(counts.hits.size()));
  for (std::size_t i = 0; i < counts.hits.size(); ++i) {
    table(static_cast<Eigen::Index>(i)) = Rational(Integer(counts.hits[i]), total);
  }
  return table;
}

OccurrenceCounts merged(const std::vector<OccurrenceCounts>& shards, std::size_t cylinders) {
  OccurrenceCounts total{0, std::vector<std::uint64_t>(cylinders, 0)};
  for (const auto& shard : shards) total += shard;
  return total;
}

EmpiricalDistribution finish(int M, int n, int m, Ensemble ensemble, const OccurrenceCounts& counts,
                             std::uint64_t per_word) {
  if (counts.words == 0) {
    throw EmptyEnsemble("no periodic points of period " + std::to_string(n) + " in class " + to_string(ensemble));
  }
  return {M, n, m, ensemble, Integer(counts.words), normalize(counts, per_word)};
}

}  // namespace

EmpiricalDistribution build_empirical(int M, int n, PeriodClass cls, int m, const EnumerationOptions& options) {
  check_window(n, m);
  const std::size_t cylinders = cylinder_count(M, m);
  const auto shards = fold_shards(
      PeriodicSetQuery{M, n, filter_of(cls)}, OccurrenceCounts{0, std::vector<std::uint64_t>(cylinders, 0)},
      [M, m](OccurrenceCounts& acc, std::span<const Symbol> w, PeriodClass) { add_cyclic_occurrences(acc, w, M, m); },
      options);
  return finish(M, n, m, ensemble_of(cls), merged(shards, cylinders), static_cast<std::uint64_t>(n));
}

EmpiricalDistribution build_empirical_by_prefix(int M, int n, PeriodClass cls, int m,
                                                const EnumerationOptions& options) {
  check_window(n, m);
  const std::size_t cylinders = cylinder_count(M, m);
  const auto shards = fold_shards(
      PeriodicSetQuery{M, n, filter_of(cls)}, OccurrenceCounts{0, std::vector<std::uint64_t>(cylinders, 0)},
      [M, m](OccurrenceCounts& acc, std::span<const Symbol> w, PeriodClass) {
        ++acc.hits[cylinder_code(w.first(static_cast<std::size_t>(m)), M)];
        ++acc.words;
      },
      options);
  return finish(M, n, m, ensemble_of(cls), merged(shards, cylinders), 1);
}

EmpiricalDistribution union_empirical(int M, int n, int m, const EnumerationOptions& options) {
  check_window(n, m);
  const std::size_t cylinders = cylinder_count(M, m);
  struct ByClass {
    OccurrenceCounts alpha;
    OccurrenceCounts beta;
  };
  const OccurrenceCounts empty{0, std::vector<std::uint64_t>(cylinders, 0)};
  const auto shards = fold_shards(
      PeriodicSetQuery{M, n, ClassFilter::All}, ByClass{empty, empty},
      [M, m](ByClass& acc, std::span<const Symbol> w, PeriodClass c) {
        if (c == PeriodClass::Alpha) add_cyclic_occurrences(acc.alpha, w, M, m);
        if (c == PeriodClass::Beta) add_cyclic_occurrences(acc.beta, w, M, m);
      },
      options);
  OccurrenceCounts alpha = empty;
  OccurrenceCounts beta = empty;
  for (const auto& shard : shards) {
    alpha += shard.alpha;
    beta += shard.beta;
  }
  OccurrenceCounts both = alpha;
  both += beta;
  EmpiricalDistribution result = finish(M, n, m, Ensemble::Union, both, static_cast<std::uint64_t>(n));

  const Vector<Rational> average =
      (normalize(alpha, static_cast<std::uint64_t>(n)) + normalize(beta, static_cast<std::uint64_t>(n))) / Rational(2);
  if (alpha.words != beta.words || average != result.frequency) {
    throw ConstraintViolation("union ensemble is not the equal-weight average of its classes (" +
                              std::to_string(alpha.words) + " alpha vs " + std::to_string(beta.words) + " beta words)");
  }
  return result;
}

EmpiricalDistribution build_ensemble(int M, int n, Ensemble ensemble, int m, const EnumerationOptions& options) {
  switch (ensemble) {
    case Ensemble::Alpha: return build_empirical(M, n, PeriodClass::Alpha, m, options);
    case Ensemble::Beta: return build_empirical(M, n, PeriodClass::Beta, m, options);
    case Ensemble::Zero: return build_empirical(M, n, PeriodClass::Zero, m, options);
    case Ensemble::Union: break;
  }
  return union_empirical(M, n, m, options);
}

ConvergenceRow compare_to_target(const EmpiricalDistribution& e, Target target) {
  const Alphabet alphabet(e.M);
  const Vector<Rational> exact = target_table(alphabet, e.m, target);
  const Vector<Rational> error = (e.frequency - exact).cwiseAbs();

  ConvergenceRow row{e.n, Rational(0), {}};
  for (Eigen::Index code = 0; code < error.size(); ++code) {
    Word v = cylinder_word(static_cast<std::size_t>(code), e.M, e.m);
    if (reduce(v).is_zero()) continue;
    if (error(code) > row.sup_distance) row.sup_distance = error(code);
    row.residuals.push_back({std::move(v), e.frequency(code), exact(code), error(code)});
  }
  return row;
}

ConvergenceReport convergence_report(int M, std::span<const int> periods, Ensemble ensemble, int m, Target target,
                                     const EnumerationOptions& options) {
  ConvergenceReport report{M, m, ensemble, target, {}};
  for (const int n : periods) report.rows.push_back(compare_to_target(build_ensemble(M, n, ensemble, m, options), target));
  return report;
}

}  // namespace dyck
