#include "dyck/enumeration.hpp"

namespace dyck {

std::string to_string(ClassFilter f) {
  switch (f) {
    case ClassFilter::Alpha: return "alpha";
    case ClassFilter::Beta: return "beta";
    case ClassFilter::Zero: return "zero";
    case ClassFilter::All: return "all";
  }
  return {};
}

ClassFilter parse_class_filter(std::string_view text) {
  if (text == "all") return ClassFilter::All;
  return filter_of(parse_period_class(text));
}

ClassFilter filter_of(PeriodClass c) {
  switch (c) {
    case PeriodClass::Alpha: return ClassFilter::Alpha;
    case PeriodClass::Beta: return ClassFilter::Beta;
    case PeriodClass::Zero: break;
  }
  return ClassFilter::Zero;
}

bool accepts(ClassFilter f, PeriodClass c) { return f == ClassFilter::All || f == filter_of(c); }

void PeriodicSetQuery::validate() const {
  if (M < 1) throw InvalidArgument("M must be >= 1");
  if (n < 1) throw InvalidArgument("period n must be >= 1");
}

Integer projected_visits(int M, int n) {
  // by_height[h]: nonzero words of the current length whose pending left-bracket stack has height h
  std::vector<Integer> by_height(static_cast<std::size_t>(n) + 2, Integer(0));
  by_height[0] = 1;
  Integer total = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<Integer> next(by_height.size(), Integer(0));
    for (std::size_t h = 0; h + 1 < by_height.size(); ++h) {
      if (by_height[h] == 0) continue;
      next[h + 1] += by_height[h] * M;
      if (h == 0) {
        next[0] += by_height[h] * M;
      } else {
        next[h - 1] += by_height[h];
      }
    }
    by_height = std::move(next);
    for (const auto& c : by_height) total += c;
  }
  return total;
}

void check_budget(const PeriodicSetQuery& q, const EnumerationOptions& options) {
  const Integer visits = projected_visits(q.M, q.n);
  if (visits > options.budget) {
    throw ResourceLimit("search for M=" + std::to_string(q.M) + ", n=" + std::to_string(q.n) + " visits " +
                        visits.str() + " nodes, over the budget of " + std::to_string(options.budget));
  }
}

std::vector<Word> shard_prefixes(int M, int n) {
  std::vector<Word> level{Word{}};
  for (int depth = 1; depth <= n; ++depth) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (int code = 0; code < 2 * M; ++code) {
        Word extended = w;
        extended.push_back(symbol_from_code(code, M));
        if (!reduce(extended).is_zero()) next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
    if (level.size() >= 64) break;
  }
  return level;
}

std::vector<Word> collect_periodic(const PeriodicSetQuery& q, const EnumerationOptions& options) {
  auto shards = fold_shards(
      q, std::vector<Word>{},
      [](std::vector<Word>& acc, std::span<const Symbol> w, PeriodClass) { acc.emplace_back(w.begin(), w.end()); },
      options);
  std::vector<Word> out;
  for (auto& shard : shards) {
    out.insert(out.end(), std::make_move_iterator(shard.begin()), std::make_move_iterator(shard.end()));
  }
  return out;
}

Integer count_closed_form(const PeriodicSetQuery& q) {
  q.validate();
  const auto M = static_cast<unsigned>(q.M);
  const auto n = static_cast<unsigned>(q.n);
  auto signed_class = [&] {
    Integer below = 0;
    for (unsigned i = 0; i <= n / 2; ++i) below += binomial(n, i) * power(M, i);
    return power(M + 1, n) - below;
  };
  auto zero_class = [&] { return n % 2 == 0 ? Integer(binomial(n, n / 2) * power(M, n / 2)) : Integer(0); };
  switch (q.filter) {
    case ClassFilter::Alpha:
    case ClassFilter::Beta: return signed_class();
    case ClassFilter::Zero: return zero_class();
    case ClassFilter::All: break;
  }
  return 2 * signed_class() + zero_class();
}

Integer count_enumerated(const PeriodicSetQuery& q, const EnumerationOptions& options) {
  const auto shards =
      fold_shards(q, std::uint64_t{0}, [](std::uint64_t& acc, std::span<const Symbol>, PeriodClass) { ++acc; }, options);
  Integer total = 0;
  for (const auto c : shards) total += c;
  return total;
}

CountReport count_report(const PeriodicSetQuery& q, bool enumerate, const EnumerationOptions& options) {
  CountReport report{q.M, q.n, q.filter, count_closed_form(q), std::nullopt};
  if (enumerate) report.enumerated = count_enumerated(q, options);
  return report;
}

bool verify_count_bounds(int M, int n) {
  const Integer count = count_closed_form({M, n, ClassFilter::Alpha});
  const Integer full = power(static_cast<unsigned>(M + 1), static_cast<unsigned>(n));
  return 3 * count >= full && count < full;
}

BoundsReport count_bounds_report(int M, int n_max) {
  BoundsReport report{M, {}, std::nullopt};
  for (int n = 1; n <= n_max; ++n) {
    const Integer count = count_closed_form({M, n, ClassFilter::Alpha});
    const Integer full = power(static_cast<unsigned>(M + 1), static_cast<unsigned>(n));
    report.rows.push_back({n, count, 3 * count >= full, count < full});
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend() && it->lower && it->upper; ++it) {
    report.holds_from = it->n;
  }
  return report;
}

}  // namespace dyck
