#pragma once

#include "dyck/dyck_core.hpp"
#include "dyck/errors.hpp"
#include "dyck/numeric.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace dyck {

enum class ClassFilter { Alpha, Beta, Zero, All };

std::string to_string(ClassFilter f);
ClassFilter parse_class_filter(std::string_view text);
ClassFilter filter_of(PeriodClass c);
bool accepts(ClassFilter f, PeriodClass c);

struct PeriodicSetQuery {
  int M;
  int n;
  ClassFilter filter = ClassFilter::All;

  /// Throws InvalidArgument unless n >= 1 and M >= 1.
  void validate() const;
};

struct EnumerationOptions {
  std::uint64_t budget = 1'000'000'000;
  unsigned threads = 1;
};

struct CountReport {
  int M;
  int n;
  ClassFilter filter;
  Integer closed_form;
  std::optional<Integer> enumerated;
};

/// Number of words of length 1..n whose reduction is nonzero, i.e. the exact
/// number of nodes the pruned search visits.
Integer projected_visits(int M, int n);

/// Throws ResourceLimit when the search for this query would exceed the budget.
void check_budget(const PeriodicSetQuery& q, const EnumerationOptions& options);

namespace detail {

/// Incrementally maintained reduction of a growing prefix, with undo.
class PrefixState {
 public:
  explicit PrefixState(std::size_t capacity) {
    word_.reserve(capacity);
    stack_.reserve(capacity);
    beta_.reserve(capacity);
    appended_.reserve(capacity);
  }

  std::size_t size() const { return word_.size(); }
  std::span<const Symbol> word() const { return word_; }

  /// Appends s unless that makes the reduction Zero; returns whether it did.
  bool push(Symbol s) {
    if (s.is_left()) {
      stack_.push_back(s.index);
      appended_.push_back(false);
    } else if (stack_.empty()) {
      beta_.push_back(s.index);
      appended_.push_back(true);
    } else if (stack_.back() == s.index) {
      stack_.pop_back();
      appended_.push_back(false);
    } else {
      return false;
    }
    word_.push_back(s);
    return true;
  }

  void pop() {
    const Symbol s = word_.back();
    word_.pop_back();
    const bool appended = appended_.back();
    appended_.pop_back();
    if (s.is_left()) {
      stack_.pop_back();
    } else if (appended) {
      beta_.pop_back();
    } else {
      stack_.push_back(s.index);
    }
  }

  /// Junction test on the full word; nullopt when not a periodic point.
  std::optional<PeriodClass> periodic_class() const {
    const std::size_t q = stack_.size();
    const std::size_t p = beta_.size();
    const std::size_t t = q < p ? q : p;
    for (std::size_t i = 0; i < t; ++i) {
      if (stack_[q - 1 - i] != beta_[i]) return std::nullopt;
    }
    return class_of_height(static_cast<long>(q) - static_cast<long>(p));
  }

 private:
  Word word_;
  std::vector<int> stack_;
  std::vector<int> beta_;
  std::vector<bool> appended_;
};

template <typename Visit>
void walk(PrefixState& state, int M, int n, ClassFilter filter, Visit& visit) {
  if (static_cast<int>(state.size()) == n) {
    if (const auto c = state.periodic_class(); c && accepts(filter, *c)) visit(state.word(), *c);
    return;
  }
  for (int code = 0; code < 2 * M; ++code) {
    if (state.push(symbol_from_code(code, M))) {
      walk(state, M, n, filter, visit);
      state.pop();
    }
  }
}

}  // namespace detail

/// Streams every w of length n whose periodic repetition is in the Dyck shift
/// and whose class passes the filter, in canonical lexicographic order.
/// `visit(std::span<const Symbol>, PeriodClass)` sees a view that is only
/// valid during the call.
template <typename Visit>
void enumerate_periodic(const PeriodicSetQuery& q, Visit&& visit, const EnumerationOptions& options = {}) {
  q.validate();
  check_budget(q, options);
  detail::PrefixState state(static_cast<std::size_t>(q.n));
  detail::walk(state, q.M, q.n, q.filter, visit);
}

/// Fixed-depth prefixes splitting the search forest into independent shards,
/// in canonical order. Depth is the smallest giving at least 64 shards (or n).
std::vector<Word> shard_prefixes(int M, int n);

/// Runs the search shard by shard, folding each shard into its own
/// accumulator. Shards are distributed over `options.threads` workers; the
/// returned accumulators are in canonical shard order regardless of threads.
template <typename Acc, typename Visit>
std::vector<Acc> fold_shards(const PeriodicSetQuery& q, const Acc& init, Visit visit,
                             const EnumerationOptions& options = {}) {
  q.validate();
  check_budget(q, options);
  const std::vector<Word> prefixes = shard_prefixes(q.M, q.n);
  std::vector<Acc> results(prefixes.size(), init);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    detail::PrefixState state(static_cast<std::size_t>(q.n));
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      for (const Symbol s : prefixes[i]) state.push(s);
      Acc& acc = results[i];
      auto bound = [&](std::span<const Symbol> w, PeriodClass c) { visit(acc, w, c); };
      detail::walk(state, q.M, q.n, q.filter, bound);
      for (std::size_t k = 0; k < prefixes[i].size(); ++k) state.pop();
    }
  };
  const unsigned threads = options.threads == 0 ? 1 : options.threads;
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

/// All matching words, gathered through the sharded search.
std::vector<Word> collect_periodic(const PeriodicSetQuery& q, const EnumerationOptions& options = {});

/// Exact size of Per_{class,n} from the closed-form counts.
Integer count_closed_form(const PeriodicSetQuery& q);

/// Size of Per_{class,n} by exhaustive search.
Integer count_enumerated(const PeriodicSetQuery& q, const EnumerationOptions& options = {});

CountReport count_report(const PeriodicSetQuery& q, bool enumerate, const EnumerationOptions& options = {});

/// (1/3)(M+1)^n <= #Per_{alpha,n} < (M+1)^n at this n.
bool verify_count_bounds(int M, int n);

struct BoundsRow {
  int n;
  Integer count;
  bool lower;
  bool upper;
};

struct BoundsReport {
  int M;
  std::vector<BoundsRow> rows;
  /// Smallest n from which both bounds hold for the rest of the range.
  std::optional<int> holds_from;
};

BoundsReport count_bounds_report(int M, int n_max);

}  // namespace dyck
