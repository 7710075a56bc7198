#include "dyck/oracle.hpp"

#include "dyck/errors.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <random>

namespace dyck::oracle {

ReducedForm naive_reduce(std::span<const Symbol> w) {
  Word current(w.begin(), w.end());
  bool rewrote = true;
  while (rewrote) {
    rewrote = false;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (current[i].is_left() && !current[i + 1].is_left()) {
        if (current[i].index != current[i + 1].index) return ReducedForm::zero();
        current.erase(current.begin() + static_cast<long>(i), current.begin() + static_cast<long>(i) + 2);
        rewrote = true;
        break;
      }
    }
  }
  std::vector<int> beta;
  std::vector<int> alpha;
  for (const Symbol s : current) (s.is_left() ? alpha : beta).push_back(s.index);
  return ReducedForm::normal(std::move(beta), std::move(alpha));
}

std::vector<BrutePoint> brute_periodic(int M, int n, std::uint64_t budget) {
  const Alphabet alphabet(M);
  double words = std::pow(2.0 * M, n);
  if (n < 1 || words > static_cast<double>(budget)) {
    throw ResourceLimit("brute force over (2M)^n = " + std::to_string(words) + " words exceeds the budget");
  }
  std::vector<BrutePoint> out;
  Word w(static_cast<std::size_t>(n));
  const auto total = static_cast<std::uint64_t>(words);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = n - 1; i >= 0; --i) {
      w[static_cast<std::size_t>(i)] = symbol_from_code(static_cast<int>(rest % (2 * M)), M);
      rest /= static_cast<std::uint64_t>(2 * M);
    }
    Word doubled = w;
    doubled.insert(doubled.end(), w.begin(), w.end());
    if (naive_reduce(doubled).is_zero()) continue;
    long h = 0;
    for (const Symbol s : w) h += s.is_left() ? 1 : -1;
    out.push_back({w, h > 0 ? PeriodClass::Alpha : (h < 0 ? PeriodClass::Beta : PeriodClass::Zero)});
  }
  return out;
}

namespace {

/// Uniform draw from {0..M} by rejection on raw 64-bit output, so the stream
/// depends only on the generator and not on a library distribution.
class CollapsedSource {
 public:
  CollapsedSource(int M, std::uint64_t seed)
      : M_(M), engine_(seed), limit_(std::numeric_limits<std::uint64_t>::max() -
                                     std::numeric_limits<std::uint64_t>::max() % static_cast<std::uint64_t>(M + 1)) {}

  /// 0..M-1 is a kept bracket with index value+1, M is the wildcard.
  int draw() {
    std::uint64_t x = engine_();
    while (x >= limit_) x = engine_();
    return static_cast<int>(x % static_cast<std::uint64_t>(M_ + 1));
  }

  int M() const { return M_; }

 private:
  int M_;
  std::mt19937_64 engine_;
  std::uint64_t limit_;
};

/// One sample: the collapsed sequence on [-radius, radius], drawn lazily
/// outward from the observed positions.
class LazyWindow {
 public:
  LazyWindow(CollapsedSource& source, int len, int radius) : source_(source), radius_(radius) {
    for (int i = 0; i < len; ++i) inner_.push_back(source_.draw());
  }

  /// nullopt when position j lies outside the window.
  std::optional<int> at(int j) {
    if (j < -radius_ || j > radius_) return std::nullopt;
    if (j >= 0 && j < static_cast<int>(inner_.size())) return inner_[static_cast<std::size_t>(j)];
    auto& side = j < 0 ? before_ : after_;
    const auto slot = static_cast<std::size_t>(j < 0 ? -1 - j : j - static_cast<int>(inner_.size()));
    while (side.size() <= slot) side.push_back(source_.draw());
    return side[slot];
  }

 private:
  CollapsedSource& source_;
  int radius_;
  std::vector<int> inner_;
  std::vector<int> before_;
  std::vector<int> after_;
};

/// Decorated symbol codes of positions 0..len-1, or nullopt on window exhaustion.
std::optional<std::vector<int>> decode_sample(CollapsedSource& source, Side side, int len, int radius) {
  const int M = source.M();
  LazyWindow window(source, len, radius);
  std::vector<int> codes(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int c = *window.at(i);
    if (c < M) {
      // kept bracket: a_{c+1} on the alpha side, b_{c+1} on the beta side
      codes[static_cast<std::size_t>(i)] = side == Side::Alpha ? c : M + c;
      continue;
    }
    const int step = side == Side::Alpha ? -1 : 1;
    int depth = 1;
    int j = i;
    std::optional<int> partner;
    while (!partner) {
      j += step;
      const auto s = window.at(j);
      if (!s) return std::nullopt;
      depth += *s == M ? 1 : -1;
      if (depth == 0) partner = *s;
    }
    codes[static_cast<std::size_t>(i)] = side == Side::Alpha ? M + *partner : *partner;
  }
  return codes;
}

}  // namespace

McTable::McTable(const Alphabet& alphabet, Side side, int max_len, const MonteCarloConfig& cfg)
    : M_(alphabet.M), max_len_(max_len) {
  if (max_len < 1 || cfg.samples < 1) throw InvalidArgument("Monte Carlo needs max_len >= 1 and samples >= 1");
  std::size_t size = 1;
  for (int len = 1; len <= max_len; ++len) {
    size *= static_cast<std::size_t>(2 * M_);
    hits_.emplace_back(size, 0);
  }
  CollapsedSource source(M_, cfg.seed);
  for (std::uint64_t s = 0; s < cfg.samples; ++s) {
    const auto codes = decode_sample(source, side, max_len, cfg.window_radius);
    if (!codes) {
      ++discarded_;
      continue;
    }
    ++accepted_;
    std::size_t code = 0;
    for (int len = 1; len <= max_len; ++len) {
      code = code * static_cast<std::size_t>(2 * M_) + static_cast<std::size_t>((*codes)[static_cast<std::size_t>(len - 1)]);
      ++hits_[static_cast<std::size_t>(len - 1)][code];
    }
  }
}

McEstimate McTable::estimate(std::span<const Symbol> v) const {
  if (v.empty() || static_cast<int>(v.size()) > max_len_) {
    throw InvalidArgument("cylinder length outside the sampled range 1.." + std::to_string(max_len_));
  }
  std::size_t code = 0;
  for (const Symbol s : v) code = code * static_cast<std::size_t>(2 * M_) + static_cast<std::size_t>(symbol_code(s, M_));
  const auto hits = hits_[v.size() - 1][code];
  const double n = static_cast<double>(accepted_);
  const double p = accepted_ ? static_cast<double>(hits) / n : 0.0;
  return {p, accepted_ ? std::sqrt(p * (1.0 - p) / n) : 0.0, accepted_, discarded_};
}

double McTable::discarded_fraction() const {
  const auto total = accepted_ + discarded_;
  return total ? static_cast<double>(discarded_) / static_cast<double>(total) : 0.0;
}

McEstimate mc_mme_cylinder(const Alphabet& alphabet, Side side, std::span<const Symbol> v,
                           const MonteCarloConfig& cfg) {
  if (v.empty()) return {1.0, 0.0, cfg.samples, 0};
  return McTable(alphabet, side, static_cast<int>(v.size()), cfg).estimate(v);
}

}  // namespace dyck::oracle
