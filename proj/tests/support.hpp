#pragma once

// Seeded generators and small reference computations shared by the unit tests.
// The reference code works on signed integers (+k for a_k, -k for b_k) and
// never calls into the library.

#include "dyck/dyck_core.hpp"
#include "dyck/numeric.hpp"

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace testing {

using dyck::Rational;
using dyck::Symbol;
using dyck::Word;

inline constexpr std::uint64_t kSeed = 0x5EED;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Symbol symbol(int M) { return dyck::symbol_from_code(uniform(0, 2 * M - 1), M); }

  Word word(int M, int length) {
    Word w;
    for (int i = 0; i < length; ++i) w.push_back(symbol(M));
    return w;
  }

  /// Words biased towards matched pairs, so that reductions are often nonzero.
  Word dyckish_word(int M, int length) {
    Word w;
    std::vector<int> open;
    for (int i = 0; i < length; ++i) {
      if (!open.empty() && uniform(0, 2) == 0) {
        w.push_back(Symbol::right(open.back()));
        open.pop_back();
      } else if (uniform(0, 3) == 0) {
        w.push_back(Symbol::right(uniform(1, M)));
      } else {
        open.push_back(uniform(1, M));
        w.push_back(Symbol::left(open.back()));
      }
    }
    return w;
  }

  /// A rational in the open interval (0, 1/M) with a small denominator.
  Rational parameter(int M) {
    const int q = uniform(M + 1, 12 * M);
    const int p = uniform(1, (q - 1) / M);
    return Rational(p, q);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline int to_int(Symbol s) { return s.is_left() ? s.index : -static_cast<int>(s.index); }

inline std::vector<int> to_ints(const Word& w) {
  std::vector<int> out;
  for (const Symbol s : w) out.push_back(to_int(s));
  return out;
}

/// Stack reduction of a signed word: (unmatched rights, unmatched lefts) or
/// nothing when some pair mismatches.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> ref_reduce(const std::vector<int>& w) {
  std::vector<int> open;
  std::vector<int> close;
  for (const int s : w) {
    if (s > 0) {
      open.push_back(s);
    } else if (open.empty()) {
      close.push_back(-s);
    } else if (open.back() == -s) {
      open.pop_back();
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(close, open);
}

/// Class of a periodic word, or nothing when w.w reduces to zero.
inline std::optional<dyck::PeriodClass> ref_class(const std::vector<int>& w) {
  std::vector<int> ww = w;
  ww.insert(ww.end(), w.begin(), w.end());
  if (!ref_reduce(ww)) return std::nullopt;
  int h = 0;
  for (const int s : w) h += s > 0 ? 1 : -1;
  return h > 0 ? dyck::PeriodClass::Alpha : h < 0 ? dyck::PeriodClass::Beta : dyck::PeriodClass::Zero;
}

/// All words of length n over 2M symbols, as signed integers.
inline std::vector<std::vector<int>> ref_all_words(int M, int n) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (int s = 1; s <= M; ++s) {
        for (const int sign : {1, -1}) {
          auto x = w;
          x.push_back(sign * s);
          next.push_back(std::move(x));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Cylinder mass from the closed formula, computed on signed words.
inline Rational ref_mme(int M, bool alpha_side, const std::vector<int>& v) {
  const auto r = ref_reduce(v);
  if (!r) return 0;
  const auto u = alpha_side ? r->first.size() : r->second.size();
  Rational mass(1);
  for (std::size_t i = 0; i < v.size(); ++i) mass /= M + 1;
  for (std::size_t i = 0; i < u; ++i) mass /= M;
  return mass;
}

inline Word parse(const char* text, int M = 2) { return dyck::parse_word(text, dyck::Alphabet(M)); }

}  // namespace testing
