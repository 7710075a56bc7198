#pragma once

// Slow, independent reference implementations. Nothing here calls the main
// reduction, enumeration, decoration or cylinder-mass code paths.

#include "dyck/dyck_core.hpp"
#include "dyck/krieger.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dyck::oracle {

/// Rewrites the leftmost adjacent (alpha_i, beta_j) pair until none is left:
/// the pair vanishes when i == j and the word becomes Zero otherwise.
ReducedForm naive_reduce(std::span<const Symbol> w);

struct BrutePoint {
  Word word;
  PeriodClass cls;
};

/// Scans all (2M)^n words, keeping those with naive_reduce(w.w) nonzero.
/// Throws ResourceLimit when (2M)^n exceeds the budget.
std::vector<BrutePoint> brute_periodic(int M, int n, std::uint64_t budget = std::uint64_t{1} << 26);

inline constexpr const char* kGenerator = "std::mt19937_64";
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct MonteCarloConfig {
  std::uint64_t samples = 1'000'000;
  int window_radius = 512;
  std::uint64_t seed = kDefaultSeed;
};

struct McEstimate {
  double estimate;
  double std_error;
  std::uint64_t accepted;
  std::uint64_t discarded;
};

/// Position-0 cylinder frequencies of every word of length 1..max_len under
/// the pushforward of the uniform Bernoulli measure on the collapsed full
/// shift. Each sample draws i.i.d. collapsed symbols, decorates positions
/// 0..max_len-1 by searching for matching partners (looking back on the alpha
/// side, ahead on the beta side) and is discarded when the search leaves the
/// window [-radius, radius].
class McTable {
 public:
  McTable(const Alphabet& alphabet, Side side, int max_len, const MonteCarloConfig& cfg);

  McEstimate estimate(std::span<const Symbol> v) const;

  std::uint64_t accepted() const { return accepted_; }
  std::uint64_t discarded() const { return discarded_; }
  double discarded_fraction() const;
  int max_len() const { return max_len_; }

 private:
  int M_;
  int max_len_;
  std::uint64_t accepted_ = 0;
  std::uint64_t discarded_ = 0;
  /// hits_[len - 1][code]
  std::vector<std::vector<std::uint64_t>> hits_;
};

McEstimate mc_mme_cylinder(const Alphabet& alphabet, Side side, std::span<const Symbol> v,
                           const MonteCarloConfig& cfg = {});

}  // namespace dyck::oracle
