#pragma once

#include "dyck/io.hpp"
#include "dyck/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dyck::verify {

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t seed = oracle::kDefaultSeed;
  std::uint64_t samples = 1'000'000;
};

struct CheckResult {
  std::string check;
  bool passed = false;
  std::string summary;
  io::Json details = io::Json::object();
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double seconds = 0.0;
};

/// Enumerated class sizes equal the closed forms for M in {2,3}, n <= 12,
/// within two minutes.
CheckResult count_exactness(const VerifyOptions& opt);

/// (1/3)(M+1)^n <= #Per_{gamma,n} < (M+1)^n for M = 2, 1 <= n <= 20.
CheckResult count_bounds(const VerifyOptions& opt);

/// is_periodic_point against the brute-force oracle on all words, M = 2, n <= 8.
CheckResult oracle_equivalence(const VerifyOptions& opt);

/// Balance identities, Kolmogorov consistency and normalization of the exact
/// cylinder masses for lengths <= 4, M = 2.
CheckResult mme_identities(const VerifyOptions& opt);

/// Exact cylinder masses within 3 standard errors of the Monte Carlo
/// pushforward for all |v| <= 3, M = 2.
CheckResult monte_carlo(const VerifyOptions& opt);

/// Sup-distance of the period-n empirical distributions (m = 1, M = 2) to
/// their limits is <= 0.05 at n = 14 and smaller than at n = 6.
CheckResult periodic_convergence(const VerifyOptions& opt);

/// decorate o collapse = id on Per_{gamma,n}, n <= 10; collapse injective;
/// shift equivariance on 10^4 random rotations.
CheckResult krieger_round_trip(const VerifyOptions& opt);

/// Exact periodic points of f_{1/5,1/5} for every admissible word, n <= 8.
CheckResult baker_solver(const VerifyOptions& opt);

/// Lebesgue moments of the alpha ensemble of f_{1/3} at period 13, and their
/// failure for the beta ensemble.
CheckResult lebesgue_projection(const VerifyOptions& opt);

/// Suite names: core, counts, measures, baker, all.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

io::Json to_json(const CheckResult& r);

}  // namespace dyck::verify
