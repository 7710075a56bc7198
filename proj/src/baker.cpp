#include "dyck/baker.hpp"

namespace dyck {

ExactParams parse_params(int M, std::string_view a, std::string_view b) {
  ExactParams p{M, parse_rational(a), parse_rational(b)};
  p.validate();
  return p;
}

Rational default_b(int M) { return Rational(1, 2 * M); }

Scatter scatter(const ExactParams& p, std::span<const int> periods, PeriodClass cls, bool planar,
                const EnumerationOptions& options) {
  p.validate();
  if (cls == PeriodClass::Zero) throw NonHyperbolic("scatter is defined for the alpha and beta classes only");
  const BranchTable<Rational> table(p);
  Scatter out{planar, {}, {}, {}};
  struct Shard {
    std::vector<ScatterRow> rows;
    std::vector<ScatterRow> boundary;
  };
  for (const int n : periods) {
    const auto shards = fold_shards(
        PeriodicSetQuery{p.M, n, filter_of(cls)}, Shard{},
        [&table, planar, n](Shard& acc, std::span<const Symbol> w, PeriodClass c) {
          const ExactOrbit sol = solve_periodic_point(table, w);
          ScatterRow row{n,
                         c,
                         sol.point(kU).convert_to<double>(),
                         sol.point(kC).convert_to<double>(),
                         sol.point(kS).convert_to<double>(),
                         Word(w.begin(), w.end())};
          const bool inside = planar ? sol.in_lambda_planar : sol.in_lambda;
          (inside ? acc.rows : acc.boundary).push_back(std::move(row));
        },
        options);
    ScatterPeriodSummary summary{n, cls};
    for (const auto& shard : shards) {
      summary.solved += shard.rows.size() + shard.boundary.size();
      summary.boundary += shard.boundary.size();
      out.rows.insert(out.rows.end(), shard.rows.begin(), shard.rows.end());
      out.boundary.insert(out.boundary.end(), shard.boundary.begin(), shard.boundary.end());
    }
    out.summary.push_back(summary);
  }
  return out;
}

}  // namespace dyck
