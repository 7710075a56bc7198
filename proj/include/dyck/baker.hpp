#pragma once

#include "dyck/dyck_core.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/errors.hpp"
#include "dyck/numeric.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <vector>

namespace dyck {

/// (xu, xc, xs): unstable, center and stable coordinates.
template <typename Scalar>
using Point3 = Eigen::Matrix<Scalar, 3, 1>;

enum Axis : Eigen::Index { kU = 0, kC = 1, kS = 2 };

/// Parameters of f_{a,b}. The planar map f_a is the (xu, xc) projection, for
/// which b is irrelevant.
template <typename Scalar>
struct BakerParams {
  int M;
  Scalar a;
  Scalar b;

  /// Throws InvalidArgument unless M >= 1 and 0 < a, b < 1/M.
  void validate() const {
    if (M < 1) throw InvalidArgument("M must be >= 1");
    if (!(a > 0 && a * M < 1)) throw InvalidArgument("parameter a must lie in (0, 1/M)");
    if (!(b > 0 && b * M < 1)) throw InvalidArgument("parameter b must lie in (0, 1/M)");
  }

  template <typename To>
  BakerParams<To> cast() const {
    return {M, static_cast<To>(a), static_cast<To>(b)};
  }
};

/// [lo, hi) or [lo, hi].
template <typename Scalar>
struct Interval {
  Scalar lo;
  Scalar hi;
  bool hi_closed;

  bool contains(const Scalar& x) const { return lo <= x && (hi_closed ? x <= hi : x < hi); }
  bool contains_closure(const Scalar& x) const { return lo <= x && x <= hi; }
  bool contains_interior(const Scalar& x) const { return lo < x && x < hi; }
};

/// One branch of f_{a,b}: x -> slope .* x + intercept on the tile `domain`.
template <typename Scalar>
struct AffineStep {
  Point3<Scalar> slope;
  Point3<Scalar> intercept;
  std::array<Interval<Scalar>, 3> domain;

  Point3<Scalar> operator()(const Point3<Scalar>& x) const { return slope.cwiseProduct(x) + intercept; }
};

template <typename Scalar>
AffineStep<Scalar> branch(const BakerParams<Scalar>& p, Symbol s) {
  const Scalar one(1);
  const Scalar M(p.M);
  const Scalar k(static_cast<int>(s.index));
  AffineStep<Scalar> step;
  step.domain[kS] = {Scalar(0), one, true};
  if (s.is_left()) {
    step.slope << one / p.a, one / M, one - M * p.b;
    step.intercept << -(k - one), (k - one) / M, Scalar(0);
    step.domain[kU] = {(k - one) * p.a, k * p.a, false};
    step.domain[kC] = {Scalar(0), one, true};
  } else {
    const Scalar gap = one - M * p.a;
    step.slope << one / gap, M, p.b;
    step.intercept << -(M * p.a) / gap, -(k - one), one + p.b * (k - M - one);
    step.domain[kU] = {M * p.a, one, true};
    step.domain[kC] = {(k - one) / M, k / M, static_cast<int>(s.index) == p.M};
  }
  return step;
}

/// The 2M branches of one parameter set, built once.
template <typename Scalar>
class BranchTable {
 public:
  explicit BranchTable(const BakerParams<Scalar>& p) : params_(p) {
    p.validate();
    steps_.reserve(static_cast<std::size_t>(2 * p.M));
    for (int code = 0; code < 2 * p.M; ++code) steps_.push_back(branch(p, symbol_from_code(code, p.M)));
  }

  const BakerParams<Scalar>& params() const { return params_; }
  const AffineStep<Scalar>& operator[](Symbol s) const {
    return steps_[static_cast<std::size_t>(symbol_code(s, params_.M))];
  }

 private:
  BakerParams<Scalar> params_;
  std::vector<AffineStep<Scalar>> steps_;
};

/// The tile Omega_gamma containing x under the half-open conventions.
template <typename Scalar>
Symbol tile_of(const BakerParams<Scalar>& p, const Point3<Scalar>& x) {
  for (int k = 1; k <= p.M; ++k) {
    if (x(kU) < Scalar(k) * p.a) return Symbol::left(k);
  }
  for (int k = 1; k < p.M; ++k) {
    if (x(kC) < Scalar(k) / Scalar(p.M)) return Symbol::right(k);
  }
  return Symbol::right(p.M);
}

template <typename Scalar>
bool in_unit_cube(const Point3<Scalar>& x) {
  return (x.array() >= Scalar(0)).all() && (x.array() <= Scalar(1)).all();
}

/// f_{a,b}(x) together with the symbol of the tile x lies in.
template <typename Scalar>
std::pair<Point3<Scalar>, Symbol> apply(const BakerParams<Scalar>& p, const Point3<Scalar>& x) {
  if (!in_unit_cube(x)) throw InvalidArgument("point outside the unit cube");
  const Symbol s = tile_of(p, x);
  return {branch(p, s)(x), s};
}

/// Symbols of the first `length` iterates of x.
template <typename Scalar>
Word itinerary(const BakerParams<Scalar>& p, Point3<Scalar> x, std::size_t length) {
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    auto [next, s] = apply(p, x);
    w.push_back(s);
    x = std::move(next);
  }
  return w;
}

/// Composite of the branches along w, first symbol applied first. The domain
/// of the result is left unset.
template <typename Scalar>
AffineStep<Scalar> compose(const BranchTable<Scalar>& table, std::span<const Symbol> w) {
  AffineStep<Scalar> total;
  total.slope = Point3<Scalar>::Ones();
  total.intercept = Point3<Scalar>::Zero();
  for (const Symbol s : w) {
    const AffineStep<Scalar>& step = table[s];
    for (Eigen::Index axis = 0; axis < 3; ++axis) {
      total.slope(axis) *= step.slope(axis);
      total.intercept(axis) *= step.slope(axis);
      total.intercept(axis) += step.intercept(axis);
    }
  }
  return total;
}

template <typename Scalar>
AffineStep<Scalar> compose(const BakerParams<Scalar>& p, std::span<const Symbol> w) {
  return compose(BranchTable<Scalar>(p), w);
}

template <typename Scalar>
struct OrbitSolution {
  Word word;
  Point3<Scalar> point;
  /// Per-coordinate multipliers of the period map (lambda_u, lambda_c, lambda_s).
  Point3<Scalar> multipliers;
  int unstable_dim;
  /// Iterate i lies in the open interior of its tile, in the cube.
  std::vector<bool> interior;
  /// Same, looking only at (xu, xc), for the planar map.
  std::vector<bool> interior_planar;
  bool in_lambda;
  bool in_lambda_planar;
};

/// The unique fixed point of the period map along the periodic word w, with
/// every iterate checked against the closed tile of its symbol.
/// Throws NotPeriodicPoint, NonHyperbolic (H_n(w) = 0) or ConstraintViolation.
template <typename Scalar>
OrbitSolution<Scalar> solve_periodic_point(const BranchTable<Scalar>& table, std::span<const Symbol> w) {
  const PeriodicCheck check = is_periodic_point(w);
  if (!check.admissible) throw NotPeriodicPoint("'" + format_word(w) + "' is not a periodic point of the Dyck shift");
  if (*check.period_class == PeriodClass::Zero) {
    throw NonHyperbolic("'" + format_word(w) + "' has H_n = 0; its periodic points form a center continuum");
  }

  const AffineStep<Scalar> period_map = compose(table, w);
  OrbitSolution<Scalar> sol;
  sol.word.assign(w.begin(), w.end());
  sol.multipliers = period_map.slope;
  sol.point = period_map.intercept.cwiseQuotient(Point3<Scalar>::Ones() - period_map.slope);
  sol.unstable_dim = static_cast<int>((sol.multipliers.array() > Scalar(1)).count());
  sol.interior.reserve(w.size());
  sol.interior_planar.reserve(w.size());

  Point3<Scalar> x = sol.point;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const AffineStep<Scalar>& step = table[w[i]];
    bool inside = true;
    bool open_planar = true;
    bool open_stable = true;
    for (Eigen::Index axis = 0; axis < 3; ++axis) {
      const auto& interval = step.domain[static_cast<std::size_t>(axis)];
      inside = inside && interval.contains_closure(x(axis));
      if (axis == kS) {
        open_stable = interval.contains_interior(x(axis));
      } else {
        open_planar = open_planar && interval.contains_interior(x(axis));
      }
    }
    if (!inside) {
      throw ConstraintViolation("iterate " + std::to_string(i) + " of '" + format_word(w) +
                                "' leaves the closed tile of " + format_symbol(w[i]));
    }
    sol.interior_planar.push_back(open_planar);
    sol.interior.push_back(open_planar && open_stable);
    for (Eigen::Index axis = 0; axis < 3; ++axis) {
      x(axis) *= step.slope(axis);
      x(axis) += step.intercept(axis);
    }
  }
  if (x != sol.point) throw ConstraintViolation("period map does not return to the solved point");
  sol.in_lambda = std::all_of(sol.interior.begin(), sol.interior.end(), [](bool b) { return b; });
  sol.in_lambda_planar = std::all_of(sol.interior_planar.begin(), sol.interior_planar.end(), [](bool b) { return b; });
  return sol;
}

template <typename Scalar>
OrbitSolution<Scalar> solve_periodic_point(const BakerParams<Scalar>& p, std::span<const Symbol> w) {
  return solve_periodic_point(BranchTable<Scalar>(p), w);
}

using ExactParams = BakerParams<Rational>;
using ExactOrbit = OrbitSolution<Rational>;

/// Parses M and the "p/q" strings for a and b, then validates.
ExactParams parse_params(int M, std::string_view a, std::string_view b);

/// A value of b in (0, 1/M) used when only the planar map matters.
Rational default_b(int M);

struct ScatterRow {
  int period;
  PeriodClass cls;
  double xu;
  double xc;
  double xs;
  Word word;
};

struct ScatterPeriodSummary {
  int period;
  PeriodClass cls;
  std::size_t solved = 0;
  std::size_t boundary = 0;
};

struct Scatter {
  bool planar;
  std::vector<ScatterRow> rows;
  /// Solved points that touch a tile boundary, kept out of `rows`.
  std::vector<ScatterRow> boundary;
  std::vector<ScatterPeriodSummary> summary;
};

/// Solves every point of Per_{class,n} for each period. In planar mode
/// interiority ignores xs. Rows are in period order, then canonical word order.
Scatter scatter(const ExactParams& p, std::span<const int> periods, PeriodClass cls, bool planar,
                const EnumerationOptions& options = {});

}  // namespace dyck
