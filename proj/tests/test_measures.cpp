#include "dyck/measures.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace dyck;
using testing::parse;

namespace {

const Alphabet kTwo(2);

/// Fraction of words in the reference class whose first m symbols spell each cylinder.
std::map<std::vector<int>, Rational> reference_empirical(int M, int n, PeriodClass cls, int m) {
  std::map<std::vector<int>, long> hits;
  long size = 0;
  for (const auto& w : testing::ref_all_words(M, n)) {
    if (testing::ref_class(w) != cls) continue;
    ++size;
    ++hits[std::vector<int>(w.begin(), w.begin() + m)];
  }
  std::map<std::vector<int>, Rational> out;
  for (const auto& [v, c] : hits) out[v] = Rational(c, size);
  return out;
}

Rational sup_distance(int n, PeriodClass cls, int m, Target target) {
  return compare_to_target(build_empirical(2, n, cls, m), target).sup_distance;
}

}  // namespace

TEST_CASE("cylinder indexing round trips") {
  for (int m = 0; m <= 4; ++m) {
    CHECK(cylinder_count(2, m) == static_cast<std::size_t>(1) << (2 * m));
    for (std::size_t code = 0; code < cylinder_count(2, m); ++code) {
      CHECK(cylinder_code(cylinder_word(code, 2, m), 2) == code);
    }
  }
  CHECK(cylinder_word(1, 2, 2) == parse("a1,a2"));
}

TEST_CASE("empirical distributions on small periods") {
  const EmpiricalDistribution alpha = build_empirical(2, 2, PeriodClass::Alpha, 1);
  CHECK(alpha.at(parse("a1")) == Rational(1, 2));
  CHECK(alpha.at(parse("a2")) == Rational(1, 2));
  CHECK(alpha.at(parse("b1")) == 0);
  CHECK(alpha.at(parse("b2")) == 0);
  CHECK(alpha.ensemble_size == 4);

  const EmpiricalDistribution zero = build_empirical(2, 2, PeriodClass::Zero, 1);
  for (const char* v : {"a1", "a2", "b1", "b2"}) CHECK(zero.at(parse(v)) == Rational(1, 4));

  const EmpiricalDistribution both = union_empirical(2, 2, 1);
  CHECK(both.at(parse("a1")) == Rational(1, 4));
  CHECK(both.frequency.sum() == 1);

  const ConvergenceRow row = compare_to_target(alpha, Target::Alpha);
  CHECK(row.sup_distance == Rational(1, 6));
}

TEST_CASE("empirical distributions match the reference scan") {
  for (const PeriodClass cls : {PeriodClass::Alpha, PeriodClass::Beta, PeriodClass::Zero}) {
    for (int n = 2; n <= 6; n += 2) {
      for (int m = 1; m <= std::min(n, 3); ++m) {
        const auto ref = reference_empirical(2, n, cls, m);
        const EmpiricalDistribution e = build_empirical(2, n, cls, m);
        CHECK(e.frequency.sum() == 1);
        for (std::size_t code = 0; code < cylinder_count(2, m); ++code) {
          const Word v = cylinder_word(code, 2, m);
          const auto it = ref.find(testing::to_ints(v));
          CHECK(e.at(v) == (it == ref.end() ? Rational(0) : it->second));
        }
      }
    }
  }
}

TEST_CASE("cyclic counting agrees with the prefix definition") {
  for (const PeriodClass cls : {PeriodClass::Alpha, PeriodClass::Beta}) {
    for (int n = 3; n <= 8; ++n) {
      for (int m = 1; m <= 3; ++m) {
        CHECK(build_empirical(2, n, cls, m).frequency == build_empirical_by_prefix(2, n, cls, m).frequency);
      }
    }
  }
}

TEST_CASE("empirical distributions are invariant under the mirror involution") {
  for (int n = 3; n <= 7; ++n) {
    const EmpiricalDistribution a = build_empirical(2, n, PeriodClass::Alpha, 2);
    const EmpiricalDistribution b = build_empirical(2, n, PeriodClass::Beta, 2);
    const EmpiricalDistribution u = union_empirical(2, n, 2);
    for (std::size_t code = 0; code < cylinder_count(2, 2); ++code) {
      const Word v = cylinder_word(code, 2, 2);
      CHECK(b.at(mirror(v)) == a.at(v));
      CHECK(u.at(mirror(v)) == u.at(v));
    }
  }
}

TEST_CASE("target tables") {
  CHECK(target_table(kTwo, 1, Target::Alpha).sum() == 1);
  CHECK(target_table(kTwo, 3, Target::Mixture).sum() == 1);
  CHECK(target_cylinder(kTwo, Target::Mixture, parse("a1")) == Rational(1, 4));
  const EmpiricalDistribution alpha = build_empirical(2, 6, PeriodClass::Alpha, 2);
  EmpiricalDistribution exact = alpha;
  exact.frequency = target_table(kTwo, 2, Target::Alpha);
  CHECK(compare_to_target(exact, Target::Alpha).sup_distance == 0);
  CHECK(default_target(Ensemble::Union) == Target::Mixture);
  CHECK_THROWS_AS(default_target(Ensemble::Zero), InvalidArgument);
}

TEST_CASE("sup distances at periods 6 and 14") {
  // Period 6 values come from the reference scan; period 14 values are the
  // measured outputs of the exact pipeline.
  CHECK(sup_distance(6, PeriodClass::Alpha, 1, Target::Alpha) == Rational(5, 93));
  CHECK(sup_distance(6, PeriodClass::Alpha, 2, Target::Alpha) == Rational(19, 558));
  CHECK(sup_distance(6, PeriodClass::Beta, 1, Target::Beta) == Rational(5, 93));
  CHECK(sup_distance(8, PeriodClass::Alpha, 2, Target::Alpha) == Rational(65, 2736));
  CHECK(sup_distance(14, PeriodClass::Alpha, 1, Target::Alpha) == Rational(286, 15891));
  CHECK(sup_distance(14, PeriodClass::Beta, 2, Target::Beta) == Rational(517, 47673));
}

TEST_CASE("the union ensemble matches the mixture exactly on single symbols") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(compare_to_target(union_empirical(2, n, 1), Target::Mixture).sup_distance == 0);
  }
  CHECK(compare_to_target(union_empirical(2, 8, 2), Target::Mixture).sup_distance > 0);
}

TEST_CASE("convergence report") {
  const std::vector<int> periods{4, 6, 8};
  const ConvergenceReport r = convergence_report(2, periods, Ensemble::Alpha, 1, Target::Alpha);
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].n == 4);
  CHECK(r.rows[1].sup_distance == Rational(5, 93));
  for (const auto& row : r.rows) {
    CHECK(row.residuals.size() == 4);
    for (const auto& c : row.residuals) CHECK(c.abs_error <= row.sup_distance);
  }
}

TEST_CASE("measure errors") {
  CHECK_THROWS_AS(build_empirical(2, 3, PeriodClass::Zero, 1), EmptyEnsemble);
  CHECK_THROWS_AS(build_empirical(2, 3, PeriodClass::Alpha, 4), InvalidArgument);
  CHECK_THROWS_AS(build_empirical(2, 3, PeriodClass::Alpha, 0), InvalidArgument);
  CHECK(parse_ensemble("union") == Ensemble::Union);
  CHECK(parse_target("mixture") == Target::Mixture);
}
