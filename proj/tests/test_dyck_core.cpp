#include "dyck/dyck_core.hpp"
#include "dyck/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace dyck;
using testing::parse;

TEST_CASE("reduce on small words") {
  CHECK(reduce(parse("a1,b1")).is_identity());
  CHECK(reduce(parse("a1,b2")).is_zero());
  CHECK(reduce(parse("b2,a1,a1,b1")) == ReducedForm::normal({2}, {1}));
  CHECK(reduce(parse("")).is_identity());
  CHECK(reduce(parse("b1,b2,a2,a1")) == ReducedForm::normal({1, 2}, {2, 1}));
  CHECK(reduce(parse("b2,a1,a1,b1")).to_word() == parse("b2,a1"));
}

TEST_CASE("reduce matches the stack reference on random words") {
  testing::Gen gen;
  for (int t = 0; t < 5000; ++t) {
    const int M = gen.uniform(1, 4);
    const Word w = t % 2 ? gen.word(M, gen.uniform(0, 20)) : gen.dyckish_word(M, gen.uniform(0, 20));
    const auto ref = testing::ref_reduce(testing::to_ints(w));
    const ReducedForm r = reduce(w);
    REQUIRE(r.is_zero() == !ref.has_value());
    if (ref) {
      CHECK(r.beta_part() == ref->first);
      CHECK(r.alpha_part() == ref->second);
    }
  }
}

TEST_CASE("reduce is a monoid homomorphism with absorbing zero") {
  testing::Gen gen(7);
  auto join = [](const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
  };
  for (int t = 0; t < 3000; ++t) {
    const Word u = gen.dyckish_word(2, gen.uniform(0, 8));
    const Word v = gen.dyckish_word(2, gen.uniform(0, 8));
    const Word x = gen.dyckish_word(2, gen.uniform(0, 8));
    const ReducedForm ru = reduce(u);
    const ReducedForm rv = reduce(v);
    if (ru.is_zero() || rv.is_zero()) {
      CHECK(reduce(join(u, v)).is_zero());
    } else {
      CHECK(reduce(join(ru.to_word(), rv.to_word())) == reduce(join(u, v)));
    }
    CHECK(reduce(join(join(u, v), x)) == reduce(join(u, join(v, x))));
  }
}

TEST_CASE("h_value and classes") {
  CHECK(h_value(parse("a1,a2,b1")) == 1);
  CHECK(h_value(parse("")) == 0);
  CHECK(h_value(parse("b1,b2,a1")) == -1);
  CHECK(class_of_height(3) == PeriodClass::Alpha);
  CHECK(class_of_height(-1) == PeriodClass::Beta);
  CHECK(class_of_height(0) == PeriodClass::Zero);
}

TEST_CASE("is_periodic_point examples") {
  auto check = [](const char* w, bool admissible, std::optional<PeriodClass> cls) {
    const PeriodicCheck r = is_periodic_point(parse(w));
    CHECK(r.admissible == admissible);
    CHECK(r.period_class == cls);
  };
  check("a1", true, PeriodClass::Alpha);
  check("a1,b1", true, PeriodClass::Zero);
  check("a1,b1,b2", true, PeriodClass::Beta);
  check("a1,b2", false, std::nullopt);
  // Reduces to b1.a2 whose junction a2.b1 mismatches.
  check("b1,a2", false, std::nullopt);
  check("b1,a1", true, PeriodClass::Zero);
  CHECK_THROWS_AS(is_periodic_point(Word{}), EmptyWord);
}

TEST_CASE("is_periodic_point agrees with reduce(w.w) on random words") {
  testing::Gen gen(11);
  for (int t = 0; t < 5000; ++t) {
    const int M = gen.uniform(1, 3);
    const Word w = gen.dyckish_word(M, gen.uniform(1, 16));
    const auto ref = testing::ref_class(testing::to_ints(w));
    const PeriodicCheck r = is_periodic_point(w);
    REQUIRE(r.admissible == ref.has_value());
    if (ref) CHECK(*r.period_class == *ref);
  }
}

TEST_CASE("periodic admissibility and class are invariant under rotation") {
  testing::Gen gen(13);
  for (int t = 0; t < 2000; ++t) {
    const Word w = gen.dyckish_word(2, gen.uniform(1, 12));
    const PeriodicCheck base = is_periodic_point(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const PeriodicCheck r = is_periodic_point(rotate(w, k));
      CHECK(r.admissible == base.admissible);
      CHECK(r.period_class == base.period_class);
    }
  }
}

TEST_CASE("mirror swaps the alpha and beta classes") {
  testing::Gen gen(17);
  CHECK(mirror(parse("a1,a2,b1")) == parse("a1,b2,b1"));
  for (int t = 0; t < 2000; ++t) {
    const Word w = gen.dyckish_word(3, gen.uniform(1, 12));
    CHECK(mirror(mirror(w)) == w);
    const PeriodicCheck a = is_periodic_point(w);
    const PeriodicCheck b = is_periodic_point(mirror(w));
    REQUIRE(a.admissible == b.admissible);
    if (a.admissible) {
      const PeriodClass expect = *a.period_class == PeriodClass::Alpha  ? PeriodClass::Beta
                                 : *a.period_class == PeriodClass::Beta ? PeriodClass::Alpha
                                                                        : PeriodClass::Zero;
      CHECK(*b.period_class == expect);
    }
  }
}

TEST_CASE("classify_A_set") {
  CHECK(classify_A_set(parse("a1,a2")) == ASet::Alpha);
  CHECK(classify_A_set(parse("b1,b1")) == ASet::Beta);
  CHECK(classify_A_set(parse("a2,b2")) == ASet::Zero);
  CHECK_THROWS_AS(classify_A_set(parse("a1,b2")), NotPeriodicPoint);
}

TEST_CASE("word text format") {
  const Alphabet two(2);
  CHECK(format_word(parse_word("a1,b2,a2", two)) == "a1,b2,a2");
  CHECK(parse_word("", two).empty());
  CHECK_THROWS_AS(parse_word("a3", two), ParseError);
  CHECK_THROWS_AS(parse_word("a0", two), ParseError);
  CHECK_THROWS_AS(parse_word("c1", two), ParseError);
  CHECK_THROWS_AS(parse_word("a1,,a2", two), ParseError);
  CHECK_THROWS_AS(Alphabet(0), InvalidArgument);
  CHECK(parse_period_class("beta") == PeriodClass::Beta);
  CHECK_THROWS_AS(parse_period_class("gamma"), ParseError);
}

TEST_CASE("canonical symbol order and codes") {
  const int M = 3;
  for (int code = 0; code < 2 * M; ++code) {
    CHECK(symbol_code(symbol_from_code(code, M), M) == code);
    if (code > 0) CHECK(symbol_from_code(code - 1, M) < symbol_from_code(code, M));
  }
}
