#include "dyck/enumeration.hpp"
#include "dyck/krieger.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace dyck;
using testing::parse;

namespace {

const Alphabet kTwo(2);

CollapsedWord collapsed(const char* text, Side side) { return parse_collapsed(text, side, kTwo); }

}  // namespace

TEST_CASE("collapse examples") {
  CHECK(format_collapsed(collapse(Side::Alpha, parse("a1,b2,a2"))) == "a1,B,a2");
  CHECK(format_collapsed(collapse(Side::Beta, parse("a1,b2"))) == "A,b2");
  CHECK(collapse(Side::Alpha, Word{}).size() == 0);
  CHECK(collapsed_drift(collapsed("a1,B,a2", Side::Alpha)) == 1);
  CHECK(parse_collapsed("a1,B,a2", Side::Alpha, kTwo) == collapse(Side::Alpha, parse("a1,b1,a2")));
  CHECK_THROWS_AS(parse_collapsed("a1,A", Side::Alpha, kTwo), ParseError);
}

TEST_CASE("decorate examples") {
  CHECK(decorate_periodic(collapsed("a1,B,a2", Side::Alpha)) == parse("a1,b1,a2"));
  CHECK(decorate_periodic(collapsed("a2", Side::Alpha)) == parse("a2"));
  CHECK_THROWS_AS(decorate_periodic(collapsed("b1,A", Side::Beta)), NoDrift);
  // A wildcard whose partner sits in the previous period.
  CHECK(decorate_periodic(collapsed("B,a2,a1", Side::Alpha)) == parse("b1,a2,a1"));
  // Beta side: the left bracket takes the index of the right bracket closing it.
  CHECK(decorate_periodic(collapsed("A,b2,b1", Side::Beta)) == parse("a2,b2,b1"));
  CHECK(decorate_periodic(collapsed("b1,b2,A", Side::Beta)) == parse("b1,b2,a1"));
}

TEST_CASE("decorate inverts collapse on periodic words") {
  for (const Side side : {Side::Alpha, Side::Beta}) {
    const ClassFilter f = side == Side::Alpha ? ClassFilter::Alpha : ClassFilter::Beta;
    for (int M = 2; M <= 3; ++M) {
      for (int n = 1; n <= (M == 2 ? 8 : 6); ++n) {
        std::set<CollapsedWord, bool (*)(const CollapsedWord&, const CollapsedWord&)> images(
            [](const CollapsedWord& a, const CollapsedWord& b) { return format_collapsed(a) < format_collapsed(b); });
        std::size_t count = 0;
        enumerate_periodic(PeriodicSetQuery{M, n, f}, [&](std::span<const Symbol> w, PeriodClass) {
          const CollapsedWord z = collapse(side, w);
          CHECK(decorate_periodic(z) == Word(w.begin(), w.end()));
          CHECK(collapsed_drift(z) > 0);
          images.insert(z);
          ++count;
        });
        CHECK(images.size() == count);
      }
    }
  }
}

TEST_CASE("every positive-drift collapsed word decorates to a periodic point of its class") {
  testing::Gen gen(23);
  for (int t = 0; t < 3000; ++t) {
    const Side side = t % 2 ? Side::Alpha : Side::Beta;
    CollapsedWord z{side, {}};
    const int n = gen.uniform(1, 10);
    for (int i = 0; i < n; ++i) {
      const bool wildcard = gen.uniform(0, 2) == 0;
      z.symbols.push_back({wildcard, static_cast<std::uint16_t>(wildcard ? 0 : gen.uniform(1, 2))});
    }
    if (collapsed_drift(z) <= 0) {
      CHECK_THROWS_AS(decorate_periodic(z), NoDrift);
      continue;
    }
    const Word w = decorate_periodic(z);
    const auto cls = testing::ref_class(testing::to_ints(w));
    REQUIRE(cls.has_value());
    CHECK(*cls == (side == Side::Alpha ? PeriodClass::Alpha : PeriodClass::Beta));
    CHECK(collapse(side, w) == z);
  }
}

TEST_CASE("collapse and decorate commute with rotation") {
  testing::Gen gen(29);
  const auto words = collect_periodic({2, 9, ClassFilter::Beta});
  for (int t = 0; t < 2000; ++t) {
    const Word& w = words[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(words.size()) - 1))];
    const std::size_t k = static_cast<std::size_t>(gen.uniform(0, 8));
    const CollapsedWord z = collapse(Side::Beta, rotate(w, k));
    CHECK(decorate_periodic(z) == rotate(w, k));
  }
}

TEST_CASE("cylinder masses") {
  CHECK(mme_cylinder(kTwo, Side::Alpha, parse("a1")) == Rational(1, 3));
  CHECK(mme_cylinder(kTwo, Side::Alpha, parse("b1")) == Rational(1, 6));
  CHECK(mme_cylinder(kTwo, Side::Alpha, parse("a1,b2")) == 0);
  CHECK(mme_cylinder(kTwo, Side::Beta, parse("b2")) == Rational(1, 3));
  CHECK(mme_cylinder(kTwo, Side::Beta, parse("a2")) == Rational(1, 6));
  CHECK(mixture_cylinder(kTwo, parse("a1")) == Rational(1, 4));
  CHECK(mixture_cylinder(kTwo, Word{}) == 1);
  CHECK(mixture_cylinder(Alphabet(5), Word{}) == 1);
  CHECK(mixture_cylinder(kTwo, parse("a1,b2")) == 0);
  CHECK(mme_cylinder(Alphabet(3), Side::Alpha, parse("a1", 3)) == Rational(1, 4));
}

TEST_CASE("cylinder masses match the reference formula and the mirror symmetry") {
  testing::Gen gen(31);
  for (int t = 0; t < 3000; ++t) {
    const int M = gen.uniform(2, 4);
    const Word v = gen.dyckish_word(M, gen.uniform(0, 7));
    const Alphabet alphabet(M);
    const auto ints = testing::to_ints(v);
    CHECK(mme_cylinder(alphabet, Side::Alpha, v) == testing::ref_mme(M, true, ints));
    CHECK(mme_cylinder(alphabet, Side::Beta, v) == testing::ref_mme(M, false, ints));
    CHECK(mme_cylinder(alphabet, Side::Beta, mirror(v)) == mme_cylinder(alphabet, Side::Alpha, v));
  }
}

TEST_CASE("entropy of the cylinder partitions") {
  // H_m / m stays at or above log(M+1), does not increase with m and tends to log(M+1).
  const double floor = std::log(3.0);
  double previous = 0.0;
  for (int m = 1; m <= 7; ++m) {
    double entropy = 0.0;
    for (const auto& ints : testing::ref_all_words(2, m)) {
      Word v;
      for (const int s : ints) v.push_back(s > 0 ? Symbol::left(s) : Symbol::right(-s));
      const double p = mme_cylinder(kTwo, Side::Alpha, v).convert_to<double>();
      if (p > 0) entropy -= p * std::log(p);
    }
    const double rate = entropy / m;
    CHECK(rate >= floor - 1e-12);
    if (m > 1) CHECK(rate <= previous + 1e-12);
    previous = rate;
  }
  CHECK(previous - floor < 0.1);
}
