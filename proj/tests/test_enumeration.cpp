#include "dyck/enumeration.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace dyck;
using testing::parse;

namespace {

// Class sizes from an exhaustive scan by the test-side reference (alpha,
// beta, zero). The alpha and beta columns agree with the closed form.
const std::map<std::pair<int, int>, std::array<long, 3>> kScanned = {
    {{2, 1}, {2, 2, 0}},       {{2, 2}, {4, 4, 4}},       {{2, 3}, {20, 20, 0}},   {{2, 4}, {48, 48, 24}},
    {{2, 5}, {192, 192, 0}},   {{2, 6}, {496, 496, 160}}, {{2, 7}, {1808, 1808, 0}}, {{2, 8}, {4864, 4864, 1120}},
    {{3, 1}, {3, 3, 0}},       {{3, 2}, {9, 9, 6}},       {{3, 3}, {54, 54, 0}},   {{3, 4}, {189, 189, 54}},
    {{3, 5}, {918, 918, 0}},   {{3, 6}, {3402, 3402, 540}},
};

const std::vector<long> kClosedFormM2 = {2, 4, 20, 48, 192, 496, 1808, 4864, 16832, 46464, 155520, 436992};
const std::vector<long> kClosedFormM3 = {3, 9, 54, 189, 918, 3402, 15228, 58077, 249318, 966654, 4050324, 15864498};

std::array<long, 3> reference_scan(int M, int n) {
  std::array<long, 3> c{};
  for (const auto& w : testing::ref_all_words(M, n)) {
    if (const auto cls = testing::ref_class(w)) ++c[static_cast<std::size_t>(*cls)];
  }
  return c;
}

std::vector<std::string> listed(int M, int n, ClassFilter f) {
  std::vector<std::string> out;
  enumerate_periodic(PeriodicSetQuery{M, n, f}, [&](std::span<const Symbol> w, PeriodClass) {
    out.push_back(format_word(w));
  });
  return out;
}

}  // namespace

TEST_CASE("frozen scan values are reproduced by the reference") {
  for (const auto& [key, counts] : kScanned) {
    CHECK(reference_scan(key.first, key.second) == counts);
  }
}

TEST_CASE("enumeration lists") {
  CHECK(listed(2, 1, ClassFilter::Alpha) == std::vector<std::string>{"a1", "a2"});
  CHECK(listed(2, 2, ClassFilter::Alpha) == std::vector<std::string>{"a1,a1", "a1,a2", "a2,a1", "a2,a2"});
  CHECK(listed(2, 2, ClassFilter::Zero) == std::vector<std::string>{"a1,b1", "a2,b2", "b1,a1", "b2,a2"});
  CHECK(listed(2, 1, ClassFilter::All) == std::vector<std::string>{"a1", "a2", "b1", "b2"});
}

TEST_CASE("enumerated counts match the scan and the closed form") {
  for (const auto& [key, counts] : kScanned) {
    const auto [M, n] = key;
    CHECK(count_enumerated({M, n, ClassFilter::Alpha}) == counts[0]);
    CHECK(count_enumerated({M, n, ClassFilter::Beta}) == counts[1]);
    CHECK(count_enumerated({M, n, ClassFilter::Zero}) == counts[2]);
    CHECK(count_closed_form({M, n, ClassFilter::Alpha}) == counts[0]);
    CHECK(count_closed_form({M, n, ClassFilter::Zero}) == counts[2]);
  }
  for (int n = 1; n <= 12; ++n) {
    CHECK(count_closed_form({2, n, ClassFilter::Beta}) == kClosedFormM2[static_cast<std::size_t>(n - 1)]);
    CHECK(count_closed_form({3, n, ClassFilter::Beta}) == kClosedFormM3[static_cast<std::size_t>(n - 1)]);
  }
  CHECK(count_closed_form({2, 2, ClassFilter::All}) == 12);
  CHECK(count_closed_form({2, 1, ClassFilter::Alpha}) == 2);
}

TEST_CASE("enumeration is sorted, duplicate free and matches the reference membership") {
  for (int n = 1; n <= 6; ++n) {
    const auto words = collect_periodic({2, n, ClassFilter::All});
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    for (const Word& w : words) CHECK(testing::ref_class(testing::to_ints(w)).has_value());
  }
}

TEST_CASE("enumerated sets are closed under rotation") {
  for (const ClassFilter f : {ClassFilter::Alpha, ClassFilter::Beta, ClassFilter::Zero}) {
    for (int n = 1; n <= 7; ++n) {
      const auto words = collect_periodic({2, n, f});
      const std::set<Word> set(words.begin(), words.end());
      for (const Word& w : words) CHECK(set.count(rotate(w, 1)) == 1);
    }
  }
}

TEST_CASE("sharded collection is deterministic and equals the sequential stream") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<Word> sequential;
    enumerate_periodic(PeriodicSetQuery{2, n, ClassFilter::Alpha},
                       [&](std::span<const Symbol> w, PeriodClass) { sequential.emplace_back(w.begin(), w.end()); });
    CHECK(collect_periodic({2, n, ClassFilter::Alpha}, {1'000'000'000, 1}) == sequential);
    CHECK(collect_periodic({2, n, ClassFilter::Alpha}, {1'000'000'000, 4}) == sequential);
  }
}

TEST_CASE("budget and validation") {
  CHECK_THROWS_AS(count_enumerated({2, 30, ClassFilter::Alpha}, {1000, 1}), ResourceLimit);
  CHECK_THROWS_AS(count_enumerated({2, 0, ClassFilter::Alpha}), InvalidArgument);
  CHECK(projected_visits(2, 1) == 4);
  // Length-2 words with nonzero reduction: 16 minus the 2 mismatched pairs.
  CHECK(projected_visits(2, 2) == 4 + 14);
}

TEST_CASE("projected visits equals the number of nonzero prefixes") {
  for (int M = 1; M <= 3; ++M) {
    for (int n = 1; n <= 5; ++n) {
      long nonzero = 0;
      for (int len = 1; len <= n; ++len) {
        for (const auto& w : testing::ref_all_words(M, len)) nonzero += testing::ref_reduce(w).has_value();
      }
      CHECK(projected_visits(M, n) == nonzero);
    }
  }
}

TEST_CASE("count bounds") {
  CHECK(verify_count_bounds(2, 1));
  CHECK(verify_count_bounds(2, 2));
  CHECK(verify_count_bounds(3, 2));
  const BoundsReport r = count_bounds_report(2, 20);
  REQUIRE(r.holds_from.has_value());
  CHECK(*r.holds_from == 1);
  CHECK(r.rows.size() == 20);
  CHECK(r.rows[1].count == 4);
}

TEST_CASE("count report") {
  const CountReport r = count_report({2, 2, ClassFilter::Alpha}, true);
  CHECK(r.closed_form == 4);
  REQUIRE(r.enumerated.has_value());
  CHECK(*r.enumerated == 4);
  CHECK_FALSE(count_report({2, 2, ClassFilter::Alpha}, false).enumerated.has_value());
  CHECK(parse_class_filter("all") == ClassFilter::All);
}
