#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

/// Number of bracket pairs. M = 1 is accepted for experiments; the theory
/// assumes M >= 2.
struct Alphabet {
  int M;

  explicit Alphabet(int bracket_pairs);

  int size() const { return 2 * M; }
};

enum class Bracket : std::uint8_t { Left, Right };

/// Left(k) is alpha_k, Right(k) is beta_k. The defaulted ordering gives the
/// canonical order a1 < ... < aM < b1 < ... < bM.
struct Symbol {
  Bracket kind;
  std::uint16_t index;

  static constexpr Symbol left(int k) { return {Bracket::Left, static_cast<std::uint16_t>(k)}; }
  static constexpr Symbol right(int k) { return {Bracket::Right, static_cast<std::uint16_t>(k)}; }

  constexpr bool is_left() const { return kind == Bracket::Left; }

  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

using Word = std::vector<Symbol>;

/// Dense code in [0, 2M) following the canonical order.
constexpr int symbol_code(Symbol s, int M) { return s.is_left() ? s.index - 1 : M + s.index - 1; }
constexpr Symbol symbol_from_code(int code, int M) {
  return code < M ? Symbol::left(code + 1) : Symbol::right(code - M + 1);
}

/// Normal form in the bracket monoid with zero: either Zero or
/// beta_{j1}...beta_{jp} alpha_{i1}...alpha_{iq}.
class ReducedForm {
 public:
  static ReducedForm zero() { return ReducedForm(true, {}, {}); }
  static ReducedForm normal(std::vector<int> beta_part, std::vector<int> alpha_part) {
    return ReducedForm(false, std::move(beta_part), std::move(alpha_part));
  }

  bool is_zero() const { return zero_; }
  bool is_identity() const { return !zero_ && beta_.empty() && alpha_.empty(); }

  /// Unmatched right brackets, in word order.
  const std::vector<int>& beta_part() const { return beta_; }
  /// Unmatched left brackets, bottom of the stack first.
  const std::vector<int>& alpha_part() const { return alpha_; }

  /// The normal form written out as a word (empty for Zero).
  Word to_word() const;

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;

 private:
  ReducedForm(bool zero, std::vector<int> beta, std::vector<int> alpha)
      : zero_(zero), beta_(std::move(beta)), alpha_(std::move(alpha)) {}

  bool zero_;
  std::vector<int> beta_;
  std::vector<int> alpha_;
};

enum class PeriodClass { Alpha, Beta, Zero };

/// Membership of a periodic sequence in A_alpha, A_beta or A_0.
enum class ASet { Alpha, Beta, Zero };

struct PeriodicCheck {
  bool admissible = false;
  std::optional<PeriodClass> period_class;
};

ReducedForm reduce(std::span<const Symbol> w);

/// Number of left brackets minus number of right brackets.
long h_value(std::span<const Symbol> w);

PeriodClass class_of_height(long h);

/// Decides whether the bi-infinite repetition of w lies in the Dyck shift.
/// The reduced form B.A of w must be nonzero and the junction A.B must cancel
/// without a mismatch. Throws EmptyWord.
PeriodicCheck is_periodic_point(std::span<const Symbol> w);

/// Throws NotPeriodicPoint unless w is a periodic point.
ASet classify_A_set(std::span<const Symbol> w);

/// Reverses w and swaps alpha_k <-> beta_k. Maps Per_alpha,n onto Per_beta,n.
Word mirror(std::span<const Symbol> w);

Word rotate(std::span<const Symbol> w, std::size_t shift);

Word parse_word(std::string_view text, const Alphabet& alphabet);
std::string format_word(std::span<const Symbol> w);
std::string format_symbol(Symbol s);

std::string to_string(PeriodClass c);
std::string to_string(ASet s);
PeriodClass parse_period_class(std::string_view text);

}  // namespace dyck
