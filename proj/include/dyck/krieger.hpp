#pragma once

#include "dyck/dyck_core.hpp"
#include "dyck/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace dyck {

/// Which of the two (M+1)-symbol full shifts a collapsed word lives in.
/// Alpha keeps a1..aM and collapses every right bracket to one wildcard;
/// Beta keeps b1..bM and collapses every left bracket.
enum class Side { Alpha, Beta };

std::string to_string(Side s);
Side parse_side(std::string_view text);

struct CollapsedSymbol {
  bool wildcard;
  /// Bracket index of a kept symbol; unused for the wildcard.
  std::uint16_t index;

  friend bool operator==(const CollapsedSymbol&, const CollapsedSymbol&) = default;
};

struct CollapsedWord {
  Side side;
  std::vector<CollapsedSymbol> symbols;

  std::size_t size() const { return symbols.size(); }

  friend bool operator==(const CollapsedWord&, const CollapsedWord&) = default;
};

CollapsedWord collapse(Side side, std::span<const Symbol> w);

/// Height gained over one period, counted towards the kept symbols: kept
/// symbols +1, wildcards -1. Decoration requires it to be positive.
long collapsed_drift(const CollapsedWord& z);

/// Restores the bracket indices of the wildcards of one period of z^inf.
/// Each wildcard takes the index of its matching partner, found by the level
/// search on the periodic height sequence (looking back on the alpha side,
/// ahead on the beta side). Throws NoDrift or MatchSearchExceeded.
Word decorate_periodic(const CollapsedWord& z);

/// Mass of the position-0 cylinder [v] under the ergodic measure of maximal
/// entropy of the given side. Zero when v reduces to Zero; otherwise
/// (M+1)^-|v| * M^-u where u counts the brackets of v whose partner lies
/// outside v on the decorated side (unmatched rights for Alpha, unmatched
/// lefts for Beta).
Rational mme_cylinder(const Alphabet& alphabet, Side side, std::span<const Symbol> v);

/// Equal-weight mixture of the two measures.
Rational mixture_cylinder(const Alphabet& alphabet, std::span<const Symbol> v);

std::string format_collapsed(const CollapsedWord& z);
CollapsedWord parse_collapsed(std::string_view text, Side side, const Alphabet& alphabet);

}  // namespace dyck
