#include "dyck/krieger.hpp"

#include "dyck/errors.hpp"

#include <charconv>

namespace dyck {

std::string to_string(Side s) { return s == Side::Alpha ? "alpha" : "beta"; }

Side parse_side(std::string_view text) {
  if (text == "alpha") return Side::Alpha;
  if (text == "beta") return Side::Beta;
  throw ParseError("unknown side '" + std::string(text) + "' (expected alpha or beta)");
}

CollapsedWord collapse(Side side, std::span<const Symbol> w) {
  CollapsedWord z{side, {}};
  z.symbols.reserve(w.size());
  const Bracket kept = side == Side::Alpha ? Bracket::Left : Bracket::Right;
  for (const Symbol s : w) {
    z.symbols.push_back(s.kind == kept ? CollapsedSymbol{false, s.index} : CollapsedSymbol{true, 0});
  }
  return z;
}

long collapsed_drift(const CollapsedWord& z) {
  long drift = 0;
  for (const auto& s : z.symbols) drift += s.wildcard ? -1 : 1;
  return drift;
}

namespace {

/// Height sequence of the periodic extension, H_0 = 0, with `up` marking the
/// symbols that raise the height.
class PeriodicHeights {
 public:
  PeriodicHeights(const CollapsedWord& z, bool kept_raises) : prefix_(z.size() + 1, 0) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      const bool up = z.symbols[i].wildcard != kept_raises;
      prefix_[i + 1] = prefix_[i] + (up ? 1 : -1);
    }
  }

  long at(long j) const {
    const long n = static_cast<long>(prefix_.size()) - 1;
    long q = j / n;
    long r = j % n;
    if (r < 0) {
      r += n;
      --q;
    }
    return q * prefix_.back() + prefix_[static_cast<std::size_t>(r)];
  }

 private:
  std::vector<long> prefix_;
};

}  // namespace

Word decorate_periodic(const CollapsedWord& z) {
  const long n = static_cast<long>(z.size());
  const long drift = collapsed_drift(z);
  if (n == 0) return {};
  if (drift <= 0) {
    throw NoDrift("collapsed word '" + format_collapsed(z) + "' has drift " + std::to_string(drift) +
                  "; its periodic extension is not in the embedded set");
  }
  const long bound = ((n + drift - 1) / drift + 2) * n;
  auto wrap = [n](long j) { return static_cast<std::size_t>(((j % n) + n) % n); };

  Word w;
  w.reserve(z.size());
  if (z.side == Side::Alpha) {
    // H counts a_k as +1 and the wildcard as -1; a wildcard at i is matched by
    // the left bracket at the last j <= i with H_j = H_{i+1}.
    const PeriodicHeights heights(z, true);
    for (long i = 0; i < n; ++i) {
      const auto& s = z.symbols[static_cast<std::size_t>(i)];
      if (!s.wildcard) {
        w.push_back(Symbol::left(s.index));
        continue;
      }
      const long level = heights.at(i + 1);
      long j = i;
      while (heights.at(j) != level) {
        if (--j < i - bound) throw MatchSearchExceeded("no partner for wildcard at position " + std::to_string(i));
      }
      w.push_back(Symbol::right(z.symbols[wrap(j)].index));
    }
  } else {
    // H counts the wildcard as +1 and b_k as -1; a wildcard at i is matched by
    // the right bracket just before the first j > i with H_j = H_i.
    const PeriodicHeights heights(z, false);
    for (long i = 0; i < n; ++i) {
      const auto& s = z.symbols[static_cast<std::size_t>(i)];
      if (!s.wildcard) {
        w.push_back(Symbol::right(s.index));
        continue;
      }
      const long level = heights.at(i);
      long j = i + 1;
      while (heights.at(j) != level) {
        if (++j > i + bound) throw MatchSearchExceeded("no partner for wildcard at position " + std::to_string(i));
      }
      w.push_back(Symbol::left(z.symbols[wrap(j - 1)].index));
    }
  }
  return w;
}

Rational mme_cylinder(const Alphabet& alphabet, Side side, std::span<const Symbol> v) {
  const ReducedForm r = reduce(v);
  if (r.is_zero()) return Rational(0);
  const std::size_t outside = side == Side::Alpha ? r.beta_part().size() : r.alpha_part().size();
  const auto M = static_cast<unsigned>(alphabet.M);
  return Rational(Integer(1), power(M + 1, static_cast<unsigned>(v.size())) * power(M, static_cast<unsigned>(outside)));
}

Rational mixture_cylinder(const Alphabet& alphabet, std::span<const Symbol> v) {
  return (mme_cylinder(alphabet, Side::Alpha, v) + mme_cylinder(alphabet, Side::Beta, v)) / 2;
}

std::string format_collapsed(const CollapsedWord& z) {
  std::string out;
  const char kept = z.side == Side::Alpha ? 'a' : 'b';
  const char* wildcard = z.side == Side::Alpha ? "B" : "A";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i) out += ',';
    const auto& s = z.symbols[i];
    out += s.wildcard ? std::string(wildcard) : kept + std::to_string(s.index);
  }
  return out;
}

CollapsedWord parse_collapsed(std::string_view text, Side side, const Alphabet& alphabet) {
  CollapsedWord z{side, {}};
  if (text.empty()) return z;
  const char kept = side == Side::Alpha ? 'a' : 'b';
  const std::string_view wildcard = side == Side::Alpha ? "B" : "A";
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (token == wildcard) {
      z.symbols.push_back({true, 0});
    } else {
      int k = 0;
      const bool shape_ok = token.size() >= 2 && token[0] == kept;
      const auto [end, ec] =
          shape_ok ? std::from_chars(token.data() + 1, token.data() + token.size(), k) : std::from_chars_result{};
      if (!shape_ok || ec != std::errc() || end != token.data() + token.size() || k < 1 || k > alphabet.M) {
        throw ParseError("bad collapsed token '" + std::string(token) + "' for side " + to_string(side));
      }
      z.symbols.push_back({false, static_cast<std::uint16_t>(k)});
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return z;
}

}  // namespace dyck
