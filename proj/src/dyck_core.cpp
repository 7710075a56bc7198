#include "dyck/dyck_core.hpp"

#include "dyck/errors.hpp"

#include <algorithm>
#include <charconv>

namespace dyck {

Alphabet::Alphabet(int bracket_pairs) : M(bracket_pairs) {
  if (M < 1 || M > 255) throw InvalidArgument("bracket pair count M must be in 1..255, got " + std::to_string(M));
}

Word ReducedForm::to_word() const {
  Word w;
  if (zero_) return w;
  w.reserve(beta_.size() + alpha_.size());
  for (int k : beta_) w.push_back(Symbol::right(k));
  for (int k : alpha_) w.push_back(Symbol::left(k));
  return w;
}

ReducedForm reduce(std::span<const Symbol> w) {
  std::vector<int> beta;
  std::vector<int> stack;
  for (const Symbol s : w) {
    if (s.is_left()) {
      stack.push_back(s.index);
    } else if (stack.empty()) {
      beta.push_back(s.index);
    } else if (stack.back() == s.index) {
      stack.pop_back();
    } else {
      return ReducedForm::zero();
    }
  }
  return ReducedForm::normal(std::move(beta), std::move(stack));
}

long h_value(std::span<const Symbol> w) {
  long h = 0;
  for (const Symbol s : w) h += s.is_left() ? 1 : -1;
  return h;
}

PeriodClass class_of_height(long h) {
  if (h > 0) return PeriodClass::Alpha;
  if (h < 0) return PeriodClass::Beta;
  return PeriodClass::Zero;
}

PeriodicCheck is_periodic_point(std::span<const Symbol> w) {
  if (w.empty()) throw EmptyWord();
  const ReducedForm r = reduce(w);
  if (r.is_zero()) return {};
  const auto& alpha = r.alpha_part();
  const auto& beta = r.beta_part();
  const std::size_t t = std::min(alpha.size(), beta.size());
  for (std::size_t i = 0; i < t; ++i) {
    if (alpha[alpha.size() - 1 - i] != beta[i]) return {};
  }
  const long h = static_cast<long>(alpha.size()) - static_cast<long>(beta.size());
  return {true, class_of_height(h)};
}

ASet classify_A_set(std::span<const Symbol> w) {
  const PeriodicCheck check = is_periodic_point(w);
  if (!check.admissible) throw NotPeriodicPoint("'" + format_word(w) + "' is not a periodic point of the Dyck shift");
  switch (*check.period_class) {
    case PeriodClass::Alpha: return ASet::Alpha;
    case PeriodClass::Beta: return ASet::Beta;
    case PeriodClass::Zero: break;
  }
  return ASet::Zero;
}

Word mirror(std::span<const Symbol> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back(it->is_left() ? Symbol::right(it->index) : Symbol::left(it->index));
  }
  return out;
}

Word rotate(std::span<const Symbol> w, std::size_t shift) {
  Word out(w.begin(), w.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<long>(shift % out.size()), out.end());
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  Word w;
  if (text.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.size() < 2 || (token[0] != 'a' && token[0] != 'b')) {
      throw ParseError("bad symbol token '" + std::string(token) + "' (expected a<k> or b<k>)");
    }
    int k = 0;
    const auto digits = token.substr(1);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || end != digits.data() + digits.size()) {
      throw ParseError("bad symbol index in '" + std::string(token) + "'");
    }
    if (k < 1 || k > alphabet.M) {
      throw ParseError("symbol index out of range 1.." + std::to_string(alphabet.M) + " in '" + std::string(token) + "'");
    }
    w.push_back(token[0] == 'a' ? Symbol::left(k) : Symbol::right(k));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return w;
}

std::string format_symbol(Symbol s) { return (s.is_left() ? "a" : "b") + std::to_string(s.index); }

std::string format_word(std::span<const Symbol> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += format_symbol(w[i]);
  }
  return out;
}

std::string to_string(PeriodClass c) {
  switch (c) {
    case PeriodClass::Alpha: return "alpha";
    case PeriodClass::Beta: return "beta";
    case PeriodClass::Zero: return "zero";
  }
  return {};
}

std::string to_string(ASet s) {
  switch (s) {
    case ASet::Alpha: return "A_alpha";
    case ASet::Beta: return "A_beta";
    case ASet::Zero: return "A_0";
  }
  return {};
}

PeriodClass parse_period_class(std::string_view text) {
  if (text == "alpha") return PeriodClass::Alpha;
  if (text == "beta") return PeriodClass::Beta;
  if (text == "zero") return PeriodClass::Zero;
  throw ParseError("unknown class '" + std::string(text) + "' (expected alpha, beta or zero)");
}

}  // namespace dyck
