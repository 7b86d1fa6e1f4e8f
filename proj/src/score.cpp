#include "povote/score.hpp"

#include <charconv>

#include "povote/errors.hpp"

namespace povote {

std::string format_score(const Score& s) {
  return std::to_string(s.numerator()) + "/" + std::to_string(s.denominator());
}

Score parse_score(std::string_view text) {
  const auto parse_int = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw GrammarError("bad rational: '" + std::string(text) + "'");
    return value;
  };
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Score(parse_int(text));
  const std::int64_t num = parse_int(text.substr(0, slash));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0) throw GrammarError("rational denominator must be positive: '" + std::string(text) + "'");
  return Score(num, den);
}

std::int64_t ceil_ratio(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

}  // namespace povote
