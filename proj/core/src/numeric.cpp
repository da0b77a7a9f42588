#include "tamegraph/numeric.hpp"

#include <cctype>

namespace tamegraph {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0) return Rational(BigInt(digits));
  BigInt den = 1;
  for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
  return Rational(BigInt(digits), den);
}

}  // namespace tamegraph
