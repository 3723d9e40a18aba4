#include "tubular/numeric.hpp"

#include <cctype>

namespace tubular {

namespace {

std::optional<Int> int_parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  if (s[0] == '-') {
    if (s.size() == 1) return std::nullopt;
    i = 1;
  }
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
  if (s.size() - i > 1 && s[i] == '0') return std::nullopt;  // no leading zeros
  return Int(std::string(s));
}

}  // namespace

std::optional<Rat> rat_parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  auto num = int_parse(s.substr(0, slash));
  auto den = int_parse(s.substr(slash + 1));
  if (!num || !den) return std::nullopt;
  if (*den <= 0) return std::nullopt;
  if (gcd(abs(*num), *den) != 1) return std::nullopt;
  return Rat(*num, *den);
}

}  // namespace tubular
