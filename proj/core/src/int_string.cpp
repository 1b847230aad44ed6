#include "qcirc/int_string.hpp"

#include <charconv>

#include "qcirc/error.hpp"

namespace qcirc {

IntString IntString::rotated(std::size_t start) const {
  IntString out;
  const std::size_t n = entries.size();
  out.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.entries.push_back(entries[(start + i) % n]);
  return out;
}

IntString parse_int_string(std::string_view text) {
  IntString out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::parse_error, "bad integer '" + std::string(tok) + "' in string '" + std::string(text) + "'");
    }
    out.entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_int_string(const IntString& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

}  // namespace qcirc
