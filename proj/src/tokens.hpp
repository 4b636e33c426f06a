#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "activetime/error.hpp"

namespace activetime::detail {

/// Calls `fn(line_no, tokens)` for every non-blank line, '#' comments removed.
template <typename Fn>
void for_each_directive(std::string_view text, Fn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> tokens;
    std::size_t at = 0;
    while (at < line.size()) {
      while (at < line.size() && std::isspace(static_cast<unsigned char>(line[at]))) ++at;
      const std::size_t start = at;
      while (at < line.size() && !std::isspace(static_cast<unsigned char>(line[at]))) ++at;
      if (at > start) tokens.push_back(line.substr(start, at - start));
    }
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

inline int parse_int(std::string_view token, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) +
                                              ": expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

[[noreturn]] inline void malformed(int line_no, const std::vector<std::string_view>& tokens) {
  std::string text;
  for (auto t : tokens) text += (text.empty() ? "" : " ") + std::string(t);
  throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": '" + text + "'");
}

}  // namespace activetime::detail
