#pragma once

#include <charconv>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "legfill/error.hpp"

namespace legfill::detail {

struct Line {
  std::size_t number;  // 1-based, after '/' expansion
  std::vector<std::string> tokens;
};

// Splits text into non-empty token lines. '/' acts as a line break so fixtures
// can be written inline ("L 1 / R 1"); '#' starts a comment.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> lines;
  std::string current;
  std::size_t number = 0;
  auto flush = [&] {
    ++number;
    std::string body = current.substr(0, current.find('#'));
    std::istringstream in(body);
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    current.clear();
  };
  for (char ch : text) {
    if (ch == '\n' || ch == '/') flush();
    else current += ch;
  }
  flush();
  return lines;
}

inline int parse_int(std::string_view token, std::size_t line) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end)
    throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(token) + "'", line);
  return value;
}

// Parses "key=<int>".
inline int parse_keyed_int(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=')
    throw Error(ErrorCode::Parse, "expected '" + std::string(key) + "=<int>'", line);
  return parse_int(token.substr(key.size() + 1), line);
}

}  // namespace legfill::detail
