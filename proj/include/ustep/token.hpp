#pragma once

#include <cassert>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ustep {

/// How a variable slot is written in text: in masked input lines, in
/// rendered templates, and in snapshot-free outputs.
inline constexpr std::string_view kWildcardMarker = "<*>";

/// One whitespace-free word of a log message, or the wildcard sentinel that
/// marks a variable slot.
///
/// The sentinel is a separate state rather than a reserved spelling, so a
/// literal "*" in a log line is an ordinary token.
class Token {
 public:
  static Token wildcard() {
    Token t;
    t.wildcard_ = true;
    return t;
  }

  explicit Token(std::string text) : text_(std::move(text)) {
    assert(!text_.empty());
  }

  bool is_wildcard() const noexcept { return wildcard_; }

  // Empty for the wildcard.
  const std::string& text() const noexcept { return text_; }

  std::string_view render() const noexcept {
    return wildcard_ ? kWildcardMarker : std::string_view(text_);
  }

  friend bool operator==(const Token&, const Token&) = default;
  friend std::strong_ordering operator<=>(const Token&, const Token&) = default;

 private:
  Token() = default;

  bool wildcard_ = false;
  std::string text_;
};

using TokenSeq = std::vector<Token>;

inline std::string render_tokens(std::span<const Token> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out.append(tokens[i].render());
  }
  return out;
}

inline std::size_t count_wildcards(std::span<const Token> tokens) noexcept {
  std::size_t n = 0;
  for (const auto& t : tokens) n += t.is_wildcard() ? 1 : 0;
  return n;
}

/// A log line split into tokens. `raw` keeps the line as it was received,
/// before masking.
struct TokenizedMessage {
  std::string raw;
  TokenSeq tokens;

  std::size_t length() const noexcept { return tokens.size(); }
};

inline bool is_token_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

/// Splits a (masked) line on runs of whitespace. A token spelled exactly
/// "<*>" becomes the wildcard sentinel.
inline TokenSeq tokenize(std::string_view line) {
  TokenSeq out;
  std::size_t i = 0;
  const std::size_t n = line.size();
  while (i < n) {
    while (i < n && is_token_space(line[i])) ++i;
    if (i == n) break;
    std::size_t j = i;
    while (j < n && !is_token_space(line[j])) ++j;
    std::string_view word = line.substr(i, j - i);
    if (word == kWildcardMarker) {
      out.push_back(Token::wildcard());
    } else {
      out.emplace_back(std::string(word));
    }
    i = j;
  }
  return out;
}

inline TokenizedMessage tokenize_message(std::string raw, std::string_view masked) {
  TokenizedMessage msg;
  msg.tokens = tokenize(masked);
  msg.raw = std::move(raw);
  return msg;
}

}  // namespace ustep
