#pragma once

#include <fstream>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "ustep/errors.hpp"
#include "ustep/token.hpp"

namespace ustep {

/// Ordered list of user-supplied regular expressions. Every match is
/// replaced by the wildcard marker before tokenization, so the covered text
/// becomes a variable slot (or part of one token, for mid-token matches).
///
/// Patterns use ECMAScript syntax and are compiled once; a pattern that fails
/// to compile raises ConfigError here, never while parsing.
class MaskRules {
 public:
  MaskRules() = default;

  explicit MaskRules(std::vector<std::string> patterns) : patterns_(std::move(patterns)) {
    compiled_.reserve(patterns_.size());
    for (const auto& p : patterns_) {
      try {
        compiled_.emplace_back(p, std::regex::ECMAScript | std::regex::optimize);
      } catch (const std::regex_error& e) {
        throw ConfigError("invalid mask rule '" + p + "': " + e.what());
      }
    }
  }

  const std::vector<std::string>& patterns() const noexcept { return patterns_; }
  bool empty() const noexcept { return patterns_.empty(); }

  std::string apply(std::string_view line) const {
    std::string out(line);
    for (const auto& re : compiled_) {
      out = std::regex_replace(out, re, std::string(kWildcardMarker));
    }
    return out;
  }

 private:
  std::vector<std::string> patterns_;
  std::vector<std::regex> compiled_;
};

inline std::string preprocess(std::string_view raw, const MaskRules& rules) {
  return rules.apply(raw);
}

namespace detail {
inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_token_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_token_space(s.back())) s.remove_suffix(1);
  return s;
}
}  // namespace detail

/// Parses a mask-rules file: one pattern per line, applied in file order.
/// Blank lines and lines whose first non-blank character is '#' are skipped;
/// surrounding whitespace is trimmed.
inline std::vector<std::string> parse_mask_rules(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  return out;
}

inline std::vector<std::string> load_mask_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mask rules file: " + path);
  auto rules = parse_mask_rules(in);
  // Compile here so a bad pattern is reported at load time.
  MaskRules check(rules);
  return rules;
}

}  // namespace ustep
