#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ustep/token.hpp"

namespace ustep {

using TemplateId = std::uint64_t;

/// A discovered message template. The token count never changes; positions
/// only ever move from a concrete token to the wildcard.
struct Template {
  TemplateId id = 0;
  TokenSeq tokens;
  std::uint64_t match_count = 1;

  std::size_t length() const noexcept { return tokens.size(); }
  std::string render() const { return render_tokens(tokens); }
};

/// Fraction of positions at which the message agrees with the template.
///
/// Positions agree when the tokens are equal. Unless `strict` is set, a
/// wildcard in the template also agrees with any message token.
inline double sim_f(std::span<const Token> msg, const Template& tpl, bool strict) {
  if (msg.size() != tpl.tokens.size()) {
    throw std::invalid_argument("sim_f: message and template lengths differ");
  }
  if (msg.empty()) throw std::invalid_argument("sim_f: empty message");
  std::size_t same = 0;
  for (std::size_t j = 0; j < msg.size(); ++j) {
    const Token& t = tpl.tokens[j];
    if ((!strict && t.is_wildcard()) || t == msg[j]) ++same;
  }
  return static_cast<double>(same) / static_cast<double>(msg.size());
}

/// Turns every position where the message differs into a wildcard and counts
/// the match.
inline void update_template(Template& tpl, std::span<const Token> msg) {
  if (msg.size() != tpl.tokens.size()) {
    throw std::invalid_argument("update_template: message and template lengths differ");
  }
  for (std::size_t j = 0; j < msg.size(); ++j) {
    Token& t = tpl.tokens[j];
    if (!t.is_wildcard() && t != msg[j]) t = Token::wildcard();
  }
  ++tpl.match_count;
}

/// Message tokens sitting at the template's wildcard positions, in order.
inline std::vector<std::string> extract_variables(const Template& tpl,
                                                  std::span<const Token> msg) {
  std::vector<std::string> vars;
  for (std::size_t j = 0; j < tpl.tokens.size() && j < msg.size(); ++j) {
    if (tpl.tokens[j].is_wildcard()) vars.emplace_back(msg[j].render());
  }
  return vars;
}

/// Owns every template ever created. Ids are dense, start at 1 and are
/// never reused.
class TemplateStore {
 public:
  TemplateId add(TokenSeq tokens) {
    TemplateId id = templates_.size() + 1;
    templates_.push_back(Template{id, std::move(tokens), 1});
    return id;
  }

  Template& at(TemplateId id) { return templates_.at(id - 1); }
  const Template& at(TemplateId id) const { return templates_.at(id - 1); }

  std::size_t size() const noexcept { return templates_.size(); }
  auto begin() const noexcept { return templates_.begin(); }
  auto end() const noexcept { return templates_.end(); }

  // Used by snapshot restore; ids must already be dense and ordered.
  void push_restored(Template tpl) { templates_.push_back(std::move(tpl)); }

 private:
  std::vector<Template> templates_;
};

}  // namespace ustep
