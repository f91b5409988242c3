#pragma once

// Synthetic log corpora with known generating templates.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ustep::testing {

// A generating template: nullopt marks a single-token variable slot.
using Slots = std::vector<std::optional<std::string>>;

struct Corpus {
  std::vector<Slots> templates;
  std::vector<std::string> lines;
  std::vector<std::size_t> labels;  // generating template of each line
};

inline std::string fill(const Slots& slots, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> value(0, 99999);
  std::string line;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (j) line.push_back(' ');
    line += slots[j] ? *slots[j] : std::to_string(value(rng));
  }
  return line;
}

/// Corpus that a correct miner must group perfectly at sigma = 0.5 with phi
/// at least the template count: all templates share one length, constants
/// never repeat across templates, and strictly more than half of every
/// template is constant.
inline Corpus oracle_corpus(std::mt19937_64& rng, std::size_t n_templates, std::size_t length,
                            std::size_t n_lines, std::size_t corpus_tag = 0) {
  Corpus c;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t t = 0; t < n_templates; ++t) {
    const std::size_t max_vars = (length - 1) / 2;
    std::uniform_int_distribution<std::size_t> nvars(0, max_vars);
    std::size_t vars = nvars(rng);
    std::vector<std::size_t> pos(length);
    for (std::size_t j = 0; j < length; ++j) pos[j] = j;
    std::shuffle(pos.begin(), pos.end(), rng);
    Slots slots(length);
    for (std::size_t j = 0; j < length; ++j) {
      slots[j] = "k" + std::to_string(corpus_tag) + "t" + std::to_string(t) + "w" + std::to_string(j);
    }
    for (std::size_t k = 0; k < vars; ++k) slots[pos[k]].reset();
    c.templates.push_back(std::move(slots));
  }
  std::uniform_int_distribution<std::size_t> pick(0, n_templates - 1);
  for (std::size_t i = 0; i < n_lines; ++i) {
    std::size_t t = i < n_templates ? i : pick(rng);
    c.lines.push_back(fill(c.templates[t], rng));
    c.labels.push_back(t);
  }
  return c;
}

/// Unstructured corpus for invariant checks: random template shapes with
/// lengths in [min_len, max_len], a small shared vocabulary so templates
/// collide, occasional literal "*" and "<*>" tokens and empty lines.
inline std::vector<std::string> random_lines(std::mt19937_64& rng, std::size_t n_lines,
                                             std::size_t n_templates, std::size_t min_len = 1,
                                             std::size_t max_len = 30) {
  static const char* vocab[] = {"open", "close", "read", "write", "block", "user", "conn",
                                "error", "ok", "from", "to", "size", "*", "<*>", "id"};
  constexpr std::size_t vocab_size = sizeof(vocab) / sizeof(vocab[0]);
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> word(0, vocab_size - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Slots> shapes;
  for (std::size_t t = 0; t < n_templates; ++t) {
    Slots s(len_dist(rng));
    for (auto& slot : s) {
      if (unit(rng) < 0.3) continue;
      slot = unit(rng) < 0.5 ? std::string(vocab[word(rng)]) : "w" + std::to_string(word(rng) * 7 + t % 5);
    }
    shapes.push_back(std::move(s));
  }
  std::uniform_int_distribution<std::size_t> pick(0, n_templates - 1);
  std::uniform_int_distribution<int> small(0, 20);
  std::vector<std::string> lines;
  lines.reserve(n_lines);
  for (std::size_t i = 0; i < n_lines; ++i) {
    if (unit(rng) < 0.002) {
      lines.emplace_back(unit(rng) < 0.5 ? "" : "   ");
      continue;
    }
    const Slots& s = shapes[pick(rng)];
    std::string line;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j) line += unit(rng) < 0.1 ? "  " : " ";
      line += s[j] ? *s[j] : std::to_string(small(rng));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

/// Stream drawn cyclically from `n_templates` distinct templates of length
/// 4-19, each with one or two numeric variable slots.
inline Corpus cyclic_corpus(std::mt19937_64& rng, std::size_t n_templates, std::size_t n_lines) {
  Corpus c;
  std::uniform_int_distribution<std::size_t> len_dist(4, 19);
  for (std::size_t t = 0; t < n_templates; ++t) {
    std::size_t len = len_dist(rng);
    Slots s(len);
    for (std::size_t j = 0; j < len; ++j) s[j] = "tpl" + std::to_string(t) + "_" + std::to_string(j);
    s[1].reset();
    if (len > 6) s[len - 2].reset();
    c.templates.push_back(std::move(s));
  }
  c.lines.reserve(n_lines);
  c.labels.reserve(n_lines);
  for (std::size_t i = 0; i < n_lines; ++i) {
    std::size_t t = i % n_templates;
    c.lines.push_back(fill(c.templates[t], rng));
    c.labels.push_back(t);
  }
  return c;
}

}  // namespace ustep::testing
