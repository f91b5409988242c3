#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ustep/config.hpp"
#include "ustep/preprocess.hpp"
#include "ustep/stats.hpp"
#include "ustep/template.hpp"
#include "ustep/token.hpp"
#include "ustep/tree.hpp"

namespace ustep {

/// Outcome of parsing one line: which template it belongs to and the values
/// found at that template's variable slots.
struct ParseResult {
  TemplateId template_id = 0;
  std::string template_text;
  std::vector<std::string> variables;
  bool created_new = false;

  friend bool operator==(const ParseResult&, const ParseResult&) = default;
};

struct TemplateInfo {
  TemplateId id = 0;
  std::string text;
  std::uint64_t match_count = 0;
};

/// Streaming template miner over an evolving search tree.
///
/// Single writer: calls to process() must be serialised by the caller.
/// Distinct instances share nothing and may run on different threads.
class Miner {
 public:
  explicit Miner(MinerConfig cfg = {})
      : cfg_(validated(std::move(cfg))), masks_(cfg_.mask_rules), root_(Node::make_root()) {}

  Miner(Miner&&) = default;
  Miner& operator=(Miner&&) = default;

  // Masks and tokenizes a raw line.
  TokenizedMessage prepare(std::string_view line) const {
    if (masks_.empty()) return tokenize_message(std::string(line), line);
    return tokenize_message(std::string(line), masks_.apply(line));
  }

  ParseResult process(std::string_view line) { return process(prepare(line)); }

  ParseResult process(const TokenizedMessage& msg) {
    work_ = {};
    Node& leaf = descend(*root_, msg.tokens, stats_, work_);
    work_.unsplittable_leaf = !leaf.splittable;
    Assignment a = assign_template(leaf, msg.tokens, cfg_, store_, stats_, work_);
    if (a.created_new) split_if_saturated(leaf, cfg_, store_, stats_, work_);
    ++stats_.messages_processed;

    const Template& tpl = store_.at(a.id);
    return ParseResult{a.id, tpl.render(), extract_variables(tpl, msg.tokens), a.created_new};
  }

  const MinerConfig& config() const noexcept { return cfg_; }
  const MinerStats& stats() const noexcept { return stats_; }
  // Counters for the most recent process() call.
  const WorkCounters& last_work() const noexcept { return work_; }
  const Node& root() const noexcept { return *root_; }
  const TemplateStore& store() const noexcept { return store_; }
  const Template& template_at(TemplateId id) const { return store_.at(id); }

  std::vector<TemplateInfo> templates() const {
    std::vector<TemplateInfo> out;
    out.reserve(store_.size());
    for (const auto& t : store_) out.push_back({t.id, t.render(), t.match_count});
    return out;
  }

  // Defined in snapshot.hpp.
  friend void write_snapshot(const Miner& miner, std::ostream& out);
  friend Miner read_snapshot(std::istream& in);

 private:
  Miner(MinerConfig cfg, TemplateStore store, std::unique_ptr<Node> root, MinerStats stats)
      : cfg_(validated(std::move(cfg))),
        masks_(cfg_.mask_rules),
        store_(std::move(store)),
        root_(std::move(root)),
        stats_(stats) {}

  static MinerConfig validated(MinerConfig cfg) {
    cfg.validate();
    return cfg;
  }

  MinerConfig cfg_;
  MaskRules masks_;
  TemplateStore store_;
  std::unique_ptr<Node> root_;
  MinerStats stats_;
  WorkCounters work_;
};

}  // namespace ustep
