#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <variant>
#include <vector>

#include "ustep/config.hpp"
#include "ustep/stats.hpp"
#include "ustep/template.hpp"
#include "ustep/token.hpp"

namespace ustep {

/// Root: no label. Children of the root: message token count. Deeper nodes:
/// the token found at the parent's pivot position (possibly the wildcard).
using NodeLabel = std::variant<std::monostate, std::size_t, Token>;

/// A node of the evolving search tree.
///
/// The root routes on token count and internal nodes route on the token at
/// `pivot` (0-based). Leaves hold template ids. A leaf becomes an internal
/// node in place when it splits, so references to it stay valid.
struct Node {
  enum class Kind : std::uint8_t { root, internal, leaf };

  Kind kind = Kind::leaf;
  NodeLabel label;
  std::size_t pivot = 0;
  std::size_t depth = 0;
  // Cleared when a saturated leaf has no position to split on.
  bool splittable = true;
  Node* parent = nullptr;
  std::map<NodeLabel, std::unique_ptr<Node>> children;
  std::vector<TemplateId> templates;

  static std::unique_ptr<Node> make_root() {
    auto n = std::make_unique<Node>();
    n->kind = Kind::root;
    return n;
  }

  bool is_root() const noexcept { return kind == Kind::root; }
  bool is_leaf() const noexcept { return kind == Kind::leaf; }
  bool is_internal() const noexcept { return kind == Kind::internal; }

  Node& add_leaf(NodeLabel child_label) {
    auto child = std::make_unique<Node>();
    child->label = std::move(child_label);
    child->depth = depth + 1;
    child->parent = this;
    Node& ref = *child;
    auto [it, inserted] = children.emplace(ref.label, std::move(child));
    assert(inserted);
    (void)it;
    return ref;
  }

  // Pivot positions of this node and every internal ancestor.
  std::vector<std::size_t> path_pivots() const {
    std::vector<std::size_t> out;
    for (const Node* n = this; n != nullptr; n = n->parent) {
      if (n->is_internal()) out.push_back(n->pivot);
    }
    return out;
  }
};

/// Walks from the root to the leaf responsible for `msg`, creating that leaf
/// when no child carries the routing key.
///
/// At an internal node with no child for the message token, a wildcard-labeled
/// child, if present, is followed instead of growing a new sibling.
inline Node& descend(Node& root, std::span<const Token> msg, MinerStats& stats,
                     WorkCounters& work) {
  assert(root.is_root());
  Node* cur = &root;
  while (!cur->is_leaf()) {
    NodeLabel key = cur->is_root() ? NodeLabel{msg.size()} : NodeLabel{msg[cur->pivot]};
    auto it = cur->children.find(key);
    if (it == cur->children.end() && !cur->is_root()) {
      it = cur->children.find(NodeLabel{Token::wildcard()});
    }
    ++work.descent_steps;
    if (it == cur->children.end()) {
      Node& leaf = cur->add_leaf(std::move(key));
      ++stats.node_count;
      stats.max_depth = std::max<std::uint64_t>(stats.max_depth, leaf.depth);
      return leaf;
    }
    cur = it->second.get();
  }
  return *cur;
}

/// Position with the most distinct tokens across `seqs` (the wildcard counts
/// as one value). Ties go to the lowest position; positions in `excluded` are
/// skipped. Returns nullopt when no position has two or more distinct values.
///
/// `proj` maps an element of `seqs` to its token sequence.
template <std::ranges::forward_range R, typename Proj = std::identity>
std::optional<std::size_t> select_pivot(const R& seqs, Proj proj = {},
                                        std::span<const std::size_t> excluded = {},
                                        std::uint64_t* token_reads = nullptr) {
  auto first = std::ranges::begin(seqs);
  if (first == std::ranges::end(seqs)) return std::nullopt;
  const std::size_t len = std::span<const Token>(std::invoke(proj, *first)).size();

  std::optional<std::size_t> best;
  std::size_t best_diversity = 1;
  std::vector<const Token*> seen;
  for (std::size_t j = 0; j < len; ++j) {
    if (std::ranges::find(excluded, j) != excluded.end()) continue;
    seen.clear();
    for (const auto& s : seqs) {
      std::span<const Token> tokens = std::invoke(proj, s);
      assert(tokens.size() == len);
      const Token& t = tokens[j];
      if (token_reads) ++*token_reads;
      if (std::ranges::none_of(seen, [&](const Token* p) { return *p == t; })) {
        seen.push_back(&t);
      }
    }
    if (seen.size() > best_diversity) {
      best_diversity = seen.size();
      best = j;
    }
  }
  return best;
}

/// Turns `leaf` into an internal node routing on `pivot`, with one child leaf
/// per distinct token at that position. Templates keep their ids and their
/// relative order.
inline Node& split_leaf(Node& leaf, std::size_t pivot, const TemplateStore& store,
                        MinerStats& stats) {
  assert(leaf.is_leaf());
  std::map<Token, std::vector<TemplateId>> groups;
  for (TemplateId id : leaf.templates) {
    groups[store.at(id).tokens.at(pivot)].push_back(id);
  }
  assert(groups.size() >= 2);

  leaf.kind = Node::Kind::internal;
  leaf.pivot = pivot;
  leaf.splittable = true;
  leaf.templates.clear();
  for (auto& [token, ids] : groups) {
    Node& child = leaf.add_leaf(NodeLabel{token});
    child.templates = std::move(ids);
  }
  stats.node_count += groups.size();
  ++stats.splits_performed;
  stats.max_depth = std::max<std::uint64_t>(stats.max_depth, leaf.depth + 1);
  return leaf;
}

struct Assignment {
  TemplateId id = 0;
  bool created_new = false;
};

/// Picks the leaf template most similar to `msg` if its similarity exceeds
/// sigma (ties to the lowest id) and generalises it; otherwise appends a new
/// template equal to the message.
inline Assignment assign_template(Node& leaf, std::span<const Token> msg,
                                  const MinerConfig& cfg, TemplateStore& store,
                                  MinerStats& stats, WorkCounters& work) {
  assert(leaf.is_leaf());
  if (msg.empty()) {
    // Every empty line shares the one empty template of the length-0 leaf.
    if (!leaf.templates.empty()) {
      Template& tpl = store.at(leaf.templates.front());
      ++tpl.match_count;
      return {tpl.id, false};
    }
  } else {
    double best = -1.0;
    TemplateId best_id = 0;
    for (TemplateId id : leaf.templates) {
      ++work.sim_evaluations;
      double s = sim_f(msg, store.at(id), cfg.strict_wildcard_sim);
      if (s > best || (s == best && id < best_id)) {
        best = s;
        best_id = id;
      }
    }
    if (best_id != 0 && best > cfg.sigma) {
      update_template(store.at(best_id), msg);
      return {best_id, false};
    }
  }
  TemplateId id = store.add(TokenSeq(msg.begin(), msg.end()));
  leaf.templates.push_back(id);
  ++stats.template_count;
  return {id, true};
}

/// Splits `leaf` when it holds more than phi templates. A leaf without a
/// usable pivot is flagged unsplittable and left over capacity; it is tried
/// again the next time it gains a template.
inline bool split_if_saturated(Node& leaf, const MinerConfig& cfg, const TemplateStore& store,
                               MinerStats& stats, WorkCounters& work) {
  if (!leaf.is_leaf() || leaf.templates.size() <= cfg.phi) return false;
  const auto excluded = leaf.path_pivots();
  auto pivot = select_pivot(
      leaf.templates,
      [&](TemplateId id) -> std::span<const Token> { return store.at(id).tokens; },
      std::span<const std::size_t>(excluded), &work.pivot_token_reads);
  if (!pivot) {
    leaf.splittable = false;
    return false;
  }
  split_leaf(leaf, *pivot, store, stats);
  work.split = true;
  return true;
}

}  // namespace ustep
