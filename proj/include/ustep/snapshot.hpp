#pragma once

#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ustep/errors.hpp"
#include "ustep/miner.hpp"

namespace ustep {

// Snapshot container: a single JSON document tagged with a format name and
// version. Any other format/version, a truncated document, or an
// inconsistent tree is rejected with SnapshotError.
inline constexpr std::string_view kSnapshotFormat = "ustep-snapshot";
inline constexpr int kSnapshotVersion = 1;

namespace detail {

using nlohmann::json;

inline json token_to_json(const Token& t) { return t.is_wildcard() ? json(nullptr) : json(t.text()); }

inline Token token_from_json(const json& j) {
  if (j.is_null()) return Token::wildcard();
  if (!j.is_string() || j.get_ref<const std::string&>().empty()) {
    throw SnapshotError("snapshot: malformed token");
  }
  const auto& s = j.get_ref<const std::string&>();
  for (char c : s) {
    if (is_token_space(c)) throw SnapshotError("snapshot: token contains whitespace");
  }
  return Token(s);
}

inline json node_to_json(const Node& n) {
  json j;
  switch (n.kind) {
    case Node::Kind::root: j["kind"] = "root"; break;
    case Node::Kind::internal: j["kind"] = "internal"; break;
    case Node::Kind::leaf: j["kind"] = "leaf"; break;
  }
  if (const auto* len = std::get_if<std::size_t>(&n.label)) {
    j["label"] = json{{"length", *len}};
  } else if (const auto* tok = std::get_if<Token>(&n.label)) {
    j["label"] = json{{"token", token_to_json(*tok)}};
  }
  if (n.is_internal()) j["pivot"] = n.pivot;
  if (n.is_leaf()) {
    j["templates"] = n.templates;
    j["splittable"] = n.splittable;
  } else {
    json children = json::array();
    for (const auto& [label, child] : n.children) children.push_back(node_to_json(*child));
    j["children"] = std::move(children);
  }
  return j;
}

struct RestoreState {
  const TemplateStore& store;
  std::vector<int> owner_count;  // per template, number of leaves listing it
};

inline std::unique_ptr<Node> node_from_json(const json& j, Node* parent, RestoreState& st) {
  auto n = std::make_unique<Node>();
  n->parent = parent;
  n->depth = parent ? parent->depth + 1 : 0;

  const auto& kind = j.at("kind").get_ref<const std::string&>();
  if (kind == "root") {
    n->kind = Node::Kind::root;
  } else if (kind == "internal") {
    n->kind = Node::Kind::internal;
  } else if (kind == "leaf") {
    n->kind = Node::Kind::leaf;
  } else {
    throw SnapshotError("snapshot: unknown node kind '" + kind + "'");
  }
  if ((parent == nullptr) != n->is_root()) throw SnapshotError("snapshot: misplaced root node");

  if (parent != nullptr) {
    const json& label = j.at("label");
    if (parent->is_root()) {
      n->label = label.at("length").get<std::size_t>();
    } else {
      n->label = token_from_json(label.at("token"));
    }
  }

  if (n->is_internal()) {
    n->pivot = j.at("pivot").get<std::size_t>();
    for (std::size_t p : parent->path_pivots()) {
      if (p == n->pivot) throw SnapshotError("snapshot: repeated pivot on a path");
    }
  }

  if (n->is_leaf()) {
    n->splittable = j.at("splittable").get<bool>();
    for (const auto& id_json : j.at("templates")) {
      auto id = id_json.get<TemplateId>();
      if (id == 0 || id > st.store.size()) throw SnapshotError("snapshot: unknown template id");
      ++st.owner_count[id - 1];
      n->templates.push_back(id);
    }
  } else {
    for (const auto& cj : j.at("children")) {
      auto child = node_from_json(cj, n.get(), st);
      NodeLabel label = child->label;
      if (!n->children.emplace(std::move(label), std::move(child)).second) {
        throw SnapshotError("snapshot: duplicate sibling label");
      }
    }
  }
  return n;
}

// Length each template under `n` must have, checked against its root-child label.
inline void check_leaf_lengths(const Node& n, std::size_t length, const TemplateStore& store) {
  if (n.is_leaf()) {
    for (TemplateId id : n.templates) {
      if (store.at(id).length() != length) throw SnapshotError("snapshot: template length mismatch");
    }
    return;
  }
  if (n.is_internal() && n.pivot >= length) throw SnapshotError("snapshot: pivot out of range");
  for (const auto& [label, child] : n.children) {
    std::size_t len = n.is_root() ? std::get<std::size_t>(label) : length;
    check_leaf_lengths(*child, len, store);
  }
}

}  // namespace detail

inline void write_snapshot(const Miner& miner, std::ostream& out) {
  using nlohmann::json;
  const MinerConfig& cfg = miner.cfg_;
  json doc;
  doc["format"] = kSnapshotFormat;
  doc["version"] = kSnapshotVersion;
  doc["config"] = {{"sigma", cfg.sigma},
                   {"phi", cfg.phi},
                   {"strict_wildcard_sim", cfg.strict_wildcard_sim},
                   {"mask_rules", cfg.mask_rules}};
  const MinerStats& s = miner.stats_;
  doc["stats"] = {{"node_count", s.node_count},
                  {"template_count", s.template_count},
                  {"messages_processed", s.messages_processed},
                  {"splits_performed", s.splits_performed},
                  {"max_depth", s.max_depth}};
  json templates = json::array();
  for (const auto& t : miner.store_) {
    json tokens = json::array();
    for (const auto& tok : t.tokens) tokens.push_back(detail::token_to_json(tok));
    templates.push_back({{"id", t.id}, {"tokens", std::move(tokens)}, {"match_count", t.match_count}});
  }
  doc["templates"] = std::move(templates);
  doc["tree"] = detail::node_to_json(*miner.root_);
  out << doc.dump() << '\n';
  if (!out) throw IoError("failed to write snapshot");
}

inline Miner read_snapshot(std::istream& in) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw SnapshotError(std::string("snapshot: not a valid document: ") + e.what());
  }

  try {
    if (!doc.is_object() || doc.value("format", std::string{}) != kSnapshotFormat) {
      throw SnapshotError("snapshot: missing or wrong format tag");
    }
    if (doc.at("version").get<int>() != kSnapshotVersion) {
      throw SnapshotError("snapshot: unsupported version " + doc.at("version").dump());
    }

    MinerConfig cfg;
    const json& c = doc.at("config");
    cfg.sigma = c.at("sigma").get<double>();
    cfg.phi = c.at("phi").get<std::size_t>();
    cfg.strict_wildcard_sim = c.at("strict_wildcard_sim").get<bool>();
    cfg.mask_rules = c.at("mask_rules").get<std::vector<std::string>>();

    TemplateStore store;
    for (const auto& tj : doc.at("templates")) {
      Template t;
      t.id = tj.at("id").get<TemplateId>();
      if (t.id != store.size() + 1) throw SnapshotError("snapshot: template ids not dense");
      for (const auto& tok : tj.at("tokens")) t.tokens.push_back(detail::token_from_json(tok));
      t.match_count = tj.at("match_count").get<std::uint64_t>();
      if (t.match_count < 1) throw SnapshotError("snapshot: zero match count");
      store.push_restored(std::move(t));
    }

    detail::RestoreState st{store, std::vector<int>(store.size(), 0)};
    auto root = detail::node_from_json(doc.at("tree"), nullptr, st);
    for (int owners : st.owner_count) {
      if (owners != 1) throw SnapshotError("snapshot: template not owned by exactly one leaf");
    }
    detail::check_leaf_lengths(*root, 0, store);

    MinerStats stats;
    const json& s = doc.at("stats");
    stats.node_count = s.at("node_count").get<std::uint64_t>();
    stats.template_count = s.at("template_count").get<std::uint64_t>();
    stats.messages_processed = s.at("messages_processed").get<std::uint64_t>();
    stats.splits_performed = s.at("splits_performed").get<std::uint64_t>();
    stats.max_depth = s.at("max_depth").get<std::uint64_t>();
    if (stats.template_count != store.size()) throw SnapshotError("snapshot: template count mismatch");

    return Miner(std::move(cfg), std::move(store), std::move(root), stats);
  } catch (const json::exception& e) {
    throw SnapshotError(std::string("snapshot: malformed content: ") + e.what());
  } catch (const ConfigError& e) {
    throw SnapshotError(std::string("snapshot: invalid configuration: ") + e.what());
  }
}

inline std::string snapshot_to_string(const Miner& miner) {
  std::ostringstream os;
  write_snapshot(miner, os);
  return os.str();
}

inline Miner snapshot_from_string(const std::string& data) {
  std::istringstream is(data);
  return read_snapshot(is);
}

}  // namespace ustep
