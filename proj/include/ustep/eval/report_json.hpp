#pragma once

#include <cstddef>
#include <ostream>

#include <json.hpp>

#include "ustep/eval/accuracy.hpp"
#include "ustep/eval/robustness.hpp"
#include "ustep/eval/sweep.hpp"
#include "ustep/eval/throughput.hpp"
#include "ustep/miner.hpp"

// JSON views of results and reports. Key order is fixed so output is stable
// byte for byte.
namespace ustep {

using ojson = nlohmann::ordered_json;

inline ojson parse_result_json(std::size_t line_no, const ParseResult& r) {
  return ojson{{"line_no", line_no},
               {"template_id", r.template_id},
               {"template", r.template_text},
               {"variables", r.variables},
               {"created_new", r.created_new}};
}

inline ojson stats_json(const MinerStats& s) {
  return ojson{{"node_count", s.node_count},
               {"template_count", s.template_count},
               {"messages_processed", s.messages_processed},
               {"splits_performed", s.splits_performed},
               {"max_depth", s.max_depth}};
}

inline ojson templates_json(const Miner& miner) {
  ojson out = ojson::array();
  for (const auto& t : miner.templates()) {
    out.push_back(ojson{{"id", t.id}, {"template", t.text}, {"match_count", t.match_count}});
  }
  return out;
}

namespace eval {

inline ojson grouping_report_json(const GroupingReport& r, bool with_groups = true) {
  ojson j{{"dataset", r.dataset_name},
          {"total_messages", r.total_messages},
          {"correct_messages", r.correct_messages},
          {"parsing_accuracy", r.parsing_accuracy},
          {"correct_groups", r.correct_groups},
          {"total_groups", r.total_groups}};
  if (with_groups) {
    ojson groups = ojson::array();
    for (const auto& g : r.groups) {
      groups.push_back(ojson{{"event_id", g.event_id},
                             {"size", g.size},
                             {"predicted_templates", g.predicted},
                             {"correct", g.correct}});
    }
    j["groups"] = std::move(groups);
  }
  return j;
}

inline ojson throughput_report_json(const ThroughputReport& r) {
  ojson chunks = ojson::array();
  for (const auto& c : r.chunks) {
    chunks.push_back(ojson{{"chunk_index", c.index},
                           {"messages", c.messages},
                           {"seconds", c.seconds},
                           {"cumulative_seconds", c.cumulative_seconds},
                           {"template_count", c.template_count}});
  }
  return ojson{{"dataset", r.dataset_name},
               {"total_messages", r.total_messages},
               {"total_seconds", r.total_seconds},
               {"chunk_size", r.chunk_size},
               {"chunks", std::move(chunks)}};
}

inline ojson robustness_report_json(const RobustnessReport& r) {
  return ojson{{"values", r.values}, {"min", r.min},       {"q1", r.q1},
               {"median", r.median}, {"q3", r.q3},         {"max", r.max},
               {"iqr", r.iqr},       {"mean", r.mean}};
}

inline ojson sweep_result_json(const SweepResult& s) {
  ojson entries = ojson::array();
  for (const auto& e : s.entries) {
    entries.push_back(ojson{{"sigma", e.point.sigma},
                            {"phi", e.point.phi},
                            {"parsing_accuracy", e.parsing_accuracy},
                            {"template_count", e.template_count}});
  }
  const auto& b = s.best();
  return ojson{{"best", ojson{{"sigma", b.point.sigma},
                              {"phi", b.point.phi},
                              {"parsing_accuracy", b.parsing_accuracy}}},
               {"results", std::move(entries)}};
}

// Columns: sigma,phi,parsing_accuracy,template_count
inline void write_sweep_csv(std::ostream& out, const SweepResult& s) {
  out << "sigma,phi,parsing_accuracy,template_count\n";
  for (const auto& e : s.entries) {
    out << e.point.sigma << ',' << e.point.phi << ',' << e.parsing_accuracy << ','
        << e.template_count << '\n';
  }
}

}  // namespace eval
}  // namespace ustep
