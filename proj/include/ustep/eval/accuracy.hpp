#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ustep/eval/dataset.hpp"
#include "ustep/template.hpp"

namespace ustep::eval {

struct GroupDetail {
  std::string event_id;
  std::size_t size = 0;
  std::vector<TemplateId> predicted;  // distinct ids, ascending
  bool correct = false;
};

struct GroupingReport {
  std::string dataset_name;
  std::size_t total_messages = 0;
  std::size_t correct_messages = 0;
  double parsing_accuracy = 0.0;
  std::size_t correct_groups = 0;
  std::size_t total_groups = 0;
  std::vector<GroupDetail> groups;  // in order of first appearance
};

/// Group accuracy. A ground-truth group counts as correct when all of its
/// messages share one predicted id and no message outside the group carries
/// that id. The score is the share of messages in correct groups, and 0 for
/// an empty input.
inline GroupingReport grouping_accuracy(std::span<const std::string> truth,
                                        std::span<const TemplateId> predicted) {
  if (truth.size() != predicted.size()) {
    throw std::invalid_argument("grouping_accuracy: " + std::to_string(truth.size()) +
                                " labels but " + std::to_string(predicted.size()) +
                                " predictions");
  }
  GroupingReport report;
  report.total_messages = truth.size();

  std::unordered_map<TemplateId, std::size_t> predicted_sizes;
  for (TemplateId id : predicted) ++predicted_sizes[id];

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    auto [it, inserted] = index.try_emplace(truth[i], report.groups.size());
    if (inserted) report.groups.push_back(GroupDetail{truth[i], 0, {}, false});
    GroupDetail& g = report.groups[it->second];
    ++g.size;
    g.predicted.push_back(predicted[i]);
  }

  for (auto& g : report.groups) {
    std::sort(g.predicted.begin(), g.predicted.end());
    g.predicted.erase(std::unique(g.predicted.begin(), g.predicted.end()), g.predicted.end());
    g.correct = g.predicted.size() == 1 && predicted_sizes[g.predicted.front()] == g.size;
    if (g.correct) {
      ++report.correct_groups;
      report.correct_messages += g.size;
    }
  }
  report.total_groups = report.groups.size();
  if (report.total_messages > 0) {
    report.parsing_accuracy = static_cast<double>(report.correct_messages) /
                              static_cast<double>(report.total_messages);
  }
  return report;
}

inline GroupingReport grouping_accuracy(std::span<const LabeledRecord> records,
                                        std::span<const TemplateId> predicted) {
  std::vector<std::string> truth;
  truth.reserve(records.size());
  for (const auto& r : records) truth.push_back(r.event_id);
  return grouping_accuracy(std::span<const std::string>(truth), predicted);
}

}  // namespace ustep::eval
