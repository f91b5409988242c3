#pragma once

#include <chrono>
#include <cstddef>
#include <fstream>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ustep/errors.hpp"
#include "ustep/eval/accuracy.hpp"
#include "ustep/eval/dataset.hpp"
#include "ustep/miner.hpp"

namespace ustep::eval {

struct GridPoint {
  double sigma = 0.5;
  std::size_t phi = 8;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct SweepEntry {
  GridPoint point;
  double parsing_accuracy = 0;
  std::size_t template_count = 0;
  double seconds = 0;
};

struct SweepResult {
  std::vector<SweepEntry> entries;  // grid order
  std::size_t best_index = 0;

  const SweepEntry& best() const { return entries.at(best_index); }
};

inline std::vector<GridPoint> make_grid(std::span<const double> sigmas,
                                        std::span<const std::size_t> phis) {
  std::vector<GridPoint> grid;
  for (double s : sigmas) {
    for (std::size_t p : phis) grid.push_back({s, p});
  }
  return grid;
}

/// Grid file: one "sigma,phi" pair per line (comma or whitespace separated).
/// '#' comments, blank lines and a non-numeric header line are skipped.
inline std::vector<GridPoint> parse_grid(std::istream& in) {
  std::vector<GridPoint> grid;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line) {
      if (c == ',' || c == ';') c = ' ';
    }
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first.front() == '#') continue;
    GridPoint p;
    try {
      std::size_t used = 0;
      p.sigma = std::stod(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      if (grid.empty() && line_no == 1) continue;  // header
      throw ConfigError("grid line " + std::to_string(line_no) + ": bad sigma '" + first + "'");
    }
    long long phi = 0;
    std::string rest;
    if (!(fields >> phi) || (fields >> rest)) {
      throw ConfigError("grid line " + std::to_string(line_no) + ": expected 'sigma,phi'");
    }
    if (phi < 1) throw ConfigError("grid line " + std::to_string(line_no) + ": phi must be >= 1");
    p.phi = static_cast<std::size_t>(phi);
    MinerConfig{p.sigma, p.phi, {}, false}.validate();
    grid.push_back(p);
  }
  return grid;
}

inline std::vector<GridPoint> load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grid file: " + path);
  return parse_grid(in);
}

/// Template id assigned to each message of `messages`, in order.
inline std::vector<TemplateId> run_miner(Miner& miner, std::span<const TokenizedMessage> messages) {
  std::vector<TemplateId> ids;
  ids.reserve(messages.size());
  for (const auto& m : messages) ids.push_back(miner.process(m).template_id);
  return ids;
}

inline std::vector<TemplateId> run_miner(const MinerConfig& cfg,
                                         std::span<const LabeledRecord> records) {
  Miner miner(cfg);
  std::vector<TemplateId> ids;
  ids.reserve(records.size());
  for (const auto& r : records) ids.push_back(miner.process(r.content).template_id);
  return ids;
}

/// Runs one fresh miner per grid point over `records` and scores each run.
/// Masking settings come from `base`; sigma and phi from the grid point.
/// Best is the highest accuracy, ties to the earliest grid entry.
inline SweepResult sweep(std::span<const LabeledRecord> records, const MinerConfig& base,
                         std::span<const GridPoint> grid) {
  if (grid.empty()) throw ConfigError("sweep: empty grid");
  // Masking does not depend on sigma/phi, so prepare every message once.
  Miner preparer(base);
  std::vector<TokenizedMessage> messages;
  messages.reserve(records.size());
  for (const auto& r : records) messages.push_back(preparer.prepare(r.content));

  SweepResult result;
  for (const GridPoint& p : grid) {
    MinerConfig cfg = base;
    cfg.sigma = p.sigma;
    cfg.phi = p.phi;
    auto start = std::chrono::steady_clock::now();
    Miner miner(cfg);
    auto ids = run_miner(miner, messages);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    auto report = grouping_accuracy(records, ids);
    result.entries.push_back({p, report.parsing_accuracy, miner.stats().template_count, secs});
    if (report.parsing_accuracy > result.entries[result.best_index].parsing_accuracy) {
      result.best_index = result.entries.size() - 1;
    }
  }
  return result;
}

}  // namespace ustep::eval
