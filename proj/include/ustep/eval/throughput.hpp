#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ustep/miner.hpp"

namespace ustep::eval {

struct ChunkTiming {
  std::size_t index = 0;
  std::size_t messages = 0;
  double seconds = 0;
  double cumulative_seconds = 0;
  std::uint64_t template_count = 0;  // after the chunk
};

struct ThroughputReport {
  std::string dataset_name;
  std::size_t total_messages = 0;
  double total_seconds = 0;
  std::size_t chunk_size = 0;
  std::vector<ChunkTiming> chunks;
};

/// Feeds `lines` through `miner` once, timing each run of `chunk_size`
/// messages (masking and tokenization included). The miner keeps its state
/// across chunks. `on_result`, if set, sees every ParseResult in order.
template <std::ranges::input_range R>
ThroughputReport throughput_bench(Miner& miner, const R& lines, std::size_t chunk_size,
                                  std::string dataset_name = {},
                                  const std::function<void(const ParseResult&)>& on_result = {}) {
  if (chunk_size < 1) throw std::invalid_argument("throughput_bench: chunk_size must be >= 1");
  using clock = std::chrono::steady_clock;
  ThroughputReport report;
  report.dataset_name = std::move(dataset_name);
  report.chunk_size = chunk_size;

  ChunkTiming cur;
  auto chunk_start = clock::now();
  auto finish_chunk = [&] {
    cur.seconds = std::chrono::duration<double>(clock::now() - chunk_start).count();
    report.total_seconds += cur.seconds;
    cur.cumulative_seconds = report.total_seconds;
    cur.template_count = miner.stats().template_count;
    report.chunks.push_back(cur);
    cur = ChunkTiming{report.chunks.size()};
  };

  for (const auto& line : lines) {
    ParseResult r = miner.process(std::string_view(line));
    if (on_result) on_result(r);
    ++report.total_messages;
    if (++cur.messages == chunk_size) {
      finish_chunk();
      chunk_start = clock::now();
    }
  }
  if (cur.messages > 0) finish_chunk();
  return report;
}

template <std::ranges::input_range R>
ThroughputReport throughput_bench(const MinerConfig& cfg, const R& lines, std::size_t chunk_size,
                                  std::string dataset_name = {}) {
  Miner miner(cfg);
  return throughput_bench(miner, lines, chunk_size, std::move(dataset_name));
}

// Columns: chunk_index,messages,seconds,cumulative_seconds
inline void write_timing_csv(std::ostream& out, const ThroughputReport& report) {
  out << "chunk_index,messages,seconds,cumulative_seconds\n";
  for (const auto& c : report.chunks) {
    out << c.index << ',' << c.messages << ',' << c.seconds << ',' << c.cumulative_seconds << '\n';
  }
}

}  // namespace ustep::eval
