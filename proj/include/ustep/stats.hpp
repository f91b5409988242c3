#pragma once

#include <cstddef>
#include <cstdint>

namespace ustep {

/// Size of the search tree and progress of a run. Every counter only grows.
struct MinerStats {
  std::uint64_t node_count = 1;  // the root exists from the start
  std::uint64_t template_count = 0;
  std::uint64_t messages_processed = 0;
  std::uint64_t splits_performed = 0;
  std::uint64_t max_depth = 0;  // edges from the root to the deepest node

  friend bool operator==(const MinerStats&, const MinerStats&) = default;
};

/// Work done for a single message. Reset at the start of every message.
struct WorkCounters {
  std::uint64_t descent_steps = 0;  // edges followed or created from the root
  std::uint64_t sim_evaluations = 0;
  std::uint64_t pivot_token_reads = 0;  // tokens inspected while choosing a pivot
  bool split = false;
  // The message reached a leaf already marked unsplittable, which may hold
  // more than phi templates.
  bool unsplittable_leaf = false;
};

}  // namespace ustep
