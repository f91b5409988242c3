#include <random>

#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/hdfs_like.hpp"
#include "support/tree_checks.hpp"
#include "ustep/snapshot.hpp"

namespace ustep {
namespace {

TEST(Snapshot, FreshMinerRoundTrips) {
  Miner fresh;
  Miner restored = snapshot_from_string(snapshot_to_string(fresh));
  EXPECT_EQ(restored.stats().node_count, 1u);
  EXPECT_EQ(restored.process("a b"), Miner{}.process("a b"));
}

TEST(Snapshot, RestoredMinerContinuesIdentically) {
  std::mt19937_64 rng(2021);
  auto lines = testing::hdfs_like_lines(rng, 2000);
  MinerConfig cfg;
  cfg.phi = 4;
  cfg.mask_rules = {"blk_-?[0-9]+", "([0-9]+\\.){3}[0-9]+(:[0-9]+)?"};

  Miner uninterrupted(cfg), first_half(cfg);
  std::vector<TemplateId> expected;
  for (const auto& l : lines) expected.push_back(uninterrupted.process(l.content).template_id);
  for (std::size_t i = 0; i < 1000; ++i) first_half.process(lines[i].content);

  Miner resumed = snapshot_from_string(snapshot_to_string(first_half));
  EXPECT_EQ(resumed.stats(), first_half.stats());
  EXPECT_EQ(testing::check_tree(resumed).error, "");
  for (std::size_t i = 1000; i < lines.size(); ++i) {
    ASSERT_EQ(resumed.process(lines[i].content).template_id, expected[i]) << "line " << i;
  }
  EXPECT_EQ(snapshot_to_string(resumed), snapshot_to_string(uninterrupted));
}

TEST(Snapshot, PreservesWildcardsLiteralStarsAndUnsplittableLeaves) {
  MinerConfig cfg;
  cfg.sigma = 1.0;
  cfg.phi = 1;
  cfg.strict_wildcard_sim = true;
  Miner m(cfg);
  m.process("* <*>");
  m.process("* <*>");
  auto restored = snapshot_from_string(snapshot_to_string(m));
  EXPECT_EQ(restored.template_at(1).tokens, m.template_at(1).tokens);
  EXPECT_FALSE(restored.template_at(1).tokens[0].is_wildcard());
  EXPECT_TRUE(restored.template_at(1).tokens[1].is_wildcard());
  EXPECT_EQ(restored.config().strict_wildcard_sim, true);
  EXPECT_EQ(snapshot_to_string(restored), snapshot_to_string(m));
}

TEST(Snapshot, TruncatedDataIsRejected) {
  Miner m;
  for (int i = 0; i < 50; ++i) m.process("job " + std::to_string(i) + " finished");
  std::string data = snapshot_to_string(m);
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, data.size() / 2, data.size() - 3}) {
    EXPECT_THROW(snapshot_from_string(data.substr(0, cut)), SnapshotError) << "cut " << cut;
  }
}

TEST(Snapshot, WrongFormatOrVersionIsRejected) {
  std::string data = snapshot_to_string(Miner{});
  std::string bumped = data;
  bumped.replace(bumped.find("\"version\":1"), 11, "\"version\":9");
  EXPECT_THROW(snapshot_from_string(bumped), SnapshotError);
  EXPECT_THROW(snapshot_from_string("{\"format\":\"other\",\"version\":1}"), SnapshotError);
  EXPECT_THROW(snapshot_from_string("[]"), SnapshotError);
}

TEST(Snapshot, InconsistentContentIsRejected) {
  Miner m;
  m.process("a b");
  std::string data = snapshot_to_string(m);
  // Leaf refers to a template that does not exist.
  std::string bad_id = data;
  bad_id.replace(bad_id.find("\"templates\":[1]"), 15, "\"templates\":[7]");
  EXPECT_THROW(snapshot_from_string(bad_id), SnapshotError);
  // Invalid sigma in the stored config.
  std::string bad_sigma = data;
  bad_sigma.replace(bad_sigma.find("\"sigma\":0.5"), 11, "\"sigma\":4.5");
  EXPECT_THROW(snapshot_from_string(bad_sigma), SnapshotError);
}

}  // namespace
}  // namespace ustep
