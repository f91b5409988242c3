// Randomized checks of the miner invariants. The acceptance suite repeats
// these at full scale.

#include <random>

#include <gtest/gtest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/tree_checks.hpp"
#include "ustep/eval/accuracy.hpp"
#include "ustep/miner.hpp"

namespace ustep {
namespace {

struct Params {
  double sigma;
  std::size_t phi;
  bool strict;
};

void PrintTo(const Params& p, std::ostream* os) {
  *os << "sigma=" << p.sigma << " phi=" << p.phi << (p.strict ? " strict" : "");
}

class MinerProperties : public ::testing::TestWithParam<Params> {};

TEST_P(MinerProperties, InvariantsHoldOnRandomStreams) {
  const auto [sigma, phi, strict] = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(phi * 1000 + sigma * 100 + strict));
  auto lines = testing::random_lines(rng, 4000, 120);
  MinerConfig cfg;
  cfg.sigma = sigma;
  cfg.phi = phi;
  cfg.strict_wildcard_sim = strict;
  Miner m(cfg);

  std::vector<TokenSeq> shadow;  // last seen tokens of every template
  MinerStats prev = m.stats();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto msg = m.prepare(lines[i]);
    auto r = m.process(msg);
    const auto& w = m.last_work();
    const Template& t = m.template_at(r.template_id);

    ASSERT_LE(w.descent_steps, msg.length() + 1);
    if (!w.unsplittable_leaf) {
      ASSERT_LE(w.sim_evaluations, phi);
    }
    ASSERT_EQ(r.variables.size(), count_wildcards(t.tokens));
    ASSERT_EQ(t.length(), msg.length());
    if (msg.length() > 0) {
      ASSERT_GE(sim_f(msg.tokens, t, false), 0.0);
      ASSERT_LE(sim_f(msg.tokens, t, true), 1.0);
    }

    if (r.created_new) {
      ASSERT_EQ(r.template_id, shadow.size() + 1);
      shadow.push_back(t.tokens);
    } else {
      TokenSeq& old = shadow.at(r.template_id - 1);
      for (std::size_t j = 0; j < old.size(); ++j) {
        ASSERT_TRUE(old[j] == t.tokens[j] || t.tokens[j].is_wildcard()) << "template mutated";
        ASSERT_FALSE(old[j].is_wildcard() && !t.tokens[j].is_wildcard());
      }
      old = t.tokens;
    }

    const MinerStats& s = m.stats();
    ASSERT_GE(s.node_count, prev.node_count);
    ASSERT_GE(s.template_count, prev.template_count);
    ASSERT_EQ(s.messages_processed, prev.messages_processed + 1);
    ASSERT_GE(s.splits_performed, prev.splits_performed);
    ASSERT_GE(s.max_depth, prev.max_depth);
    prev = s;

    if (i % 500 == 0) {
      ASSERT_EQ(testing::check_tree(m).error, "") << "after line " << i;
    }
  }
  EXPECT_EQ(testing::check_tree(m).error, "");
  EXPECT_LE(m.stats().max_depth, 31u);
}

INSTANTIATE_TEST_SUITE_P(Grid, MinerProperties,
                         ::testing::Values(Params{0.3, 2, false}, Params{0.5, 4, false},
                                           Params{0.7, 8, false}, Params{0.5, 16, true},
                                           Params{0.3, 1, true}, Params{0.9, 3, false}),
                         [](const ::testing::TestParamInfo<Params>& info) {
                           const auto& p = info.param;
                           return "sigma" + std::to_string(static_cast<int>(p.sigma * 10)) +
                                  "_phi" + std::to_string(p.phi) + (p.strict ? "_strict" : "");
                         });

TEST(MinerProperties, StateStopsGrowingOnCyclicInput) {
  std::mt19937_64 rng(4);
  auto c = testing::cyclic_corpus(rng, 30, 30'000);
  MinerConfig cfg;
  cfg.phi = 4;
  Miner m(cfg);
  MinerStats at_10k;
  for (std::size_t i = 0; i < c.lines.size(); ++i) {
    m.process(c.lines[i]);
    if (i + 1 == 10'000) at_10k = m.stats();
  }
  EXPECT_EQ(m.stats().node_count, at_10k.node_count);
  EXPECT_EQ(m.stats().template_count, at_10k.template_count);
  EXPECT_EQ(m.stats().messages_processed, 30'000u);
}

TEST(MinerProperties, RecoversGeneratorGrouping) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    std::size_t n_templates = 1 + seed % 5;
    std::size_t length = 2 + seed % 11;
    auto c = testing::oracle_corpus(rng, n_templates, length, 300, seed);
    MinerConfig cfg;
    cfg.sigma = 0.5;
    cfg.phi = 5;
    Miner m(cfg);
    std::vector<TemplateId> ids;
    for (const auto& l : c.lines) ids.push_back(m.process(l).template_id);
    ASSERT_TRUE(testing::same_partition(c.labels, ids)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace ustep
