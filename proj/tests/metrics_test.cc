//
// Copyright 2026 The bias-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//


#include "biaskit/metrics.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "biaskit/winogen.h"
#include "oracles.h"

namespace biaskit {
namespace {

// Mentions named by single letters, each its own one-token span.
MentionKey M(char c) { return {"d", 0, 0, c - 'a', c - 'a'}; }

ClusterSet Set(const std::vector<std::string>& clusters) {
  ClusterSet set;
  for (const std::string& letters : clusters) {
    Cluster c;
    for (char ch : letters) c.push_back(M(ch));
    set.clusters.push_back(c);
  }
  return set;
}

void ExpectTriple(const ScoreTriple& t, double p, double r, double f) {
  EXPECT_NEAR(t.precision, p, 1e-12);
  EXPECT_NEAR(t.recall, r, 1e-12);
  EXPECT_NEAR(t.f1, f, 1e-12);
}

TEST(MetricsTest, MucFixture) {
  ExpectTriple(Muc(Set({"abc", "d"}), Set({"ab", "cd"})), 0.5, 0.5, 0.5);
}

TEST(MetricsTest, CeafFixture) {
  ExpectTriple(CeafE(Set({"ab", "cd"}), Set({"abcd"})), 2.0 / 3.0, 1.0 / 3.0,
               4.0 / 9.0);
}

TEST(MetricsTest, BCubedTwinlessMentionsOverlapNothing) {
  // Key mention c has no response twin; response mention x has no key twin.
  // Recall = (2/3 + 2/3 + 0) / 3, and symmetrically for precision.
  ScoreTriple t = BCubed(Set({"abc"}), Set({"abx"}));
  EXPECT_NEAR(t.recall, 4.0 / 9.0, 1e-12);
  EXPECT_NEAR(t.precision, 4.0 / 9.0, 1e-12);
  // Key {a,b,c} against response {a,b},{c}: (2/3 + 2/3 + 1/3) / 3.
  EXPECT_NEAR(BCubed(Set({"abc"}), Set({"ab", "c"})).recall, 5.0 / 9.0, 1e-12);
  EXPECT_NEAR(BCubed(Set({"abc"}), Set({"ab", "c"})).precision, 1.0, 1e-12);
}

TEST(MetricsTest, IdenticalClusteringsScorePerfectly) {
  ClusterSet s = Set({"abc", "de", "f"});
  MetricSuite all = ScoreAll(s, s);
  ExpectTriple(all.b_cubed, 1, 1, 1);
  ExpectTriple(all.ceaf_e, 1, 1, 1);
  ExpectTriple(all.muc, 1, 1, 1);
  EXPECT_NEAR(all.conll_average, 1.0, 1e-12);
}

TEST(MetricsTest, ZeroDenominatorsScoreZero) {
  ExpectTriple(Muc(Set({"a", "b"}), Set({"a", "b"})), 0, 0, 0);
  ExpectTriple(ScoreAll(ClusterSet{}, ClusterSet{}).b_cubed, 0, 0, 0);
}

TEST(MetricsTest, ValidateClusters) {
  EXPECT_THROW(ValidateClusters(Set({"ab", "bc"})), MetricsError);
  ClusterSet empty_cluster;
  empty_cluster.clusters.push_back({});
  EXPECT_THROW(ValidateClusters(empty_cluster), MetricsError);
  EXPECT_NO_THROW(ValidateClusters(Set({"ab", "c"})));
}

TEST(MetricsTest, ConllAverage) {
  EXPECT_NEAR(ConllAverage({0, 0, 0.6}, {0, 0, 0.7}, {0, 0, 0.8}), 0.7,
              1e-12);
}

TEST(BiasGapTest, RoundingHalfUp) {
  EXPECT_DOUBLE_EQ(RoundHalfUp1(63.35), 63.4);
  EXPECT_DOUBLE_EQ(RoundHalfUp1(62.7), 62.7);
  EXPECT_DOUBLE_EQ(RoundHalfUp1(0.04), 0.0);
  EXPECT_DOUBLE_EQ(RoundHalfUp1(7.85), 7.9);
}

TEST(BiasGapTest, AvgAndDiff) {
  BiasGap g = ComputeBiasGap(76.0, 49.4);
  EXPECT_NEAR(g.avg, 62.7, 1e-9);
  EXPECT_NEAR(g.diff, 26.6, 1e-9);
  BiasGap reversed = ComputeBiasGap(49.4, 76.0);
  EXPECT_NEAR(reversed.diff, 26.6, 1e-9);
}

std::vector<WinoExample> TenExamples() {
  std::vector<WinoExample> out;
  for (int i = 0; i < 10; ++i) {
    WinoExample ex;
    ex.id = "ex" + std::to_string(i);
    ex.twin_id = ex.id;
    ex.tokens = {"The", "nurse", "met", "the", "driver", "and", "she", "left"};
    ex.entity1 = {0, 1};
    ex.entity2 = {3, 4};
    ex.pronoun_index = 6;
    out.push_back(ex);
  }
  return out;
}

TEST(AccuracyTest, SevenOfTen) {
  std::vector<WinoExample> examples = TenExamples();
  ClusterSet response;
  for (int i = 0; i < 10; ++i) {
    const std::string doc = examples[i].id;
    if (i < 7) {
      response.clusters.push_back({{doc, 0, 0, 0, 1}, {doc, 0, 0, 6, 6}});
    } else if (i < 9) {
      response.clusters.push_back({{doc, 0, 0, 3, 4}, {doc, 0, 0, 6, 6}});
    }
  }
  AccuracyResult r = WinoAccuracy(examples, response);
  EXPECT_EQ(r.correct, 7);
  EXPECT_EQ(r.total, 10);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.7);
  EXPECT_EQ(r.missing_pronouns, (std::vector<std::string>{"ex9"}));
}

PerDocScores Scores(const std::vector<double>& values) {
  PerDocScores out;
  for (size_t i = 0; i < values.size(); ++i) {
    out.emplace_back("u" + std::to_string(i), values[i]);
  }
  return out;
}

TEST(RandomizationTest, IdenticalScoresGiveOne) {
  PerDocScores a = Scores({0.1, 0.5, 0.9, 0.3});
  EXPECT_DOUBLE_EQ(ApproxRandomization(a, a, 1000, 1), 1.0);
}

TEST(RandomizationTest, ClearDifferenceIsSignificant) {
  PerDocScores ones = Scores(std::vector<double>(20, 1.0));
  PerDocScores zeros = Scores(std::vector<double>(20, 0.0));
  EXPECT_LT(ApproxRandomization(ones, zeros, 10000, 0), 0.05);
}

TEST(RandomizationTest, MisalignedUnitsThrow) {
  PerDocScores a = Scores({1, 2});
  PerDocScores b = Scores({1, 2, 3});
  EXPECT_THROW(ApproxRandomization(a, b, 10, 0), MetricsError);
  b = {{"u0", 1}, {"other", 2}};
  EXPECT_THROW(ApproxRandomization(a, b, 10, 0), MetricsError);
}

TEST(RandomizationTest, DeterministicForSeed) {
  PerDocScores a = Scores({0.1, 0.7, 0.4, 0.9, 0.3});
  PerDocScores b = Scores({0.2, 0.5, 0.1, 0.6, 0.3});
  EXPECT_EQ(ApproxRandomization(a, b, 2000, 42),
            ApproxRandomization(a, b, 2000, 42));
}

TEST(RandomizationPropertyTest, SymmetricAndScaleInvariant) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> va(8);
    std::vector<double> vb(8);
    for (double& x : va) x = u(rng);
    for (double& x : vb) x = u(rng);
    std::vector<double> sa = va;
    std::vector<double> sb = vb;
    for (double& x : sa) x *= 4.0;
    for (double& x : sb) x *= 4.0;
    const double p = ApproxRandomization(Scores(va), Scores(vb), 2000, trial);
    EXPECT_DOUBLE_EQ(p,
                     ApproxRandomization(Scores(vb), Scores(va), 2000, trial));
    EXPECT_DOUBLE_EQ(p,
                     ApproxRandomization(Scores(sa), Scores(sb), 2000, trial));
  }
}

TEST(RandomizationPropertyTest, CloseToExactEnumeration) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 10; ++n) {
    std::vector<double> va(n);
    std::vector<double> vb(n);
    for (double& x : va) x = u(rng);
    for (double& x : vb) x = u(rng) * 0.8;
    EXPECT_NEAR(ApproxRandomization(Scores(va), Scores(vb), 10000, n),
                testing::ExactPermutationP(va, vb), 0.02)
        << "n=" << n;
  }
}

TEST(MetricsPropertyTest, AgreesWithOracles) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const auto universe = testing::MentionUniverse(1 + trial % 8);
    ClusterSet key = testing::RandomClustering(universe, 0.8, rng);
    ClusterSet response = testing::RandomClustering(universe, 0.8, rng);
    const ScoreTriple muc = Muc(key, response);
    const ScoreTriple b3 = BCubed(key, response);
    const ScoreTriple ceaf = CeafE(key, response);
    const auto omuc = testing::OracleMuc(key, response);
    const auto ob3 = testing::OracleBCubed(key, response);
    const auto oceaf = testing::OracleCeafE(key, response);
    ASSERT_NEAR(muc.recall, omuc.recall, 1e-9);
    ASSERT_NEAR(muc.precision, omuc.precision, 1e-9);
    ASSERT_NEAR(b3.recall, ob3.recall, 1e-9);
    ASSERT_NEAR(b3.precision, ob3.precision, 1e-9);
    ASSERT_NEAR(ceaf.recall, oceaf.recall, 1e-9);
    ASSERT_NEAR(ceaf.precision, oceaf.precision, 1e-9);
  }
}

TEST(MetricsPropertyTest, SwappingKeyAndResponseSwapsPrecisionAndRecall) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto universe = testing::MentionUniverse(6);
    ClusterSet key = testing::RandomClustering(universe, 0.9, rng);
    ClusterSet response = testing::RandomClustering(universe, 0.9, rng);
    const MetricSuite ab = ScoreAll(key, response);
    const MetricSuite ba = ScoreAll(response, key);
    ASSERT_NEAR(ab.muc.precision, ba.muc.recall, 1e-12);
    ASSERT_NEAR(ab.b_cubed.precision, ba.b_cubed.recall, 1e-12);
    ASSERT_NEAR(ab.ceaf_e.precision, ba.ceaf_e.recall, 1e-12);
    ASSERT_NEAR(ab.conll_average, ba.conll_average, 1e-12);
  }
}

TEST(MetricsPropertyTest, ClusterAndMentionOrderDoNotMatter) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto universe = testing::MentionUniverse(7);
    ClusterSet key = testing::RandomClustering(universe, 0.9, rng);
    ClusterSet response = testing::RandomClustering(universe, 0.9, rng);
    const MetricSuite before = ScoreAll(key, response);
    std::shuffle(key.clusters.begin(), key.clusters.end(), rng);
    for (Cluster& c : response.clusters) std::shuffle(c.begin(), c.end(), rng);
    const MetricSuite after = ScoreAll(key, response);
    ASSERT_NEAR(before.conll_average, after.conll_average, 1e-12);
    ASSERT_NEAR(before.ceaf_e.f1, after.ceaf_e.f1, 1e-12);
  }
}

}  // namespace
}  // namespace biaskit
