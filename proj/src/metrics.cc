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

#include <cmath>
#include <map>
#include <random>
#include <set>

#include "biaskit/assignment.h"

namespace biaskit {
namespace {

using MentionIndex = std::map<MentionKey, int>;

MentionIndex IndexMentions(const ClusterSet& set) {
  MentionIndex index;
  for (size_t c = 0; c < set.clusters.size(); ++c) {
    for (const MentionKey& m : set.clusters[c]) {
      index.emplace(m, static_cast<int>(c));
    }
  }
  return index;
}

// Sum over clusters of |K| - |partition of K by `other`|, and of |K| - 1.
std::pair<double, double> MucLinks(const ClusterSet& clusters,
                                   const ClusterSet& other) {
  const MentionIndex other_index = IndexMentions(other);
  double numerator = 0.0;
  double denominator = 0.0;
  for (const Cluster& cluster : clusters.clusters) {
    std::set<int> hit;
    int unmatched = 0;
    for (const MentionKey& m : cluster) {
      auto it = other_index.find(m);
      if (it == other_index.end()) {
        ++unmatched;
      } else {
        hit.insert(it->second);
      }
    }
    const double size = static_cast<double>(cluster.size());
    numerator += size - static_cast<double>(hit.size() + unmatched);
    denominator += size - 1.0;
  }
  return {numerator, denominator};
}

// Sum over clusters K, mentions m in K of |K n other(m)| / |K|, and the
// mention count.
std::pair<double, double> BCubedSums(const ClusterSet& clusters,
                                     const ClusterSet& other) {
  const MentionIndex other_index = IndexMentions(other);
  double numerator = 0.0;
  double mentions = 0.0;
  for (const Cluster& cluster : clusters.clusters) {
    std::map<int, int> overlap;
    for (const MentionKey& m : cluster) {
      auto it = other_index.find(m);
      if (it != other_index.end()) ++overlap[it->second];
    }
    double sum_sq = 0.0;
    for (const auto& [c, n] : overlap) sum_sq += static_cast<double>(n) * n;
    numerator += sum_sq / static_cast<double>(cluster.size());
    mentions += static_cast<double>(cluster.size());
  }
  return {numerator, mentions};
}

double Ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

ClusterSet Restrict(const ClusterSet& set, const std::set<std::string>& docs) {
  ClusterSet out;
  for (const Cluster& cluster : set.clusters) {
    if (!cluster.empty() && docs.count(cluster.front().doc_id)) {
      out.clusters.push_back(cluster);
    }
  }
  return out;
}

}  // namespace

void ValidateClusters(const ClusterSet& set) {
  std::set<MentionKey> seen;
  for (const Cluster& cluster : set.clusters) {
    if (cluster.empty()) {
      throw MetricsError(MetricsError::Kind::kInvalidClusters,
                         "empty cluster");
    }
    for (const MentionKey& m : cluster) {
      if (!seen.insert(m).second) {
        throw MetricsError(
            MetricsError::Kind::kInvalidClusters,
            "mention (" + m.doc_id + ", part " + std::to_string(m.part) +
                ", sentence " + std::to_string(m.sentence) + ", " +
                std::to_string(m.start) + "-" + std::to_string(m.end) +
                ") appears in more than one cluster");
      }
    }
  }
}

ClusterSet ClustersFromCorpus(const Corpus& corpus) {
  ClusterSet set;
  for (const DocumentPart& part : corpus.parts) {
    for (const Chain& chain : ExtractChains(part)) {
      Cluster cluster;
      cluster.reserve(chain.mentions.size());
      for (const Mention& m : chain.mentions) {
        cluster.push_back({part.doc_id, part.part_number, m.sentence_index,
                           m.start_token, m.end_token});
      }
      set.clusters.push_back(std::move(cluster));
    }
  }
  ValidateClusters(set);
  return set;
}

ScoreTriple MakeTriple(double precision, double recall) {
  const double sum = precision + recall;
  return {precision, recall, sum > 0.0 ? 2.0 * precision * recall / sum : 0.0};
}

ScoreTriple Muc(const ClusterSet& key, const ClusterSet& response) {
  const auto [r_num, r_den] = MucLinks(key, response);
  const auto [p_num, p_den] = MucLinks(response, key);
  return MakeTriple(Ratio(p_num, p_den), Ratio(r_num, r_den));
}

ScoreTriple BCubed(const ClusterSet& key, const ClusterSet& response) {
  const auto [r_num, r_den] = BCubedSums(key, response);
  const auto [p_num, p_den] = BCubedSums(response, key);
  return MakeTriple(Ratio(p_num, p_den), Ratio(r_num, r_den));
}

ScoreTriple CeafE(const ClusterSet& key, const ClusterSet& response) {
  const int rows = static_cast<int>(key.clusters.size());
  const int cols = static_cast<int>(response.clusters.size());
  SimilarityMatrix phi{rows, cols,
                       std::vector<double>(static_cast<size_t>(rows) * cols)};
  const MentionIndex response_index = IndexMentions(response);
  for (int r = 0; r < rows; ++r) {
    std::map<int, int> overlap;
    for (const MentionKey& m : key.clusters[r]) {
      auto it = response_index.find(m);
      if (it != response_index.end()) ++overlap[it->second];
    }
    const double key_size = static_cast<double>(key.clusters[r].size());
    for (const auto& [c, n] : overlap) {
      const double response_size =
          static_cast<double>(response.clusters[c].size());
      phi.values[static_cast<size_t>(r) * cols + c] =
          2.0 * n / (key_size + response_size);
    }
  }
  const double total = MaxWeightAssignment(phi).total;
  return MakeTriple(Ratio(total, cols), Ratio(total, rows));
}

double ConllAverage(const ScoreTriple& muc, const ScoreTriple& b_cubed,
                    const ScoreTriple& ceaf_e) {
  return (muc.f1 + b_cubed.f1 + ceaf_e.f1) / 3.0;
}

MetricSuite ScoreAll(const ClusterSet& key, const ClusterSet& response) {
  MetricSuite suite;
  suite.muc = Muc(key, response);
  suite.b_cubed = BCubed(key, response);
  suite.ceaf_e = CeafE(key, response);
  suite.conll_average = ConllAverage(suite.muc, suite.b_cubed, suite.ceaf_e);
  return suite;
}

double RoundHalfUp1(double value) {
  return std::floor(value * 10.0 + 0.5 + 1e-9) / 10.0;
}

BiasGap ComputeBiasGap(double pro_f1, double anti_f1) {
  return {(pro_f1 + anti_f1) / 2.0, std::fabs(pro_f1 - anti_f1)};
}

AccuracyResult WinoAccuracy(const std::vector<WinoExample>& examples,
                            const ClusterSet& response) {
  const MentionIndex index = IndexMentions(response);
  AccuracyResult result;
  for (const WinoExample& ex : examples) {
    const MentionKey pronoun{ex.id, 0, 0, ex.pronoun_index, ex.pronoun_index};
    const MentionKey gold{ex.id, 0, 0, ex.gold_span().start,
                          ex.gold_span().end};
    auto p = index.find(pronoun);
    bool ok = false;
    if (p == index.end()) {
      result.missing_pronouns.push_back(ex.id);
    } else {
      auto g = index.find(gold);
      ok = g != index.end() && g->second == p->second;
    }
    result.per_example.push_back(ok);
    result.correct += ok ? 1 : 0;
    ++result.total;
  }
  result.accuracy = Ratio(result.correct, result.total);
  return result;
}

double ApproxRandomization(const PerDocScores& a, const PerDocScores& b,
                           int iterations, uint64_t seed) {
  if (a.size() != b.size()) {
    throw MetricsError(MetricsError::Kind::kMisalignedUnits,
                       "score lists have different lengths (" +
                           std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()) + ")");
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) {
      throw MetricsError(MetricsError::Kind::kMisalignedUnits,
                         "unit " + std::to_string(i) + " is '" + a[i].first +
                             "' in one list and '" + b[i].first +
                             "' in the other");
    }
  }
  if (iterations < 1) iterations = 1;
  const size_t n = a.size();
  std::vector<double> diff(n);
  double observed = 0.0;
  for (size_t i = 0; i < n; ++i) {
    diff[i] = a[i].second - b[i].second;
    observed += diff[i];
  }
  observed = std::fabs(observed);
  const double slack = 1e-12 * std::max(1.0, observed);

  std::mt19937_64 rng(seed);
  int hits = 0;
  for (int it = 0; it < iterations; ++it) {
    double sum = 0.0;
    uint64_t bits = 0;
    for (size_t i = 0; i < n; ++i) {
      if (i % 64 == 0) bits = rng();
      sum += (bits & 1) ? -diff[i] : diff[i];
      bits >>= 1;
    }
    if (std::fabs(sum) >= observed - slack) ++hits;
  }
  return (hits + 1.0) / (iterations + 1.0);
}

BiasReport ScoreChallenge(const std::vector<WinoExample>& examples,
                          const Corpus& key, const Corpus& response,
                          const BiasOptions& options) {
  const ClusterSet key_clusters = ClustersFromCorpus(key);
  const ClusterSet response_clusters = ClustersFromCorpus(response);
  std::set<std::string> key_docs;
  for (const DocumentPart& part : key.parts) key_docs.insert(part.doc_id);

  BiasReport report;
  report.overall = ScoreAll(key_clusters, response_clusters);

  for (TemplateKind kind : {TemplateKind::kType1, TemplateKind::kType2}) {
    std::vector<WinoExample> pro;
    std::vector<WinoExample> anti;
    for (const WinoExample& ex : examples) {
      if (ex.kind != kind) continue;
      if (!key_docs.count(ex.id)) {
        throw MetricsError(MetricsError::Kind::kDocumentMismatch,
                           "challenge example " + ex.id +
                               " has no document in the key file");
      }
      (ex.condition == Condition::kPro ? pro : anti).push_back(ex);
    }
    if (pro.empty() && anti.empty()) continue;

    auto score_slice = [&](const std::vector<WinoExample>& slice) {
      std::set<std::string> docs;
      for (const WinoExample& ex : slice) docs.insert(ex.id);
      ConditionScore score;
      score.metrics = ScoreAll(Restrict(key_clusters, docs),
                               Restrict(response_clusters, docs));
      score.f1 = 100.0 * score.metrics.conll_average;
      score.accuracy = WinoAccuracy(slice, response_clusters);
      return score;
    };
    TypeBias bias;
    bias.pro = score_slice(pro);
    bias.anti = score_slice(anti);
    bias.gap = ComputeBiasGap(bias.pro.f1, bias.anti.f1);

    std::map<std::string, double> anti_by_twin;
    for (size_t i = 0; i < anti.size(); ++i) {
      anti_by_twin[anti[i].twin_id] =
          bias.anti.accuracy.per_example[i] ? 1.0 : 0.0;
    }
    PerDocScores pro_units;
    PerDocScores anti_units;
    for (size_t i = 0; i < pro.size(); ++i) {
      auto it = anti_by_twin.find(pro[i].twin_id);
      if (it == anti_by_twin.end()) continue;
      pro_units.emplace_back(pro[i].twin_id,
                             bias.pro.accuracy.per_example[i] ? 1.0 : 0.0);
      anti_units.emplace_back(pro[i].twin_id, it->second);
    }
    bias.p_value = ApproxRandomization(pro_units, anti_units,
                                       options.iterations, options.seed);
    (kind == TemplateKind::kType1 ? report.type1 : report.type2) = bias;
  }
  return report;
}

}  // namespace biaskit
