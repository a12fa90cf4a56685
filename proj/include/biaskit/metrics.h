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

// Coreference metrics (MUC, B-cubed, CEAF-e and their CoNLL average), the
// pro/anti-stereotype bias gap, challenge-set accuracy and a paired
// approximate randomization test.
//
// Metric definitions follow the reference coreference scorer (v8.01): MUC
// counts links, B-cubed averages per-mention overlap, and CEAF-e scores an
// optimal one-to-one entity alignment under
//
//   phi4(K, R) = 2 |K n R| / (|K| + |R|).
//
// A mention that occurs on only one side overlaps nothing on the other side.
// Any ratio with a zero denominator is 0.

#ifndef BIASKIT_METRICS_H_
#define BIASKIT_METRICS_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biaskit/conll.h"
#include "biaskit/winogen.h"

namespace biaskit {

class MetricsError : public std::runtime_error {
 public:
  enum class Kind { kInvalidClusters, kMisalignedUnits, kDocumentMismatch };

  MetricsError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct MentionKey {
  std::string doc_id;
  int part = 0;
  int sentence = 0;
  int start = 0;
  int end = 0;

  auto operator<=>(const MentionKey&) const = default;
};

using Cluster = std::vector<MentionKey>;

struct ClusterSet {
  std::vector<Cluster> clusters;
};

// Throws MetricsError unless clusters are nonempty and pairwise disjoint.
void ValidateClusters(const ClusterSet& set);

// One cluster per chain of every part, singletons included.
ClusterSet ClustersFromCorpus(const Corpus& corpus);

struct ScoreTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

ScoreTriple MakeTriple(double precision, double recall);

ScoreTriple Muc(const ClusterSet& key, const ClusterSet& response);
ScoreTriple BCubed(const ClusterSet& key, const ClusterSet& response);
ScoreTriple CeafE(const ClusterSet& key, const ClusterSet& response);

double ConllAverage(const ScoreTriple& muc, const ScoreTriple& b_cubed,
                    const ScoreTriple& ceaf_e);

struct MetricSuite {
  ScoreTriple muc;
  ScoreTriple b_cubed;
  ScoreTriple ceaf_e;
  double conll_average = 0.0;
};

MetricSuite ScoreAll(const ClusterSet& key, const ClusterSet& response);

// Half-up rounding to one decimal, as printed in reports. A 1e-9 nudge keeps
// values such as 63.35 from rounding down through binary representation.
double RoundHalfUp1(double value);

struct BiasGap {
  double avg = 0.0;
  double diff = 0.0;
};

// Inputs on the 0-100 reporting scale.
BiasGap ComputeBiasGap(double pro_f1, double anti_f1);

struct AccuracyResult {
  double accuracy = 0.0;
  int correct = 0;
  int total = 0;
  // Examples whose pronoun is in no response mention; scored as incorrect.
  std::vector<std::string> missing_pronouns;
  std::vector<bool> per_example;
};

// Mentions are addressed as emitted by ToConll: doc = example id, part 0,
// sentence 0.
AccuracyResult WinoAccuracy(const std::vector<WinoExample>& examples,
                            const ClusterSet& response);

using PerDocScores = std::vector<std::pair<std::string, double>>;

// Two-sided paired approximate randomization test on the mean difference.
// Each iteration swaps every pair independently with probability 1/2;
// p = (hits + 1) / (iterations + 1). Throws MetricsError when ids differ.
double ApproxRandomization(const PerDocScores& a, const PerDocScores& b,
                           int iterations, uint64_t seed);

struct ConditionScore {
  MetricSuite metrics;
  double f1 = 0.0;  // CoNLL average on the 0-100 scale
  AccuracyResult accuracy;
};

struct TypeBias {
  ConditionScore pro;
  ConditionScore anti;
  BiasGap gap;
  double p_value = 1.0;
};

struct BiasReport {
  MetricSuite overall;
  std::optional<TypeBias> type1;
  std::optional<TypeBias> type2;
};

struct BiasOptions {
  int iterations = 10000;
  uint64_t seed = 0;
};

// Scores the whole response, then each (type, condition) slice of a challenge
// set. The p-value pairs every pro example with its anti twin.
BiasReport ScoreChallenge(const std::vector<WinoExample>& examples,
                          const Corpus& key, const Corpus& response,
                          const BiasOptions& options = {});

}  // namespace biaskit

#endif  // BIASKIT_METRICS_H_
