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

// Mining swap rules from crowd-edited spans. Each annotated pair holds a
// span as it appeared in the corpus and the same span rewritten to refer to
// the opposite gender; rules fall out of the token-level difference.

#ifndef BIASKIT_RULE_MINING_H_
#define BIASKIT_RULE_MINING_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biaskit/gender_swap.h"

namespace biaskit {

class MiningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnnotatedSpanPair {
  std::vector<std::string> original_tokens;
  std::vector<std::string> edited_tokens;
  std::optional<std::vector<std::string>> original_pos;
};

struct WordEdit {
  std::string source;
  std::string target;
  std::optional<std::string> pos;

  bool operator==(const WordEdit&) const = default;
};

struct WordDifference {
  std::vector<WordEdit> edits;
  // Spans of unequal length are not aligned.
  bool skipped = false;
};

WordDifference ComputeWordDifference(const AnnotatedSpanPair& pair);

struct RuleCandidate {
  std::string source;
  std::string target;
  std::optional<std::string> pos;
  int support = 0;
};

// Support counts per (lowercased source, lowercased target), sorted by
// source then target. POS is attached only where the pairs carried tags.
std::vector<RuleCandidate> CountCandidates(
    const std::vector<AnnotatedSpanPair>& pairs);

struct MiningOptions {
  int min_support = 1;
};

// For each source keeps the most frequent target (ties: smallest target).
// "her" is resolved by part of speech instead: her/PRP$ -> his and
// her/PRP -> him, each emitted when observed. Rules are lowercase unless the
// source was only ever seen capitalized (e.g. "Mr."), in which case the
// observed surfaces are kept and the rule is case-locked. Throws MiningError
// on empty input.
SwapDictionary MineRules(const std::vector<AnnotatedSpanPair>& pairs,
                         const MiningOptions& options = {});

// TSV rows: original span, edited span, optional space-separated POS tags.
std::vector<AnnotatedSpanPair> ParseSpanPairs(std::string_view text);

}  // namespace biaskit

#endif  // BIASKIT_RULE_MINING_H_
