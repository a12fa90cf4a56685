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

// Named-entity anonymization and dictionary-driven gender swapping.
//
// The augmented corpus holds every original part followed by a copy in
// which person names are replaced with placeholders (E1, E2, ...) and
// gendered words are exchanged for their opposite-gender counterparts.
// Rules are strictly one token to one token, so every coreference span of
// the copy lines up with the original.

#ifndef BIASKIT_GENDER_SWAP_H_
#define BIASKIT_GENDER_SWAP_H_

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biaskit/conll.h"

namespace biaskit {

class SwapError : public std::runtime_error {
 public:
  enum class Kind {
    kMultiTokenRule,
    kIdentityRule,
    kDuplicateRule,
    kAmbiguousRule,
    kMalformedDictionary,
    kMissingNEColumn,
  };

  SwapError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct SwapRule {
  std::string source;
  std::string target;
  std::optional<std::string> pos_constraint;
  int frequency = 1;
  // Emit `target` exactly as written instead of mirroring the source's case
  // (all-caps sources still produce all-caps output).
  bool case_locked = false;

  bool operator==(const SwapRule&) const = default;
};

enum class CasePolicy { kMirrorCase };

struct SwapDictionary {
  std::vector<SwapRule> rules;
  CasePolicy case_policy = CasePolicy::kMirrorCase;
};

// Throws SwapError on multi-token, identity or duplicate (source, POS) rules.
void ValidateDictionary(const SwapDictionary& dict);

// TSV: source, target, POS constraint ("-" for none), frequency, and an
// optional fifth column "case-locked". '#' starts a comment line.
SwapDictionary ParseDictionary(std::string_view text);
std::string FormatDictionary(const SwapDictionary& dict);

// Rules whose exact reverse (same POS constraint) is also present.
SwapDictionary BijectiveSubset(const SwapDictionary& dict);

struct AnonymizationMap {
  // Surface string -> placeholder, with placeholders numbered E1, E2, ... in
  // first-occurrence order.
  std::map<std::string, std::string> placeholders;
  std::vector<std::string> order;

  std::map<std::string, std::string> Inverse() const;
};

struct AnonymizeOptions {
  // Entity types to anonymize. "PER" is accepted as an alias of "PERSON".
  std::set<std::string> entity_types = {"PERSON"};
  bool all_types = false;
};

std::pair<DocumentPart, AnonymizationMap> AnonymizeEntities(
    const DocumentPart& part, const AnonymizeOptions& options = {});

// True for anonymization placeholders ("E" followed by digits); such tokens
// are never swapped.
bool IsPlaceholder(std::string_view word);

DocumentPart SwapGenders(const DocumentPart& part, const SwapDictionary& dict);

struct AugmentOptions {
  bool anonymize = true;
  AnonymizeOptions anonymize_options;
};

inline constexpr std::string_view kSwappedSuffix = "~swapped";

// Originals first, then the swapped image of each part in the same order.
Corpus AugmentCorpus(const Corpus& corpus, const SwapDictionary& dict,
                     const AugmentOptions& options = {});

}  // namespace biaskit

#endif  // BIASKIT_GENDER_SWAP_H_
