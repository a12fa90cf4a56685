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

// Challenge-set generation for occupation/pronoun coreference tests.
//
// Two sentence schemas are supported:
//
//   Type 1: [entity1] [interaction] [entity2] [conjunction] [pronoun]
//           [circumstances]
//   Type 2: [entity1] [interaction] [entity2] and then [interaction2]
//           [pronoun] for [circumstances]
//
// Each template is instantiated for every occupation pair in both orders and
// with both pronoun genders. The two gender variants of one instantiation are
// twins: they share every token except the pronoun and carry opposite
// pro/anti labels.

#ifndef BIASKIT_WINOGEN_H_
#define BIASKIT_WINOGEN_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biaskit/conll.h"

namespace biaskit {

class WinogenError : public std::runtime_error {
 public:
  enum class Kind {
    kDuplicateOccupation,
    kPercentOutOfRange,
    kExactly50Percent,
    kMalformedOccupations,
    kMalformedTemplates,
    kInsufficientOccupations,
    kOddTwinCount,
    kMalformedExample,
  };

  WinogenError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct Occupation {
  std::string name;
  int percent_female = 0;

  bool operator==(const Occupation&) const = default;
};

enum class Gender { kMale, kFemale };
enum class Condition { kPro, kAnti };
enum class TemplateKind { kType1, kType2 };
enum class Referent { kEntity1, kEntity2 };
enum class PronounCase { kNominative, kAccusative, kPossessive };

const char* ToString(Gender g);
const char* ToString(Condition c);
const char* ToString(TemplateKind k);
const char* ToString(Referent r);
const char* ToString(PronounCase c);

Gender Opposite(Gender g);

// he/she, him/her, his/her.
std::string PronounFor(Gender gender, PronounCase pronoun_case);

struct Template {
  TemplateKind kind = TemplateKind::kType1;
  std::string interaction;
  std::string conjunction;   // Type 1 only
  std::string interaction2;  // Type 2 only
  std::string circumstances;
  Referent gold_referent = Referent::kEntity1;
  PronounCase pronoun_case = PronounCase::kNominative;
};

struct TokenSpan {
  int start = 0;
  int end = 0;  // inclusive

  bool operator==(const TokenSpan&) const = default;
};

struct WinoExample {
  std::string id;
  std::string twin_id;
  std::vector<std::string> tokens;
  TokenSpan entity1;
  TokenSpan entity2;
  int pronoun_index = 0;
  Referent gold = Referent::kEntity1;
  Occupation gold_occupation;
  Occupation other_occupation;
  Gender pronoun_gender = Gender::kMale;
  PronounCase pronoun_case = PronounCase::kNominative;
  Condition condition = Condition::kPro;
  TemplateKind kind = TemplateKind::kType1;

  const TokenSpan& gold_span() const {
    return gold == Referent::kEntity1 ? entity1 : entity2;
  }

  bool operator==(const WinoExample&) const = default;
};

// CSV "name,percent_female"; an optional header row is skipped.
std::vector<Occupation> ParseOccupations(std::string_view text);

Condition Classify(const Occupation& occupation, Gender pronoun_gender);

// Template file: blocks introduced by "[type1]" or "[type2]" followed by
// "key = value" lines. Keys: interaction, conjunction (type1), interaction2
// (type2), circumstances, gold (entity1|entity2), case
// (nominative|accusative|possessive). '#' starts a comment.
std::vector<Template> ParseTemplates(std::string_view text);

enum class PairingStrategy {
  // Male-dominated occupations matched one-to-one with female-dominated ones
  // after a seeded shuffle. Needs equally many of each.
  kCrossGender,
  // Seeded cyclic order, each occupation paired with its successor. Works for
  // any n >= 2 but does not force stereotype contrast.
  kRing,
};

std::vector<std::pair<Occupation, Occupation>> PairOccupations(
    const std::vector<Occupation>& occupations, PairingStrategy strategy,
    uint64_t seed);

// Produces 4 * |templates| * |pairs| examples: each pair in both orders and
// each order with both pronoun genders.
std::vector<WinoExample> Generate(const std::vector<Template>& templates,
                                  const std::vector<Occupation>& occupations,
                                  PairingStrategy strategy, uint64_t seed);

struct DevTestSplit {
  std::vector<WinoExample> dev;
  std::vector<WinoExample> test;
};

// Twin-atomic split into equal halves, stratified by gold occupation and
// template kind.
DevTestSplit SplitDevTest(const std::vector<WinoExample>& examples,
                          uint64_t seed);

// One document per example; gold chain 0 = gold entity + pronoun, chain 1 =
// the other entity as a singleton.
Corpus ToConll(const std::vector<WinoExample>& examples);
std::string ToJsonl(const std::vector<WinoExample>& examples);
std::vector<WinoExample> ParseJsonl(std::string_view text);

}  // namespace biaskit

#endif  // BIASKIT_WINOGEN_H_
