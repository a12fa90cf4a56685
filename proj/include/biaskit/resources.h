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

// Gendered auxiliary resources and corpus gender statistics.

#ifndef BIASKIT_RESOURCES_H_
#define BIASKIT_RESOURCES_H_

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biaskit/conll.h"

namespace biaskit {

class ResourceError : public std::runtime_error {
 public:
  enum class Kind { kMalformedGenderList, kDuplicatePhrase, kEmptyGazetteer };

  ResourceError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct GenderCounts {
  int64_t male = 0;
  int64_t female = 0;
  int64_t neutral = 0;
  int64_t plural = 0;

  bool operator==(const GenderCounts&) const = default;
};

struct GenderCountEntry {
  std::string phrase;
  GenderCounts counts;

  bool operator==(const GenderCountEntry&) const = default;
};

// Entries keep file order; phrases are unique after ASCII case folding.
struct GenderCountList {
  std::vector<GenderCountEntry> entries;

  bool operator==(const GenderCountList&) const = default;
};

// "phrase TAB male female neutral plural".
GenderCountList ParseGenderList(std::string_view text);
std::string FormatGenderList(const GenderCountList& list);

// male' = female' = round_half_up((male + female) / 2); other columns kept.
GenderCountList BalanceGenderList(const GenderCountList& list);

struct GenderStats {
  int64_t male_chains = 0;
  int64_t female_chains = 0;
  int64_t male_with_job = 0;
  int64_t female_with_job = 0;

  int64_t gendered_total() const { return male_chains + female_chains; }
  double male_fraction() const;
  double male_jobtitle_rate() const;
  double female_jobtitle_rate() const;
};

struct CorpusBiasStats {
  GenderStats totals;
  // Chains with as many male as female pronoun heads.
  int64_t tied_chains = 0;
  // Keyed by the first path component of the document id ("bc", "nw", ...).
  std::map<std::string, GenderStats> per_genre;
  // False when no chain was gendered; all fractions then read 0.
  bool has_gendered_chains = false;
};

// One phrase per line, matched case-insensitively as a token sequence.
std::vector<std::vector<std::string>> ParseGazetteer(std::string_view text);

// A chain is male (female) when more of its single-token pronoun mentions
// are he/him/his (she/her/hers); ties are excluded. Its job-title flag is
// set when any mention contains a gazetteer phrase.
CorpusBiasStats AnalyzeCorpusBias(
    const Corpus& corpus,
    const std::vector<std::vector<std::string>>& gazetteer);

std::string GenreOf(const std::string& doc_id);

}  // namespace biaskit

#endif  // BIASKIT_RESOURCES_H_
