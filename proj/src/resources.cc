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

#include "biaskit/resources.h"

#include <charconv>

#include "biaskit/text.h"

namespace biaskit {
namespace {

enum class PronounGender { kNone, kMale, kFemale };

PronounGender HeadPronoun(const Token& token) {
  const std::string& pos = token.pos();
  if (pos != "PRP" && pos != "PRP$") return PronounGender::kNone;
  const std::string word = AsciiLower(token.word());
  if (word == "he" || word == "him" || word == "his") {
    return PronounGender::kMale;
  }
  if (word == "she" || word == "her" || word == "hers") {
    return PronounGender::kFemale;
  }
  return PronounGender::kNone;
}

bool ContainsPhrase(const std::vector<std::string>& words,
                    const std::vector<std::vector<std::string>>& gazetteer) {
  for (const auto& phrase : gazetteer) {
    if (phrase.empty() || phrase.size() > words.size()) continue;
    for (size_t i = 0; i + phrase.size() <= words.size(); ++i) {
      bool match = true;
      for (size_t k = 0; k < phrase.size() && match; ++k) {
        match = words[i + k] == phrase[k];
      }
      if (match) return true;
    }
  }
  return false;
}

double Fraction(int64_t num, int64_t den) {
  return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

}  // namespace

GenderCountList ParseGenderList(std::string_view text) {
  GenderCountList list;
  std::set<std::string> seen;
  size_t line_number = 0;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_number;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    const std::string where = "gender list line " + std::to_string(line_number);
    size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw ResourceError(ResourceError::Kind::kMalformedGenderList,
                          where + ": expected phrase TAB counts");
    }
    GenderCountEntry entry;
    entry.phrase = std::string(line.substr(0, tab));
    std::vector<std::string> fields = SplitWhitespace(line.substr(tab + 1));
    if (fields.size() != 4) {
      throw ResourceError(ResourceError::Kind::kMalformedGenderList,
                          where + ": expected 4 counts");
    }
    int64_t* slots[] = {&entry.counts.male, &entry.counts.female,
                        &entry.counts.neutral, &entry.counts.plural};
    for (size_t i = 0; i < 4; ++i) {
      const std::string& f = fields[i];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), *slots[i]);
      if (ec != std::errc() || ptr != f.data() + f.size() || *slots[i] < 0) {
        throw ResourceError(ResourceError::Kind::kMalformedGenderList,
                            where + ": bad count '" + f + "'");
      }
    }
    if (!seen.insert(AsciiLower(entry.phrase)).second) {
      throw ResourceError(ResourceError::Kind::kDuplicatePhrase,
                          where + ": duplicate phrase '" + entry.phrase + "'");
    }
    list.entries.push_back(std::move(entry));
  }
  return list;
}

std::string FormatGenderList(const GenderCountList& list) {
  std::string out;
  for (const GenderCountEntry& e : list.entries) {
    out += e.phrase + "\t" + std::to_string(e.counts.male) + " " +
           std::to_string(e.counts.female) + " " +
           std::to_string(e.counts.neutral) + " " +
           std::to_string(e.counts.plural) + "\n";
  }
  return out;
}

GenderCountList BalanceGenderList(const GenderCountList& list) {
  GenderCountList out = list;
  for (GenderCountEntry& e : out.entries) {
    const int64_t mean = (e.counts.male + e.counts.female + 1) / 2;
    e.counts.male = mean;
    e.counts.female = mean;
  }
  return out;
}

double GenderStats::male_fraction() const {
  return Fraction(male_chains, gendered_total());
}
double GenderStats::male_jobtitle_rate() const {
  return Fraction(male_with_job, male_chains);
}
double GenderStats::female_jobtitle_rate() const {
  return Fraction(female_with_job, female_chains);
}

std::vector<std::vector<std::string>> ParseGazetteer(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& raw : Split(text, '\n')) {
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(SplitWhitespace(AsciiLower(line)));
  }
  return out;
}

std::string GenreOf(const std::string& doc_id) {
  return doc_id.substr(0, doc_id.find('/'));
}

CorpusBiasStats AnalyzeCorpusBias(
    const Corpus& corpus,
    const std::vector<std::vector<std::string>>& gazetteer) {
  if (gazetteer.empty()) {
    throw ResourceError(ResourceError::Kind::kEmptyGazetteer,
                        "job-title gazetteer is empty");
  }
  CorpusBiasStats stats;
  for (const DocumentPart& part : corpus.parts) {
    GenderStats& genre = stats.per_genre[GenreOf(part.doc_id)];
    for (const Chain& chain : ExtractChains(part)) {
      int male = 0;
      int female = 0;
      bool job = false;
      for (const Mention& m : chain.mentions) {
        const Sentence& sentence = part.sentences[m.sentence_index];
        if (m.start_token == m.end_token) {
          switch (HeadPronoun(sentence.tokens[m.start_token])) {
            case PronounGender::kMale:
              ++male;
              break;
            case PronounGender::kFemale:
              ++female;
              break;
            case PronounGender::kNone:
              break;
          }
        }
        if (!job) {
          std::vector<std::string> words;
          for (int t = m.start_token; t <= m.end_token; ++t) {
            words.push_back(AsciiLower(sentence.tokens[t].word()));
          }
          job = ContainsPhrase(words, gazetteer);
        }
      }
      if (male == 0 && female == 0) continue;
      if (male == female) {
        ++stats.tied_chains;
        continue;
      }
      for (GenderStats* s : {&stats.totals, &genre}) {
        if (male > female) {
          ++s->male_chains;
          s->male_with_job += job ? 1 : 0;
        } else {
          ++s->female_chains;
          s->female_with_job += job ? 1 : 0;
        }
      }
    }
  }
  for (auto it = stats.per_genre.begin(); it != stats.per_genre.end();) {
    it = it->second.gendered_total() == 0 ? stats.per_genre.erase(it)
                                          : std::next(it);
  }
  stats.has_gendered_chains = stats.totals.gendered_total() > 0;
  return stats;
}

}  // namespace biaskit
