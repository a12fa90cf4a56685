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

#include "biaskit/winogen.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <random>
#include <set>

#include "biaskit/text.h"
#include "json.hpp"

namespace biaskit {
namespace {

using Json = nlohmann::json;

bool ParseInt(std::string_view s, int* out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
}

void Append(std::vector<std::string>* tokens, std::string_view words) {
  for (std::string& w : SplitWhitespace(words)) tokens->push_back(std::move(w));
}

TokenSpan AppendEntity(std::vector<std::string>* tokens,
                       const Occupation& occupation, bool sentence_initial) {
  TokenSpan span;
  span.start = static_cast<int>(tokens->size());
  tokens->push_back(sentence_initial ? "The" : "the");
  Append(tokens, occupation.name);
  span.end = static_cast<int>(tokens->size()) - 1;
  return span;
}

std::string FormatId(const char* kind, size_t tpl, size_t pair, int order) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s-%03zu-%03zu-%d", kind, tpl, pair, order);
  return buf;
}

template <typename Enum>
Enum FromString(const std::string& value,
                std::initializer_list<std::pair<const char*, Enum>> options,
                const char* what) {
  for (const auto& [name, e] : options) {
    if (value == name) return e;
  }
  throw WinogenError(WinogenError::Kind::kMalformedExample,
                     std::string("unknown ") + what + " '" + value + "'");
}

Json OccupationJson(const Occupation& o) {
  return Json{{"name", o.name}, {"percent_female", o.percent_female}};
}

Occupation OccupationFromJson(const Json& j) {
  return {j.at("name").get<std::string>(), j.at("percent_female").get<int>()};
}

}  // namespace

const char* ToString(Gender g) {
  return g == Gender::kMale ? "male" : "female";
}
const char* ToString(Condition c) {
  return c == Condition::kPro ? "pro" : "anti";
}
const char* ToString(TemplateKind k) {
  return k == TemplateKind::kType1 ? "type1" : "type2";
}
const char* ToString(Referent r) {
  return r == Referent::kEntity1 ? "entity1" : "entity2";
}
const char* ToString(PronounCase c) {
  switch (c) {
    case PronounCase::kNominative:
      return "nominative";
    case PronounCase::kAccusative:
      return "accusative";
    case PronounCase::kPossessive:
      return "possessive";
  }
  return "";
}

Gender Opposite(Gender g) {
  return g == Gender::kMale ? Gender::kFemale : Gender::kMale;
}

std::string PronounFor(Gender gender, PronounCase pronoun_case) {
  const bool male = gender == Gender::kMale;
  switch (pronoun_case) {
    case PronounCase::kNominative:
      return male ? "he" : "she";
    case PronounCase::kAccusative:
      return male ? "him" : "her";
    case PronounCase::kPossessive:
      return male ? "his" : "her";
  }
  return "";
}

std::vector<Occupation> ParseOccupations(std::string_view text) {
  std::vector<Occupation> out;
  std::set<std::string> names;
  size_t line_number = 0;
  bool first_row = true;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_number;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "occupations line " + std::to_string(line_number);
    std::vector<std::string> fields = Split(line, ',');
    if (fields.size() != 2) {
      throw WinogenError(WinogenError::Kind::kMalformedOccupations,
                         where + ": expected name,percent_female");
    }
    Occupation occ{std::string(Trim(fields[0])), 0};
    const bool numeric = ParseInt(Trim(fields[1]), &occ.percent_female);
    if (first_row && !numeric) {
      first_row = false;
      continue;
    }
    first_row = false;
    if (!numeric || occ.name.empty()) {
      throw WinogenError(WinogenError::Kind::kMalformedOccupations,
                         where + ": bad row '" + std::string(line) + "'");
    }
    if (occ.percent_female < 0 || occ.percent_female > 100) {
      throw WinogenError(WinogenError::Kind::kPercentOutOfRange,
                         where + ": percent_female must be in [0, 100]");
    }
    if (occ.percent_female == 50) {
      throw WinogenError(WinogenError::Kind::kExactly50Percent,
                         where + ": " + occ.name +
                             " is exactly 50% female and cannot be classified");
    }
    if (!names.insert(AsciiLower(occ.name)).second) {
      throw WinogenError(WinogenError::Kind::kDuplicateOccupation,
                         where + ": duplicate occupation " + occ.name);
    }
    out.push_back(std::move(occ));
  }
  return out;
}

Condition Classify(const Occupation& occupation, Gender pronoun_gender) {
  const bool female_dominated = occupation.percent_female > 50;
  const bool female = pronoun_gender == Gender::kFemale;
  return female == female_dominated ? Condition::kPro : Condition::kAnti;
}

std::vector<Template> ParseTemplates(std::string_view text) {
  std::vector<Template> out;
  std::vector<bool> has_gold;
  size_t line_number = 0;
  auto fail = [&](const std::string& why) {
    throw WinogenError(WinogenError::Kind::kMalformedTemplates,
                       "templates line " + std::to_string(line_number) +
                           ": " + why);
  };
  auto finish = [&]() {
    if (out.empty()) return;
    const Template& t = out.back();
    if (t.interaction.empty() || t.circumstances.empty()) {
      fail("template needs interaction and circumstances");
    }
    if (t.kind == TemplateKind::kType1 && t.conjunction.empty()) {
      fail("type1 template needs a conjunction");
    }
    if (t.kind == TemplateKind::kType2 && t.interaction2.empty()) {
      fail("type2 template needs interaction2");
    }
    if (!has_gold.back()) fail("template needs gold = entity1|entity2");
  };
  for (const std::string& raw : Split(text, '\n')) {
    ++line_number;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      finish();
      Template t;
      if (line == "[type1]") {
        t.kind = TemplateKind::kType1;
        t.pronoun_case = PronounCase::kNominative;
      } else if (line == "[type2]") {
        t.kind = TemplateKind::kType2;
        t.pronoun_case = PronounCase::kAccusative;
      } else {
        fail("unknown section " + std::string(line));
      }
      out.push_back(std::move(t));
      has_gold.push_back(false);
      continue;
    }
    if (out.empty()) fail("key outside of a [type1]/[type2] block");
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    std::string key(Trim(line.substr(0, eq)));
    std::string value(Trim(line.substr(eq + 1)));
    Template& t = out.back();
    if (key == "interaction") {
      t.interaction = value;
    } else if (key == "conjunction" && t.kind == TemplateKind::kType1) {
      t.conjunction = value;
    } else if (key == "interaction2" && t.kind == TemplateKind::kType2) {
      t.interaction2 = value;
    } else if (key == "circumstances") {
      t.circumstances = value;
    } else if (key == "gold") {
      if (value == "entity1") {
        t.gold_referent = Referent::kEntity1;
      } else if (value == "entity2") {
        t.gold_referent = Referent::kEntity2;
      } else {
        fail("gold must be entity1 or entity2");
      }
      has_gold.back() = true;
    } else if (key == "case") {
      if (value == "nominative") {
        t.pronoun_case = PronounCase::kNominative;
      } else if (value == "accusative") {
        t.pronoun_case = PronounCase::kAccusative;
      } else if (value == "possessive") {
        t.pronoun_case = PronounCase::kPossessive;
      } else {
        fail("case must be nominative, accusative or possessive");
      }
    } else {
      fail("unknown key '" + key + "' for " + ToString(t.kind));
    }
  }
  finish();
  return out;
}

std::vector<std::pair<Occupation, Occupation>> PairOccupations(
    const std::vector<Occupation>& occupations, PairingStrategy strategy,
    uint64_t seed) {
  if (occupations.size() < 2) {
    throw WinogenError(WinogenError::Kind::kInsufficientOccupations,
                       "need at least two occupations");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Occupation, Occupation>> pairs;
  if (strategy == PairingStrategy::kCrossGender) {
    std::vector<Occupation> male;
    std::vector<Occupation> female;
    for (const Occupation& o : occupations) {
      (o.percent_female < 50 ? male : female).push_back(o);
    }
    if (male.empty() || female.empty() || male.size() != female.size()) {
      throw WinogenError(
          WinogenError::Kind::kInsufficientOccupations,
          "cross-gender pairing needs equally many male- and "
          "female-dominated occupations (have " +
              std::to_string(male.size()) + " and " +
              std::to_string(female.size()) + ")");
    }
    std::shuffle(female.begin(), female.end(), rng);
    for (size_t i = 0; i < male.size(); ++i) {
      pairs.emplace_back(male[i], female[i]);
    }
    return pairs;
  }
  std::vector<Occupation> ring = occupations;
  std::shuffle(ring.begin(), ring.end(), rng);
  if (ring.size() == 2) {
    pairs.emplace_back(ring[0], ring[1]);
    return pairs;
  }
  for (size_t i = 0; i < ring.size(); ++i) {
    pairs.emplace_back(ring[i], ring[(i + 1) % ring.size()]);
  }
  return pairs;
}

std::vector<WinoExample> Generate(const std::vector<Template>& templates,
                                  const std::vector<Occupation>& occupations,
                                  PairingStrategy strategy, uint64_t seed) {
  if (templates.empty()) {
    throw WinogenError(WinogenError::Kind::kMalformedTemplates,
                       "no templates to instantiate");
  }
  const auto pairs = PairOccupations(occupations, strategy, seed);
  std::vector<WinoExample> out;
  out.reserve(4 * templates.size() * pairs.size());
  for (size_t ti = 0; ti < templates.size(); ++ti) {
    const Template& tpl = templates[ti];
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
      for (int order = 0; order < 2; ++order) {
        const Occupation& first =
            order == 0 ? pairs[pi].first : pairs[pi].second;
        const Occupation& second =
            order == 0 ? pairs[pi].second : pairs[pi].first;
        const std::string twin_id =
            FormatId(ToString(tpl.kind), ti, pi, order);
        for (Gender gender : {Gender::kMale, Gender::kFemale}) {
          WinoExample ex;
          ex.twin_id = twin_id;
          ex.id = twin_id + (gender == Gender::kMale ? "-m" : "-f");
          ex.kind = tpl.kind;
          ex.gold = tpl.gold_referent;
          ex.pronoun_gender = gender;
          ex.pronoun_case = tpl.pronoun_case;
          ex.entity1 = AppendEntity(&ex.tokens, first, true);
          Append(&ex.tokens, tpl.interaction);
          ex.entity2 = AppendEntity(&ex.tokens, second, false);
          if (tpl.kind == TemplateKind::kType1) {
            Append(&ex.tokens, tpl.conjunction);
          } else {
            Append(&ex.tokens, "and then");
            Append(&ex.tokens, tpl.interaction2);
          }
          ex.pronoun_index = static_cast<int>(ex.tokens.size());
          ex.tokens.push_back(PronounFor(gender, tpl.pronoun_case));
          if (tpl.kind == TemplateKind::kType2) ex.tokens.push_back("for");
          Append(&ex.tokens, tpl.circumstances);
          ex.tokens.push_back(".");
          const bool gold_first = tpl.gold_referent == Referent::kEntity1;
          ex.gold_occupation = gold_first ? first : second;
          ex.other_occupation = gold_first ? second : first;
          ex.condition = Classify(ex.gold_occupation, gender);
          out.push_back(std::move(ex));
        }
      }
    }
  }
  return out;
}

DevTestSplit SplitDevTest(const std::vector<WinoExample>& examples,
                          uint64_t seed) {
  std::map<std::string, std::vector<size_t>> twins;
  std::vector<std::string> twin_order;
  for (size_t i = 0; i < examples.size(); ++i) {
    auto [it, inserted] = twins.try_emplace(examples[i].twin_id);
    if (inserted) twin_order.push_back(examples[i].twin_id);
    it->second.push_back(i);
  }
  for (const auto& [id, members] : twins) {
    if (members.size() != 2 ||
        examples[members[0]].pronoun_gender ==
            examples[members[1]].pronoun_gender) {
      throw WinogenError(WinogenError::Kind::kMalformedExample,
                         "twin group " + id +
                             " is not a male/female pair");
    }
  }
  if (twins.size() % 2 != 0) {
    throw WinogenError(WinogenError::Kind::kOddTwinCount,
                       "cannot halve " + std::to_string(twins.size()) +
                           " twin pairs");
  }

  std::map<std::pair<std::string, TemplateKind>, std::vector<std::string>>
      strata;
  for (const std::string& id : twin_order) {
    const WinoExample& ex = examples[twins[id][0]];
    strata[{ex.gold_occupation.name, ex.kind}].push_back(id);
  }
  std::mt19937_64 rng(seed);
  std::set<std::string> dev_ids;
  std::vector<std::string> leftovers;
  for (auto& [key, ids] : strata) {
    std::shuffle(ids.begin(), ids.end(), rng);
    const size_t half = ids.size() / 2;
    dev_ids.insert(ids.begin(), ids.begin() + half);
    if (ids.size() % 2 == 1) leftovers.push_back(ids.back());
  }
  std::shuffle(leftovers.begin(), leftovers.end(), rng);
  dev_ids.insert(leftovers.begin(), leftovers.begin() + leftovers.size() / 2);

  DevTestSplit split;
  for (const WinoExample& ex : examples) {
    (dev_ids.count(ex.twin_id) ? split.dev : split.test).push_back(ex);
  }
  return split;
}

Corpus ToConll(const std::vector<WinoExample>& examples) {
  Corpus corpus;
  corpus.parts.reserve(examples.size());
  for (const WinoExample& ex : examples) {
    const int n = static_cast<int>(ex.tokens.size());
    std::vector<std::string> coref(n);
    auto mark = [&](const TokenSpan& span, int chain) {
      const std::string id = std::to_string(chain);
      auto add = [&](int t, const std::string& item) {
        coref[t] += (coref[t].empty() ? "" : "|") + item;
      };
      if (span.start == span.end) {
        add(span.start, "(" + id + ")");
      } else {
        add(span.start, "(" + id);
        add(span.end, id + ")");
      }
    };
    const bool gold_first = ex.gold == Referent::kEntity1;
    mark(gold_first ? ex.entity1 : ex.entity2, 0);
    mark(gold_first ? ex.entity2 : ex.entity1, 1);
    mark({ex.pronoun_index, ex.pronoun_index}, 0);

    DocumentPart part;
    part.doc_id = ex.id;
    Sentence sentence;
    for (int t = 0; t < n; ++t) {
      std::string pos = "-";
      if (t == ex.pronoun_index) {
        pos = ex.pronoun_case == PronounCase::kPossessive ? "PRP$" : "PRP";
      }
      sentence.tokens.push_back(MakeToken(ex.id, 0, t, ex.tokens[t], pos,
                                          coref[t].empty() ? "-" : coref[t]));
    }
    part.sentences.push_back(std::move(sentence));
    corpus.parts.push_back(std::move(part));
  }
  return corpus;
}

std::string ToJsonl(const std::vector<WinoExample>& examples) {
  std::string out;
  for (const WinoExample& ex : examples) {
    Json j{
        {"id", ex.id},
        {"twin_id", ex.twin_id},
        {"tokens", ex.tokens},
        {"entity1", {ex.entity1.start, ex.entity1.end}},
        {"entity2", {ex.entity2.start, ex.entity2.end}},
        {"pronoun_index", ex.pronoun_index},
        {"gold", ToString(ex.gold)},
        {"condition", ToString(ex.condition)},
        {"type", ToString(ex.kind)},
        {"gender", ToString(ex.pronoun_gender)},
        {"pronoun_case", ToString(ex.pronoun_case)},
        {"occupation", OccupationJson(ex.gold_occupation)},
        {"other_occupation", OccupationJson(ex.other_occupation)},
    };
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<WinoExample> ParseJsonl(std::string_view text) {
  std::vector<WinoExample> out;
  size_t line_number = 0;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_number;
    if (Trim(raw).empty()) continue;
    try {
      Json j = Json::parse(raw);
      WinoExample ex;
      ex.id = j.at("id").get<std::string>();
      ex.twin_id = j.at("twin_id").get<std::string>();
      ex.tokens = j.at("tokens").get<std::vector<std::string>>();
      ex.entity1 = {j.at("entity1").at(0).get<int>(),
                    j.at("entity1").at(1).get<int>()};
      ex.entity2 = {j.at("entity2").at(0).get<int>(),
                    j.at("entity2").at(1).get<int>()};
      ex.pronoun_index = j.at("pronoun_index").get<int>();
      ex.gold = FromString<Referent>(
          j.at("gold").get<std::string>(),
          {{"entity1", Referent::kEntity1}, {"entity2", Referent::kEntity2}},
          "gold");
      ex.condition = FromString<Condition>(
          j.at("condition").get<std::string>(),
          {{"pro", Condition::kPro}, {"anti", Condition::kAnti}}, "condition");
      ex.kind = FromString<TemplateKind>(
          j.at("type").get<std::string>(),
          {{"type1", TemplateKind::kType1}, {"type2", TemplateKind::kType2}},
          "type");
      ex.pronoun_gender = FromString<Gender>(
          j.at("gender").get<std::string>(),
          {{"male", Gender::kMale}, {"female", Gender::kFemale}}, "gender");
      ex.pronoun_case = FromString<PronounCase>(
          j.value("pronoun_case", std::string("nominative")),
          {{"nominative", PronounCase::kNominative},
           {"accusative", PronounCase::kAccusative},
           {"possessive", PronounCase::kPossessive}},
          "pronoun_case");
      if (j.contains("occupation")) {
        ex.gold_occupation = OccupationFromJson(j.at("occupation"));
      }
      if (j.contains("other_occupation")) {
        ex.other_occupation = OccupationFromJson(j.at("other_occupation"));
      }
      const int n = static_cast<int>(ex.tokens.size());
      auto in_range = [n](const TokenSpan& s) {
        return 0 <= s.start && s.start <= s.end && s.end < n;
      };
      if (!in_range(ex.entity1) || !in_range(ex.entity2) ||
          ex.pronoun_index < 0 || ex.pronoun_index >= n) {
        throw WinogenError(WinogenError::Kind::kMalformedExample,
                           "offsets out of range");
      }
      out.push_back(std::move(ex));
    } catch (const Json::exception& e) {
      throw WinogenError(WinogenError::Kind::kMalformedExample,
                         "jsonl line " + std::to_string(line_number) + ": " +
                             e.what());
    } catch (const WinogenError& e) {
      throw WinogenError(e.kind(), "jsonl line " +
                                       std::to_string(line_number) + ": " +
                                       e.what());
    }
  }
  return out;
}

}  // namespace biaskit
