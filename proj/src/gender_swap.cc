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

#include "biaskit/gender_swap.h"

#include <charconv>
#include <tuple>

#include "biaskit/text.h"

namespace biaskit {
namespace {

constexpr std::string_view kCaseLocked = "case-locked";

std::string RuleName(const SwapRule& rule) {
  return "'" + rule.source + "' -> '" + rule.target + "'" +
         (rule.pos_constraint ? " [" + *rule.pos_constraint + "]" : "");
}

bool HasWhitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

// Rules for one lowercased source word.
struct RuleSlot {
  std::map<std::string, const SwapRule*> by_pos;
  const SwapRule* fallback = nullptr;
};

std::map<std::string, RuleSlot> IndexRules(const SwapDictionary& dict,
                                           SwapError::Kind duplicate_kind) {
  std::map<std::string, RuleSlot> index;
  for (const SwapRule& rule : dict.rules) {
    RuleSlot& slot = index[AsciiLower(rule.source)];
    const SwapRule** place = rule.pos_constraint
                                 ? &slot.by_pos[*rule.pos_constraint]
                                 : &slot.fallback;
    if (*place != nullptr) {
      throw SwapError(duplicate_kind, "rules " + RuleName(**place) + " and " +
                                          RuleName(rule) +
                                          " share source and POS constraint");
    }
    *place = &rule;
  }
  return index;
}

std::string CanonicalType(std::string type) {
  if (type == "PER") return "PERSON";
  return type;
}

// Per-token entity type decoded from the NE column; empty when outside any
// entity. Handles OntoNotes brackets ("(PERSON*", "*", "*)", "(PERSON)") and
// BIO-style tags ("B-PER", "I-PER", "O").
std::vector<std::string> DecodeEntityTypes(const Sentence& sentence) {
  std::vector<std::string> types;
  types.reserve(sentence.tokens.size());
  std::string open;
  for (const Token& token : sentence.tokens) {
    const std::string& tag = token.ne_tag();
    std::string type;
    if (!tag.empty() && tag.front() == '(') {
      size_t end = tag.find_first_of("*)", 1);
      open = tag.substr(1, end == std::string::npos ? std::string::npos
                                                    : end - 1);
      type = open;
      if (tag.back() == ')') open.clear();
    } else if (tag.size() > 2 && tag[1] == '-' &&
               std::string_view("BIESLU").find(tag[0]) !=
                   std::string_view::npos) {
      type = tag.substr(2);
      open.clear();
    } else if (!tag.empty() && tag.front() == '*') {
      type = open;
      if (tag.back() == ')') open.clear();
    } else {
      open.clear();
    }
    types.push_back(CanonicalType(type));
  }
  return types;
}

}  // namespace

void ValidateDictionary(const SwapDictionary& dict) {
  for (const SwapRule& rule : dict.rules) {
    if (rule.source.empty() || rule.target.empty() ||
        HasWhitespace(rule.source) || HasWhitespace(rule.target)) {
      throw SwapError(SwapError::Kind::kMultiTokenRule,
                      "only single-token rules are supported: " +
                          RuleName(rule));
    }
    if (AsciiLower(rule.source) == AsciiLower(rule.target)) {
      throw SwapError(SwapError::Kind::kIdentityRule,
                      "rule maps a word to itself: " + RuleName(rule));
    }
    if (rule.frequency < 1) {
      throw SwapError(SwapError::Kind::kMalformedDictionary,
                      "frequency must be >= 1: " + RuleName(rule));
    }
  }
  IndexRules(dict, SwapError::Kind::kDuplicateRule);
}

SwapDictionary ParseDictionary(std::string_view text) {
  SwapDictionary dict;
  size_t line_number = 0;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_number;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    auto fail = [&](const std::string& why) {
      throw SwapError(SwapError::Kind::kMalformedDictionary,
                      "dictionary line " + std::to_string(line_number) +
                          ": " + why);
    };
    if (fields.size() < 4 || fields.size() > 5) {
      fail("expected 4 or 5 tab-separated columns");
    }
    SwapRule rule;
    rule.source = std::string(Trim(fields[0]));
    rule.target = std::string(Trim(fields[1]));
    std::string pos(Trim(fields[2]));
    if (pos.empty()) fail("empty POS column (use '-')");
    if (pos != "-") rule.pos_constraint = pos;
    std::string_view freq = Trim(fields[3]);
    auto [ptr, ec] =
        std::from_chars(freq.data(), freq.data() + freq.size(), rule.frequency);
    if (ec != std::errc() || ptr != freq.data() + freq.size()) {
      fail("bad frequency '" + std::string(freq) + "'");
    }
    if (fields.size() == 5) {
      std::string_view flag = Trim(fields[4]);
      if (flag == kCaseLocked) {
        rule.case_locked = true;
      } else if (!flag.empty() && flag != "-") {
        fail("unknown flag '" + std::string(flag) + "'");
      }
    }
    if (HasWhitespace(rule.source) || HasWhitespace(rule.target)) {
      throw SwapError(SwapError::Kind::kMultiTokenRule,
                      "dictionary line " + std::to_string(line_number) +
                          ": multi-token rule " + RuleName(rule));
    }
    dict.rules.push_back(std::move(rule));
  }
  ValidateDictionary(dict);
  return dict;
}

std::string FormatDictionary(const SwapDictionary& dict) {
  std::string out = "# source\ttarget\tpos\tfrequency\tflags\n";
  for (const SwapRule& rule : dict.rules) {
    out += rule.source + "\t" + rule.target + "\t" +
           rule.pos_constraint.value_or("-") + "\t" +
           std::to_string(rule.frequency);
    if (rule.case_locked) out += "\t" + std::string(kCaseLocked);
    out += "\n";
  }
  return out;
}

SwapDictionary BijectiveSubset(const SwapDictionary& dict) {
  using Key = std::tuple<std::string, std::string, std::optional<std::string>>;
  std::set<Key> present;
  for (const SwapRule& rule : dict.rules) {
    present.emplace(AsciiLower(rule.source), AsciiLower(rule.target),
                    rule.pos_constraint);
  }
  SwapDictionary subset;
  subset.case_policy = dict.case_policy;
  for (const SwapRule& rule : dict.rules) {
    if (present.count({AsciiLower(rule.target), AsciiLower(rule.source),
                       rule.pos_constraint})) {
      subset.rules.push_back(rule);
    }
  }
  return subset;
}

std::map<std::string, std::string> AnonymizationMap::Inverse() const {
  std::map<std::string, std::string> inverse;
  for (const auto& [surface, label] : placeholders) inverse[label] = surface;
  return inverse;
}

std::pair<DocumentPart, AnonymizationMap> AnonymizeEntities(
    const DocumentPart& part, const AnonymizeOptions& options) {
  bool has_ne = false;
  for (const Sentence& sentence : part.sentences) {
    for (const Token& token : sentence.tokens) {
      if (!token.ne_tag().empty() && token.ne_tag() != "_") has_ne = true;
    }
  }
  if (!has_ne) {
    throw SwapError(SwapError::Kind::kMissingNEColumn,
                    "document (" + part.doc_id +
                        ") has no named-entity annotation");
  }
  std::set<std::string> wanted;
  for (const std::string& type : options.entity_types) {
    wanted.insert(CanonicalType(type));
  }

  DocumentPart out = part;
  AnonymizationMap map;
  for (Sentence& sentence : out.sentences) {
    std::vector<std::string> types = DecodeEntityTypes(sentence);
    for (size_t t = 0; t < sentence.tokens.size(); ++t) {
      if (types[t].empty()) continue;
      if (!options.all_types && !wanted.count(types[t])) continue;
      std::string& word = sentence.tokens[t].word();
      auto [it, inserted] = map.placeholders.emplace(word, std::string());
      if (inserted) {
        it->second = "E" + std::to_string(map.order.size() + 1);
        map.order.push_back(word);
      }
      word = it->second;
    }
  }
  return {std::move(out), std::move(map)};
}

bool IsPlaceholder(std::string_view word) {
  if (word.size() < 2 || word.front() != 'E') return false;
  for (char c : word.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

DocumentPart SwapGenders(const DocumentPart& part, const SwapDictionary& dict) {
  const std::map<std::string, RuleSlot> index =
      IndexRules(dict, SwapError::Kind::kAmbiguousRule);
  DocumentPart out = part;
  for (Sentence& sentence : out.sentences) {
    for (Token& token : sentence.tokens) {
      std::string& word = token.word();
      if (IsPlaceholder(word)) continue;
      auto it = index.find(AsciiLower(word));
      if (it == index.end()) continue;
      const RuleSlot& slot = it->second;
      const SwapRule* rule = slot.fallback;
      auto constrained = slot.by_pos.find(token.pos());
      if (constrained != slot.by_pos.end()) rule = constrained->second;
      if (rule == nullptr) continue;
      const CaseShape shape = ClassifyCase(word);
      if (rule->case_locked) {
        word = shape == CaseShape::kUpper ? AsciiUpper(rule->target)
                                          : rule->target;
      } else {
        word = ApplyCase(rule->target, shape);
      }
    }
  }
  return out;
}

Corpus AugmentCorpus(const Corpus& corpus, const SwapDictionary& dict,
                     const AugmentOptions& options) {
  ValidateDictionary(dict);
  Corpus out;
  out.parts = corpus.parts;
  out.trailing_lines = corpus.trailing_lines;
  out.parts.reserve(corpus.parts.size() * 2);
  for (const DocumentPart& part : corpus.parts) {
    DocumentPart image =
        options.anonymize
            ? AnonymizeEntities(part, options.anonymize_options).first
            : part;
    image = SwapGenders(image, dict);
    image.doc_id += kSwappedSuffix;
    image.leading_lines.clear();
    for (Sentence& sentence : image.sentences) {
      for (Token& token : sentence.tokens) {
        token.columns[Token::kDocColumn] = image.doc_id;
      }
    }
    out.parts.push_back(std::move(image));
  }
  return out;
}

}  // namespace biaskit
