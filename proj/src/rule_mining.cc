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

#include "biaskit/rule_mining.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "biaskit/text.h"

namespace biaskit {
namespace {

using SurfaceCounts = std::map<std::string, int>;

// Most frequent surface; ties go to the smallest string.
std::string DominantSurface(const SurfaceCounts& counts) {
  const std::string* best = nullptr;
  int best_count = 0;
  for (const auto& [surface, count] : counts) {
    if (count > best_count) {
      best = &surface;
      best_count = count;
    }
  }
  return best ? *best : std::string();
}

bool AllCapitalized(const SurfaceCounts& counts) {
  for (const auto& [surface, count] : counts) {
    CaseShape shape = ClassifyCase(surface);
    if (shape != CaseShape::kTitle && shape != CaseShape::kUpper) return false;
  }
  return !counts.empty();
}

struct Observed {
  // lower source -> lower target -> support
  std::map<std::string, std::map<std::string, int>> support;
  std::map<std::string, SurfaceCounts> source_surfaces;
  std::map<std::string, SurfaceCounts> target_surfaces;
};

Observed Observe(const std::vector<AnnotatedSpanPair>& pairs) {
  Observed seen;
  for (const AnnotatedSpanPair& pair : pairs) {
    for (const WordEdit& edit : ComputeWordDifference(pair).edits) {
      std::string source = AsciiLower(edit.source);
      std::string target = AsciiLower(edit.target);
      ++seen.support[source][target];
      ++seen.source_surfaces[source][edit.source];
      ++seen.target_surfaces[target][edit.target];
    }
  }
  return seen;
}

SwapRule MakeRule(const Observed& seen, const std::string& source,
                  const std::string& target, int support) {
  SwapRule rule{source, target, std::nullopt, support, false};
  const SurfaceCounts& sources = seen.source_surfaces.at(source);
  const SurfaceCounts& targets = seen.target_surfaces.at(target);
  if (AllCapitalized(sources)) {
    rule.source = DominantSurface(sources);
    if (AllCapitalized(targets)) {
      rule.target = DominantSurface(targets);
      rule.case_locked = true;
    }
  }
  return rule;
}

}  // namespace

WordDifference ComputeWordDifference(const AnnotatedSpanPair& pair) {
  WordDifference diff;
  if (pair.original_tokens.size() != pair.edited_tokens.size()) {
    diff.skipped = true;
    return diff;
  }
  const bool has_pos =
      pair.original_pos &&
      pair.original_pos->size() == pair.original_tokens.size();
  for (size_t i = 0; i < pair.original_tokens.size(); ++i) {
    const std::string& before = pair.original_tokens[i];
    const std::string& after = pair.edited_tokens[i];
    if (AsciiLower(before) == AsciiLower(after)) continue;
    WordEdit edit{before, after, std::nullopt};
    if (has_pos) edit.pos = (*pair.original_pos)[i];
    diff.edits.push_back(std::move(edit));
  }
  return diff;
}

std::vector<RuleCandidate> CountCandidates(
    const std::vector<AnnotatedSpanPair>& pairs) {
  using Key =
      std::tuple<std::string, std::string, std::optional<std::string>>;
  std::map<Key, int> counts;
  for (const AnnotatedSpanPair& pair : pairs) {
    for (const WordEdit& edit : ComputeWordDifference(pair).edits) {
      ++counts[{AsciiLower(edit.source), AsciiLower(edit.target), edit.pos}];
    }
  }
  std::vector<RuleCandidate> out;
  out.reserve(counts.size());
  for (const auto& [key, support] : counts) {
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                   support});
  }
  return out;
}

SwapDictionary MineRules(const std::vector<AnnotatedSpanPair>& pairs,
                         const MiningOptions& options) {
  if (pairs.empty()) throw MiningError("EmptyInput: no span pairs to mine");
  const Observed seen = Observe(pairs);

  SwapDictionary dict;
  for (const auto& [source, targets] : seen.support) {
    if (source == "her") {
      bool emitted = false;
      for (const auto& [target, pos] :
           {std::pair<std::string, std::string>{"his", "PRP$"},
            std::pair<std::string, std::string>{"him", "PRP"}}) {
        auto it = targets.find(target);
        if (it == targets.end() || it->second < options.min_support) continue;
        SwapRule rule = MakeRule(seen, source, target, it->second);
        rule.pos_constraint = pos;
        dict.rules.push_back(std::move(rule));
        emitted = true;
      }
      if (emitted) continue;
    }
    const std::string* best = nullptr;
    int best_support = 0;
    for (const auto& [target, support] : targets) {
      if (support >= options.min_support && support > best_support) {
        best = &target;
        best_support = support;
      }
    }
    if (best) dict.rules.push_back(MakeRule(seen, source, *best, best_support));
  }
  ValidateDictionary(dict);
  return dict;
}

std::vector<AnnotatedSpanPair> ParseSpanPairs(std::string_view text) {
  std::vector<AnnotatedSpanPair> pairs;
  size_t line_number = 0;
  for (const std::string& raw : Split(text, '\n')) {
    ++line_number;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw MiningError("span pair line " + std::to_string(line_number) +
                        ": expected 2 or 3 tab-separated columns");
    }
    AnnotatedSpanPair pair;
    pair.original_tokens = SplitWhitespace(fields[0]);
    pair.edited_tokens = SplitWhitespace(fields[1]);
    if (pair.original_tokens.empty() || pair.edited_tokens.empty()) {
      throw MiningError("span pair line " + std::to_string(line_number) +
                        ": empty span");
    }
    if (fields.size() == 3 && !Trim(fields[2]).empty()) {
      pair.original_pos = SplitWhitespace(fields[2]);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace biaskit
