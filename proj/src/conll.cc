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

#include "biaskit/conll.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>
#include <utility>

#include "biaskit/text.h"

namespace biaskit {
namespace {

constexpr std::string_view kBeginPrefix = "#begin document";
constexpr std::string_view kEndPrefix = "#end document";

struct CorefItem {
  enum Kind { kOpen, kClose, kUnit } kind;
  int id;
};

bool ParseNonNegative(std::string_view s, int* out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Parses "-" or a "|"-separated list of "(N", "N)", "(N)".
bool ParseCorefField(std::string_view field, std::vector<CorefItem>* items) {
  items->clear();
  if (field == "-") return true;
  for (const std::string& raw : Split(field, '|')) {
    std::string_view item(raw);
    bool open = !item.empty() && item.front() == '(';
    bool close = !item.empty() && item.back() == ')';
    if (open) item.remove_prefix(1);
    if (close && !item.empty()) item.remove_suffix(1);
    int id = 0;
    if ((!open && !close) || !ParseNonNegative(item, &id)) return false;
    CorefItem::Kind kind = open && close ? CorefItem::kUnit
                           : open        ? CorefItem::kOpen
                                         : CorefItem::kClose;
    items->push_back({kind, id});
  }
  return true;
}

std::string Describe(const DocumentPart& part, size_t sentence) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "; part %03d, sentence %zu",
                part.part_number, sentence);
  return "document (" + part.doc_id + ")" + buf;
}

// Matches brackets in one sentence, last-open-first-close per chain id.
// Appends mentions to `out`. `first_line` locates errors (0 if unknown).
void MatchSentence(const DocumentPart& part, size_t sentence_index,
                   size_t first_line, std::vector<Mention>* out) {
  const Sentence& sentence = part.sentences[sentence_index];
  std::map<int, std::vector<int>> open;
  std::vector<CorefItem> items;
  for (size_t t = 0; t < sentence.tokens.size(); ++t) {
    const size_t line = first_line == 0 ? 0 : first_line + t;
    if (!ParseCorefField(sentence.tokens[t].coref(), &items)) {
      throw ConllError(ConllError::Kind::kMalformedCorefField, line,
                       "malformed coreference field '" +
                           sentence.tokens[t].coref() + "' in " +
                           Describe(part, sentence_index));
    }
    const int token = static_cast<int>(t);
    const int s = static_cast<int>(sentence_index);
    for (const CorefItem& item : items) {
      switch (item.kind) {
        case CorefItem::kUnit:
          out->push_back({s, token, token, item.id});
          break;
        case CorefItem::kOpen:
          open[item.id].push_back(token);
          break;
        case CorefItem::kClose: {
          auto it = open.find(item.id);
          if (it == open.end() || it->second.empty()) {
            throw ConllError(ConllError::Kind::kUnbalancedCorefBrackets, line,
                             "chain " + std::to_string(item.id) +
                                 " closed without being opened in " +
                                 Describe(part, sentence_index));
          }
          out->push_back({s, it->second.back(), token, item.id});
          it->second.pop_back();
          break;
        }
      }
    }
  }
  for (const auto& [id, starts] : open) {
    if (!starts.empty()) {
      throw ConllError(ConllError::Kind::kUnbalancedCorefBrackets, first_line,
                       "chain " + std::to_string(id) +
                           " left open at end of " +
                           Describe(part, sentence_index));
    }
  }
}

void CheckColumns(const Sentence& sentence, size_t first_line) {
  const size_t expected = sentence.tokens.front().columns.size();
  for (size_t t = 0; t < sentence.tokens.size(); ++t) {
    const size_t n = sentence.tokens[t].columns.size();
    const size_t line = first_line == 0 ? 0 : first_line + t;
    if (n < kMinConllColumns) {
      throw ConllError(ConllError::Kind::kInconsistentColumnCount, line,
                       "expected at least " +
                           std::to_string(kMinConllColumns) +
                           " columns, found " + std::to_string(n));
    }
    if (n != expected) {
      throw ConllError(ConllError::Kind::kInconsistentColumnCount, line,
                       "sentence mixes " + std::to_string(expected) +
                           " and " + std::to_string(n) + " columns");
    }
  }
}

Token TokenizeLine(std::string_view line) {
  Token token;
  size_t i = 0;
  while (true) {
    size_t gap_start = i;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    token.gaps.emplace_back(line.substr(gap_start, i - gap_start));
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    token.columns.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return token;
}

void ParseHeader(std::string_view line, size_t line_number,
                 DocumentPart* part) {
  auto fail = [&]() {
    throw ConllError(ConllError::Kind::kMalformedHeader, line_number,
                     "malformed header: " + std::string(line));
  };
  std::string_view rest = line.substr(kBeginPrefix.size());
  rest = Trim(rest);
  if (rest.empty() || rest.front() != '(') fail();
  size_t close = rest.rfind(");");
  if (close == std::string_view::npos || close < 1) fail();
  part->doc_id = std::string(rest.substr(1, close - 1));
  std::string_view tail = Trim(rest.substr(close + 2));
  constexpr std::string_view kPart = "part";
  if (tail.substr(0, kPart.size()) != kPart) fail();
  tail = Trim(tail.substr(kPart.size()));
  if (!ParseNonNegative(tail, &part->part_number)) fail();
  if (part->doc_id.empty()) fail();
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

ConllError::ConllError(Kind kind, size_t line, const std::string& message)
    : std::runtime_error(
          (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
          ConllErrorKindName(kind) + ": " + message),
      kind_(kind),
      line_(line) {}

const char* ConllErrorKindName(ConllError::Kind kind) {
  switch (kind) {
    case ConllError::Kind::kUnbalancedCorefBrackets:
      return "UnbalancedCorefBrackets";
    case ConllError::Kind::kInconsistentColumnCount:
      return "InconsistentColumnCount";
    case ConllError::Kind::kMalformedHeader:
      return "MalformedHeader";
    case ConllError::Kind::kMalformedCorefField:
      return "MalformedCorefField";
    case ConllError::Kind::kDuplicatePart:
      return "DuplicatePart";
  }
  return "ConllError";
}

Corpus ParseConll(std::string_view text) {
  Corpus corpus;
  std::set<std::pair<std::string, int>> seen;
  std::vector<std::string> outside;
  std::vector<std::string> pending_comments;
  Sentence current;
  size_t current_first_line = 0;
  bool in_document = false;
  size_t header_line = 0;
  DocumentPart part;
  std::vector<size_t> sentence_lines;

  auto finish_sentence = [&]() {
    if (current.tokens.empty()) return;
    CheckColumns(current, current_first_line);
    part.sentences.push_back(std::move(current));
    sentence_lines.push_back(current_first_line);
    current = Sentence{};
  };

  size_t line_number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (!in_document) {
      if (StartsWith(line, kBeginPrefix)) {
        part = DocumentPart{};
        ParseHeader(line, line_number, &part);
        if (!seen.emplace(part.doc_id, part.part_number).second) {
          throw ConllError(ConllError::Kind::kDuplicatePart, line_number,
                           "duplicate part " + std::string(line));
        }
        part.leading_lines = std::move(outside);
        outside.clear();
        sentence_lines.clear();
        header_line = line_number;
        in_document = true;
      } else if (StartsWith(line, kEndPrefix)) {
        throw ConllError(ConllError::Kind::kMalformedHeader, line_number,
                         "#end document without #begin document");
      } else if (!Trim(line).empty()) {
        if (line.front() != '#') {
          throw ConllError(ConllError::Kind::kMalformedHeader, line_number,
                           "data line outside of a document");
        }
        outside.emplace_back(line);
      }
      continue;
    }

    if (Trim(line).empty()) {
      finish_sentence();
    } else if (StartsWith(line, kEndPrefix)) {
      finish_sentence();
      part.trailing_comments = std::move(pending_comments);
      pending_comments.clear();
      for (size_t s = 0; s < part.sentences.size(); ++s) {
        std::vector<Mention> ignored;
        MatchSentence(part, s, sentence_lines[s], &ignored);
      }
      corpus.parts.push_back(std::move(part));
      in_document = false;
    } else if (StartsWith(line, kBeginPrefix)) {
      throw ConllError(ConllError::Kind::kMalformedHeader, line_number,
                       "#begin document inside document started at line " +
                           std::to_string(header_line));
    } else if (line.front() == '#') {
      finish_sentence();
      pending_comments.emplace_back(line);
    } else {
      if (current.tokens.empty()) {
        current_first_line = line_number;
        current.comments = std::move(pending_comments);
        pending_comments.clear();
      }
      current.tokens.push_back(TokenizeLine(line));
    }
  }
  if (in_document) {
    throw ConllError(ConllError::Kind::kMalformedHeader, header_line,
                     "document (" + part.doc_id + ") has no #end document");
  }
  corpus.trailing_lines = std::move(outside);
  return corpus;
}

std::string FormatHeader(const std::string& doc_id, int part_number) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%03d", part_number);
  return std::string(kBeginPrefix) + " (" + doc_id + "); part " + buf;
}

std::string WriteConll(const Corpus& corpus, Spacing spacing) {
  std::string out;
  auto put_line = [&out](std::string_view line) {
    out.append(line);
    out.push_back('\n');
  };
  for (const DocumentPart& part : corpus.parts) {
    for (const std::string& line : part.leading_lines) put_line(line);
    put_line(FormatHeader(part.doc_id, part.part_number));
    for (const Sentence& sentence : part.sentences) {
      for (const std::string& line : sentence.comments) put_line(line);
      for (const Token& token : sentence.tokens) {
        const bool keep = spacing == Spacing::kPreserve &&
                          token.gaps.size() == token.columns.size() + 1;
        for (size_t c = 0; c < token.columns.size(); ++c) {
          if (keep) {
            out.append(token.gaps[c]);
          } else if (c > 0) {
            out.push_back(' ');
          }
          out.append(token.columns[c]);
        }
        if (keep) out.append(token.gaps.back());
        out.push_back('\n');
      }
      out.push_back('\n');
    }
    for (const std::string& line : part.trailing_comments) put_line(line);
    put_line(kEndPrefix);
  }
  for (const std::string& line : corpus.trailing_lines) put_line(line);
  return out;
}

std::vector<Chain> ExtractChains(const DocumentPart& part) {
  std::vector<Mention> mentions;
  for (size_t s = 0; s < part.sentences.size(); ++s) {
    MatchSentence(part, s, 0, &mentions);
  }
  std::map<int, std::set<Mention>> by_id;
  for (const Mention& m : mentions) {
    by_id[m.chain_id].insert(m);
  }
  std::vector<Chain> chains;
  chains.reserve(by_id.size());
  for (auto& [id, set] : by_id) {
    chains.push_back({id, std::vector<Mention>(set.begin(), set.end())});
  }
  auto first = [](const Chain& c) {
    const Mention& m = c.mentions.front();
    return std::make_tuple(m.sentence_index, m.start_token, m.end_token);
  };
  std::sort(chains.begin(), chains.end(),
            [&](const Chain& a, const Chain& b) {
              auto fa = first(a);
              auto fb = first(b);
              if (fa != fb) return fa < fb;
              return a.chain_id < b.chain_id;
            });
  return chains;
}

void ValidatePart(const DocumentPart& part) {
  for (size_t s = 0; s < part.sentences.size(); ++s) {
    const Sentence& sentence = part.sentences[s];
    if (sentence.tokens.empty()) {
      throw ConllError(ConllError::Kind::kInconsistentColumnCount, 0,
                       "empty sentence in " + Describe(part, s));
    }
    CheckColumns(sentence, 0);
    std::vector<Mention> ignored;
    MatchSentence(part, s, 0, &ignored);
  }
}

Token MakeToken(const std::string& doc_id, int part_number, int word_number,
                const std::string& word, const std::string& pos,
                const std::string& coref, const std::string& ne_tag) {
  Token token;
  token.columns = {doc_id, std::to_string(part_number),
                   std::to_string(word_number), word, pos, "*", "-", "-",
                   "-", "-", ne_tag, coref};
  return token;
}

}  // namespace biaskit
