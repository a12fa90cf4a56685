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

// Reader and writer for CoNLL-2012 coreference files.
//
// A document part looks like
//
//   #begin document (bc/cctv/00/cctv_0000); part 000
//   bc/cctv/00/cctv_0000 0 0 He PRP (TOP(S(NP*) - - - Speaker#1 * (12)
//   ...
//                                              <- blank line between sentences
//   #end document
//
// Data lines carry at least 12 whitespace-separated columns. The ones the
// toolkit interprets are word (3), POS (4), parse bit (5), speaker (9),
// named entity (10) and coreference (always the last). Everything else is
// kept verbatim.

#ifndef BIASKIT_CONLL_H_
#define BIASKIT_CONLL_H_

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace biaskit {

inline constexpr size_t kMinConllColumns = 12;

class ConllError : public std::runtime_error {
 public:
  enum class Kind {
    kUnbalancedCorefBrackets,
    kInconsistentColumnCount,
    kMalformedHeader,
    kMalformedCorefField,
    kDuplicatePart,
  };

  // `line` is 1-based, 0 when unknown.
  ConllError(Kind kind, size_t line, const std::string& message);

  Kind kind() const { return kind_; }
  size_t line() const { return line_; }

 private:
  Kind kind_;
  size_t line_;
};

const char* ConllErrorKindName(ConllError::Kind kind);

struct Token {
  enum Column : size_t {
    kDocColumn = 0,
    kPartColumn = 1,
    kWordNumberColumn = 2,
    kWordColumn = 3,
    kPosColumn = 4,
    kParseColumn = 5,
    kSpeakerColumn = 9,
    kNeColumn = 10,
  };

  std::vector<std::string> columns;
  // Whitespace around the columns as read (columns.size() + 1 entries), used
  // only by the spacing-preserving writer. Empty for tokens built in code.
  std::vector<std::string> gaps;

  const std::string& word() const { return columns[kWordColumn]; }
  std::string& word() { return columns[kWordColumn]; }
  const std::string& pos() const { return columns[kPosColumn]; }
  const std::string& parse_bit() const { return columns[kParseColumn]; }
  const std::string& speaker() const { return columns[kSpeakerColumn]; }
  const std::string& ne_tag() const { return columns[kNeColumn]; }
  const std::string& coref() const { return columns.back(); }
  std::string& coref() { return columns.back(); }

  // Structural equality ignores spacing.
  bool operator==(const Token& other) const {
    return columns == other.columns;
  }
};

struct Sentence {
  std::vector<Token> tokens;
  // Comment lines that appeared immediately before this sentence.
  std::vector<std::string> comments;

  bool operator==(const Sentence&) const = default;
};

struct DocumentPart {
  std::string doc_id;
  int part_number = 0;
  std::vector<Sentence> sentences;
  // Comment lines between the last sentence and "#end document".
  std::vector<std::string> trailing_comments;
  // Lines outside any document that preceded this part's header.
  std::vector<std::string> leading_lines;

  bool operator==(const DocumentPart&) const = default;
};

struct Corpus {
  std::vector<DocumentPart> parts;
  // Lines after the last "#end document".
  std::vector<std::string> trailing_lines;

  bool operator==(const Corpus&) const = default;
};

struct Mention {
  int sentence_index = 0;
  int start_token = 0;
  int end_token = 0;  // inclusive
  int chain_id = 0;

  auto operator<=>(const Mention&) const = default;
};

struct Chain {
  int chain_id = 0;
  std::vector<Mention> mentions;  // sorted by (sentence, start, end)

  bool operator==(const Chain&) const = default;
};

Corpus ParseConll(std::string_view text);

enum class Spacing {
  kCanonical,  // single space between columns
  kPreserve,   // reuse whitespace recorded by the parser where available
};

std::string WriteConll(const Corpus& corpus,
                       Spacing spacing = Spacing::kCanonical);

std::string FormatHeader(const std::string& doc_id, int part_number);

// Chains ordered by first mention position, then id. Duplicate spans within
// a chain collapse to one mention; singletons are kept.
std::vector<Chain> ExtractChains(const DocumentPart& part);

// Checks the invariants ParseConll enforces; throws ConllError on violation.
// Useful for parts built or edited in code.
void ValidatePart(const DocumentPart& part);

// Builds a 12-column token with "-"/"*" placeholders in the uninterpreted
// columns.
Token MakeToken(const std::string& doc_id, int part_number, int word_number,
                const std::string& word, const std::string& pos,
                const std::string& coref, const std::string& ne_tag = "*");

}  // namespace biaskit

#endif  // BIASKIT_CONLL_H_
