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

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "biaskit/text.h"
#include "test_corpus.h"

namespace biaskit {
namespace {

std::string TestData(const std::string& name) {
  return ReadFile(std::string(BIASKIT_TEST_DATA_DIR) + "/" + name);
}

std::string Part(const std::string& body) {
  return "#begin document (d); part 000\n" + body + "\n#end document\n";
}

std::string Row(const std::string& word, const std::string& coref) {
  return "d 0 0 " + word + " NN * - - - - * " + coref + "\n";
}

ConllError::Kind ErrorKind(const std::string& text) {
  try {
    ParseConll(text);
  } catch (const ConllError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ConllError::Kind::kDuplicatePart;
}

TEST(ConllTest, ParsesFixture) {
  Corpus corpus = ParseConll(TestData("sample.conll"));
  ASSERT_EQ(corpus.parts.size(), 2u);
  const DocumentPart& part = corpus.parts[0];
  EXPECT_EQ(part.doc_id, "nw/wsj/00/wsj_0001");
  EXPECT_EQ(part.part_number, 0);
  ASSERT_EQ(part.sentences.size(), 2u);
  EXPECT_EQ(part.sentences[0].tokens.size(), 7u);
  EXPECT_EQ(part.sentences[0].tokens[0].columns.size(), 13u);
  EXPECT_EQ(part.sentences[1].tokens[0].columns.size(), 12u);
  EXPECT_EQ(part.sentences[0].tokens[3].word(), "met");
  EXPECT_EQ(part.sentences[0].tokens[4].pos(), "PRP$");
  EXPECT_EQ(part.sentences[0].tokens[0].ne_tag(), "(PERSON*");
  EXPECT_EQ(part.sentences[0].tokens[0].speaker(), "Speaker#1");
  EXPECT_EQ(part.leading_lines,
            (std::vector<std::string>{"# OntoNotes-style sample, hand written"}));
  EXPECT_EQ(corpus.parts[1].part_number, 1);
}

TEST(ConllTest, FixtureChains) {
  Corpus corpus = ParseConll(TestData("sample.conll"));
  std::vector<Chain> chains = ExtractChains(corpus.parts[0]);
  ASSERT_EQ(chains.size(), 3u);
  EXPECT_EQ(chains[0].chain_id, 4);
  EXPECT_EQ(chains[0].mentions,
            (std::vector<Mention>{{0, 0, 2, 4}, {1, 4, 4, 4}}));
  // Chains 6 and 7 both start at token 4; the shorter first mention sorts
  // first.
  EXPECT_EQ(chains[1].chain_id, 6);
  EXPECT_EQ(chains[1].mentions, (std::vector<Mention>{{0, 4, 4, 6}}));
  EXPECT_EQ(chains[2].chain_id, 7);
  EXPECT_EQ(chains[2].mentions,
            (std::vector<Mention>{{0, 4, 5, 7}, {1, 2, 2, 7}}));

  std::vector<Chain> second = ExtractChains(corpus.parts[1]);
  ASSERT_EQ(second.size(), 1u);
  EXPECT_EQ(second[0].mentions, (std::vector<Mention>{{0, 0, 0, 0}}));
}

TEST(ConllTest, MultiSentenceChainAcrossSentences) {
  std::string text = Part(Row("A", "(4") + Row("b", "-") + Row("c", "4)") +
                          "\n" + Row("x", "-") + Row("it", "(4)"));
  Corpus corpus = ParseConll(text);
  std::vector<Chain> chains = ExtractChains(corpus.parts[0]);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].chain_id, 4);
  EXPECT_EQ(chains[0].mentions,
            (std::vector<Mention>{{0, 0, 2, 4}, {1, 1, 1, 4}}));
}

TEST(ConllTest, SameChainNestingClosesInnermostFirst) {
  Corpus corpus = ParseConll(
      Part(Row("a", "(1") + Row("b", "(1") + Row("c", "1)") + Row("d", "1)")));
  std::vector<Chain> chains = ExtractChains(corpus.parts[0]);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].mentions,
            (std::vector<Mention>{{0, 0, 3, 1}, {0, 1, 2, 1}}));
}

TEST(ConllTest, AllDashesMeansNoChains) {
  Corpus corpus = ParseConll(Part(Row("a", "-") + Row("b", "-")));
  EXPECT_TRUE(ExtractChains(corpus.parts[0]).empty());
}

TEST(ConllTest, EmptyInputIsEmptyCorpus) {
  EXPECT_TRUE(ParseConll("").parts.empty());
  EXPECT_EQ(WriteConll(Corpus{}), "");
}

TEST(ConllTest, Errors) {
  EXPECT_EQ(ErrorKind(Part(Row("a", "(1") + Row("b", "-"))),
            ConllError::Kind::kUnbalancedCorefBrackets);
  EXPECT_EQ(ErrorKind(Part(Row("a", "2)"))),
            ConllError::Kind::kUnbalancedCorefBrackets);
  EXPECT_EQ(ErrorKind(Part(Row("a", "(x)"))),
            ConllError::Kind::kMalformedCorefField);
  EXPECT_EQ(ErrorKind(Part(Row("a", "-") + "d 0 1 b NN * - - - - * * -\n")),
            ConllError::Kind::kInconsistentColumnCount);
  EXPECT_EQ(ErrorKind(Part("d 0 0 a NN * -\n")),
            ConllError::Kind::kInconsistentColumnCount);
  EXPECT_EQ(ErrorKind("#begin document d; part 0\n" + Row("a", "-") +
                      "\n#end document\n"),
            ConllError::Kind::kMalformedHeader);
  EXPECT_EQ(ErrorKind(Part(Row("a", "-")) + Part(Row("b", "-"))),
            ConllError::Kind::kDuplicatePart);
}

TEST(ConllTest, ErrorCarriesLineNumber) {
  try {
    ParseConll(Part(Row("a", "-") + Row("b", "(x")));
    FAIL();
  } catch (const ConllError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_STREQ(ConllErrorKindName(e.kind()), "MalformedCorefField");
  }
}

TEST(ConllTest, FormatHeader) {
  EXPECT_EQ(FormatHeader("bc/cnn/00/cnn_0001", 3),
            "#begin document (bc/cnn/00/cnn_0001); part 003");
}

TEST(ConllTest, CanonicalGolden) {
  Corpus corpus = ParseConll(TestData("sample.conll"));
  const std::string golden = TestData("sample.canonical.conll");
  EXPECT_EQ(WriteConll(corpus), golden);
  EXPECT_EQ(WriteConll(ParseConll(golden)), golden);
}

TEST(ConllTest, PreserveSpacingReproducesInput) {
  const std::string text = TestData("sample.conll");
  EXPECT_EQ(WriteConll(ParseConll(text), Spacing::kPreserve), text);
}

TEST(ConllTest, ValidatePartRejectsUnbalancedInMemory) {
  DocumentPart part;
  part.doc_id = "d";
  Sentence s;
  s.tokens.push_back(MakeToken("d", 0, 0, "x", "NN", "(3"));
  part.sentences.push_back(s);
  EXPECT_THROW(ValidatePart(part), ConllError);
}

TEST(ConllPropertyTest, RandomRoundTrip) {
  std::mt19937_64 rng(20260501);
  for (int trial = 0; trial < 300; ++trial) {
    Corpus corpus = testing::MakeRandomCorpus(1 + trial % 4, rng);
    const std::string written = WriteConll(corpus);
    Corpus reparsed = ParseConll(written);
    ASSERT_EQ(reparsed, corpus) << written;
    ASSERT_EQ(WriteConll(reparsed), written);
  }
}

TEST(ConllPropertyTest, ChainsMatchGeneratedMentions) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    testing::RandomPart rp = testing::MakeRandomPart("d", 0, rng);
    std::vector<Mention> found;
    for (const Chain& c : ExtractChains(rp.part)) {
      found.insert(found.end(), c.mentions.begin(), c.mentions.end());
    }
    std::sort(found.begin(), found.end());
    ASSERT_EQ(found, rp.mentions);
  }
}

}  // namespace
}  // namespace biaskit
