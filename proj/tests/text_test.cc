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


#include "biaskit/text.h"

#include <gtest/gtest.h>

namespace biaskit {
namespace {

TEST(TextTest, CaseFoldingLeavesNonAsciiBytes) {
  EXPECT_EQ(AsciiLower("CAFÉ Noël"), "cafÉ noël");
  EXPECT_EQ(AsciiUpper("mr."), "MR.");
}

TEST(TextTest, SplitWhitespaceDropsEmptyFields) {
  EXPECT_EQ(SplitWhitespace("  a\t\tb  c "),
            (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(SplitWhitespace(" \t ").empty());
}

TEST(TextTest, SplitKeepsEmptyFields) {
  EXPECT_EQ(Split("a,,b,", ','), (std::vector<std::string>{"a", "", "b", ""}));
}

TEST(TextTest, Trim) { EXPECT_EQ(Trim(" \tx y\r\n"), "x y"); }

TEST(TextTest, ClassifyCase) {
  EXPECT_EQ(ClassifyCase("she"), CaseShape::kLower);
  EXPECT_EQ(ClassifyCase("She"), CaseShape::kTitle);
  EXPECT_EQ(ClassifyCase("SHE"), CaseShape::kUpper);
  EXPECT_EQ(ClassifyCase("Mr."), CaseShape::kTitle);
  EXPECT_EQ(ClassifyCase("MR."), CaseShape::kUpper);
  EXPECT_EQ(ClassifyCase("McDonald"), CaseShape::kOther);
  EXPECT_EQ(ClassifyCase("I"), CaseShape::kTitle);
}

TEST(TextTest, ApplyCase) {
  EXPECT_EQ(ApplyCase("he", CaseShape::kLower), "he");
  EXPECT_EQ(ApplyCase("he", CaseShape::kTitle), "He");
  EXPECT_EQ(ApplyCase("he", CaseShape::kUpper), "HE");
  EXPECT_EQ(ApplyCase("he", CaseShape::kOther), "he");
}

TEST(TextTest, ReadMissingFileThrows) {
  EXPECT_THROW(ReadFile("/nonexistent/bias-kit/file"), std::runtime_error);
}

}  // namespace
}  // namespace biaskit
