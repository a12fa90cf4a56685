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

// Small string helpers shared by the readers. Case handling is ASCII-only;
// bytes >= 0x80 pass through untouched, so UTF-8 text survives unchanged.

#ifndef BIASKIT_TEXT_H_
#define BIASKIT_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace biaskit {

std::string AsciiLower(std::string_view s);
std::string AsciiUpper(std::string_view s);

// Splits on runs of spaces and tabs; empty fields are never produced.
std::vector<std::string> SplitWhitespace(std::string_view s);

// Splits on every occurrence of `sep`, keeping empty fields.
std::vector<std::string> Split(std::string_view s, char sep);

std::string_view Trim(std::string_view s);

// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

// Letter-case shape of a token, used to carry capitalization across a
// substitution.
enum class CaseShape { kLower, kTitle, kUpper, kOther };

CaseShape ClassifyCase(std::string_view word);

// Re-cases `word` (assumed lowercase) to `shape`. kOther leaves it as is.
std::string ApplyCase(std::string_view word, CaseShape shape);

}  // namespace biaskit

#endif  // BIASKIT_TEXT_H_
