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

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace biaskit {
namespace {

bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }

}  // namespace

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsAsciiUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string AsciiUpper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsAsciiLower(c)) c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> Split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

CaseShape ClassifyCase(std::string_view word) {
  int upper = 0;
  int lower = 0;
  bool first_letter_upper = false;
  bool seen_letter = false;
  for (char c : word) {
    if (IsAsciiUpper(c)) {
      if (!seen_letter) first_letter_upper = true;
      seen_letter = true;
      ++upper;
    } else if (IsAsciiLower(c)) {
      seen_letter = true;
      ++lower;
    }
  }
  if (upper == 0) return CaseShape::kLower;
  if (lower == 0 && upper >= 2) return CaseShape::kUpper;
  if (first_letter_upper && upper == 1) return CaseShape::kTitle;
  return CaseShape::kOther;
}

std::string ApplyCase(std::string_view word, CaseShape shape) {
  switch (shape) {
    case CaseShape::kLower:
      return AsciiLower(word);
    case CaseShape::kUpper:
      return AsciiUpper(word);
    case CaseShape::kTitle: {
      std::string out = AsciiLower(word);
      for (char& c : out) {
        if (IsAsciiLower(c)) {
          c = static_cast<char>(c - 'a' + 'A');
          break;
        }
      }
      return out;
    }
    case CaseShape::kOther:
      break;
  }
  return std::string(word);
}

}  // namespace biaskit
