// Copyright 2026 The extlp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text format for extended LPs and Farkas systems:
//
//   # comment to end of line
//   rows 2
//   cols 1
//   A
//   bot
//   0
//   b
//   0 -1
//   c          <- optional block
//   0
//
// Entries are `bot`, `top`, integers, `p/q` fractions or decimals. Tokens
// are separated by arbitrary whitespace; the layout above is what
// write_lp_file produces.

#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "extlp/elp.hpp"
#include "extlp/errors.hpp"
#include "extlp/ext_value.hpp"
#include "extlp/linalg.hpp"

namespace extlp {

struct LPFile {
  ExtMatrix a;
  ExtVector b;
  std::optional<ExtVector> c;

  std::size_t rows() const { return a.rows(); }
  std::size_t cols() const { return a.cols(); }

  ExtendedLP program() const {
    if (!c) throw PreconditionError("file has no c block");
    return ExtendedLP(a, b, *c);
  }

  static LPFile from_program(const ExtendedLP& p) { return LPFile{p.a, p.b, p.c}; }
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line;
};

inline std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < input.size()) {
    char ch = input[i];
    if (ch == '\n') {
      ++line;
      ++i;
    } else if (ch == '#') {
      while (i < input.size() && input[i] != '\n') ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
    } else {
      std::size_t start = i;
      while (i < input.size() && input[i] != ' ' && input[i] != '\t' && input[i] != '\r' &&
             input[i] != '\n' && input[i] != '#') {
        ++i;
      }
      out.push_back({std::string(input.substr(start, i - start)), line});
    }
  }
  return out;
}

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ == tokens_.size(); }

  const Token& next(const char* expecting) {
    if (done()) throw ParseError(std::string("unexpected end of input, expected ") + expecting);
    return tokens_[pos_++];
  }

  bool peek_is(std::string_view keyword) const {
    return !done() && tokens_[pos_].text == keyword;
  }

  void expect(std::string_view keyword) {
    const Token& t = next(std::string(keyword).c_str());
    if (t.text != keyword) {
      throw ParseError("line " + std::to_string(t.line) + ": expected '" + std::string(keyword) +
                       "', found '" + t.text + "'");
    }
  }

  std::size_t count(const char* what) {
    const Token& t = next(what);
    std::size_t value = 0;
    if (t.text.empty()) throw ParseError("empty count");
    for (char ch : t.text) {
      if (ch < '0' || ch > '9') {
        throw ParseError("line " + std::to_string(t.line) + ": bad " + what + " count '" + t.text + "'");
      }
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      if (value > 100000) throw ParseError("line " + std::to_string(t.line) + ": count too large");
    }
    return value;
  }

  ExtValue entry(const char* block) {
    const Token& t = next(block);
    try {
      return parse_ext_value(t.text);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(t.line) + " in block " + block + ": " + e.what());
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LPFile parse_lp_file(std::string_view input) {
  detail::TokenCursor cur(detail::tokenize(input));
  cur.expect("rows");
  std::size_t m = cur.count("rows");
  cur.expect("cols");
  std::size_t n = cur.count("cols");

  LPFile file;
  file.a = ExtMatrix(m, n);
  cur.expect("A");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) file.a(i, j) = cur.entry("A");
  cur.expect("b");
  file.b.resize(m);
  for (auto& v : file.b) v = cur.entry("b");
  if (cur.peek_is("c")) {
    cur.expect("c");
    ExtVector c(n);
    for (auto& v : c) v = cur.entry("c");
    file.c = std::move(c);
  }
  if (!cur.done()) {
    const detail::Token& t = cur.next("end of input");
    throw ParseError("line " + std::to_string(t.line) + ": trailing token '" + t.text + "'");
  }
  return file;
}

inline std::string write_vector(const ExtVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += to_string(v[k]);
  }
  return out;
}

inline std::string write_lp_file(const LPFile& file) {
  std::ostringstream os;
  os << "rows " << file.rows() << "\n";
  os << "cols " << file.cols() << "\n";
  os << "A\n";
  for (std::size_t i = 0; i < file.rows(); ++i) {
    auto row = file.a.row(i);
    os << write_vector(ExtVector(row.begin(), row.end())) << "\n";
  }
  os << "b\n" << write_vector(file.b) << "\n";
  if (file.c) os << "c\n" << write_vector(*file.c) << "\n";
  return os.str();
}

}  // namespace extlp
