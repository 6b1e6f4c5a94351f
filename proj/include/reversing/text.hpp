// Copyright 2026 The reversing Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text format for presentations and words.
//
//   # comment
//   gens: a b c d
//   rel: a b = b c = c a
//
// A chained relation u1 = u2 = ... = uk stands for every pair ui = uj with
// i < j.  Letters are separated by blanks; when every generator name is a
// single character, juxtaposed letters ("ab = bc") are accepted too.  In
// signed words an inverse letter is written with a leading '-' or, when that
// is unambiguous, as the upper-case form of a lower-case name.

#ifndef REVERSING_TEXT_HPP_
#define REVERSING_TEXT_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace reversing {

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": "
                + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }

    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  namespace detail {

    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    inline std::vector<Token> tokenize(std::string_view s,
                                       std::size_t      offset = 0) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
          continue;
        }
        if (s[i] == '=') {
          out.push_back({"=", offset + i + 1});
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))
               && s[j] != '=') {
          ++j;
        }
        out.push_back({std::string(s.substr(i, j - i)), offset + i + 1});
        i = j;
      }
      return out;
    }

    inline bool single_char_alphabet(Presentation const& p) {
      for (auto const& n : p.names()) {
        if (n.size() != 1) {
          return false;
        }
      }
      return true;
    }

    inline bool valid_name(std::string_view n) {
      if (n.empty() || n[0] == '-') {
        return false;
      }
      for (char c : n) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
          return false;
        }
      }
      return true;
    }

    // Resolves one token as a signed letter, or returns false.
    inline bool resolve(Presentation const& p,
                        std::string_view    tok,
                        bool                allow_inverse,
                        SignedLetter&       out) {
      if (auto s = p.find(tok)) {
        out = pos(*s);
        return true;
      }
      if (!allow_inverse) {
        return false;
      }
      if (tok.size() > 1 && tok[0] == '-') {
        if (auto s = p.find(tok.substr(1))) {
          out = neg(*s);
          return true;
        }
        return false;
      }
      std::string low(tok);
      bool        changed = false;
      for (auto& c : low) {
        if (std::isupper(static_cast<unsigned char>(c))) {
          c       = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          changed = true;
        }
      }
      if (changed) {
        if (auto s = p.find(low)) {
          out = neg(*s);
          return true;
        }
      }
      return false;
    }

    inline SignedWord parse_tokens(Presentation const&       p,
                                   std::vector<Token> const& toks,
                                   bool                      allow_inverse,
                                   std::size_t               line) {
      SignedWord w;
      bool       split = single_char_alphabet(p);
      for (auto const& t : toks) {
        SignedLetter x;
        if (t.text == "1" && !p.find("1")) {
          continue;  // explicit empty word
        }
        if (resolve(p, t.text, allow_inverse, x)) {
          w.push_back(x);
          continue;
        }
        if (!split) {
          throw ParseError(line, t.column, "unknown letter \"" + t.text + "\"");
        }
        for (std::size_t k = 0; k < t.text.size(); ++k) {
          std::string_view c(t.text.data() + k, 1);
          if (allow_inverse && c == "-" && k + 1 < t.text.size()) {
            std::string_view d(t.text.data() + k + 1, 1);
            if (auto s = p.find(d)) {
              w.push_back(neg(*s));
              ++k;
              continue;
            }
          }
          if (!resolve(p, c, allow_inverse, x)) {
            throw ParseError(line,
                             t.column + k,
                             "unknown letter \"" + std::string(c) + "\"");
          }
          w.push_back(x);
        }
      }
      return w;
    }

    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

  }  // namespace detail

  inline SignedWord parse_signed_word(Presentation const& p,
                                      std::string_view    text) {
    return detail::parse_tokens(p, detail::tokenize(text), true, 1);
  }

  inline Word parse_word(Presentation const& p, std::string_view text) {
    auto toks = detail::tokenize(text);
    auto w    = detail::parse_tokens(p, toks, false, 1);
    return *to_positive(w);
  }

  inline Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool         have_gens = false;
    std::size_t  line_no   = 0;
    std::size_t  start     = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      start                 = end + 1;
      if (auto h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      if (detail::trim(line).empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        auto first = line.find_first_not_of(" \t");
        throw ParseError(line_no, first + 1, "expected \"gens:\" or \"rel:\"");
      }
      auto key  = detail::trim(line.substr(0, colon));
      auto toks = detail::tokenize(line.substr(colon + 1), colon + 1);
      if (key == "gens" || key == "generators") {
        if (have_gens) {
          throw ParseError(line_no, 1, "generators declared twice");
        }
        have_gens = true;
        for (auto const& t : toks) {
          if (!detail::valid_name(t.text)) {
            throw ParseError(
                line_no, t.column, "invalid generator name \"" + t.text + "\"");
          }
          if (p.find(t.text)) {
            throw ParseError(
                line_no, t.column, "duplicate generator \"" + t.text + "\"");
          }
          p.add_generator(t.text);
        }
      } else if (key == "rel" || key == "rels" || key == "relation") {
        if (!have_gens) {
          throw ParseError(line_no, 1, "relation before generators");
        }
        std::vector<Word>          sides;
        std::vector<std::size_t>   cols;
        std::vector<detail::Token> cur;
        auto                       flush = [&](std::size_t col) {
          if (cur.empty()) {
            throw ParseError(line_no, col, "empty relation side");
          }
          auto w = detail::parse_tokens(p, cur, false, line_no);
          if (w.empty()) {
            throw ParseError(line_no, col, "empty relation side");
          }
          sides.push_back(*to_positive(w));
          cols.push_back(cur.front().column);
          cur.clear();
        };
        for (auto const& t : toks) {
          if (t.text == "=") {
            flush(t.column);
          } else {
            cur.push_back(t);
          }
        }
        flush(line.size() + 1);
        if (sides.size() < 2) {
          throw ParseError(line_no, colon + 2, "relation needs \"=\"");
        }
        for (std::size_t i = 0; i < sides.size(); ++i) {
          for (std::size_t j = i + 1; j < sides.size(); ++j) {
            if (sides[i] == sides[j]) {
              throw ParseError(line_no, cols[j], "relation sides are equal");
            }
            p.add_relation(sides[i], sides[j]);
          }
        }
      } else {
        throw ParseError(
            line_no, 1, "unknown directive \"" + std::string(key) + "\"");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!have_gens) {
      throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing \"gens:\" line");
    }
    return p;
  }

  inline std::string format(Presentation const& p, Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += p.name(w[i]);
    }
    return out;
  }

  inline std::string format(Presentation const& p, SignedWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      if (w[i].inverse) {
        out += '-';
      }
      out += p.name(w[i].letter);
    }
    return out;
  }

  inline std::string serialize(Presentation const& p) {
    std::string out = "gens:";
    for (auto const& n : p.names()) {
      out += ' ';
      out += n;
    }
    out += '\n';
    for (auto const& r : p.relations()) {
      out += "rel: " + format(p, r.lhs) + " = " + format(p, r.rhs) + '\n';
    }
    return out;
  }

}  // namespace reversing

#endif  // REVERSING_TEXT_HPP_
