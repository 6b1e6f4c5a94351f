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

#ifndef REVERSING_WORD_HPP_
#define REVERSING_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reversing {

  //! Base class of all errors thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct Letter {
    std::uint32_t id = 0;

    friend constexpr auto operator<=>(Letter, Letter) = default;
  };

  struct SignedLetter {
    Letter letter;
    bool   inverse = false;

    constexpr bool positive() const noexcept {
      return !inverse;
    }

    constexpr SignedLetter inverted() const noexcept {
      return {letter, !inverse};
    }

    friend constexpr auto operator<=>(SignedLetter, SignedLetter) = default;
  };

  using Word       = std::vector<Letter>;
  using SignedWord = std::vector<SignedLetter>;

  constexpr SignedLetter pos(Letter s) noexcept {
    return {s, false};
  }

  constexpr SignedLetter neg(Letter s) noexcept {
    return {s, true};
  }

  namespace detail {
    inline std::size_t mix(std::size_t h, std::size_t v) noexcept {
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
  }  // namespace detail

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = w.size();
      for (auto x : w) {
        h = detail::mix(h, x.id);
      }
      return h;
    }

    std::size_t operator()(SignedWord const& w) const noexcept {
      std::size_t h = w.size();
      for (auto x : w) {
        h = detail::mix(h, (std::size_t(x.letter.id) << 1) | x.inverse);
      }
      return h;
    }
  };

  //! The positive signed word spelling \p w.
  inline SignedWord as_signed(Word const& w) {
    SignedWord out;
    out.reserve(w.size());
    for (auto s : w) {
      out.push_back(pos(s));
    }
    return out;
  }

  //! The signed word w^-1.
  inline SignedWord inverse(Word const& w) {
    SignedWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(neg(*it));
    }
    return out;
  }

  inline SignedWord inverse(SignedWord const& w) {
    SignedWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverted());
    }
    return out;
  }

  //! The signed word u^-1 v.
  inline SignedWord quotient(Word const& u, Word const& v) {
    SignedWord out = inverse(u);
    for (auto s : v) {
      out.push_back(pos(s));
    }
    return out;
  }

  //! The signed word u v^-1.
  inline SignedWord fraction(Word const& u, Word const& v) {
    SignedWord out = as_signed(u);
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      out.push_back(neg(*it));
    }
    return out;
  }

  inline Word concat(Word u, Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  inline SignedWord concat(SignedWord u, SignedWord const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  inline bool is_positive(SignedWord const& w) {
    for (auto x : w) {
      if (x.inverse) {
        return false;
      }
    }
    return true;
  }

  inline std::optional<Word> to_positive(SignedWord const& w) {
    Word out;
    out.reserve(w.size());
    for (auto x : w) {
      if (x.inverse) {
        return std::nullopt;
      }
      out.push_back(x.letter);
    }
    return out;
  }

  //! Splits a word of the form v' v^-1 into (v', v).  Returns nothing if a
  //! negative letter precedes a positive one.
  inline std::optional<std::pair<Word, Word>>
  split_positive_negative(SignedWord const& w) {
    std::size_t i = 0;
    Word        num, den;
    for (; i < w.size() && w[i].positive(); ++i) {
      num.push_back(w[i].letter);
    }
    for (std::size_t j = i; j < w.size(); ++j) {
      if (w[j].positive()) {
        return std::nullopt;
      }
    }
    for (std::size_t j = w.size(); j > i; --j) {
      den.push_back(w[j - 1].letter);
    }
    return std::make_pair(std::move(num), std::move(den));
  }

  //! Splits a word of the form u^-1 v into (u, v).
  inline std::optional<std::pair<Word, Word>>
  split_negative_positive(SignedWord const& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i].inverse) {
      ++i;
    }
    Word den, num;
    for (std::size_t j = i; j > 0; --j) {
      den.push_back(w[j - 1].letter);
    }
    for (std::size_t j = i; j < w.size(); ++j) {
      if (w[j].inverse) {
        return std::nullopt;
      }
      num.push_back(w[j].letter);
    }
    return std::make_pair(std::move(den), std::move(num));
  }

  //! Letter-reversed copy; signs are kept.
  template <typename W>
  W reversed(W w) {
    std::reverse(w.begin(), w.end());
    return w;
  }

  //! Shortlex order: shorter first, then lexicographic by letter id.
  inline bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  inline Word letters(std::initializer_list<std::uint32_t> ids) {
    Word w;
    for (auto i : ids) {
      w.push_back(Letter{i});
    }
    return w;
  }

}  // namespace reversing

#endif  // REVERSING_WORD_HPP_
