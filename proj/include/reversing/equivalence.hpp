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

// Positive equivalence by brute force: breadth-first search over the words
// obtained by replacing one relation side with the other.  Independent of
// reversing; used as an oracle and for canonical representatives.

#ifndef REVERSING_EQUIVALENCE_HPP_
#define REVERSING_EQUIVALENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <unordered_map>
#include <vector>

#include "engine.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace reversing {

  namespace detail {
    // Calls f(next) for each word one relation application away from w.
    template <typename F>
    void neighbours(Presentation const& p, Word const& w, F&& f) {
      for (auto const& r : p.relations()) {
        for (int dir = 0; dir < 2; ++dir) {
          Word const& x = dir == 0 ? r.lhs : r.rhs;
          Word const& y = dir == 0 ? r.rhs : r.lhs;
          if (x.size() > w.size()) {
            continue;
          }
          for (std::size_t i = 0; i + x.size() <= w.size(); ++i) {
            if (std::equal(x.begin(), x.end(), w.begin() + i)) {
              Word next;
              next.reserve(w.size() - x.size() + y.size());
              next.insert(next.end(), w.begin(), w.begin() + i);
              next.insert(next.end(), y.begin(), y.end());
              next.insert(next.end(), w.begin() + i + x.size(), w.end());
              f(next);
            }
          }
        }
      }
    }
  }  // namespace detail

  struct OracleResult {
    std::optional<std::size_t> distance;  // relation applications
    bool                       exhausted = false;  // search space finished
    std::size_t                explored  = 0;
  };

  //! Minimal number of single relation applications turning u into v.
  inline OracleResult bfs_equivalence_oracle(Presentation const& p,
                                             Word const&         u,
                                             Word const&         v,
                                             Limits const&       limits = {}) {
    OracleResult                                    out;
    std::unordered_map<Word, std::size_t, WordHash> dist;
    std::deque<Word>                                queue;
    dist.emplace(u, 0);
    queue.push_back(u);
    bool truncated = false;
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      std::size_t d = dist[w];
      if (w == v) {
        out.distance = d;
        out.explored = dist.size();
        return out;
      }
      detail::neighbours(p, w, [&](Word const& next) {
        if (next.size() > limits.max_word_length) {
          truncated = true;
          return;
        }
        if (dist.count(next) != 0) {
          return;
        }
        if (dist.size() >= limits.max_frontier) {
          truncated = true;
          return;
        }
        dist.emplace(next, d + 1);
        queue.push_back(next);
      });
    }
    out.exhausted = !truncated;
    out.explored  = dist.size();
    return out;
  }

  struct WordClass {
    std::vector<Word> words;  // shortlex sorted
    bool              complete = false;
  };

  //! The positive equivalence class of \p w, or a part of it when the
  //! limits are reached.
  inline WordClass enumerate_class(Presentation const& p,
                                   Word const&         w,
                                   Limits const&       limits = {}) {
    std::unordered_map<Word, bool, WordHash> seen;
    std::deque<Word>                         queue;
    seen.emplace(w, true);
    queue.push_back(w);
    bool truncated = false;
    while (!queue.empty()) {
      Word x = std::move(queue.front());
      queue.pop_front();
      detail::neighbours(p, x, [&](Word const& next) {
        if (next.size() > limits.max_word_length) {
          truncated = true;
          return;
        }
        if (seen.count(next) != 0) {
          return;
        }
        if (seen.size() >= limits.max_frontier) {
          truncated = true;
          return;
        }
        seen.emplace(next, true);
        queue.push_back(next);
      });
    }
    WordClass out;
    for (auto& kv : seen) {
      out.words.push_back(kv.first);
    }
    std::sort(out.words.begin(), out.words.end(), shortlex_less);
    out.complete = !truncated;
    return out;
  }

  //! The shortlex-least word equivalent to \p w, when its class is finite
  //! and fits within the limits.
  inline std::optional<Word> class_representative(Presentation const& p,
                                                  Word const&         w,
                                                  Limits const& limits = {}) {
    auto c = enumerate_class(p, w, limits);
    if (!c.complete) {
      return std::nullopt;
    }
    return c.words.front();
  }

  //! Caches class representatives.
  class ClassCache {
   public:
    ClassCache(Presentation const& p, Limits limits = {})
        : _p(&p), _limits(limits) {}

    std::optional<Word> representative(Word const& w) {
      auto it = _rep.find(w);
      if (it != _rep.end()) {
        return it->second;
      }
      auto c = enumerate_class(*_p, w, _limits);
      if (!c.complete) {
        _rep.emplace(w, std::nullopt);
        return std::nullopt;
      }
      for (auto const& x : c.words) {
        _rep.emplace(x, c.words.front());
      }
      return c.words.front();
    }

    //! Representative when available, the word itself otherwise.
    Word key(Word const& w) {
      auto r = representative(w);
      return r ? *r : w;
    }

   private:
    Presentation const*                                    _p;
    Limits                                                 _limits;
    std::unordered_map<Word, std::optional<Word>, WordHash> _rep;
  };

}  // namespace reversing

#endif  // REVERSING_EQUIVALENCE_HPP_
