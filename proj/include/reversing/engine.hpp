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

// Subword reversing.  A right step replaces s^-1 t by v' v^-1 where
// s v' = t v is a relation, or s^-1 s by the empty word (the trivial tile,
// which is not counted as a step).  Left reversing is obtained by running
// right reversing on the mirror presentation.
//
// Exhaustive searches only branch on the leftmost reducible factor.  Steps
// on disjoint factors commute and a stuck factor never disappears, so the
// set of irreducible words reached is the same as when branching on every
// factor; the test suite checks this against a naive closure.

#ifndef REVERSING_ENGINE_HPP_
#define REVERSING_ENGINE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace reversing {

  struct Limits {
    std::size_t max_steps       = 100000;
    std::size_t max_word_length = 4096;
    std::size_t max_frontier    = 1000000;
  };

  class LimitExceeded : public Error {
   public:
    using Error::Error;
  };

  enum class ReversalStatus { Terminal, Stuck, LimitExceeded };

  enum class Strategy { Leftmost, Exhaustive };

  inline char const* to_string(ReversalStatus s) {
    switch (s) {
      case ReversalStatus::Terminal:
        return "Terminal";
      case ReversalStatus::Stuck:
        return "Stuck";
      case ReversalStatus::LimitExceeded:
        return "LimitExceeded";
    }
    return "?";
  }

  //! One step: the factor at \p position is rewritten with tile number
  //! \p tile of the corresponding tile list.
  struct StepRecord {
    std::size_t position;
    std::size_t tile;

    friend bool operator==(StepRecord const&, StepRecord const&) = default;
  };

  struct ReversalOutcome {
    ReversalStatus status = ReversalStatus::Terminal;
    //! Present iff status is Terminal; positive-negative (right) or
    //! negative-positive (left).
    std::optional<SignedWord> terminal;
    //! The last word reached, whatever the status.
    SignedWord last;
    //! For Stuck: the leftmost factor with no eligible relation.
    std::optional<std::pair<Letter, Letter>> stuck_pair;
    std::size_t                              steps       = 0;  // nontrivial
    std::size_t                              total_steps = 0;
    std::size_t                              explored    = 0;
    std::vector<SignedWord>                  trace;
    std::vector<StepRecord>                  path;

    //! N and D with terminal = N D^-1 (right) or D^-1 N (left).
    std::optional<Word> numerator;
    std::optional<Word> denominator;
  };

  //////////////////////////////////////////////////////////////////////////
  // Single steps
  //////////////////////////////////////////////////////////////////////////

  inline bool is_factor(SignedWord const& w, std::size_t i) {
    return i + 1 < w.size() && w[i].inverse && w[i + 1].positive();
  }

  //! Rewrites s^-1 t at \p i with \p tile in place.
  inline void apply_tile(SignedWord& w, std::size_t i, Tile const& tile) {
    SignedWord mid;
    mid.reserve(tile.left.size() + tile.right.size());
    for (auto s : tile.left) {
      mid.push_back(pos(s));
    }
    for (auto it = tile.right.rbegin(); it != tile.right.rend(); ++it) {
      mid.push_back(neg(*it));
    }
    auto at = w.erase(w.begin() + i, w.begin() + i + 2);
    w.insert(at, mid.begin(), mid.end());
  }

  inline std::size_t tile_growth(Tile const& tile) {
    return tile.left.size() + tile.right.size();
  }

  //! One right-reversing step at \p position using tile number \p tile of
  //! right_tiles(s, t).
  inline SignedWord reverse_step_right(Presentation const& p,
                                       SignedWord          w,
                                       std::size_t         position,
                                       std::size_t         tile) {
    if (!is_factor(w, position)) {
      throw Error("no factor s^-1 t at position " + std::to_string(position));
    }
    auto tiles = p.right_tiles(w[position].letter, w[position + 1].letter);
    if (tile >= tiles.size()) {
      throw Error("tile " + std::to_string(tile) + " is not eligible here");
    }
    apply_tile(w, position, tiles[tile]);
    return w;
  }

  //! Same, choosing the tile by relation id (nothing for the trivial tile).
  inline SignedWord reverse_step_right(Presentation const&        p,
                                       SignedWord                 w,
                                       std::size_t                position,
                                       std::optional<std::size_t> relation) {
    if (!is_factor(w, position)) {
      throw Error("no factor s^-1 t at position " + std::to_string(position));
    }
    auto tiles = p.right_tiles(w[position].letter, w[position + 1].letter);
    for (std::size_t k = 0; k < tiles.size(); ++k) {
      if (tiles[k].relation == relation) {
        apply_tile(w, position, tiles[k]);
        return w;
      }
    }
    throw Error("relation is not eligible at position "
                + std::to_string(position));
  }

  //! Leftmost factor s^-1 t at or after \p from with at least one tile.
  inline std::optional<std::size_t> leftmost_reducible(Presentation const& p,
                                                       SignedWord const&   w,
                                                       std::size_t from = 0) {
    for (std::size_t i = from; i + 1 < w.size(); ++i) {
      if (is_factor(w, i) && !p.right_tiles(w[i].letter, w[i + 1].letter).empty()) {
        return i;
      }
    }
    return std::nullopt;
  }

  inline std::optional<std::pair<Letter, Letter>>
  leftmost_stuck(Presentation const& p, SignedWord const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (is_factor(w, i) && p.right_tiles(w[i].letter, w[i + 1].letter).empty()) {
        return std::make_pair(w[i].letter, w[i + 1].letter);
      }
    }
    return std::nullopt;
  }

  inline bool is_positive_negative(SignedWord const& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (is_factor(w, i)) {
        return false;
      }
    }
    return true;
  }

  namespace detail {
    inline void set_fraction(ReversalOutcome& out) {
      if (out.terminal) {
        auto nd = split_positive_negative(*out.terminal);
        out.numerator   = nd->first;
        out.denominator = nd->second;
      }
    }
  }  // namespace detail

  //////////////////////////////////////////////////////////////////////////
  // Deterministic leftmost reversing
  //////////////////////////////////////////////////////////////////////////

  inline ReversalOutcome reverse_right_leftmost(Presentation const& p,
                                                SignedWord          w,
                                                Limits const&       limits,
                                                bool                trace) {
    ReversalOutcome out;
    if (trace) {
      out.trace.push_back(w);
    }
    std::size_t cursor = 0;
    while (true) {
      auto i = leftmost_reducible(p, w, cursor);
      if (!i) {
        break;
      }
      auto const& tile = p.right_tiles(w[*i].letter, w[*i + 1].letter)[0];
      if (!tile.trivial() && out.steps >= limits.max_steps) {
        out.status = ReversalStatus::LimitExceeded;
        out.last   = std::move(w);
        return out;
      }
      if (w.size() - 2 + tile_growth(tile) > limits.max_word_length) {
        out.status = ReversalStatus::LimitExceeded;
        out.last   = std::move(w);
        return out;
      }
      apply_tile(w, *i, tile);
      out.path.push_back({*i, 0});
      out.total_steps++;
      if (!tile.trivial()) {
        out.steps++;
      }
      if (trace) {
        out.trace.push_back(w);
      }
      cursor = *i == 0 ? 0 : *i - 1;
    }
    out.explored   = out.total_steps + 1;
    out.stuck_pair = leftmost_stuck(p, w);
    if (out.stuck_pair) {
      out.status = ReversalStatus::Stuck;
    } else {
      out.status   = ReversalStatus::Terminal;
      out.terminal = w;
    }
    out.last = std::move(w);
    detail::set_fraction(out);
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // Breadth-first search over reversing sequences
  //////////////////////////////////////////////////////////////////////////

  enum class SearchGoal {
    PositiveNegative,  // any word v' v^-1
    Empty,             // the empty word
    Positive           // a word v' with empty denominator
  };

  namespace detail {

    inline bool reaches(SearchGoal g, SignedWord const& w) {
      switch (g) {
        case SearchGoal::PositiveNegative:
          return is_positive_negative(w);
        case SearchGoal::Empty:
          return w.empty();
        case SearchGoal::Positive:
          return is_positive(w);
      }
      return false;
    }

    struct SearchNode {
      SignedWord  word;
      std::size_t parent;
      StepRecord  step;
      std::size_t dist;   // nontrivial steps
      std::size_t total;  // all steps
      bool        done = false;
    };

    struct SearchState {
      std::vector<SearchNode>                               nodes;
      std::unordered_map<SignedWord, std::size_t, WordHash> index;
      bool                                                  truncated = false;
    };

    constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();

    inline ReversalOutcome outcome_from(SearchState const& st,
                                        std::size_t        found,
                                        bool               trace) {
      ReversalOutcome out;
      out.status   = ReversalStatus::Terminal;
      out.terminal = st.nodes[found].word;
      out.last     = st.nodes[found].word;
      out.steps    = st.nodes[found].dist;
      out.total_steps = st.nodes[found].total;
      out.explored    = st.nodes.size();
      std::vector<std::size_t> chain;
      for (std::size_t k = found; k != no_parent; k = st.nodes[k].parent) {
        chain.push_back(k);
      }
      std::reverse(chain.begin(), chain.end());
      for (std::size_t j = 0; j < chain.size(); ++j) {
        if (j > 0) {
          out.path.push_back(st.nodes[chain[j]].step);
        }
        if (trace) {
          out.trace.push_back(st.nodes[chain[j]].word);
        }
      }
      set_fraction(out);
      return out;
    }

    // 0-1 breadth-first search; trivial tiles cost nothing.  Calls
    // visit(word) on each irreducible word; stops when it returns true.
    template <typename Visit>
    std::optional<std::size_t> explore(Presentation const& p,
                                       SignedWord const&   w,
                                       Limits const&       limits,
                                       bool                prune_stuck,
                                       SearchState&        st,
                                       Visit&&             visit) {
      std::deque<std::size_t> queue;
      st.nodes.push_back({w, no_parent, {0, 0}, 0, 0});
      st.index.emplace(w, 0);
      queue.push_back(0);
      std::size_t expanded = 0;
      while (!queue.empty()) {
        std::size_t k = queue.front();
        queue.pop_front();
        if (st.nodes[k].done) {
          continue;
        }
        st.nodes[k].done = true;
        SignedWord cur   = st.nodes[k].word;
        auto       i     = leftmost_reducible(p, cur);
        if (!i) {
          if (visit(cur)) {
            return k;
          }
          continue;
        }
        if (prune_stuck && leftmost_stuck(p, cur)) {
          continue;
        }
        if (++expanded > limits.max_frontier) {
          st.truncated = true;
          return std::nullopt;
        }
        auto tiles = p.right_tiles(cur[*i].letter, cur[*i + 1].letter);
        for (std::size_t t = 0; t < tiles.size(); ++t) {
          bool        free  = tiles[t].trivial();
          std::size_t dist  = st.nodes[k].dist + (free ? 0 : 1);
          std::size_t total = st.nodes[k].total + 1;
          if (dist > limits.max_steps
              || cur.size() - 2 + tile_growth(tiles[t]) > limits.max_word_length) {
            st.truncated = true;
            continue;
          }
          SignedWord next = cur;
          apply_tile(next, *i, tiles[t]);
          auto it = st.index.find(next);
          if (it == st.index.end()) {
            std::size_t id = st.nodes.size();
            st.nodes.push_back({next, k, {*i, t}, dist, total});
            st.index.emplace(std::move(next), id);
            free ? queue.push_front(id) : queue.push_back(id);
          } else if (!st.nodes[it->second].done
                     && dist < st.nodes[it->second].dist) {
            auto& n  = st.nodes[it->second];
            n.parent = k;
            n.step   = {*i, t};
            n.dist   = dist;
            n.total  = total;
            free ? queue.push_front(it->second) : queue.push_back(it->second);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  //! Searches the reversing sequences of \p w for a word meeting \p goal,
  //! with as few nontrivial steps as possible.  Terminal if found, Stuck if
  //! the search space was exhausted, LimitExceeded otherwise.
  inline ReversalOutcome search_right(Presentation const& p,
                                      SignedWord const&   w,
                                      SearchGoal          goal,
                                      Limits const&       limits,
                                      bool                trace = false) {
    detail::SearchState st;
    std::optional<SignedWord> some_irreducible;
    auto found = detail::explore(p, w, limits, true, st, [&](SignedWord const& x) {
      if (detail::reaches(goal, x)) {
        return true;
      }
      if (!some_irreducible) {
        some_irreducible = x;
      }
      return false;
    });
    if (found) {
      return detail::outcome_from(st, *found, trace);
    }
    ReversalOutcome out;
    out.explored = st.nodes.size();
    if (st.truncated) {
      out.status = ReversalStatus::LimitExceeded;
      out.last   = w;
      return out;
    }
    out.status = ReversalStatus::Stuck;
    if (some_irreducible) {
      out.last = *some_irreducible;
    } else {
      // Every branch contains a stuck factor; report one.
      for (auto const& n : st.nodes) {
        if (!leftmost_reducible(p, n.word) || leftmost_stuck(p, n.word)) {
          out.last = n.word;
          break;
        }
      }
    }
    out.stuck_pair = leftmost_stuck(p, out.last);
    return out;
  }

  struct ReversalSet {
    std::vector<SignedWord> words;  // irreducible words, sorted
    bool                    truncated = false;
    std::size_t             explored  = 0;
  };

  //! Every irreducible word reachable from \p w within \p limits.
  inline ReversalSet reverse_all_right(Presentation const& p,
                                       SignedWord const&   w,
                                       Limits const&       limits) {
    detail::SearchState st;
    ReversalSet         out;
    detail::explore(p, w, limits, false, st, [&](SignedWord const& x) {
      out.words.push_back(x);
      return false;
    });
    std::sort(out.words.begin(), out.words.end());
    out.truncated = st.truncated;
    out.explored  = st.nodes.size();
    return out;
  }

  //! The positive-negative words reachable from \p w.
  inline ReversalSet reverse_all_right_terminal(Presentation const& p,
                                                SignedWord const&   w,
                                                Limits const&       limits) {
    detail::SearchState st;
    ReversalSet         out;
    detail::explore(p, w, limits, true, st, [&](SignedWord const& x) {
      if (is_positive_negative(x)) {
        out.words.push_back(x);
      }
      return false;
    });
    std::sort(out.words.begin(), out.words.end());
    out.truncated = st.truncated;
    out.explored  = st.nodes.size();
    return out;
  }

  inline ReversalOutcome reverse_right(Presentation const& p,
                                       SignedWord const&   w,
                                       Strategy            strategy = Strategy::Leftmost,
                                       Limits const&       limits   = {},
                                       bool                trace    = false) {
    if (strategy == Strategy::Leftmost) {
      return reverse_right_leftmost(p, w, limits, trace);
    }
    return search_right(p, w, SearchGoal::PositiveNegative, limits, trace);
  }

  //////////////////////////////////////////////////////////////////////////
  // Left reversing via the mirror presentation
  //////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void unmirror(ReversalOutcome& out) {
      auto flip = [](SignedWord& w) { std::reverse(w.begin(), w.end()); };
      flip(out.last);
      for (auto& w : out.trace) {
        flip(w);
      }
      if (out.terminal) {
        flip(*out.terminal);
        auto nd         = split_negative_positive(*out.terminal);
        out.denominator = nd->first;
        out.numerator   = nd->second;
      }
      if (out.stuck_pair) {
        // The mirrored factor s^-1 t is t s^-1 in the original word.
        out.stuck_pair = std::make_pair(out.stuck_pair->second,
                                        out.stuck_pair->first);
      }
    }
  }  // namespace detail

  //! Left reversing: t s^-1 becomes v^-1 v' where v t = v' s.  The terminal
  //! word is negative-positive, D^-1 N.  Recorded positions refer to the
  //! mirrored word.
  inline ReversalOutcome reverse_left(Presentation const& p,
                                      SignedWord const&   w,
                                      Strategy            strategy = Strategy::Leftmost,
                                      Limits const&       limits   = {},
                                      bool                trace    = false) {
    auto out = reverse_right(mirror(p), reversed(w), strategy, limits, trace);
    detail::unmirror(out);
    return out;
  }

  inline ReversalOutcome search_left(Presentation const& p,
                                     SignedWord const&   w,
                                     SearchGoal          goal,
                                     Limits const&       limits) {
    auto out = search_right(mirror(p), reversed(w), goal, limits);
    detail::unmirror(out);
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // Complements
  //////////////////////////////////////////////////////////////////////////

  //! (u\v, v\u) in a complemented presentation: u^-1 v reverses to
  //! (u\v)(v\u)^-1.  Nothing if the reversal gets stuck.
  inline std::optional<std::pair<Word, Word>>
  complements(Presentation const& p, Word const& u, Word const& v,
              Limits const& limits = {}) {
    auto out = reverse_right_leftmost(p, quotient(u, v), limits, false);
    if (out.status == ReversalStatus::LimitExceeded) {
      throw LimitExceeded("reversing limit exceeded while computing a complement");
    }
    if (out.status == ReversalStatus::Stuck) {
      return std::nullopt;
    }
    return std::make_pair(*out.numerator, *out.denominator);
  }

  //! u\v, the word with u^-1 v => (u\v)(v\u)^-1.
  inline std::optional<Word> complement(Presentation const& p,
                                        Word const&         u,
                                        Word const&         v,
                                        Limits const&       limits = {}) {
    auto c = complements(p, u, v, limits);
    if (!c) {
      return std::nullopt;
    }
    return c->first;
  }

  //! Right-reverses \p w to N D^-1 and returns (N, D).
  inline std::pair<Word, Word> numerator_denominator_right(Presentation const& p,
                                                           SignedWord const&   w,
                                                           Limits const& limits = {}) {
    auto out = reverse_right_leftmost(p, w, limits, false);
    if (out.status == ReversalStatus::LimitExceeded) {
      throw LimitExceeded("reversing limit exceeded");
    }
    if (out.status == ReversalStatus::Stuck) {
      throw Error("right reversing is stuck");
    }
    return {*out.numerator, *out.denominator};
  }

  //! Left-reverses \p w to D^-1 N and returns (D, N).
  inline std::pair<Word, Word> denominator_numerator_left(Presentation const& p,
                                                          SignedWord const&   w,
                                                          Limits const& limits = {}) {
    auto out = reverse_left(p, w, Strategy::Leftmost, limits);
    if (out.status == ReversalStatus::LimitExceeded) {
      throw LimitExceeded("reversing limit exceeded");
    }
    if (out.status == ReversalStatus::Stuck) {
      throw Error("left reversing is stuck");
    }
    return {*out.denominator, *out.numerator};
  }

  //! Number of nontrivial steps needed to reverse u^-1 v to the empty word
  //! (the fewest over all reversing sequences); nothing if it does not.
  inline std::optional<std::size_t> reversing_distance(Presentation const& p,
                                                       Word const&         u,
                                                       Word const&         v,
                                                       Limits const& limits = {}) {
    auto out = search_right(p, quotient(u, v), SearchGoal::Empty, limits);
    if (out.status != ReversalStatus::Terminal) {
      return std::nullopt;
    }
    return out.steps;
  }

}  // namespace reversing

#endif  // REVERSING_ENGINE_HPP_
