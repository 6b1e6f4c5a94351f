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

// Garside elements, divisor lattices and right-greedy normal forms, for
// complete complemented presentations.

#ifndef REVERSING_GARSIDE_HPP_
#define REVERSING_GARSIDE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "completeness.hpp"
#include "decision.hpp"
#include "engine.hpp"
#include "equivalence.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace reversing {

  class NotGarside : public Error {
   public:
    using Error::Error;
  };

  namespace detail {
    inline void require_garside_hypotheses(Presentation const& p, Limits const& limits) {
      if (!is_complemented(p)) {
        throw PreconditionError("presentation is not complemented");
      }
      auto c = check_completeness(p, limits);
      if (c.status != Completeness::Complete) {
        throw PreconditionError(std::string("completeness is ") + to_string(c.status));
      }
      if (!left_cancellative(p, limits, c).yes()) {
        throw PreconditionError("left cancellativity not established");
      }
      if (!right_cancellative(p, limits).yes()) {
        throw PreconditionError("right cancellativity not established");
      }
    }

    // u <= v for the left divisibility, complemented complete case.
    inline bool left_divides_det(Presentation const& p, Word const& u, Word const& v,
                                 Limits const& limits) {
      auto c = complements(p, u, v, limits);
      return c && c->second.empty();
    }

    inline bool equivalent_det(Presentation const& p, Word const& u, Word const& v,
                               Limits const& limits) {
      auto c = complements(p, u, v, limits);
      return c && c->first.empty() && c->second.empty();
    }

    inline bool right_divides_det(Presentation const& mirrored, Word const& u,
                                  Word const& v, Limits const& limits) {
      return left_divides_det(mirrored, reversed(u), reversed(v), limits);
    }
  }  // namespace detail

  //! The right-lcm of the closure of the letters under complement and
  //! right-lcm, as its shortlex-least representative.  Nothing when the
  //! closure exceeds \p max_size.
  inline std::optional<Word> find_garside_candidate(Presentation const& p,
                                                    Limits const&       limits   = {},
                                                    std::size_t         max_size = 4096) {
    detail::require_garside_hypotheses(p, limits);
    ClassCache        classes(p, limits);
    std::vector<Word> set;
    std::unordered_map<Word, bool, WordHash> seen;
    std::deque<Word>  queue;
    auto add = [&](Word const& w) {
      auto rep = classes.representative(w);
      if (!rep) {
        throw LimitExceeded("equivalence class too large");
      }
      if (seen.emplace(*rep, true).second) {
        set.push_back(*rep);
        queue.push_back(*rep);
      }
    };
    for (auto s : p.alphabet()) {
      add(Word{s});
    }
    while (!queue.empty()) {
      if (set.size() > max_size) {
        return std::nullopt;
      }
      Word x = queue.front();
      queue.pop_front();
      std::vector<Word> current = set;
      for (auto const& y : current) {
        for (int side = 0; side < 2; ++side) {
          Word const& a = side == 0 ? x : y;
          Word const& b = side == 0 ? y : x;
          auto        c = complements(p, a, b, limits);
          if (!c) {
            return std::nullopt;  // no common multiple
          }
          add(c->first);
          add(concat(a, c->first));
        }
      }
    }
    Word delta;
    for (auto const& x : set) {
      auto c = complement(p, delta, x, limits);
      if (!c) {
        return std::nullopt;
      }
      delta = concat(delta, *c);
    }
    return classes.representative(delta);
  }

  struct DivisorLattice {
    Word              delta;
    std::vector<Word> elements;  // shortlex-least representatives, sorted
    //! (i, j, s): elements[i] s = elements[j].
    std::vector<std::tuple<std::size_t, std::size_t, Letter>> edges;

    std::size_t size() const noexcept {
      return elements.size();
    }

    std::optional<std::size_t> index(Word const& rep) const {
      auto it = std::lower_bound(elements.begin(), elements.end(), rep, shortlex_less);
      if (it == elements.end() || *it != rep) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - elements.begin());
    }
  };

  namespace detail {
    // Left divisors of delta, as class representatives.
    inline std::vector<Word> left_divisor_set(Presentation const& p,
                                              Word const&         delta,
                                              Limits const&       limits,
                                              ClassCache&         classes) {
      std::vector<Word>                        out{Word{}};
      std::unordered_map<Word, bool, WordHash> seen{{Word{}, true}};
      std::deque<Word>                         queue{Word{}};
      while (!queue.empty()) {
        Word x = queue.front();
        queue.pop_front();
        for (auto s : p.alphabet()) {
          Word xs = concat(x, Word{s});
          if (!left_divides_det(p, xs, delta, limits)) {
            continue;
          }
          auto rep = classes.representative(xs);
          if (!rep) {
            throw LimitExceeded("equivalence class too large");
          }
          if (seen.emplace(*rep, true).second) {
            if (out.size() >= limits.max_frontier) {
              throw LimitExceeded("too many divisors");
            }
            out.push_back(*rep);
            queue.push_back(*rep);
          }
        }
      }
      std::sort(out.begin(), out.end(), shortlex_less);
      return out;
    }
  }  // namespace detail

  //! All divisors of \p delta.  Throws NotGarside when the left and right
  //! divisors differ.
  inline DivisorLattice divisors(Presentation const& p,
                                 Word const&         delta,
                                 Limits const&       limits = {}) {
    DivisorLattice out;
    ClassCache     classes(p, limits);
    auto           rep = classes.representative(delta);
    if (!rep) {
      throw LimitExceeded("equivalence class of delta too large");
    }
    out.delta    = *rep;
    out.elements = detail::left_divisor_set(p, out.delta, limits, classes);

    auto              m = mirror(p);
    ClassCache        mirrored(m, limits);
    std::vector<Word> right;
    for (auto const& w : detail::left_divisor_set(m, reversed(out.delta), limits, mirrored)) {
      auto r = classes.representative(reversed(w));
      if (!r) {
        throw LimitExceeded("equivalence class too large");
      }
      right.push_back(*r);
    }
    std::sort(right.begin(), right.end(), shortlex_less);
    if (right != out.elements) {
      throw NotGarside("left and right divisors of delta differ ("
                       + std::to_string(out.elements.size()) + " vs "
                       + std::to_string(right.size()) + ")");
    }
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      for (auto s : p.alphabet()) {
        auto r = classes.representative(concat(out.elements[i], Word{s}));
        if (!r) {
          continue;
        }
        if (auto j = out.index(*r)) {
          out.edges.emplace_back(i, *j, s);
        }
      }
    }
    return out;
  }

  struct NormalSequence {
    std::vector<Word> factors;
    Word              delta;

    Word product() const {
      Word out;
      for (auto const& f : factors) {
        out.insert(out.end(), f.begin(), f.end());
      }
      return out;
    }
  };

  //! The longest divisor of delta in \p lattice that right-divides \p w.
  inline Word max_simple_right_divisor(Presentation const&   p,
                                       DivisorLattice const& lattice,
                                       Word const&           w,
                                       Limits const&         limits = {}) {
    auto m    = mirror(p);
    Word best;
    for (auto const& d : lattice.elements) {
      if (d.size() > best.size() && detail::right_divides_det(m, d, w, limits)) {
        best = d;
      }
    }
    return best;
  }

  inline bool is_normal(Presentation const&      p,
                        DivisorLattice const&    lattice,
                        std::vector<Word> const& seq,
                        Limits const&            limits = {}) {
    if (seq.empty() || detail::equivalent_det(p, seq.front(), Word{}, limits)) {
      return false;
    }
    Word prefix;
    for (auto const& x : seq) {
      if (!detail::left_divides_det(p, x, lattice.delta, limits)) {
        return false;
      }
      prefix   = concat(prefix, x);
      auto max = max_simple_right_divisor(p, lattice, prefix, limits);
      if (!detail::equivalent_det(p, x, max, limits)) {
        return false;
      }
    }
    return true;
  }

  inline bool is_normal(Presentation const&      p,
                        Word const&              delta,
                        std::vector<Word> const& seq,
                        Limits const&            limits = {}) {
    return is_normal(p, divisors(p, delta, limits), seq, limits);
  }

  //! Right-normal decomposition of \p w: heads are extracted on the mirror
  //! presentation as left-gcds with the mirrored delta.
  inline NormalSequence normal_form(Presentation const& p,
                                    Word const&         delta,
                                    Word const&         w,
                                    Limits const&       limits = {}) {
    auto       m = mirror(p);
    Word       dm = reversed(delta);
    Word       rest = reversed(w);
    ClassCache classes(p, limits);
    NormalSequence out;
    out.delta = classes.key(delta);
    std::vector<Word> heads;
    while (!rest.empty()) {
      Word h = left_gcd(m, rest, dm, limits);
      if (h.empty()) {
        throw Error("normal_form: no nontrivial head, delta is not a Garside element");
      }
      auto c = complements(m, h, rest, limits);
      if (!c || !c->second.empty()) {
        throw Error("normal_form: head does not divide");
      }
      rest = c->first;
      heads.push_back(classes.key(reversed(h)));
    }
    if (heads.empty()) {
      throw Error("normal_form: the empty word has no normal decomposition");
    }
    out.factors.assign(heads.rbegin(), heads.rend());
    return out;
  }

  //! The normal form of y^-1 x from that of x, by the reversings
  //! v_{i-1}^-1 u_i => u'_i v_i^-1 with v_0 = y.  Leading empty factors are
  //! dropped; the result has no factor when y represents x.
  inline NormalSequence left_divide_normal(Presentation const&   p,
                                           NormalSequence const& seq,
                                           Word const&           y,
                                           Limits const&         limits = {}) {
    ClassCache     classes(p, limits);
    NormalSequence out;
    out.delta = seq.delta;
    Word v    = y;
    for (auto const& u : seq.factors) {
      auto c = complements(p, v, u, limits);
      if (!c) {
        throw Error("left_divide_normal: reversing is stuck");
      }
      out.factors.push_back(classes.key(c->first));
      v = c->second;
    }
    if (!v.empty()) {
      throw Error("left_divide_normal: the word does not left-divide the sequence");
    }
    auto first = std::find_if(out.factors.begin(), out.factors.end(),
                              [](Word const& f) { return !f.empty(); });
    out.factors.erase(out.factors.begin(), first);
    return out;
  }

  //! Bracket notation, e.g. "[s1 s2 s1][s1]".
  inline std::string format(Presentation const& p, NormalSequence const& seq) {
    std::string out;
    for (auto const& f : seq.factors) {
      out += "[" + format(p, f) + "]";
    }
    return out;
  }

}  // namespace reversing

#endif  // REVERSING_GARSIDE_HPP_
