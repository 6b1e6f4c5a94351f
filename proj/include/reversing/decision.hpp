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

#ifndef REVERSING_DECISION_HPP_
#define REVERSING_DECISION_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "completeness.hpp"
#include "engine.hpp"
#include "equivalence.hpp"
#include "presentation.hpp"
#include "text.hpp"
#include "word.hpp"

namespace reversing {

  enum class Answer { Yes, No, Unknown };

  inline char const* to_string(Answer a) {
    switch (a) {
      case Answer::Yes:
        return "Yes";
      case Answer::No:
        return "No";
      case Answer::Unknown:
        return "Unknown";
    }
    return "?";
  }

  struct Prerequisite {
    std::string name;
    std::string status;
  };

  struct Verdict {
    Answer                    answer = Answer::Unknown;
    std::string               method;
    std::vector<std::string>  evidence;
    std::vector<Prerequisite> prerequisites;
    std::size_t               explored = 0;

    bool yes() const noexcept {
      return answer == Answer::Yes;
    }

    bool no() const noexcept {
      return answer == Answer::No;
    }
  };

  namespace detail {
    inline Prerequisite prerequisite(std::string name,
                                     CompletenessVerdict const& v) {
      return {std::move(name),
              std::string(to_string(v.status)) + " (" + to_string(v.method)
                  + ")"};
    }

    inline CompletenessVerdict completeness_or_unknown(Presentation const& p,
                                                       Limits const& limits) {
      try {
        return check_completeness(p, limits);
      } catch (PreconditionError const&) {
        return {};
      }
    }
  }  // namespace detail

  //////////////////////////////////////////////////////////////////////////
  // Cancellativity
  //////////////////////////////////////////////////////////////////////////

  namespace detail {
    // The reversing criterion on p, taken as complete.
    inline void cancellation_criterion(Presentation const& p, Limits const& limits,
                                       Verdict& out, bool& failed, bool& unknown) {
      for (auto const& r : p.relations()) {
        if (r.lhs.front() != r.rhs.front()) {
          continue;
        }
        Word v(r.lhs.begin() + 1, r.lhs.end());
        Word v1(r.rhs.begin() + 1, r.rhs.end());
        auto res = search_right(p, quotient(v, v1), SearchGoal::Empty, limits);
        out.explored += res.explored;
        std::string rel = format(p, r.lhs) + " = " + format(p, r.rhs);
        if (res.status == ReversalStatus::Terminal) {
          out.evidence.push_back(rel + ": tails reverse to the empty word");
        } else if (res.status == ReversalStatus::Stuck) {
          failed = true;
          out.evidence.push_back(rel + ": tails do not reverse to the empty word ("
                                 + format(p, res.last) + ")");
        } else {
          unknown = true;
          out.evidence.push_back(rel + ": limit reached");
        }
      }
    }
  }  // namespace detail

  //! Left cancellativity: with a complete presentation, every relation
  //! s v = s v' must have v^-1 v' reversing to the empty word.  An
  //! incomplete homogeneous presentation is completed first; the added
  //! relations hold in the monoid, so the criterion still applies.
  inline Verdict left_cancellative(Presentation const&                       p,
                                   Limits const&                             limits = {},
                                   std::optional<CompletenessVerdict> const& known  = {}) {
    Verdict out;
    out.method = "reversing criterion for relations s v = s v'";
    auto complete = known ? *known : detail::completeness_or_unknown(p, limits);
    out.prerequisites.push_back(detail::prerequisite("completeness", complete));
    Presentation q = p;
    if (complete.status == Completeness::Incomplete && homogeneity_witness(p)) {
      CompletionOptions opts;
      opts.max_added = 8;
      auto res       = complete_presentation(p, completion_limits(), opts);
      if (res.status == CompletionStatus::Completed) {
        q        = res.final;
        complete = check_completeness(q, limits);
        for (auto const& r : res.added) {
          out.evidence.push_back("completion added " + format(q, r.lhs) + " = "
                                 + format(q, r.rhs));
        }
        out.prerequisites.push_back(detail::prerequisite("completeness after completion",
                                                         complete));
      }
    }
    bool unknown = false;
    bool failed  = false;
    detail::cancellation_criterion(q, limits, out, failed, unknown);
    if (complete.status != Completeness::Complete) {
      out.evidence.push_back("completeness not established");
      return out;
    }
    if (failed) {
      out.answer = Answer::No;
    } else if (!unknown) {
      out.answer = Answer::Yes;
      if (out.evidence.empty()) {
        out.evidence.push_back("no relation of the form s... = s...");
      }
    }
    return out;
  }

  inline Verdict right_cancellative(Presentation const& p, Limits const& limits = {}) {
    auto out   = left_cancellative(mirror(p), limits);
    out.method = "left criterion on the mirror presentation";
    if (!out.prerequisites.empty()) {
      out.prerequisites[0].name = "completeness of the mirror";
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // Word problems
  //////////////////////////////////////////////////////////////////////////

  //! u and v are positively equivalent iff u^-1 v reverses to the empty word
  //! (complete presentations).  Reaching the empty word is a proof in any
  //! case; a negative answer needs completeness.
  inline Verdict equivalent_monoid(Presentation const&                       p,
                                   Word const&                               u,
                                   Word const&                               v,
                                   Limits const&                             limits = {},
                                   std::optional<CompletenessVerdict> const& known  = {}) {
    Verdict out;
    out.method = "exhaustive right reversing of u^-1 v";
    auto res   = search_right(p, quotient(u, v), SearchGoal::Empty, limits);
    out.explored = res.explored;
    if (res.status == ReversalStatus::Terminal) {
      out.answer = Answer::Yes;
      out.evidence.push_back("u^-1 v reverses to the empty word in "
                             + std::to_string(res.steps) + " steps");
      if (known) {
        out.prerequisites.push_back(detail::prerequisite("completeness", *known));
      }
      return out;
    }
    if (res.status == ReversalStatus::LimitExceeded) {
      out.evidence.push_back("limit reached");
      return out;
    }
    auto complete = known ? *known : detail::completeness_or_unknown(p, limits);
    out.prerequisites.push_back(detail::prerequisite("completeness", complete));
    out.evidence.push_back("no reversing sequence of u^-1 v reaches the empty word ("
                           + format(p, res.last) + ")");
    if (complete.status == Completeness::Complete) {
      out.answer = Answer::No;
    } else if (auto wt = homogeneity_witness(p); wt && weight(*wt, u) != weight(*wt, v)) {
      out.answer = Answer::No;
      out.evidence.push_back("weights differ: " + std::to_string(weight(*wt, u)) + " vs "
                             + std::to_string(weight(*wt, v)));
    }
    return out;
  }

  //! Some reversing of u^-1 w ends with an empty denominator.  A negative
  //! answer needs completeness, or finite equivalence classes for u and w.
  inline Verdict left_divides(Presentation const&                       p,
                              Word const&                               u,
                              Word const&                               w,
                              Limits const&                             limits = {},
                              std::optional<CompletenessVerdict> const& known  = {}) {
    Verdict out;
    out.method = "exhaustive right reversing of u^-1 w";
    auto res   = search_right(p, quotient(u, w), SearchGoal::Positive, limits);
    out.explored = res.explored;
    if (res.status == ReversalStatus::Terminal) {
      out.answer = Answer::Yes;
      out.evidence.push_back("u^-1 w reverses to " + format(p, *res.terminal));
      return out;
    }
    if (res.status == ReversalStatus::Stuck) {
      auto complete = known ? *known : detail::completeness_or_unknown(p, limits);
      out.prerequisites.push_back(detail::prerequisite("completeness", complete));
      if (complete.status == Completeness::Complete) {
        out.answer = Answer::No;
        out.evidence.push_back("no reversing of u^-1 w is positive");
        return out;
      }
    }
    // Fall back on enumerating both classes.
    auto cw = enumerate_class(p, w, limits);
    auto cu = enumerate_class(p, u, limits);
    if (cw.complete && cu.complete) {
      out.method = "equivalence class enumeration";
      for (auto const& x : cw.words) {
        if (x.size() < u.size()) {
          continue;
        }
        for (std::size_t k = 0; k <= x.size(); ++k) {
          Word prefix(x.begin(), x.begin() + k);
          if (std::binary_search(cu.words.begin(), cu.words.end(), prefix, shortlex_less)) {
            out.answer = Answer::Yes;
            out.evidence.push_back(format(p, x) + " is equivalent to w");
            return out;
          }
        }
      }
      out.answer = Answer::No;
      out.evidence.push_back("no word of the class of w (" + std::to_string(cw.words.size())
                             + " words) has a prefix equivalent to u");
      return out;
    }
    out.evidence.push_back("limit reached");
    return out;
  }

  inline Verdict right_divides(Presentation const& p,
                               Word const&         u,
                               Word const&         w,
                               Limits const&       limits = {}) {
    return left_divides(mirror(p), reversed(u), reversed(w), limits);
  }

  enum class GroupVariant { RightRight, RightLeft };

  inline char const* to_string(GroupVariant v) {
    return v == GroupVariant::RightRight ? "right-right" : "right-left";
  }

  //! Verdicts a negative group answer relies on.
  struct GroupPrerequisites {
    CompletenessVerdict right;
    CompletenessVerdict left;  // completeness of the mirror
    Verdict             left_cancellative;
    Verdict             right_cancellative;
    bool                common_multiples = false;

    bool established(GroupVariant variant) const {
      return right.status == Completeness::Complete
             && (variant == GroupVariant::RightRight
                 || left.status == Completeness::Complete)
             && left_cancellative.yes() && right_cancellative.yes()
             && common_multiples;
    }
  };

  inline GroupPrerequisites group_prerequisites(Presentation const& p,
                                                Limits const&       limits = {}) {
    GroupPrerequisites g;
    g.right              = detail::completeness_or_unknown(p, limits);
    g.left               = detail::completeness_or_unknown(mirror(p), limits);
    g.left_cancellative  = left_cancellative(p, limits, g.right);
    g.right_cancellative = right_cancellative(p, limits);
    try {
      g.common_multiples = closure_under_complement(p, {}, limits, 256).has_value();
    } catch (Error const&) {
      g.common_multiples = false;
    }
    return g;
  }

  //! Decides w = 1 in the group: reverse w to v' v^-1, then test v ~ v'
  //! by right reversing of v^-1 v' (right-right) or left reversing of
  //! v' v^-1 (right-left).
  inline Verdict equivalent_group(Presentation const&                      p,
                                  SignedWord const&                        w,
                                  GroupVariant                             variant = GroupVariant::RightRight,
                                  Limits const&                            limits  = {},
                                  std::optional<GroupPrerequisites> const& known   = {}) {
    Verdict out;
    out.method = std::string("double reversing, ") + to_string(variant);
    auto pre   = known ? *known : group_prerequisites(p, limits);
    out.prerequisites.push_back(detail::prerequisite("completeness", pre.right));
    if (variant == GroupVariant::RightLeft) {
      out.prerequisites.push_back(detail::prerequisite("left completeness", pre.left));
    }
    out.prerequisites.push_back({"left cancellativity", to_string(pre.left_cancellative.answer)});
    out.prerequisites.push_back({"right cancellativity", to_string(pre.right_cancellative.answer)});
    out.prerequisites.push_back({"common right multiples", pre.common_multiples ? "Yes" : "Unknown"});
    auto first = search_right(p, w, SearchGoal::PositiveNegative, limits);
    out.explored = first.explored;
    if (first.status != ReversalStatus::Terminal) {
      out.evidence.push_back(std::string("w does not reverse to v' v^-1: ")
                             + to_string(first.status));
      return out;
    }
    out.evidence.push_back("w reverses to " + format(p, *first.terminal));
    Word const& num = *first.numerator;
    Word const& den = *first.denominator;
    ReversalOutcome second;
    if (variant == GroupVariant::RightRight) {
      second = search_right(p, quotient(den, num), SearchGoal::Empty, limits);
    } else {
      second = search_left(p, fraction(num, den), SearchGoal::Empty, limits);
    }
    out.explored += second.explored;
    if (second.status == ReversalStatus::Terminal) {
      out.answer = Answer::Yes;
      out.evidence.push_back("second reversal reaches the empty word");
      return out;
    }
    if (second.status == ReversalStatus::LimitExceeded) {
      out.evidence.push_back("limit reached in the second reversal");
      return out;
    }
    out.evidence.push_back("second reversal never reaches the empty word ("
                           + format(p, second.last) + ")");
    if (pre.established(variant)) {
      out.answer = Answer::No;
    } else {
      out.evidence.push_back("prerequisites not established");
    }
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // lcm, gcd, fractions
  //////////////////////////////////////////////////////////////////////////

  //! u (u\v), the right-lcm of u and v in a complete complemented
  //! presentation; nothing when u and v have no common right-multiple.
  inline std::optional<Word> right_lcm(Presentation const& p,
                                       Word const&         u,
                                       Word const&         v,
                                       Limits const&       limits = {}) {
    if (!is_complemented(p)) {
      throw PreconditionError("right_lcm requires a complemented presentation");
    }
    auto c = complement(p, u, v, limits);
    if (!c) {
      return std::nullopt;
    }
    return concat(u, *c);
  }

  //! Left-gcd by triple reversing: u^-1 v => v' v^-1, then v' v^-1 is
  //! left-reversed to x^-1 x', then u x^-1 to y^-1 g with y empty.
  inline Word left_gcd(Presentation const& p,
                       Word const&         u,
                       Word const&         v,
                       Limits const&       limits = {}) {
    if (!is_complemented(p) || !is_left_complemented(p)) {
      throw PreconditionError("left_gcd requires a left- and right-complemented presentation");
    }
    auto [num, den] = numerator_denominator_right(p, quotient(u, v), limits);
    auto [x, x1]    = denominator_numerator_left(p, fraction(num, den), limits);
    (void) x1;
    auto [y, g]     = denominator_numerator_left(p, fraction(u, x), limits);
    if (!y.empty()) {
      throw Error("left_gcd: hypotheses violated, nonempty remainder " + format(p, y));
    }
    return g;
  }

  //! (D, N) with w = D^-1 N: right-reverse to N_R D_R^-1, then left-reverse.
  inline std::pair<Word, Word> reduce_fraction(Presentation const& p,
                                               SignedWord const&   w,
                                               Limits const&       limits = {}) {
    auto [num, den] = numerator_denominator_right(p, w, limits);
    return denominator_numerator_left(p, fraction(num, den), limits);
  }

  //////////////////////////////////////////////////////////////////////////
  // Mixed reversing
  //////////////////////////////////////////////////////////////////////////

  namespace detail {

    // All words one mixed step away from w.
    template <typename F>
    void mixed_neighbours(Presentation const& p, SignedWord const& w, F&& f) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        auto a = w[i];
        auto b = w[i + 1];
        if (a.inverse && b.positive()) {
          for (auto const& t : p.right_tiles(a.letter, b.letter)) {
            SignedWord x = w;
            apply_tile(x, i, t);
            f(x);
          }
        }
        if (a.positive() && b.inverse) {
          // t s^-1 => v^-1 v' with v t = v' s.
          for (auto const& t : p.left_tiles(a.letter, b.letter)) {
            SignedWord mid = inverse(t.left);
            for (auto s : t.right) {
              mid.push_back(pos(s));
            }
            SignedWord x(w.begin(), w.begin() + i);
            x.insert(x.end(), mid.begin(), mid.end());
            x.insert(x.end(), w.begin() + i + 2, w.end());
            f(x);
          }
        }
      }
      for (auto const& r : p.relations()) {
        for (int dir = 0; dir < 2; ++dir) {
          Word const& from = dir == 0 ? r.lhs : r.rhs;
          Word const& to   = dir == 0 ? r.rhs : r.lhs;
          SignedWord  pf   = as_signed(from);
          SignedWord  nf   = inverse(from);
          for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
            for (int sign = 0; sign < 2; ++sign) {
              SignedWord const& pat = sign == 0 ? pf : nf;
              if (std::equal(pat.begin(), pat.end(), w.begin() + i)) {
                SignedWord rep = sign == 0 ? as_signed(to) : inverse(to);
                SignedWord x(w.begin(), w.begin() + i);
                x.insert(x.end(), rep.begin(), rep.end());
                x.insert(x.end(), w.begin() + i + from.size(), w.end());
                f(x);
              }
            }
          }
        }
      }
    }

  }  // namespace detail

  struct MixedResult {
    Verdict                 verdict;
    std::vector<SignedWord> path;  // from w to the empty word on Yes
  };

  //! Breadth-first search over right and left reversing steps and
  //! relations applied to positive or to inverted subwords.
  inline MixedResult mixed_reverse_to_empty(Presentation const& p,
                                            SignedWord const&   w,
                                            Limits const&       limits = {}) {
    MixedResult out;
    out.verdict.method = "breadth-first mixed reversing";
    std::unordered_map<SignedWord, SignedWord, WordHash> parent;
    std::deque<SignedWord>                               queue;
    parent.emplace(w, w);
    queue.push_back(w);
    bool truncated = false;
    bool found     = w.empty();
    while (!queue.empty() && !found) {
      SignedWord cur = std::move(queue.front());
      queue.pop_front();
      detail::mixed_neighbours(p, cur, [&](SignedWord const& x) {
        if (found || parent.count(x) != 0) {
          return;
        }
        if (x.size() > limits.max_word_length) {
          truncated = true;
          return;
        }
        if (parent.size() >= limits.max_frontier) {
          truncated = true;
          return;
        }
        parent.emplace(x, cur);
        if (x.empty()) {
          found = true;
          return;
        }
        queue.push_back(x);
      });
    }
    out.verdict.explored = parent.size();
    if (found) {
      SignedWord cur;
      out.path.push_back(cur);
      while (cur != w) {
        cur = parent.at(cur);
        out.path.push_back(cur);
      }
      std::reverse(out.path.begin(), out.path.end());
      out.verdict.answer = Answer::Yes;
      out.verdict.evidence.push_back("empty word reached in "
                                     + std::to_string(out.path.size() - 1) + " steps");
      return out;
    }
    if (truncated) {
      out.verdict.evidence.push_back("limit reached");
      return out;
    }
    out.verdict.answer = Answer::No;
    out.verdict.evidence.push_back("search exhausted after "
                                   + std::to_string(parent.size()) + " words");
    return out;
  }

  //////////////////////////////////////////////////////////////////////////
  // Phi orbits
  //////////////////////////////////////////////////////////////////////////

  //! Phi(u, v) = (D, N) where u^-1 v right-reverses to N D^-1.
  inline std::pair<Word, Word> phi(Presentation const& p,
                                   Word const&         u,
                                   Word const&         v,
                                   Limits const&       limits = {}) {
    auto [num, den] = numerator_denominator_right(p, quotient(u, v), limits);
    return {den, num};
  }

  struct OrbitReport {
    std::vector<std::pair<Word, Word>> sequence;
    bool                               cycle        = false;
    std::size_t                        cycle_entry  = 0;
    std::size_t                        cycle_length = 0;
    std::string                        error;
  };

  //! Iterates Phi until a pair repeats (up to positive equivalence when
  //! the classes are finite) or \p max_iterations is reached.
  inline OrbitReport phi_orbit(Presentation const& p,
                               Word const&         u,
                               Word const&         v,
                               std::size_t         max_iterations = 64,
                               Limits const&       limits         = {}) {
    OrbitReport out;
    Limits      class_limits = limits;
    class_limits.max_frontier = std::min<std::size_t>(limits.max_frontier, 20000);
    ClassCache classes(p, class_limits);
    std::vector<std::pair<Word, Word>> keys;
    std::pair<Word, Word>              cur{u, v};
    for (std::size_t k = 0; k <= max_iterations; ++k) {
      std::pair<Word, Word> key{classes.key(cur.first), classes.key(cur.second)};
      auto it = std::find(keys.begin(), keys.end(), key);
      if (it != keys.end()) {
        out.cycle        = true;
        out.cycle_entry  = static_cast<std::size_t>(it - keys.begin());
        out.cycle_length = keys.size() - out.cycle_entry;
        return out;
      }
      keys.push_back(key);
      out.sequence.push_back(cur);
      if (k == max_iterations) {
        break;
      }
      try {
        cur = phi(p, cur.first, cur.second, limits);
      } catch (Error const& e) {
        out.error = e.what();
        return out;
      }
    }
    out.error = "iteration limit reached";
    return out;
  }

}  // namespace reversing

#endif  // REVERSING_DECISION_HPP_
