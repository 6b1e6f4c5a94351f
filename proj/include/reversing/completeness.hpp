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

#ifndef REVERSING_COMPLETENESS_HPP_
#define REVERSING_COMPLETENESS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "engine.hpp"
#include "equivalence.hpp"
#include "homogeneity.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace reversing {

  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  enum class CubeStatus { Holds, VacuouslyHolds, Fails, Unknown };

  inline char const* to_string(CubeStatus s) {
    switch (s) {
      case CubeStatus::Holds:
        return "Holds";
      case CubeStatus::VacuouslyHolds:
        return "VacuouslyHolds";
      case CubeStatus::Fails:
        return "Fails";
      case CubeStatus::Unknown:
        return "Unknown";
    }
    return "?";
  }

  inline bool holds(CubeStatus s) {
    return s == CubeStatus::Holds || s == CubeStatus::VacuouslyHolds;
  }

  struct CubeReport {
    Word       u;
    Word       u1;  // u'
    Word       u2;  // u''
    CubeStatus status = CubeStatus::Holds;
    // On Fails: u^-1 u'' u''^-1 u' => v1 v^-1 but (u v1)^-1 (u' v) does not
    // reverse to the empty word.
    Word                    v1;
    Word                    v;
    SignedWord              intermediate;
    SignedWord              residual;
    std::vector<SignedWord> residual_results;
    std::size_t             checked = 0;  // positive-negative results examined
    std::string             note;         // limit hit, complemented form, ...
  };

  //! The cube condition for (u, u', u''): every v1 v^-1 reached from
  //! u^-1 u'' u''^-1 u' must have (u v1)^-1 (u' v) reversing to the empty
  //! word.
  inline CubeReport cube_condition(Presentation const& p,
                                   Word const&         u,
                                   Word const&         u1,
                                   Word const&         u2,
                                   Limits const&       limits = {}) {
    CubeReport rep;
    rep.u  = u;
    rep.u1 = u1;
    rep.u2 = u2;
    SignedWord w     = concat(quotient(u, u2), quotient(u2, u1));
    auto       found = reverse_all_right_terminal(p, w, limits);
    bool       unknown = found.truncated;
    if (found.truncated) {
      rep.note = "limit reached while reversing u^-1 u'' u''^-1 u'";
    }
    for (auto const& t : found.words) {
      rep.checked++;
      auto [v1, v] = *split_positive_negative(t);
      SignedWord residual = quotient(concat(u, v1), concat(u1, v));
      auto       r        = search_right(p, residual, SearchGoal::Empty, limits);
      if (r.status == ReversalStatus::Terminal) {
        continue;
      }
      if (r.status == ReversalStatus::LimitExceeded) {
        unknown  = true;
        rep.note = "limit reached while reversing a residual";
        continue;
      }
      rep.status       = CubeStatus::Fails;
      rep.v1           = v1;
      rep.v            = v;
      rep.intermediate = t;
      rep.residual     = residual;
      Limits small     = limits;
      small.max_frontier = std::min<std::size_t>(limits.max_frontier, 10000);
      rep.residual_results = reverse_all_right(p, residual, small).words;
      rep.note.clear();
      return rep;
    }
    if (unknown) {
      rep.status = CubeStatus::Unknown;
    } else if (found.words.empty()) {
      rep.status = CubeStatus::VacuouslyHolds;
    } else {
      rep.status = CubeStatus::Holds;
    }
    return rep;
  }

  //! The complemented form: ((x\y)\(x\z)) \ ((y\x)\(y\z)) is empty or
  //! undefined for every permutation (x, y, z) of (u, u', u'').
  inline CubeReport cube_condition_complemented(Presentation const& p,
                                                Word const&         u,
                                                Word const&         u1,
                                                Word const&         u2,
                                                Limits const& limits = {}) {
    if (!is_complemented(p)) {
      throw PreconditionError("presentation is not complemented");
    }
    CubeReport rep;
    rep.u  = u;
    rep.u1 = u1;
    rep.u2 = u2;
    Word const* t[3]     = {&u, &u1, &u2};
    int const   perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                              {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    try {
      for (auto const& k : perm) {
        Word const& x  = *t[k[0]];
        Word const& y  = *t[k[1]];
        Word const& z  = *t[k[2]];
        auto        xy = complement(p, x, y, limits);
        auto        xz = complement(p, x, z, limits);
        auto        yx = complement(p, y, x, limits);
        auto        yz = complement(p, y, z, limits);
        if (!xy || !xz || !yx || !yz) {
          continue;
        }
        auto a = complement(p, *xy, *xz, limits);
        auto b = complement(p, *yx, *yz, limits);
        if (!a || !b) {
          continue;
        }
        auto c = complement(p, *a, *b, limits);
        rep.checked++;
        if (c && !c->empty()) {
          rep.status       = CubeStatus::Fails;
          rep.v1           = *a;
          rep.v            = *b;
          rep.intermediate = as_signed(*c);
          rep.residual     = quotient(*a, *b);
          rep.note         = "permutation " + std::to_string(k[0])
                     + std::to_string(k[1]) + std::to_string(k[2]);
          return rep;
        }
      }
    } catch (LimitExceeded const&) {
      rep.status = CubeStatus::Unknown;
      rep.note   = "limit reached while computing complements";
      return rep;
    }
    rep.status = CubeStatus::Holds;
    return rep;
  }

  //////////////////////////////////////////////////////////////////////////
  // Closure
  //////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::optional<std::vector<Word>>
    complement_closure(Presentation const&      p,
                       std::vector<Word> const& seed,
                       Limits const&            limits,
                       std::size_t              max_size) {
      std::vector<Word>                  set;
      std::unordered_set<Word, WordHash> in;
      auto add = [&](Word const& w) {
        if (in.insert(w).second) {
          set.push_back(w);
        }
      };
      for (auto const& w : seed) {
        add(w);
      }
      for (auto s : p.alphabet()) {
        add(Word{s});
      }
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
          auto c = complements(p, set[i], set[j], limits);
          if (c) {
            Word a = c->first;
            Word b = c->second;
            add(a);
            add(b);
          }
          if (set.size() > max_size) {
            return std::nullopt;
          }
        }
      }
      return set;
    }

    // Smallest set, up to positive equivalence, such that for all u, u' in
    // it some reversal of u^-1 u' ends in v' v^-1 with v, v' in it.
    class WitnessClosure {
     public:
      WitnessClosure(Presentation const& p, Limits const& limits)
          : _p(p), _limits(limits), _classes(p, limits) {}

      std::optional<std::vector<Word>> run(std::vector<Word> const& seed,
                                           std::size_t              max_size) {
        std::vector<Word> start;
        auto              add = [&](Word const& w) {
          Word k = _classes.key(w);
          if (std::find(start.begin(), start.end(), k) == start.end()) {
            start.push_back(k);
          }
        };
        add({});
        for (auto const& w : seed) {
          add(w);
        }
        for (auto s : _p.alphabet()) {
          add(Word{s});
        }
        for (std::size_t bound = start.size(); bound <= max_size; ++bound) {
          std::vector<Word> found;
          _gave_up = false;
          if (search(start, bound, found)) {
            return found;
          }
          if (_gave_up) {
            return std::nullopt;
          }
        }
        return std::nullopt;
      }

     private:
      using Results = std::vector<std::pair<Word, Word>>;

      Results const& results(Word const& u, Word const& v) {
        auto key = std::make_pair(u, v);
        auto it  = _memo.find(key);
        if (it != _memo.end()) {
          return it->second;
        }
        auto    r = reverse_all_right_terminal(_p, quotient(u, v), _limits);
        Results out;
        if (r.truncated) {
          _gave_up = true;
        }
        for (auto const& t : r.words) {
          auto nd = split_positive_negative(t);
          out.emplace_back(_classes.key(nd->first), _classes.key(nd->second));
        }
        return _memo.emplace(key, std::move(out)).first->second;
      }

      bool search(std::vector<Word> const& set, std::size_t bound,
                  std::vector<Word>& found) {
        auto has = [&set](Word const& w) {
          return std::find(set.begin(), set.end(), w) != set.end();
        };
        for (auto const& u : set) {
          for (auto const& v : set) {
            auto const& rs = results(u, v);
            if (_gave_up) {
              return false;
            }
            bool ok = false;
            for (auto const& [a, b] : rs) {
              if (has(a) && has(b)) {
                ok = true;
                break;
              }
            }
            if (ok) {
              continue;
            }
            for (auto const& [a, b] : rs) {
              auto next = set;
              if (!has(a)) {
                next.push_back(a);
              }
              if (!has(b) && a != b) {
                next.push_back(b);
              }
              if (next.size() <= bound && search(next, bound, found)) {
                return true;
              }
            }
            return false;
          }
        }
        found = set;
        return true;
      }

      Presentation const& _p;
      Limits              _limits;
      ClassCache          _classes;
      bool                _gave_up = false;
      std::map<std::pair<Word, Word>, Results> _memo;
    };

  }  // namespace detail

  //! A finite set containing \p seed, the letters and the empty word that
  //! is closed for reversing.  In the complemented case this is the least
  //! set closed under complement.  Otherwise it is a smallest set, with
  //! words replaced by shortlex-least equivalents, such that for all u, u'
  //! in it some reversal of u^-1 u' ends in v' v^-1 with v, v' in it.
  //! Nothing if no such set of at most \p max_size elements is found.
  inline std::optional<std::vector<Word>>
  closure_under_complement(Presentation const&      p,
                           std::vector<Word> const& seed,
                           Limits const&            limits   = {},
                           std::size_t              max_size = 4096) {
    if (is_complemented(p)) {
      return detail::complement_closure(p, seed, limits, max_size);
    }
    return detail::WitnessClosure(p, limits).run(seed, std::min<std::size_t>(max_size, 64));
  }

  //////////////////////////////////////////////////////////////////////////
  // Completeness verdicts
  //////////////////////////////////////////////////////////////////////////

  enum class Completeness { Complete, Incomplete, Unknown };

  enum class CompletenessMethod { HomogeneousLetters, ClosedSet };

  inline char const* to_string(Completeness c) {
    switch (c) {
      case Completeness::Complete:
        return "Complete";
      case Completeness::Incomplete:
        return "Incomplete";
      case Completeness::Unknown:
        return "Unknown";
    }
    return "?";
  }

  inline char const* to_string(CompletenessMethod m) {
    return m == CompletenessMethod::HomogeneousLetters ? "homogeneous-letters"
                                                       : "closed-set";
  }

  struct CompletenessVerdict {
    Completeness                              status = Completeness::Unknown;
    CompletenessMethod                        method = CompletenessMethod::HomogeneousLetters;
    std::vector<CubeReport>                   failing;
    std::vector<CubeReport>                   unknown;
    std::optional<std::vector<std::uint64_t>> weights;
    std::optional<std::vector<Word>>          closed_set;
    std::size_t                               triples = 0;
  };

  namespace detail {
    inline void check_triples(Presentation const&      p,
                              std::vector<Word> const& xs,
                              Limits const&            limits,
                              CompletenessVerdict&     out) {
      for (auto const& x : xs) {
        for (auto const& y : xs) {
          for (auto const& z : xs) {
            auto rep = cube_condition(p, x, y, z, limits);
            out.triples++;
            if (rep.status == CubeStatus::Fails) {
              out.failing.push_back(std::move(rep));
            } else if (rep.status == CubeStatus::Unknown) {
              out.unknown.push_back(std::move(rep));
            }
          }
        }
      }
      if (!out.failing.empty()) {
        out.status = Completeness::Incomplete;
      } else if (!out.unknown.empty()) {
        out.status = Completeness::Unknown;
      } else {
        out.status = Completeness::Complete;
      }
    }
  }  // namespace detail

  inline CompletenessVerdict
  check_completeness(Presentation const&                     p,
                     CompletenessMethod                      method,
                     Limits const&                           limits     = {},
                     std::optional<std::vector<Word>> const& closed_set = {}) {
    CompletenessVerdict out;
    out.method = method;
    if (method == CompletenessMethod::HomogeneousLetters) {
      out.weights = homogeneity_witness(p);
      if (!out.weights) {
        throw PreconditionError("presentation is not homogeneous");
      }
      std::vector<Word> xs;
      for (auto s : p.alphabet()) {
        xs.push_back(Word{s});
      }
      detail::check_triples(p, xs, limits, out);
      return out;
    }
    if (!is_complemented(p)) {
      throw PreconditionError("presentation is not complemented");
    }
    try {
      out.closed_set = closed_set ? closed_set : closure_under_complement(p, {}, limits);
    } catch (LimitExceeded const&) {
      out.closed_set.reset();
    }
    if (!out.closed_set) {
      out.status = Completeness::Unknown;
      return out;
    }
    detail::check_triples(p, *out.closed_set, limits, out);
    return out;
  }

  //! Homogeneous-letters when a weight witness exists, closed-set when the
  //! presentation is complemented, Unknown otherwise.
  inline CompletenessVerdict check_completeness(Presentation const& p,
                                                Limits const& limits = {}) {
    if (homogeneity_witness(p)) {
      return check_completeness(p, CompletenessMethod::HomogeneousLetters, limits);
    }
    if (is_complemented(p)) {
      return check_completeness(p, CompletenessMethod::ClosedSet, limits);
    }
    return CompletenessVerdict{};
  }

  //////////////////////////////////////////////////////////////////////////
  // Completion
  //////////////////////////////////////////////////////////////////////////

  enum class CompletionStatus { Completed, Diverged };

  inline char const* to_string(CompletionStatus s) {
    return s == CompletionStatus::Completed ? "Completed" : "Diverged";
  }

  struct CompletionOptions {
    std::size_t max_added           = 64;
    std::size_t max_side_length     = 32;
    bool        require_homogeneous = true;
  };

  //! Per-cube limits used by completion unless given.  Long residual
  //! searches on diverging inputs are cut early.
  inline Limits completion_limits() {
    return Limits{100000, 128, 2000};
  }

  struct CompletionResult {
    Presentation            final;
    std::vector<Relation>   added;
    std::size_t             rounds = 0;
    CompletionStatus        status = CompletionStatus::Completed;
    std::string             reason;
    std::vector<CubeReport> witnesses;  // one per added relation
  };

  //! Adds s v' = s' v for the first failing letter triple (s, s', s'') in
  //! lexicographic order and restarts, until every triple holds.
  inline CompletionResult complete_presentation(Presentation const&      p,
                                                Limits const&            limits = completion_limits(),
                                                CompletionOptions const& opts   = {}) {
    if (opts.require_homogeneous && !homogeneity_witness(p)) {
      throw PreconditionError("completion requires a homogeneous presentation");
    }
    CompletionResult out;
    out.final  = p;
    auto alpha = p.alphabet();
    while (true) {
      out.rounds++;
      std::optional<CubeReport> fail;
      bool                      unknown = false;
      for (auto s : alpha) {
        for (auto s1 : alpha) {
          for (auto s2 : alpha) {
            auto rep = cube_condition(out.final, {s}, {s1}, {s2}, limits);
            if (rep.status == CubeStatus::Fails) {
              fail = std::move(rep);
              break;
            }
            unknown = unknown || rep.status == CubeStatus::Unknown;
          }
          if (fail) {
            break;
          }
        }
        if (fail) {
          break;
        }
      }
      if (!fail) {
        if (unknown) {
          out.status = CompletionStatus::Diverged;
          out.reason = "reversing limits prevented a decision";
        }
        return out;
      }
      Word lhs = concat(fail->u, fail->v1);
      Word rhs = concat(fail->u1, fail->v);
      if (lhs.size() > opts.max_side_length || rhs.size() > opts.max_side_length) {
        out.status = CompletionStatus::Diverged;
        out.reason = "relation length cap";
        return out;
      }
      if (out.added.size() >= opts.max_added) {
        out.status = CompletionStatus::Diverged;
        out.reason = "relation count cap";
        return out;
      }
      out.final.add_relation(lhs, rhs);
      out.added.push_back({lhs, rhs});
      out.witnesses.push_back(std::move(*fail));
    }
  }

}  // namespace reversing

#endif  // REVERSING_COMPLETENESS_HPP_
