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

// Brute-force cross-checks shared by the property tests and the acceptance
// run.  Each returns a description of every violation found.

#ifndef REVERSING_TESTS_PROPERTIES_HPP_
#define REVERSING_TESTS_PROPERTIES_HPP_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "reversing/decision.hpp"
#include "reversing/equivalence.hpp"
#include "reversing/garside.hpp"
#include "reversing/text.hpp"

namespace properties {

  using namespace reversing;
  using Violations = std::vector<std::string>;

  struct Named {
    std::string  name;
    Presentation p;
  };

  inline std::vector<Named> complete_corpus() {
    return {{"ex1-completed", corpus::ex1_completed()},
            {"b3", corpus::b(3)},
            {"b4", corpus::b(4)},
            {"raag", corpus::raag()}};
  }

  inline std::string pair_text(Presentation const& p, Word const& u, Word const& v) {
    return format(p, u) + " / " + format(p, v);
  }

  //! equivalent_monoid against the BFS oracle on all pairs of words of
  //! length at most n.
  inline Violations word_problem(Presentation const& p, std::size_t n) {
    Violations out;
    auto       known = check_completeness(p);
    if (known.status != Completeness::Complete) {
      return {"presentation is not complete"};
    }
    auto ws = corpus::words_up_to(p, n);
    for (auto const& u : ws) {
      for (auto const& v : ws) {
        auto o = bfs_equivalence_oracle(p, u, v);
        if (!o.distance && !o.exhausted) {
          out.push_back("oracle inconclusive on " + pair_text(p, u, v));
          continue;
        }
        auto r = equivalent_monoid(p, u, v, {}, known);
        if (r.answer == Answer::Unknown || r.yes() != o.distance.has_value()) {
          out.push_back(std::string(to_string(r.answer)) + " on " + pair_text(p, u, v));
        }
      }
    }
    return out;
  }

  //! Combinatorial distance is at most the reversing distance.
  inline Violations distances(Presentation const& p, std::size_t n) {
    Violations out;
    auto       ws = corpus::words_up_to(p, n);
    for (auto const& u : ws) {
      for (auto const& v : ws) {
        if (u.size() != v.size() || u.empty()) {
          continue;
        }
        auto o = bfs_equivalence_oracle(p, u, v);
        if (!o.distance) {
          continue;
        }
        auto r = reversing_distance(p, u, v);
        if (!r || *o.distance > *r) {
          out.push_back("distance on " + pair_text(p, u, v));
        }
      }
    }
    return out;
  }

  //! Left divisors as class representatives: prefixes of equivalent words.
  class DivisorOracle {
   public:
    explicit DivisorOracle(Presentation p) : _p(std::move(p)) {}

    Word rep(Word const& w) {
      return *class_representative(_p, w);
    }

    std::set<Word> const& of(Word const& w) {
      auto it = _cache.find(w);
      if (it == _cache.end()) {
        std::set<Word> ds;
        for (auto const& x : enumerate_class(_p, w).words) {
          for (std::size_t k = 0; k <= x.size(); ++k) {
            ds.insert(rep(Word(x.begin(), x.begin() + k)));
          }
        }
        it = _cache.emplace(w, std::move(ds)).first;
      }
      return it->second;
    }

   private:
    Presentation                   _p;
    std::map<Word, std::set<Word>> _cache;
  };

  //! left_gcd and right_lcm against divisor enumeration.
  inline Violations gcd_lcm(Presentation const& p, std::size_t n) {
    Violations    out;
    DivisorOracle div(p);
    auto          ws = corpus::words_up_to(p, n);
    for (auto const& u : ws) {
      for (auto const& v : ws) {
        std::set<Word> common;
        for (auto const& d : div.of(u)) {
          if (div.of(v).count(d)) {
            common.insert(d);
          }
        }
        auto g = left_gcd(p, u, v);
        if (div.of(g) != common) {
          out.push_back("gcd " + format(p, g) + " of " + pair_text(p, u, v));
        }
        auto l = right_lcm(p, u, v);
        if (!l) {
          out.push_back("no lcm for " + pair_text(p, u, v));
          continue;
        }
        auto ldiv = div.of(*l);
        auto ru   = div.rep(u);
        auto rv   = div.rep(v);
        if (!ldiv.count(ru) || !ldiv.count(rv)) {
          out.push_back("lcm " + format(p, *l) + " is not a multiple of " + pair_text(p, u, v));
        }
        for (auto const& d : ldiv) {
          auto const& dd = div.of(d);
          if (d.size() < l->size() && dd.count(ru) && dd.count(rv)) {
            out.push_back("lcm " + format(p, *l) + " is not least for " + pair_text(p, u, v));
          }
        }
      }
    }
    return out;
  }

  //! Equivalent words share their normal form and inequivalent ones do not.
  inline Violations normal_forms(Presentation const& p, Word const& delta, std::size_t n) {
    Violations                        out;
    std::map<Word, std::vector<Word>> by_class;
    std::map<std::vector<Word>, Word> by_form;
    for (auto const& w : corpus::words_up_to(p, n)) {
      if (w.empty()) {
        continue;
      }
      auto rep = *class_representative(p, w);
      auto nf  = normal_form(p, delta, w).factors;
      auto [it, fresh] = by_class.emplace(rep, nf);
      if (!fresh && it->second != nf) {
        out.push_back("two normal forms for the class of " + format(p, w));
      }
      auto [jt, fresh2] = by_form.emplace(nf, rep);
      if (!fresh2 && jt->second != rep) {
        out.push_back("shared normal form at " + format(p, w));
      }
    }
    return out;
  }

}  // namespace properties

#endif  // REVERSING_TESTS_PROPERTIES_HPP_
