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

// Braid presentations, strand names on reversing diagrams, and the
// sparse-family certificate for optimal reversing.

#ifndef REVERSING_BRAID_HPP_
#define REVERSING_BRAID_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "engine.hpp"
#include "equivalence.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace reversing {

  //! The a-th crossing of the strands starting at positions p < q (1-based).
  struct Name {
    std::uint32_t p = 0;
    std::uint32_t q = 0;
    std::uint32_t a = 0;

    friend auto operator<=>(Name const&, Name const&) = default;
  };

  inline std::string to_string(Name const& n) {
    return "[" + std::to_string(n.p) + "," + std::to_string(n.q) + ","
           + std::to_string(n.a) + "]";
  }

  //! Generators s1 .. s(n-1), commutations for |i-j| >= 2 and braid
  //! relations for |i-j| = 1.
  inline Presentation braid_presentation(std::size_t n) {
    if (n < 2) {
      throw Error("braid_presentation needs at least 2 strands");
    }
    Presentation p;
    for (std::size_t i = 1; i < n; ++i) {
      p.add_generator("s" + std::to_string(i));
    }
    for (std::uint32_t i = 0; i + 1 < n - 1; ++i) {
      p.add_relation({Letter{i}, Letter{i + 1}, Letter{i}},
                     {Letter{i + 1}, Letter{i}, Letter{i + 1}});
      for (std::uint32_t j = i + 2; j < n - 1; ++j) {
        p.add_relation({Letter{i}, Letter{j}}, {Letter{j}, Letter{i}});
      }
    }
    return p;
  }

  //! Strand positions and pairwise crossing counts after a braid word.
  class StrandState {
   public:
    explicit StrandState(std::size_t n) : _n(n), _at(n), _count(n * n, 0) {
      for (std::uint32_t i = 0; i < n; ++i) {
        _at[i] = i;
      }
    }

    //! The name of letter s (crossing positions s+1 and s+2), then applies it.
    Name cross(Letter s) {
      Name nm = peek(s);
      _count[(nm.p - 1) * _n + nm.q - 1]++;
      std::swap(_at[s.id], _at[s.id + 1]);
      return nm;
    }

    Name peek(Letter s) const {
      if (s.id + 1 >= _n) {
        throw Error("letter out of range for " + std::to_string(_n) + " strands");
      }
      auto x = std::min(_at[s.id], _at[s.id + 1]);
      auto y = std::max(_at[s.id], _at[s.id + 1]);
      return {x + 1, y + 1, _count[x * _n + y] + 1};
    }

    friend bool operator==(StrandState const&, StrandState const&) = default;

   private:
    std::size_t                _n;
    std::vector<std::uint32_t> _at;
    std::vector<std::uint32_t> _count;
  };

  inline std::vector<Name> assign_names(std::size_t n, Word const& w) {
    StrandState       st(n);
    std::vector<Name> out;
    for (auto s : w) {
      out.push_back(st.cross(s));
    }
    return out;
  }

  enum class FaceKind { Hexagon, Square };

  struct NamedFace {
    std::size_t       face;  // index into the diagram faces
    FaceKind          kind;
    std::vector<Name> first;
    std::vector<Name> second;
  };

  struct NamedGrid {
    std::size_t                      strands = 0;
    ReversingGrid                    grid;
    std::vector<std::optional<Name>> edge_names;  // per diagram edge
    std::vector<NamedFace>           faces;
  };

  namespace detail {
    inline std::pair<std::uint32_t, std::uint32_t> strands(Name const& n) {
      return {n.p, n.q};
    }

    inline bool face_law(NamedFace const& f) {
      std::vector<Name> rev(f.second.rbegin(), f.second.rend());
      if (rev != f.first) {
        return false;
      }
      std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
      std::set<std::uint32_t>                           points;
      for (auto const& nm : f.first) {
        pairs.insert(strands(nm));
        points.insert(nm.p);
        points.insert(nm.q);
      }
      if (f.kind == FaceKind::Hexagon) {
        return f.first.size() == 3 && pairs.size() == 3 && points.size() == 3;
      }
      return f.first.size() == 2 && points.size() == 4;
    }
  }  // namespace detail

  //! Names every labelled edge of the grid's diagram from the state reached
  //! along a path from the source; throws if two paths disagree or a face
  //! breaks the hexagon/square name law.
  inline NamedGrid name_grid(std::size_t n, ReversingGrid const& grid) {
    auto const& d = grid.diagram;
    NamedGrid   out;
    out.strands = n;
    out.grid    = grid;
    out.edge_names.assign(d.edges.size(), std::nullopt);
    std::vector<std::vector<std::size_t>> incident(d.vertices);
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      incident[d.edges[e].from].push_back(e);
      if (!d.edges[e].label) {
        incident[d.edges[e].to].push_back(e);
      }
    }
    std::vector<std::optional<StrandState>> state(d.vertices);
    std::deque<std::size_t>                 queue;
    state[d.source] = StrandState(n);
    queue.push_back(d.source);
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (auto e : incident[x]) {
        auto const& edge = d.edges[e];
        StrandState next = *state[x];
        std::size_t y    = edge.to;
        if (edge.label) {
          out.edge_names[e] = next.cross(*edge.label);
        } else if (y == x) {
          y = edge.from;
        }
        if (!state[y]) {
          state[y] = next;
          queue.push_back(y);
        } else if (!(*state[y] == next)) {
          throw Error("edge names depend on the path");
        }
      }
    }
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
      if (d.edges[e].label && !out.edge_names[e]) {
        throw Error("edge not reachable from the source");
      }
    }
    for (std::size_t k = 0; k < d.faces.size(); ++k) {
      NamedFace f{k, FaceKind::Hexagon, {}, {}};
      for (auto e : d.faces[k].first) {
        if (out.edge_names[e]) {
          f.first.push_back(*out.edge_names[e]);
        }
      }
      for (auto e : d.faces[k].second) {
        if (out.edge_names[e]) {
          f.second.push_back(*out.edge_names[e]);
        }
      }
      f.kind = f.first.size() == 2 ? FaceKind::Square : FaceKind::Hexagon;
      if (!detail::face_law(f)) {
        throw Error("face " + std::to_string(k) + " breaks the name law");
      }
      out.faces.push_back(std::move(f));
    }
    return out;
  }

  using StrandPair = std::pair<std::uint32_t, std::uint32_t>;

  enum class Optimality { Optimal, Inconclusive };

  inline char const* to_string(Optimality o) {
    return o == Optimality::Optimal ? "Optimal" : "Inconclusive";
  }

  struct OptimalityVerdict {
    Optimality                 status = Optimality::Inconclusive;
    std::vector<StrandPair>    family;  // names (p, q, any rank)
    std::vector<Name>          names;   // family names occurring
    std::optional<std::size_t> distance;
    std::size_t                faces = 0;
    std::string                reason;
  };

  namespace detail {
    inline OptimalityVerdict certify(NamedGrid const&               g,
                                     std::vector<StrandPair> const& family) {
      OptimalityVerdict out;
      out.family = family;
      out.faces  = g.faces.size();
      auto in_family = [&](Name const& nm) {
        return std::find(family.begin(), family.end(), strands(nm)) != family.end();
      };
      std::set<Name> used;
      for (auto const& nm : g.edge_names) {
        if (nm && in_family(*nm)) {
          used.insert(*nm);
        }
      }
      out.names.assign(used.begin(), used.end());
      for (auto const& x : used) {
        for (auto const& y : used) {
          if (x.q != y.p) {
            continue;
          }
          for (auto const& z : used) {
            if (z.p == x.p && z.q == y.q) {
              out.reason = "family is not sparse: " + to_string(x) + " "
                           + to_string(y) + " " + to_string(z);
              return out;
            }
          }
        }
      }
      std::set<std::pair<Name, Name>> crossings;
      for (auto const& f : g.faces) {
        std::vector<Name> hits;
        for (auto const& nm : f.first) {
          if (in_family(nm)) {
            hits.push_back(nm);
          }
        }
        if (hits.size() != 2) {
          out.reason = "face " + std::to_string(f.face) + " has "
                       + std::to_string(hits.size()) + " family names";
          return out;
        }
        std::sort(hits.begin(), hits.end());
        if (!crossings.emplace(hits[0], hits[1]).second) {
          out.reason = "separatrices " + to_string(hits[0]) + " and "
                       + to_string(hits[1]) + " cross twice";
          return out;
        }
      }
      out.status   = Optimality::Optimal;
      out.distance = g.faces.size();
      return out;
    }
  }  // namespace detail

  //! Certificate that reversing u^-1 v gives a van Kampen diagram with the
  //! fewest faces.  Without \p family every set of strand pairs is tried.
  inline OptimalityVerdict check_optimality(std::size_t                                   n,
                                            Word const&                                   u,
                                            Word const&                                   v,
                                            std::optional<std::vector<StrandPair>> const& family = {},
                                            Limits const&                                 limits = {}) {
    auto const p     = braid_presentation(n);
    auto        grid = build_grid(p, u, v, limits);
    if (!grid.u_complement.empty() || !grid.v_complement.empty()) {
      throw Error("check_optimality: the words are not equivalent");
    }
    auto named = name_grid(n, grid);
    if (family) {
      return detail::certify(named, *family);
    }
    std::vector<StrandPair> all;
    for (std::uint32_t a = 1; a <= n; ++a) {
      for (std::uint32_t b = a + 1; b <= n; ++b) {
        all.emplace_back(a, b);
      }
    }
    OptimalityVerdict last;
    last.faces  = named.faces.size();
    last.reason = "no family of strand pairs certifies the diagram";
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<StrandPair> f;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (mask & (std::uint64_t{1} << k)) {
          f.push_back(all[k]);
        }
      }
      auto r = detail::certify(named, f);
      if (r.status == Optimality::Optimal) {
        return r;
      }
    }
    return last;
  }

  //! Fewest braid relations turning u into v, by breadth-first search.
  inline std::optional<std::size_t> combinatorial_distance(std::size_t   n,
                                                           Word const&   u,
                                                           Word const&   v,
                                                           Limits const& limits = {}) {
    return bfs_equivalence_oracle(braid_presentation(n), u, v, limits).distance;
  }

}  // namespace reversing

#endif  // REVERSING_BRAID_HPP_
