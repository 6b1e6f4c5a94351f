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

#ifndef REVERSING_DIAGRAM_HPP_
#define REVERSING_DIAGRAM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "engine.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace reversing {

  //! An edge of a reversing diagram, oriented as the letter it carries.
  //! Unlabelled edges are identifications coming from empty words.
  struct DiagramEdge {
    std::size_t           from;
    std::size_t           to;
    std::optional<Letter> label;
  };

  //! The tile of one nontrivial step s^-1 t => v' v^-1.  Both boundaries run
  //! from the common tail of s and t to the new corner: s then v', and t
  //! then v.
  struct DiagramFace {
    std::size_t              relation;
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
  };

  //! Edge-level record of one reversing sequence.
  struct ReversingDiagram {
    std::size_t              vertices = 0;
    std::size_t              source   = 0;
    std::vector<DiagramEdge> edges;
    std::vector<DiagramFace> faces;
    SignedWord               word;        // the final word
    std::vector<std::size_t> word_edges;  // its edges, letter by letter
  };

  //! Replays \p path (as recorded by the engine) on \p w and records the
  //! edges and tiles.  The source is the vertex where the first positive
  //! letter of \p w starts.
  inline ReversingDiagram record_diagram(Presentation const&            p,
                                         SignedWord const&              w,
                                         std::vector<StepRecord> const& path) {
    ReversingDiagram d;
    auto vertex = [&d]() { return d.vertices++; };
    auto edge   = [&d](std::size_t a, std::size_t b, std::optional<Letter> l) {
      d.edges.push_back({a, b, l});
      return d.edges.size() - 1;
    };
    std::size_t cur          = vertex();
    bool        found_source = false;
    for (auto x : w) {
      std::size_t n = vertex();
      if (x.positive()) {
        if (!found_source) {
          d.source     = cur;
          found_source = true;
        }
        d.word_edges.push_back(edge(cur, n, x.letter));
      } else {
        d.word_edges.push_back(edge(n, cur, x.letter));
      }
      cur = n;
    }
    if (!found_source) {
      d.source = cur;
    }
    d.word = w;
    for (auto const& st : path) {
      std::size_t i = st.position;
      if (!is_factor(d.word, i)) {
        throw Error("recorded step does not apply");
      }
      Tile const& tile
          = p.right_tiles(d.word[i].letter, d.word[i + 1].letter)[st.tile];
      std::size_t e1 = d.word_edges[i];
      std::size_t e2 = d.word_edges[i + 1];
      std::size_t y  = d.edges[e1].to;
      std::size_t z  = d.edges[e2].to;
      std::size_t wv = vertex();
      auto        walk = [&](std::size_t from, Word const& v) {
        std::vector<std::size_t> es;
        if (v.empty()) {
          es.push_back(edge(from, wv, std::nullopt));
          return es;
        }
        std::size_t at = from;
        for (std::size_t k = 0; k < v.size(); ++k) {
          std::size_t to = k + 1 == v.size() ? wv : vertex();
          es.push_back(edge(at, to, v[k]));
          at = to;
        }
        return es;
      };
      auto top  = walk(y, tile.left);
      auto side = walk(z, tile.right);
      if (!tile.trivial()) {
        DiagramFace f{*tile.relation, {e1}, {e2}};
        f.first.insert(f.first.end(), top.begin(), top.end());
        f.second.insert(f.second.end(), side.begin(), side.end());
        d.faces.push_back(std::move(f));
      }
      std::vector<std::size_t> mid;
      if (!tile.left.empty()) {
        mid.insert(mid.end(), top.begin(), top.end());
      }
      if (!tile.right.empty()) {
        mid.insert(mid.end(), side.rbegin(), side.rend());
      }
      d.word_edges.erase(d.word_edges.begin() + i, d.word_edges.begin() + i + 2);
      d.word_edges.insert(d.word_edges.begin() + i, mid.begin(), mid.end());
      apply_tile(d.word, i, tile);
    }
    return d;
  }

  struct GridCell {
    Word        left;
    Word        top;
    Word        bottom;
    Word        right;
    std::size_t steps = 0;
  };

  //! The reversing grid of u^-1 v in a complemented presentation: |u| rows
  //! and |v| columns of cells, each the reversal of (left)^-1 (top).
  struct ReversingGrid {
    Word                  u;
    Word                  v;
    std::size_t           rows = 0;
    std::size_t           cols = 0;
    std::vector<GridCell> cells;  // row-major
    std::size_t           steps = 0;
    Word                  u_complement;  // u\v, the bottom row
    Word                  v_complement;  // v\u, the right column
    ReversingDiagram      diagram;

    GridCell const& cell(std::size_t i, std::size_t j) const {
      return cells[i * cols + j];
    }
  };

  class StuckCell : public Error {
   public:
    StuckCell(std::size_t row, std::size_t col, Letter s, Letter t)
        : Error("reversing is stuck in cell (" + std::to_string(row) + ", "
                + std::to_string(col) + ")"),
          row(row),
          col(col),
          pair(s, t) {}

    std::size_t              row;
    std::size_t              col;
    std::pair<Letter, Letter> pair;
  };

  inline ReversingGrid build_grid(Presentation const& p,
                                  Word const&         u,
                                  Word const&         v,
                                  Limits const&       limits = {}) {
    if (!is_complemented(p)) {
      throw Error("build_grid requires a complemented presentation");
    }
    ReversingGrid g;
    g.u    = u;
    g.v    = v;
    g.rows = u.size();
    g.cols = v.size();
    g.cells.resize(g.rows * g.cols);
    for (std::size_t i = 0; i < g.rows; ++i) {
      for (std::size_t j = 0; j < g.cols; ++j) {
        GridCell& c = g.cells[i * g.cols + j];
        c.left      = j == 0 ? Word{u[i]} : g.cells[i * g.cols + j - 1].right;
        c.top       = i == 0 ? Word{v[j]} : g.cells[(i - 1) * g.cols + j].bottom;
        Limits rest = limits;
        rest.max_steps = limits.max_steps - g.steps;
        auto out = reverse_right_leftmost(p, quotient(c.left, c.top), rest, false);
        if (out.status == ReversalStatus::LimitExceeded) {
          throw LimitExceeded("reversing limit exceeded in cell ("
                              + std::to_string(i) + ", " + std::to_string(j)
                              + ")");
        }
        if (out.status == ReversalStatus::Stuck) {
          throw StuckCell(i, j, out.stuck_pair->first, out.stuck_pair->second);
        }
        c.bottom = *out.numerator;
        c.right  = *out.denominator;
        c.steps  = out.steps;
        g.steps += out.steps;
      }
    }
    for (std::size_t j = 0; j < g.cols; ++j) {
      auto const& b = g.rows == 0 ? Word{v[j]} : g.cell(g.rows - 1, j).bottom;
      g.u_complement.insert(g.u_complement.end(), b.begin(), b.end());
    }
    for (std::size_t i = 0; i < g.rows; ++i) {
      auto const& r = g.cols == 0 ? Word{u[i]} : g.cell(i, g.cols - 1).right;
      g.v_complement.insert(g.v_complement.end(), r.begin(), r.end());
    }
    auto whole = reverse_right_leftmost(p, quotient(u, v), limits, false);
    g.diagram  = record_diagram(p, quotient(u, v), whole.path);
    return g;
  }

  //! Number of nontrivial steps in the reversal of u^-1 v (complemented).
  inline std::size_t reversing_complexity(Presentation const& p,
                                          Word const&         u,
                                          Word const&         v,
                                          Limits const&       limits = {}) {
    return build_grid(p, u, v, limits).steps;
  }

}  // namespace reversing

#endif  // REVERSING_DIAGRAM_HPP_
