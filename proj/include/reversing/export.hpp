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

// DOT and JSON renderings of grids, diagrams, lattices and verdicts.

#ifndef REVERSING_EXPORT_HPP_
#define REVERSING_EXPORT_HPP_

#include <sstream>
#include <string>

#include <json.hpp>

#include "braid.hpp"
#include "completeness.hpp"
#include "decision.hpp"
#include "diagram.hpp"
#include "engine.hpp"
#include "garside.hpp"
#include "presentation.hpp"
#include "text.hpp"

namespace reversing {

  using json = nlohmann::json;

  namespace detail {
    inline std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }

    inline void dot_edge(std::ostream& os, std::string const& a, std::string const& b,
                         std::string const& label) {
      os << "  " << a << " -> " << b;
      if (label.empty()) {
        os << " [style=dotted, arrowhead=none];\n";
      } else {
        os << " [label=\"" << dot_escape(label) << "\"];\n";
      }
    }
  }  // namespace detail

  //! One node per grid vertex; horizontal edges carry the top words, vertical
  //! edges the left words; empty words are dotted.
  inline std::string to_dot(Presentation const& p, ReversingGrid const& g) {
    std::ostringstream os;
    os << "digraph grid {\n  node [shape=point];\n";
    auto node = [](std::size_t i, std::size_t j) {
      return "n" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (std::size_t i = 0; i <= g.rows; ++i) {
      for (std::size_t j = 0; j <= g.cols; ++j) {
        os << "  " << node(i, j) << " [pos=\"" << j << ",-" << i << "!\"];\n";
      }
    }
    auto word = [&](Word const& w) { return w.empty() ? std::string() : format(p, w); };
    for (std::size_t i = 0; i <= g.rows; ++i) {
      for (std::size_t j = 0; j < g.cols; ++j) {
        Word const& w = i == 0 ? Word{g.v[j]} : g.cell(i - 1, j).bottom;
        detail::dot_edge(os, node(i, j), node(i, j + 1), word(w));
      }
    }
    for (std::size_t i = 0; i < g.rows; ++i) {
      for (std::size_t j = 0; j <= g.cols; ++j) {
        Word const& w = j == 0 ? Word{g.u[i]} : g.cell(i, j - 1).right;
        detail::dot_edge(os, node(i, j), node(i + 1, j), word(w));
      }
    }
    os << "}\n";
    return os.str();
  }

  //! Edge-level diagram: one node per vertex, letter edges, dotted
  //! identifications.
  inline std::string to_dot(Presentation const& p, ReversingDiagram const& d) {
    std::ostringstream os;
    os << "digraph diagram {\n  node [shape=point];\n";
    for (std::size_t v = 0; v < d.vertices; ++v) {
      os << "  v" << v << (v == d.source ? " [shape=circle, label=\"\"]" : "") << ";\n";
    }
    for (auto const& e : d.edges) {
      detail::dot_edge(os, "v" + std::to_string(e.from), "v" + std::to_string(e.to),
                       e.label ? p.name(*e.label) : std::string());
    }
    os << "}\n";
    return os.str();
  }

  //! Diagram edges labelled "s1 [1,2,3]".
  inline std::string to_dot(Presentation const& p, NamedGrid const& g) {
    auto const&        d = g.grid.diagram;
    std::ostringstream os;
    os << "digraph named {\n  node [shape=point];\n";
    for (std::size_t v = 0; v < d.vertices; ++v) {
      os << "  v" << v << ";\n";
    }
    for (std::size_t k = 0; k < d.edges.size(); ++k) {
      auto const& e = d.edges[k];
      std::string label;
      if (e.label) {
        label = p.name(*e.label) + " " + to_string(*g.edge_names[k]);
      }
      detail::dot_edge(os, "v" + std::to_string(e.from), "v" + std::to_string(e.to), label);
    }
    os << "}\n";
    return os.str();
  }

  //! Hasse diagram of the divisor lattice.
  inline std::string to_dot(Presentation const& p, DivisorLattice const& l) {
    std::ostringstream os;
    os << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < l.elements.size(); ++i) {
      os << "  d" << i << " [label=\"" << detail::dot_escape(format(p, l.elements[i]))
         << "\"];\n";
    }
    for (auto const& [i, j, s] : l.edges) {
      os << "  d" << i << " -> d" << j << " [label=\"" << detail::dot_escape(p.name(s))
         << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

  inline json to_json(Presentation const& p, ReversingGrid const& g) {
    json cells = json::array();
    for (std::size_t i = 0; i < g.rows; ++i) {
      for (std::size_t j = 0; j < g.cols; ++j) {
        auto const& c = g.cell(i, j);
        cells.push_back({{"row", i},
                         {"col", j},
                         {"left", format(p, c.left)},
                         {"top", format(p, c.top)},
                         {"bottom", format(p, c.bottom)},
                         {"right", format(p, c.right)},
                         {"steps", c.steps}});
      }
    }
    return {{"u", format(p, g.u)},
            {"v", format(p, g.v)},
            {"rows", g.rows},
            {"cols", g.cols},
            {"steps", g.steps},
            {"u_complement", format(p, g.u_complement)},
            {"v_complement", format(p, g.v_complement)},
            {"cells", cells}};
  }

  inline json to_json(Presentation const& p, ReversingDiagram const& d) {
    json edges = json::array();
    for (auto const& e : d.edges) {
      json x = {{"from", e.from}, {"to", e.to}};
      x["letter"] = e.label ? json(p.name(*e.label)) : json(nullptr);
      edges.push_back(x);
    }
    json faces = json::array();
    for (auto const& f : d.faces) {
      faces.push_back({{"relation", f.relation}, {"first", f.first}, {"second", f.second}});
    }
    return {{"vertices", d.vertices},
            {"source", d.source},
            {"word", format(p, d.word)},
            {"edges", edges},
            {"faces", faces}};
  }

  inline json to_json(Presentation const& p, DivisorLattice const& l) {
    json elements = json::array();
    for (auto const& w : l.elements) {
      elements.push_back(format(p, w));
    }
    json edges = json::array();
    for (auto const& [i, j, s] : l.edges) {
      edges.push_back({{"from", i}, {"to", j}, {"letter", p.name(s)}});
    }
    return {{"delta", format(p, l.delta)},
            {"size", l.size()},
            {"elements", elements},
            {"edges", edges}};
  }

  inline json to_json(Verdict const& v) {
    json pre = json::array();
    for (auto const& x : v.prerequisites) {
      pre.push_back({{"name", x.name}, {"status", x.status}});
    }
    return {{"answer", to_string(v.answer)},
            {"method", v.method},
            {"evidence", v.evidence},
            {"prerequisites", pre},
            {"explored", v.explored}};
  }

  inline json to_json(Presentation const& p, CubeReport const& r) {
    json out = {{"u", format(p, r.u)},
                {"u1", format(p, r.u1)},
                {"u2", format(p, r.u2)},
                {"status", to_string(r.status)},
                {"checked", r.checked}};
    if (r.status == CubeStatus::Fails) {
      out["v1"]           = format(p, r.v1);
      out["v"]            = format(p, r.v);
      out["intermediate"] = format(p, r.intermediate);
      out["residual"]     = format(p, r.residual);
      json res            = json::array();
      for (auto const& w : r.residual_results) {
        res.push_back(format(p, w));
      }
      out["residual_results"] = res;
    }
    if (!r.note.empty()) {
      out["note"] = r.note;
    }
    return out;
  }

  inline json to_json(Presentation const& p, CompletenessVerdict const& v) {
    json out = {{"status", to_string(v.status)},
                {"method", to_string(v.method)},
                {"triples", v.triples}};
    if (v.weights) {
      out["weights"] = *v.weights;
    }
    if (v.closed_set) {
      json s = json::array();
      for (auto const& w : *v.closed_set) {
        s.push_back(format(p, w));
      }
      out["closed_set"] = s;
    }
    json failing = json::array();
    for (auto const& r : v.failing) {
      failing.push_back(to_json(p, r));
    }
    out["failing"] = failing;
    json unknown   = json::array();
    for (auto const& r : v.unknown) {
      unknown.push_back(to_json(p, r));
    }
    out["unknown"] = unknown;
    return out;
  }

  inline json to_json(OptimalityVerdict const& v) {
    json family = json::array();
    for (auto const& [a, b] : v.family) {
      family.push_back({a, b});
    }
    json names = json::array();
    for (auto const& n : v.names) {
      names.push_back({n.p, n.q, n.a});
    }
    json out = {{"status", to_string(v.status)},
                {"family", family},
                {"names", names},
                {"faces", v.faces}};
    if (v.distance) {
      out["distance"] = *v.distance;
    }
    if (!v.reason.empty()) {
      out["reason"] = v.reason;
    }
    return out;
  }

}  // namespace reversing

#endif  // REVERSING_EXPORT_HPP_
