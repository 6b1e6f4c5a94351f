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

#ifndef REVERSING_PRESENTATION_HPP_
#define REVERSING_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "word.hpp"

namespace reversing {

  struct Relation {
    Word lhs;
    Word rhs;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  //! A way to reverse s^-1 t (right) or t s^-1 (left).  For right reversing
  //! the relation reads s.left = t.right and s^-1 t becomes left right^-1.
  //! For left reversing it reads left.t = right.s and t s^-1 becomes
  //! left^-1 right.  The trivial tile has no relation and empty sides.
  struct Tile {
    Word                       left;
    Word                       right;
    std::optional<std::size_t> relation;

    bool trivial() const noexcept {
      return !relation.has_value();
    }
  };

  //! A positive presentation: a finite alphabet and relations u = v between
  //! nonempty words.  Relations are unordered and deduplicated.
  class Presentation {
   public:
    Presentation() = default;

    explicit Presentation(std::vector<std::string> names) {
      for (auto& n : names) {
        add_generator(std::move(n));
      }
    }

    Letter add_generator(std::string name) {
      if (name.empty()) {
        throw Error("generator names must be nonempty");
      }
      if (_index.count(name) != 0) {
        throw Error("duplicate generator name \"" + name + "\"");
      }
      Letter s{static_cast<std::uint32_t>(_names.size())};
      _index.emplace(name, s);
      _names.push_back(std::move(name));
      rebuild_tiles();
      return s;
    }

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::vector<Letter> alphabet() const {
      std::vector<Letter> out;
      for (std::uint32_t i = 0; i < _names.size(); ++i) {
        out.push_back(Letter{i});
      }
      return out;
    }

    std::string const& name(Letter s) const {
      validate(s);
      return _names[s.id];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<Letter> find(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    Letter letter(std::string_view name) const {
      auto s = find(name);
      if (!s) {
        throw Error("unknown generator \"" + std::string(name) + "\"");
      }
      return *s;
    }

    //! Adds u = v.  Returns false when the relation (in either orientation)
    //! is already present.
    bool add_relation(Word u, Word v) {
      if (u.empty() || v.empty()) {
        throw Error("relations must have nonempty sides");
      }
      if (u == v) {
        throw Error("relation sides must differ");
      }
      for (auto s : u) {
        validate(s);
      }
      for (auto s : v) {
        validate(s);
      }
      for (auto const& r : _relations) {
        if ((r.lhs == u && r.rhs == v) || (r.lhs == v && r.rhs == u)) {
          return false;
        }
      }
      _relations.push_back({std::move(u), std::move(v)});
      index_relation(_relations.size() - 1);
      return true;
    }

    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    //! Tiles reversing s^-1 t, in relation insertion order.  When s = t the
    //! trivial tile comes first.
    std::span<Tile const> right_tiles(Letter s, Letter t) const {
      return _right[s.id * size() + t.id];
    }

    //! Tiles reversing t s^-1 (relations v t = v' s), same ordering rules.
    std::span<Tile const> left_tiles(Letter t, Letter s) const {
      return _left[t.id * size() + s.id];
    }

    //! Relations with one side starting with s and the other with t.
    std::vector<std::size_t> eligible(Letter s, Letter t) const {
      std::vector<std::size_t> out;
      for (auto const& tile : right_tiles(s, t)) {
        if (!tile.trivial()) {
          out.push_back(*tile.relation);
        }
      }
      return out;
    }

    friend bool operator==(Presentation const& a, Presentation const& b) {
      return a._names == b._names && a._relations == b._relations;
    }

   private:
    void validate(Letter s) const {
      if (s.id >= _names.size()) {
        throw Error("letter " + std::to_string(s.id) + " out of range");
      }
    }

    void rebuild_tiles() {
      std::size_t n = size();
      _right.assign(n * n, {});
      _left.assign(n * n, {});
      for (std::uint32_t i = 0; i < n; ++i) {
        _right[i * n + i].push_back(Tile{});
        _left[i * n + i].push_back(Tile{});
      }
      for (std::size_t r = 0; r < _relations.size(); ++r) {
        index_relation(r);
      }
    }

    void index_relation(std::size_t r) {
      std::size_t n   = size();
      auto const& rel = _relations[r];
      auto        add = [&](Word const& x, Word const& y) {
        _right[x.front().id * n + y.front().id].push_back(
            Tile{Word(x.begin() + 1, x.end()), Word(y.begin() + 1, y.end()), r});
        _left[x.back().id * n + y.back().id].push_back(
            Tile{Word(x.begin(), x.end() - 1), Word(y.begin(), y.end() - 1), r});
      };
      add(rel.lhs, rel.rhs);
      add(rel.rhs, rel.lhs);
    }

    std::vector<std::string>                _names;
    std::unordered_map<std::string, Letter> _index;
    std::vector<Relation>                   _relations;
    std::vector<std::vector<Tile>>          _right;
    std::vector<std::vector<Tile>>          _left;
  };

  //! The presentation with every relation side letter-reversed.
  inline Presentation mirror(Presentation const& p) {
    Presentation out(p.names());
    for (auto const& r : p.relations()) {
      out.add_relation(reversed(r.lhs), reversed(r.rhs));
    }
    return out;
  }

  //! At most one relation s... = t... for each pair (s, t), and none of the
  //! form s... = s....
  inline bool is_complemented(Presentation const& p) {
    for (auto s : p.alphabet()) {
      for (auto t : p.alphabet()) {
        std::size_t k = p.eligible(s, t).size();
        if ((s == t && k != 0) || k > 1) {
          return false;
        }
      }
    }
    return true;
  }

  //! The left-complemented version: the mirror is complemented.
  inline bool is_left_complemented(Presentation const& p) {
    for (auto s : p.alphabet()) {
      for (auto t : p.alphabet()) {
        std::size_t k = p.left_tiles(t, s).size() - (s == t ? 1 : 0);
        if ((s == t && k != 0) || k > 1) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace reversing

#endif  // REVERSING_PRESENTATION_HPP_
