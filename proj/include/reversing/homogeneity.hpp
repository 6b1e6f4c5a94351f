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

#ifndef REVERSING_HOMOGENEITY_HPP_
#define REVERSING_HOMOGENEITY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "presentation.hpp"

namespace reversing {

  namespace detail {

    using Rational = boost::multiprecision::cpp_rational;

    // Phase one of the simplex method with Bland's rule: finds y >= 0 with
    // A y = b, or nothing.
    inline std::optional<std::vector<Rational>>
    feasible_point(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
      std::size_t m = a.size();
      std::size_t n = m == 0 ? 0 : a[0].size();
      for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
          b[i] = -b[i];
          for (auto& x : a[i]) {
            x = -x;
          }
        }
      }
      // Columns 0..n-1 are y, n..n+m-1 are the artificials.
      std::size_t                        cols = n + m;
      std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
      std::vector<std::size_t>           basis(m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          t[i][j] = a[i][j];
        }
        t[i][n + i] = 1;
        t[i][cols]  = b[i];
        basis[i]    = n + i;
      }
      // Reduced costs of "minimise the sum of artificials".
      std::vector<Rational> cost(cols + 1);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= cols; ++j) {
          if (j < n || j == cols) {
            cost[j] -= t[i][j];
          }
        }
      }
      while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
          if (cost[j] < 0) {
            enter = j;
            break;
          }
        }
        if (enter == cols) {
          break;
        }
        std::size_t leave = m;
        Rational    best;
        for (std::size_t i = 0; i < m; ++i) {
          if (t[i][enter] > 0) {
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best
                || (ratio == best && basis[i] < basis[leave])) {
              leave = i;
              best  = ratio;
            }
          }
        }
        if (leave == m) {
          break;  // unbounded direction cannot occur in phase one
        }
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) {
          x /= piv;
        }
        for (std::size_t i = 0; i < m; ++i) {
          if (i != leave && t[i][enter] != 0) {
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) {
              t[i][j] -= f * t[leave][j];
            }
          }
        }
        Rational f = cost[enter];
        for (std::size_t j = 0; j <= cols; ++j) {
          cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
      }
      if (cost[cols] != 0) {
        return std::nullopt;
      }
      std::vector<Rational> y(n);
      for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) {
          y[basis[i]] = t[i][cols];
        }
      }
      return y;
    }

  }  // namespace detail

  //! Positive integer weights w, one per letter, such that both sides of
  //! every relation have the same total weight; nothing if there are none.
  //! The result is divided by the gcd of its entries.
  inline std::optional<std::vector<std::uint64_t>>
  homogeneity_witness(Presentation const& p) {
    using detail::Rational;
    std::size_t n = p.size();
    if (p.relations().empty()) {
      return std::vector<std::uint64_t>(n, 1);
    }
    // w = 1 + y with y >= 0 and A w = 0, so A y = -A 1.
    std::vector<std::vector<Rational>> a;
    std::vector<Rational>              b;
    for (auto const& r : p.relations()) {
      std::vector<Rational> row(n);
      for (auto s : r.lhs) {
        row[s.id] += 1;
      }
      for (auto s : r.rhs) {
        row[s.id] -= 1;
      }
      Rational sum = 0;
      for (auto const& x : row) {
        sum += x;
      }
      a.push_back(std::move(row));
      b.push_back(-sum);
    }
    auto y = detail::feasible_point(std::move(a), std::move(b));
    if (!y) {
      return std::nullopt;
    }
    using boost::multiprecision::cpp_int;
    cpp_int den = 1;
    for (auto const& x : *y) {
      cpp_int d = boost::multiprecision::denominator(x);
      den       = den / boost::multiprecision::gcd(den, d) * d;
    }
    std::vector<cpp_int> w;
    cpp_int              g = 0;
    for (auto const& x : *y) {
      Rational v = (x + 1) * Rational(den);
      cpp_int  k = boost::multiprecision::numerator(v);
      g          = boost::multiprecision::gcd(g, k);
      w.push_back(k);
    }
    std::vector<std::uint64_t> out;
    for (auto const& k : w) {
      out.push_back(static_cast<std::uint64_t>(k / g));
    }
    return out;
  }

  inline std::uint64_t weight(std::vector<std::uint64_t> const& w,
                              Word const&                       u) {
    std::uint64_t total = 0;
    for (auto s : u) {
      total += w[s.id];
    }
    return total;
  }

}  // namespace reversing

#endif  // REVERSING_HOMOGENEITY_HPP_
