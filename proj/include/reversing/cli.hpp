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

// The command-line driver.  run() parses arguments, dispatches one verb and
// prints either plain text or a JSON report.  Exit codes: 0 for definitive
// answers, 2 for Unknown or limits, 1 for usage and input errors.

#ifndef REVERSING_CLI_HPP_
#define REVERSING_CLI_HPP_

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braid.hpp"
#include "completeness.hpp"
#include "decision.hpp"
#include "diagram.hpp"
#include "engine.hpp"
#include "export.hpp"
#include "garside.hpp"
#include "presentation.hpp"
#include "text.hpp"

namespace reversing::cli {

  inline constexpr char const* report_schema = "reversing-report/1";

  enum Exit { Definitive = 0, Usage = 1, Inconclusive = 2 };

  struct Options {
    std::string              verb;
    std::string              presentation;
    std::size_t              strands = 0;
    std::string              w;
    std::string              u;
    std::string              v;
    std::string              u1;
    std::string              u2;
    std::string              delta;
    std::string              family;
    std::string              variant = "rr";
    std::string              format  = "dot";
    std::string              limits;
    std::size_t              max_iterations = 64;
    bool                     json           = false;
    bool                     trace          = false;
    bool                     left           = false;
    bool                     exhaustive     = false;
    bool                     named          = false;
    bool                     complemented   = false;
    bool                     inhomogeneous  = false;
    std::size_t              max_added       = 64;
    std::size_t              max_side_length = 32;
  };

  //! "steps=N,len=L,frontier=F", any subset, any order.
  inline Limits parse_limits(std::string const& text) {
    Limits            out;
    std::stringstream ss(text);
    std::string       item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) {
        continue;
      }
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        throw Error("bad limit \"" + item + "\"");
      }
      auto        key = item.substr(0, eq);
      std::size_t val = 0;
      try {
        std::size_t used = 0;
        val              = std::stoull(item.substr(eq + 1), &used);
        if (used != item.size() - eq - 1) {
          throw std::invalid_argument(item);
        }
      } catch (std::exception const&) {
        throw Error("bad limit value \"" + item + "\"");
      }
      if (key == "steps") {
        out.max_steps = val;
      } else if (key == "len") {
        out.max_word_length = val;
      } else if (key == "frontier") {
        out.max_frontier = val;
      } else {
        throw Error("unknown limit \"" + key + "\"");
      }
    }
    return out;
  }

  //! "1-2,2-3" into strand pairs.
  inline std::vector<StrandPair> parse_family(std::string const& text) {
    std::vector<StrandPair> out;
    std::stringstream       ss(text);
    std::string             item;
    while (std::getline(ss, item, ',')) {
      auto dash = item.find('-');
      if (dash == std::string::npos) {
        throw Error("bad strand pair \"" + item + "\"");
      }
      auto a = static_cast<std::uint32_t>(std::stoul(item.substr(0, dash)));
      auto b = static_cast<std::uint32_t>(std::stoul(item.substr(dash + 1)));
      if (a > b) {
        std::swap(a, b);
      }
      out.emplace_back(a, b);
    }
    return out;
  }

  inline Presentation load_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  namespace detail {

    struct Context {
      Options      opt;
      Presentation p;
      Limits       limits;
      json         inputs   = json::object();
      json         result   = json::object();
      json         evidence = json::array();
      std::size_t  steps    = 0;
      std::size_t  explored = 0;
      std::ostringstream text;
    };

    inline int verdict_exit(Answer a) {
      return a == Answer::Unknown ? Inconclusive : Definitive;
    }

    inline void print_verdict(Context& c, Verdict const& v) {
      c.result["verdict"] = to_json(v);
      for (auto const& e : v.evidence) {
        c.evidence.push_back(e);
      }
      c.explored += v.explored;
      c.text << "answer: " << to_string(v.answer) << "\n";
      c.text << "method: " << v.method << "\n";
      for (auto const& e : v.evidence) {
        c.text << "  " << e << "\n";
      }
      for (auto const& x : v.prerequisites) {
        c.text << "prerequisite " << x.name << ": " << x.status << "\n";
      }
    }

    inline Word word_arg(Context& c, std::string const& key, std::string const& text) {
      c.inputs[key] = text;
      return parse_word(c.p, text);
    }

    inline SignedWord signed_arg(Context& c, std::string const& key,
                                 std::string const& text) {
      c.inputs[key] = text;
      return parse_signed_word(c.p, text);
    }

    inline int do_check(Context& c) {
      auto v              = check_completeness(c.p, c.limits);
      c.result["completeness"] = to_json(c.p, v);
      c.result["complemented"] = is_complemented(c.p);
      c.text << "complemented: " << (is_complemented(c.p) ? "yes" : "no") << "\n";
      if (v.weights) {
        c.text << "weights:";
        for (auto x : *v.weights) {
          c.text << ' ' << x;
        }
        c.text << "\n";
      }
      c.text << "completeness: " << to_string(v.status) << " (" << to_string(v.method)
             << ", " << v.triples << " triples)\n";
      for (auto const& r : v.failing) {
        c.text << "  fails: (" << format(c.p, r.u) << ", " << format(c.p, r.u1) << ", "
               << format(c.p, r.u2) << ") residual " << format(c.p, r.residual) << "\n";
        c.evidence.push_back("cube condition fails on (" + format(c.p, r.u) + ", "
                             + format(c.p, r.u1) + ", " + format(c.p, r.u2) + ")");
      }
      auto lc = left_cancellative(c.p, c.limits, v);
      auto rc = right_cancellative(c.p, c.limits);
      c.result["left_cancellative"]  = to_json(lc);
      c.result["right_cancellative"] = to_json(rc);
      c.text << "left cancellative: " << to_string(lc.answer) << "\n";
      c.text << "right cancellative: " << to_string(rc.answer) << "\n";
      return v.status == Completeness::Unknown ? Inconclusive : Definitive;
    }

    inline json outcome_json(Context& c, ReversalOutcome const& out) {
      json r = {{"status", to_string(out.status)},
                {"steps", out.steps},
                {"total_steps", out.total_steps},
                {"last", format(c.p, out.last)}};
      if (out.terminal) {
        r["terminal"]    = format(c.p, *out.terminal);
        r["numerator"]   = format(c.p, *out.numerator);
        r["denominator"] = format(c.p, *out.denominator);
      }
      if (out.stuck_pair) {
        r["stuck_pair"] = {c.p.name(out.stuck_pair->first), c.p.name(out.stuck_pair->second)};
      }
      if (c.opt.trace) {
        json t = json::array();
        for (auto const& w : out.trace) {
          t.push_back(format(c.p, w));
        }
        r["trace"] = t;
      }
      return r;
    }

    inline int do_reverse(Context& c) {
      auto w        = signed_arg(c, "w", c.opt.w);
      auto strategy = c.opt.exhaustive ? Strategy::Exhaustive : Strategy::Leftmost;
      auto out      = c.opt.left ? reverse_left(c.p, w, strategy, c.limits, c.opt.trace)
                                 : reverse_right(c.p, w, strategy, c.limits, c.opt.trace);
      c.result  = outcome_json(c, out);
      c.steps   = out.total_steps;
      c.explored = out.explored;
      if (c.opt.trace) {
        for (auto const& x : out.trace) {
          c.text << format(c.p, x) << "\n";
        }
      }
      c.text << "status: " << to_string(out.status) << "\n";
      c.text << "nontrivial steps: " << out.steps << "\n";
      c.text << "total steps: " << out.total_steps << "\n";
      if (out.terminal) {
        c.text << "result: " << format(c.p, *out.terminal) << "\n";
      } else {
        c.text << "last: " << format(c.p, out.last) << "\n";
      }
      if (out.stuck_pair) {
        c.text << "stuck on: (" << c.p.name(out.stuck_pair->first) << ", "
               << c.p.name(out.stuck_pair->second) << ")\n";
      }
      return out.status == ReversalStatus::LimitExceeded ? Inconclusive : Definitive;
    }

    inline int do_complete(Context& c) {
      CompletionOptions co;
      co.max_added           = c.opt.max_added;
      co.max_side_length     = c.opt.max_side_length;
      co.require_homogeneous = !c.opt.inhomogeneous;
      auto res = complete_presentation(
          c.p, c.opt.limits.empty() ? completion_limits() : c.limits, co);
      json added = json::array();
      for (auto const& r : res.added) {
        added.push_back(format(res.final, r.lhs) + " = " + format(res.final, r.rhs));
        c.text << "added: " << format(res.final, r.lhs) << " = " << format(res.final, r.rhs)
               << "\n";
      }
      c.result["added"]        = added;
      c.result["status"]       = to_string(res.status);
      c.result["rounds"]       = res.rounds;
      c.result["presentation"] = serialize(res.final);
      if (!res.reason.empty()) {
        c.result["reason"] = res.reason;
        c.evidence.push_back(res.reason);
      }
      c.text << "status: " << to_string(res.status) << "\n";
      if (!res.reason.empty()) {
        c.text << "reason: " << res.reason << "\n";
      }
      c.text << serialize(res.final);
      return res.status == CompletionStatus::Completed ? Definitive : Inconclusive;
    }

    inline int do_cube(Context& c) {
      auto u  = word_arg(c, "u", c.opt.u);
      auto u1 = word_arg(c, "u1", c.opt.u1);
      auto u2 = word_arg(c, "u2", c.opt.u2);
      auto r  = c.opt.complemented ? cube_condition_complemented(c.p, u, u1, u2, c.limits)
                                   : cube_condition(c.p, u, u1, u2, c.limits);
      c.result = to_json(c.p, r);
      c.text << "cube condition: " << to_string(r.status) << "\n";
      if (r.status == CubeStatus::Fails) {
        c.text << "intermediate: " << format(c.p, r.intermediate) << "\n";
        c.text << "residual: " << format(c.p, r.residual) << "\n";
        for (auto const& x : r.residual_results) {
          c.text << "  reverses to " << format(c.p, x) << "\n";
        }
      }
      if (!r.note.empty()) {
        c.text << "note: " << r.note << "\n";
      }
      return r.status == CubeStatus::Unknown ? Inconclusive : Definitive;
    }

    inline int do_wp_monoid(Context& c) {
      auto u = word_arg(c, "u", c.opt.u);
      auto v = word_arg(c, "v", c.opt.v);
      auto r = equivalent_monoid(c.p, u, v, c.limits);
      print_verdict(c, r);
      return verdict_exit(r.answer);
    }

    inline int do_wp_group(Context& c) {
      auto w = signed_arg(c, "w", c.opt.w);
      if (c.opt.variant != "rr" && c.opt.variant != "rl") {
        throw CLI::ValidationError("--variant", "expected rr or rl");
      }
      auto variant = c.opt.variant == "rr" ? GroupVariant::RightRight : GroupVariant::RightLeft;
      if (w.empty()) {
        Verdict v;
        v.answer = Answer::Yes;
        v.method = "empty word";
        v.evidence.push_back("the empty word represents 1");
        print_verdict(c, v);
        return Definitive;
      }
      auto r = equivalent_group(c.p, w, variant, c.limits);
      print_verdict(c, r);
      return verdict_exit(r.answer);
    }

    inline int do_lcm(Context& c) {
      auto u = word_arg(c, "u", c.opt.u);
      auto v = word_arg(c, "v", c.opt.v);
      auto l = right_lcm(c.p, u, v, c.limits);
      if (!l) {
        c.result["lcm"] = nullptr;
        c.text << "no common right-multiple\n";
        return Definitive;
      }
      c.result["lcm"] = format(c.p, *l);
      c.text << "right-lcm: " << format(c.p, *l) << "\n";
      return Definitive;
    }

    inline int do_gcd(Context& c) {
      auto u = word_arg(c, "u", c.opt.u);
      auto v = word_arg(c, "v", c.opt.v);
      auto g = left_gcd(c.p, u, v, c.limits);
      c.result["gcd"] = format(c.p, g);
      c.text << "left-gcd: " << format(c.p, g) << "\n";
      return Definitive;
    }

    inline Word delta_arg(Context& c) {
      if (!c.opt.delta.empty()) {
        return word_arg(c, "delta", c.opt.delta);
      }
      auto d = find_garside_candidate(c.p, c.limits);
      if (!d) {
        throw LimitExceeded("no Garside candidate within the limits");
      }
      return *d;
    }

    inline int do_nf(Context& c) {
      auto w  = word_arg(c, "w", c.opt.w);
      auto d  = delta_arg(c);
      auto nf = normal_form(c.p, d, w, c.limits);
      json factors = json::array();
      for (auto const& f : nf.factors) {
        factors.push_back(format(c.p, f));
      }
      c.result["delta"]   = format(c.p, nf.delta);
      c.result["factors"] = factors;
      c.text << format(c.p, nf) << "\n";
      return Definitive;
    }

    inline int do_garside(Context& c) {
      auto d = delta_arg(c);
      auto l = divisors(c.p, d, c.limits);
      c.result = to_json(c.p, l);
      if (c.opt.format == "dot" && !c.opt.json) {
        c.text << to_dot(c.p, l);
        return Definitive;
      }
      c.text << "delta: " << format(c.p, l.delta) << "\n";
      c.text << "divisors: " << l.size() << "\n";
      for (auto const& x : l.elements) {
        c.text << "  " << format(c.p, x) << "\n";
      }
      return Definitive;
    }

    inline int do_braid_dist(Context& c) {
      auto u = word_arg(c, "u", c.opt.u);
      auto v = word_arg(c, "v", c.opt.v);
      auto o = bfs_equivalence_oracle(c.p, u, v, c.limits);
      c.explored = o.explored;
      if (o.distance) {
        c.result["distance"] = *o.distance;
        c.text << "combinatorial distance: " << *o.distance << "\n";
      } else {
        c.result["distance"] = nullptr;
        c.text << "combinatorial distance: " << (o.exhausted ? "not equivalent" : "unknown")
               << "\n";
      }
      if (o.distance) {
        auto k = reversing_complexity(c.p, u, v, c.limits);
        c.result["reversing_complexity"] = k;
        c.text << "reversing steps: " << k << "\n";
      }
      return o.distance || o.exhausted ? Definitive : Inconclusive;
    }

    inline int do_braid_opt(Context& c) {
      auto u = word_arg(c, "u", c.opt.u);
      auto v = word_arg(c, "v", c.opt.v);
      std::optional<std::vector<StrandPair>> family;
      if (!c.opt.family.empty()) {
        family = parse_family(c.opt.family);
        c.inputs["family"] = c.opt.family;
      }
      auto r   = check_optimality(c.opt.strands, u, v, family, c.limits);
      c.result = to_json(r);
      c.text << to_string(r.status);
      if (r.distance) {
        c.text << ", distance " << *r.distance;
      }
      c.text << " (" << r.faces << " faces)\n";
      if (!r.reason.empty()) {
        c.text << "reason: " << r.reason << "\n";
      }
      return r.status == Optimality::Optimal ? Definitive : Inconclusive;
    }

    inline int do_phi(Context& c) {
      auto u = word_arg(c, "u", c.opt.u);
      auto v = word_arg(c, "v", c.opt.v);
      auto o = phi_orbit(c.p, u, v, c.opt.max_iterations, c.limits);
      json seq = json::array();
      for (auto const& [x, y] : o.sequence) {
        seq.push_back({format(c.p, x), format(c.p, y)});
        c.text << "(" << format(c.p, x) << ", " << format(c.p, y) << ")\n";
      }
      c.result["sequence"] = seq;
      c.result["cycle"]    = o.cycle;
      if (o.cycle) {
        c.result["cycle_entry"]  = o.cycle_entry;
        c.result["cycle_length"] = o.cycle_length;
        c.text << "cycle: entry " << o.cycle_entry << ", length " << o.cycle_length << "\n";
      } else {
        c.result["error"] = o.error;
        c.text << "no cycle: " << o.error << "\n";
      }
      return o.cycle ? Definitive : Inconclusive;
    }

    inline int do_export(Context& c) {
      auto u    = word_arg(c, "u", c.opt.u);
      auto v    = word_arg(c, "v", c.opt.v);
      if (!is_complemented(c.p)) {
        // No grid; draw the diagram of one successful reversing sequence.
        auto w   = quotient(u, v);
        auto out = search_right(c.p, w, SearchGoal::Empty, c.limits);
        if (out.status != ReversalStatus::Terminal) {
          out = search_right(c.p, w, SearchGoal::PositiveNegative, c.limits);
        }
        c.steps = out.steps;
        if (out.status == ReversalStatus::LimitExceeded) {
          throw LimitExceeded("no reversing sequence found within the limits");
        }
        auto d = record_diagram(c.p, w, out.path);
        if (c.opt.format == "json") {
          c.result = to_json(c.p, d);
          c.result["status"] = to_string(out.status);
          c.text << c.result.dump(2) << "\n";
        } else if (c.opt.format == "dot") {
          auto dot        = to_dot(c.p, d);
          c.result["dot"] = dot;
          c.text << dot;
        } else {
          throw CLI::ValidationError("--format", "expected dot or json");
        }
        return out.status == ReversalStatus::Terminal ? Definitive : Inconclusive;
      }
      auto grid = build_grid(c.p, u, v, c.limits);
      c.steps   = grid.steps;
      if (c.opt.format == "json") {
        c.result = to_json(c.p, grid);
        c.text << c.result.dump(2) << "\n";
      } else if (c.opt.format == "dot") {
        std::string dot;
        if (c.opt.named) {
          dot = to_dot(c.p, name_grid(c.opt.strands, grid));
        } else if (c.opt.trace) {
          dot = to_dot(c.p, grid.diagram);
        } else {
          dot = to_dot(c.p, grid);
        }
        c.result["dot"] = dot;
        c.text << dot;
      } else {
        throw CLI::ValidationError("--format", "expected dot or json");
      }
      return Definitive;
    }

  }  // namespace detail

  //! Runs one command; \p args excludes the program name.
  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out = std::cout,
                 std::ostream&                   err = std::cerr) {
    CLI::App app{"Subword reversing toolkit"};
    app.require_subcommand(1);
    Options opt;

    struct Verb {
      char const* name;
      char const* help;
      int (*fn)(detail::Context&);
      bool braid;
    };
    Verb const verbs[] = {
        {"check", "completeness and cancellativity verdicts", detail::do_check, false},
        {"reverse", "right (or left) reversing of a signed word", detail::do_reverse, false},
        {"complete", "add relations until the cube condition holds", detail::do_complete, false},
        {"cube", "cube condition on a triple of words", detail::do_cube, false},
        {"wp-monoid", "word problem in the monoid", detail::do_wp_monoid, false},
        {"wp-group", "word problem in the group", detail::do_wp_group, false},
        {"lcm", "right-lcm", detail::do_lcm, false},
        {"gcd", "left-gcd", detail::do_gcd, false},
        {"nf", "right-greedy normal form", detail::do_nf, false},
        {"garside", "Garside element and divisor lattice", detail::do_garside, false},
        {"braid-dist", "combinatorial distance of braid words", detail::do_braid_dist, true},
        {"braid-opt", "optimality certificate for braid reversing", detail::do_braid_opt, true},
        {"phi", "orbit of (u, v) under Phi", detail::do_phi, false},
        {"export", "reversing grid as DOT or JSON", detail::do_export, false},
    };

    for (auto const& vb : verbs) {
      auto* sub = app.add_subcommand(vb.name, vb.help);
      sub->add_option("-p,--presentation", opt.presentation, "presentation file");
      sub->add_option("-n,--strands", opt.strands, "braid presentation on n strands");
      sub->add_option("-w,--word", opt.w, "word");
      sub->add_option("-u", opt.u, "first word");
      sub->add_option("-v", opt.v, "second word");
      sub->add_option("--limits", opt.limits, "steps=N,len=L,frontier=F");
      sub->add_flag("--json", opt.json, "JSON report");
      sub->add_flag("--trace", opt.trace, "include reversing traces");
      std::string name = vb.name;
      if (name == "reverse") {
        sub->add_flag("--left", opt.left, "left reversing");
        sub->add_flag("--exhaustive", opt.exhaustive, "search all reversing sequences");
      } else if (name == "complete") {
        sub->add_option("--max-added", opt.max_added, "relation count cap");
        sub->add_option("--max-length", opt.max_side_length, "relation side length cap");
        sub->add_flag("--allow-inhomogeneous", opt.inhomogeneous,
                      "skip the homogeneity requirement");
      } else if (name == "cube") {
        sub->add_option("--u1", opt.u1, "u'")->required();
        sub->add_option("--u2", opt.u2, "u''")->required();
        sub->add_flag("--complemented", opt.complemented, "complemented form");
      } else if (name == "wp-group") {
        sub->add_option("--variant", opt.variant, "rr or rl");
      } else if (name == "nf" || name == "garside") {
        sub->add_option("--delta", opt.delta, "Garside element (default: discovered)");
        sub->add_option("--format", opt.format, "dot or text (garside)");
      } else if (name == "braid-opt") {
        sub->add_option("--family", opt.family, "strand pairs, e.g. 1-2,2-3");
      } else if (name == "phi") {
        sub->add_option("--max", opt.max_iterations, "iterations");
      } else if (name == "export") {
        sub->add_option("--format", opt.format, "dot or json");
        sub->add_flag("--named", opt.named, "label edges with strand names");
      }
      sub->callback([&opt, name] { opt.verb = name; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return Definitive;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n";
      return Usage;
    }

    Verb const* verb = nullptr;
    for (auto const& vb : verbs) {
      if (opt.verb == vb.name) {
        verb = &vb;
      }
    }

    detail::Context c;
    c.opt   = opt;
    auto t0 = std::chrono::steady_clock::now();
    int  code;
    try {
      c.limits = parse_limits(opt.limits);
      if (!opt.presentation.empty()) {
        c.p                    = load_presentation(opt.presentation);
        c.inputs["presentation"] = opt.presentation;
      } else if (opt.strands >= 2) {
        c.p               = braid_presentation(opt.strands);
        c.inputs["strands"] = opt.strands;
      } else {
        throw CLI::ValidationError("presentation", "give -p FILE or -n STRANDS");
      }
      if (verb->braid || opt.named) {
        if (opt.strands < 2) {
          throw CLI::ValidationError("--strands", "braid verbs need -n");
        }
        if (!(c.p == braid_presentation(opt.strands))) {
          throw CLI::ValidationError("--strands", "not the braid presentation");
        }
      }
      code = verb->fn(c);
    } catch (CLI::Error const& e) {
      err << opt.verb << ": " << e.what() << "\n";
      return Usage;
    } catch (ParseError const& e) {
      err << opt.verb << ": parse error " << e.what() << "\n";
      return Usage;
    } catch (LimitExceeded const& e) {
      err << opt.verb << ": " << e.what() << "\n";
      code = Inconclusive;
      c.result["error"] = e.what();
    } catch (Error const& e) {
      err << opt.verb << ": " << e.what() << "\n";
      return Usage;
    }
    auto wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);

    if (opt.json) {
      json report = {{"schema", report_schema},
                     {"verb", opt.verb},
                     {"inputs", c.inputs},
                     {"result", c.result},
                     {"evidence", c.evidence},
                     {"exit_code", code},
                     {"usage",
                      {{"steps", c.steps},
                       {"explored", c.explored},
                       {"wall_ms", wall.count()}}}};
      out << report.dump(2) << "\n";
    } else {
      out << c.text.str();
    }
    return code;
  }

  inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args);
  }

}  // namespace reversing::cli

#endif  // REVERSING_CLI_HPP_
