// Copyright 2026 The signbase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The signbase command line. `run` takes explicit streams so tests can drive
// it in-process.

#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "signbase/analysis.hpp"
#include "signbase/families.hpp"
#include "signbase/report.hpp"
#include "signbase/suites.hpp"

namespace signbase::cli {

enum Exit : int {
  kOk = 0,
  kFailure = 1,  // parse error, or a failed verification outcome
  kNotPrimitive = 2,
  kPowerful = 3,
  kLimit = 4,
  kUsage = 64,
  kInternal = 70,
};

namespace detail {

inline std::vector<std::string> split(std::string const& s, std::string const& seps) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string::npos) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  std::vector<std::string> out;
  for (auto& p : parts) {
    auto const b = p.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(p.substr(b, p.find_last_not_of(" \t") - b + 1));
  }
  return out;
}

inline std::size_t positive(std::string const& tok, std::string const& what) {
  if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos ||
      std::stoul(tok) == 0) {
    throw ParameterError(what + ": expected a positive integer, got \"" + tok + "\"");
  }
  return std::stoul(tok);
}

// "u v; u v" with 1-based vertices.
inline Explicit parse_negate(std::string const& text) {
  Explicit e;
  for (auto const& pair : split(text, ";,")) {
    std::istringstream is(pair);
    std::string a, b, extra;
    if (!(is >> a >> b) || (is >> extra)) {
      throw ParameterError("--negate: expected \"u v\" pairs, got \"" + pair + "\"");
    }
    e.signs[{positive(a, "--negate") - 1, positive(b, "--negate") - 1}] = -1;
  }
  return e;
}

// "4:-,5:+"
inline Solve parse_solve(std::string const& text) {
  Solve s;
  for (auto const& item : split(text, ",;")) {
    auto const colon = item.find(':');
    if (colon == std::string::npos || colon + 2 != item.size() ||
        (item.back() != '+' && item.back() != '-')) {
      throw ParameterError("--solve: expected \"length:sign\", got \"" + item + "\"");
    }
    s.by_length[positive(item.substr(0, colon), "--solve")] = item.back() == '+' ? 1 : -1;
  }
  return s;
}

struct Output {
  std::ostream& out;
  std::ostream& err;
};

inline int fail(Output& io, int code, std::string const& msg) {
  io.err << "error: " << msg << "\n";
  return code;
}

// Shared tail of analyze and family: runs the analysis and reports it.
struct AnalyzeFlags {
  bool exp_only = false;
  bool json = false;
  bool timing = false;
  std::size_t max_cycles = kDefaultMaxCycles;
};

inline int report_analysis(Output& io, SignedDigraph const& g, std::string const& descriptor,
                           AnalyzeFlags const& f,
                           std::optional<std::pair<std::string, std::string>> family = {}) {
  auto const t0 = std::chrono::steady_clock::now();
  Analysis a = analyze(g, !f.exp_only, f.max_cycles);
  std::optional<report::Timing> timing;
  if (f.timing) {
    timing = report::Timing{
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count()};
  }
  if (f.json) {
    auto rep = report::analysis(a, descriptor, timing);
    if (family) {
      report::json j = {{"schema", report::kSchema},
                        {"family", family->first},
                        {"edge_list", family->second},
                        {"report", std::move(rep)}};
      io.out << report::dump(j);
    } else {
      io.out << report::dump(rep);
    }
  } else {
    if (family) io.out << "# " << family->first << "\n" << family->second << "\n";
    io.out << report::analysis_text(a, descriptor, timing);
  }
  if (!f.exp_only && !a.pair) {
    return fail(io, kPowerful,
                "digraph is powerful: no pair of opposite-sign walks of equal length "
                "exists between any two vertices");
  }
  return kOk;
}

inline std::string read_input(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  detail::Output io{out, err};
  CLI::App app{"Local exponents and local bases of signed digraphs", "signbase"};
  app.require_subcommand(1);

  detail::AnalyzeFlags af;
  std::string file;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze an edge-list file (- for stdin)");
  analyze_cmd->add_option("file", file, "edge-list file")->required();
  auto add_analysis_flags = [&](CLI::App* c) {
    c->add_flag("--exp-only", af.exp_only, "skip base computation");
    c->add_flag("--json", af.json, "machine-readable output");
    c->add_flag("--timing", af.timing, "include wall-clock timing");
    c->add_option("--max-cycles", af.max_cycles, "cycle enumeration cap")
        ->check(CLI::PositiveNumber);
  };
  add_analysis_flags(analyze_cmd);

  std::string name;
  std::size_t n = 0, k = 0, i = 0;
  std::string preset_name, negate, solve;
  bool no_analyze = false;
  auto* family_cmd = app.add_subcommand("family", "generate a named family member");
  family_cmd->add_option("--name", name, "family name")->required();
  family_cmd->add_option("--n", n, "order")->required();
  family_cmd->add_option("--k", k, "k (dki)");
  family_cmd->add_option("--i", i, "i (dki, fprime)");
  auto* p_opt = family_cmd->add_option("--preset", preset_name, "named signed variant");
  auto* neg_opt = family_cmd->add_option("--negate", negate, "negative arcs, \"u v;u v\"");
  auto* sol_opt = family_cmd->add_option("--solve", solve, "cycle signs by length, \"4:-,5:+\"");
  p_opt->excludes(neg_opt)->excludes(sol_opt);
  neg_opt->excludes(sol_opt);
  family_cmd->add_flag("--no-analyze", no_analyze, "print the edge list only");
  add_analysis_flags(family_cmd);

  std::string suite, range;
  std::optional<std::size_t> samples;
  std::uint64_t seed = verify::kDefaultSeed;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(verify::kSuiteNames.begin(),
                                                     verify::kSuiteNames.end())));
  verify_cmd->add_option("--n", range, "order range A..B");
  verify_cmd->add_option("--samples", samples, "random instances per order");
  verify_cmd->add_option("--seed", seed, "sampler seed");
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (CLI::CallForHelp const& e) {
    out << app.help();
    return kOk;
  } catch (CLI::CallForAllHelp const& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (CLI::ParseError const& e) {
    return detail::fail(io, kUsage, e.what());
  }

  try {
    if (analyze_cmd->parsed()) {
      std::string text;
      try {
        text = detail::read_input(file);
      } catch (std::exception const& e) {
        return detail::fail(io, kFailure, e.what());
      }
      SignedDigraph g;
      try {
        g = parse(text);
      } catch (ParseError const& e) {
        return detail::fail(io, kFailure, file + ": " + e.what());
      }
      return detail::report_analysis(io, g, file == "-" ? "<stdin>" : file, af);
    }

    if (family_cmd->parsed()) {
      FamilySpec spec;
      std::string suffix;
      try {
        auto const f = family_from_name(name);
        if (!f) throw ParameterError("unknown family \"" + name + "\"");
        spec.family = *f;
        spec.n = n;
        spec.k = k;
        spec.i = i;
        if (!preset_name.empty()) {
          auto const v = variant_from_name(preset_name);
          if (!v) throw ParameterError("unknown preset \"" + preset_name + "\"");
          spec.policy = Preset{*v};
        } else if (!negate.empty()) {
          spec.policy = detail::parse_negate(negate);
          suffix = "/negate(" + negate + ")";
        } else if (!solve.empty()) {
          spec.policy = detail::parse_solve(solve);
          suffix = "/solve(" + solve + ")";
        }
        validate(spec);
      } catch (ParameterError const& e) {
        return detail::fail(io, kUsage, e.what());
      }
      SignedDigraph g;
      try {
        g = generate(spec);
      } catch (ParameterError const& e) {
        return detail::fail(io, kUsage, e.what());
      } catch (InfeasibleSigns const& e) {
        return detail::fail(io, kUsage, e.what());
      }
      std::string const descriptor = describe(spec) + suffix;
      std::string const edges = to_edge_list(g);
      if (no_analyze) {
        if (af.json) {
          report::json j = {{"schema", report::kSchema},
                            {"family", descriptor},
                            {"edge_list", edges}};
          out << report::dump(j);
        } else {
          out << "# " << descriptor << "\n" << edges;
        }
        return kOk;
      }
      return detail::report_analysis(io, g, descriptor, af,
                                     std::pair{descriptor, edges});
    }

    if (verify_cmd->parsed()) {
      verify::SuiteOptions opt;
      opt.seed = seed;
      opt.samples = samples;
      std::vector<verify::Outcome> outcomes;
      try {
        if (!range.empty()) opt.orders = verify::parse_range(range);
        outcomes = verify::run_suite(suite, opt);
      } catch (ParameterError const& e) {
        return detail::fail(io, kUsage, e.what());
      }
      auto const s = verify::summarize(outcomes);
      if (verify_json) {
        out << report::dump(report::outcomes(outcomes));
      } else {
        for (auto const& o : outcomes) out << report::outcome_line(o) << "\n";
        out << "summary: " << s.total << " outcomes, " << s.passed << " passed, "
            << s.failed << " failed\n";
      }
      return s.failed == 0 ? kOk : kFailure;
    }
  } catch (NotPrimitive const& e) {
    return detail::fail(io, kNotPrimitive, std::string("not primitive: ") + e.what());
  } catch (CycleCapExceeded const& e) {
    return detail::fail(io, kLimit, e.what());
  } catch (BudgetExceeded const& e) {
    return detail::fail(io, kLimit, e.what());
  } catch (Error const& e) {
    return detail::fail(io, kInternal, e.what());
  }
  return kUsage;
}

}  // namespace signbase::cli
