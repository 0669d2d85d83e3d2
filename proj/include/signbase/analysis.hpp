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

// Bundles the per-instance computations shared by the harness and the CLI.

#pragma once

#include <cstddef>
#include <optional>

#include "signbase/bases.hpp"
#include "signbase/digraph.hpp"
#include "signbase/exponents.hpp"

namespace signbase {

struct Analysis {
  SignedDigraph graph;
  CycleCatalog catalog;
  std::optional<DistinguishedPair> pair;  // absent when powerful
  ExponentReport exponents;
  CWalkReport walks;
  ExponentBound bound;
  std::optional<BaseReport> bases;  // computed when requested and nonpowerful
};

/// Throws NotPrimitive for non-primitive input and CycleCapExceeded when the
/// catalog outgrows `max_cycles`. A powerful input leaves `bases` empty.
inline Analysis analyze(SignedDigraph const& g, bool with_bases = true,
                        std::size_t max_cycles = kDefaultMaxCycles) {
  require_primitive(g);
  Analysis a;
  a.graph = g;
  a.catalog = cycle_catalog(g, max_cycles);
  a.pair = find_distinguished_pair(a.catalog);
  a.exponents = exponent_report(g);
  a.walks = c_walk_report(g, a.catalog);
  a.bound = exponent_upper_bound(g, a.catalog);
  if (with_bases && a.pair) {
    a.bases = base_report(g);
  }
  return a;
}

}  // namespace signbase
