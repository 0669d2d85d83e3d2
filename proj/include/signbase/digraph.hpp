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

// Signed digraphs: data model, edge-list I/O, connectivity, simple-cycle
// catalogs, primitivity and nonpowerfulness.
//
// Vertices are 0-based in the API. The edge-list format and every report
// are 1-based.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signbase/error.hpp"
#include "signbase/sign_semiring.hpp"

namespace signbase {

using Vertex = std::size_t;

inline constexpr std::size_t kUnreachable =
    std::numeric_limits<std::size_t>::max();
inline constexpr std::size_t kDefaultMaxCycles = 1'000'000;

struct Arc {
  Vertex from;
  Vertex to;
  int sign;  // +1 or -1
  friend bool operator==(Arc const&, Arc const&) = default;
};

class SignedDigraph {
 public:
  SignedDigraph() = default;
  explicit SignedDigraph(std::size_t n) : n_(n), sign_(n * n, 0), out_(n) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_; }

  void add_arc(Vertex from, Vertex to, int sign) {
    if (from >= n_ || to >= n_) {
      throw ParameterError("arc (" + std::to_string(from + 1) + ", " +
                           std::to_string(to + 1) + ") outside 1.." +
                           std::to_string(n_));
    }
    if (sign != 1 && sign != -1) {
      throw ParameterError("arc sign must be +1 or -1");
    }
    if (sign_[from * n_ + to] != 0) {
      throw DuplicateArc("duplicate arc (" + std::to_string(from + 1) + ", " +
                         std::to_string(to + 1) + ")");
    }
    sign_[from * n_ + to] = static_cast<std::int8_t>(sign);
    auto& o = out_[from];
    o.insert(std::upper_bound(o.begin(), o.end(), to), to);
    ++arcs_;
  }

  bool has_arc(Vertex from, Vertex to) const noexcept {
    return sign_[from * n_ + to] != 0;
  }
  /// +1, -1, or 0 when there is no arc.
  int sign(Vertex from, Vertex to) const noexcept {
    return sign_[from * n_ + to];
  }
  std::vector<Vertex> const& out(Vertex v) const noexcept { return out_[v]; }

  /// Arcs ordered by (from, to).
  std::vector<Arc> arcs() const {
    std::vector<Arc> a;
    a.reserve(arcs_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : out_[u]) {
        a.push_back({u, v, sign_[u * n_ + v]});
      }
    }
    return a;
  }

  /// Same arcs, all positive.
  SignedDigraph underlying() const {
    SignedDigraph u(n_);
    for (auto const& a : arcs()) {
      u.add_arc(a.from, a.to, 1);
    }
    return u;
  }

  SignMatrix sign_matrix() const {
    SignMatrix m(n_);
    for (auto const& a : arcs()) {
      m.set(a.from, a.to, sign_of(a.sign));
    }
    return m;
  }

  BitMatrix adjacency() const {
    BitMatrix m(n_);
    for (auto const& a : arcs()) {
      m.set(a.from, a.to);
    }
    return m;
  }

  friend bool operator==(SignedDigraph const& a, SignedDigraph const& b) {
    return a.n_ == b.n_ && a.sign_ == b.sign_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t arcs_ = 0;
  std::vector<std::int8_t> sign_;
  std::vector<std::vector<Vertex>> out_;
};

// ---------------------------------------------------------------------------
// Edge-list format

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
      ++j;
    }
    if (j > i) {
      out.push_back(s.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

// Positive decimal integer without sign or leading '+'.
inline std::optional<std::size_t> parse_index(std::string_view tok) {
  if (tok.empty() || tok.size() > 9) {
    return std::nullopt;
  }
  std::size_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') {
      return std::nullopt;
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace detail

/// Parses the edge-list format: first nonblank line is n, then one "u v s"
/// line per arc with 1-based u, v and s in {+,-}. Lines starting with '#'
/// are comments.
inline SignedDigraph parse(std::string_view text) {
  std::optional<SignedDigraph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const nl = text.find('\n', pos);
    auto const raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    auto const line = detail::trim(raw);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    auto const tok = detail::split_ws(line);
    if (!g) {
      if (tok.size() != 1) {
        throw ParseError(line_no, "expected the vertex count on its own");
      }
      auto const n = detail::parse_index(tok[0]);
      if (!n || *n == 0) {
        throw ParseError(line_no, "vertex count must be a positive integer");
      }
      g.emplace(*n);
      continue;
    }
    if (tok.size() != 3) {
      throw ParseError(line_no, "expected \"u v s\"");
    }
    auto const u = detail::parse_index(tok[0]);
    auto const v = detail::parse_index(tok[1]);
    if (!u || !v) {
      throw ParseError(line_no, "vertex indices must be positive integers");
    }
    if (*u < 1 || *u > g->order() || *v < 1 || *v > g->order()) {
      throw ParseError(line_no, "vertex index out of range 1.." +
                                    std::to_string(g->order()));
    }
    int s = 0;
    if (tok[2] == "+") {
      s = 1;
    } else if (tok[2] == "-") {
      s = -1;
    } else {
      throw ParseError(line_no, "sign must be '+' or '-'");
    }
    if (g->has_arc(*u - 1, *v - 1)) {
      throw ParseError(line_no, "duplicate arc " + std::string(tok[0]) + " " +
                                    std::string(tok[1]));
    }
    g->add_arc(*u - 1, *v - 1, s);
  }
  if (!g) {
    throw ParseError(0, "empty document");
  }
  return std::move(*g);
}

inline std::string to_edge_list(SignedDigraph const& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto const& a : g.arcs()) {
    os << a.from + 1 << ' ' << a.to + 1 << ' ' << (a.sign > 0 ? '+' : '-')
       << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Distances and connectivity

/// BFS distances from `source`; kUnreachable where no path exists.
inline std::vector<std::size_t> distances_from(SignedDigraph const& g,
                                               Vertex source) {
  std::vector<std::size_t> d(g.order(), kUnreachable);
  std::queue<Vertex> q;
  d[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex const u = q.front();
    q.pop();
    for (Vertex v : g.out(u)) {
      if (d[v] == kUnreachable) {
        d[v] = d[u] + 1;
        q.push(v);
      }
    }
  }
  return d;
}

inline std::size_t distance(SignedDigraph const& g, Vertex u, Vertex v) {
  return distances_from(g, u)[v];
}

inline SignedDigraph reversed(SignedDigraph const& g) {
  SignedDigraph r(g.order());
  for (auto const& a : g.arcs()) {
    r.add_arc(a.to, a.from, a.sign);
  }
  return r;
}

inline bool is_strongly_connected(SignedDigraph const& g) {
  if (g.order() == 0) {
    return false;
  }
  auto reaches_all = [](std::vector<std::size_t> const& d) {
    return std::none_of(d.begin(), d.end(),
                        [](std::size_t x) { return x == kUnreachable; });
  };
  return reaches_all(distances_from(g, 0)) &&
         reaches_all(distances_from(reversed(g), 0));
}

/// Period (gcd of all cycle lengths) of a strongly connected digraph, from
/// BFS levels: gcd over arcs (u,v) of level(u) + 1 - level(v).
inline std::size_t period(SignedDigraph const& g) {
  auto const level = distances_from(g, 0);
  std::size_t p = 0;
  for (auto const& a : g.arcs()) {
    if (level[a.from] == kUnreachable || level[a.to] == kUnreachable) {
      continue;
    }
    auto const diff = static_cast<long long>(level[a.from]) + 1 -
                      static_cast<long long>(level[a.to]);
    p = std::gcd(p, static_cast<std::size_t>(diff < 0 ? -diff : diff));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Walks and cycles

struct WalkWitness {
  std::vector<Vertex> vertices;  // v0, v1, ..., vL
  std::size_t length = 0;
  int sign = 1;
};

/// Validates consecutive arcs and multiplies their signs.
inline WalkWitness make_walk(SignedDigraph const& g,
                             std::vector<Vertex> vertices) {
  if (vertices.empty()) {
    throw ParameterError("a walk needs at least one vertex");
  }
  int s = 1;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int const a = g.sign(vertices[i], vertices[i + 1]);
    if (a == 0) {
      throw ParameterError("no arc (" + std::to_string(vertices[i] + 1) +
                           ", " + std::to_string(vertices[i + 1] + 1) + ")");
    }
    s *= a;
  }
  std::size_t const len = vertices.size() - 1;
  return {std::move(vertices), len, s};
}

/// A simple directed cycle, rotated so the smallest vertex comes first.
/// `vertices` lists each vertex once; the closing arc is implicit.
struct Cycle {
  std::vector<Vertex> vertices;
  int sign = 1;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(Cycle const&, Cycle const&) = default;
};

struct CycleCatalog {
  std::vector<Cycle> cycles;  // ordered by (length, vertex sequence)
  std::vector<std::size_t> lengths;  // C(S), ascending
  std::vector<std::vector<std::size_t>> on_cycle_lengths;  // per vertex

  bool has_length(std::size_t p) const {
    return std::binary_search(lengths.begin(), lengths.end(), p);
  }
  std::vector<Cycle const*> of_length(std::size_t p) const {
    std::vector<Cycle const*> out;
    for (auto const& c : cycles) {
      if (c.length() == p) {
        out.push_back(&c);
      }
    }
    return out;
  }
};

namespace detail {

// Johnson's elementary-circuit enumeration restricted to vertices >= s inside
// the strongly connected component of s.
class JohnsonEnumerator {
 public:
  JohnsonEnumerator(SignedDigraph const& g, std::size_t max_cycles)
      : g_(g),
        max_(max_cycles),
        blocked_(g.order(), false),
        blist_(g.order()),
        in_scope_(g.order(), false) {}

  std::vector<std::vector<Vertex>> run() {
    std::size_t const n = g_.order();
    for (Vertex s = 0; s < n; ++s) {
      auto const comp = component_of(s);
      std::fill(in_scope_.begin(), in_scope_.end(), false);
      for (Vertex v : comp) {
        in_scope_[v] = true;
      }
      for (Vertex v : comp) {
        blocked_[v] = false;
        blist_[v].clear();
      }
      start_ = s;
      circuit(s);
    }
    return std::move(found_);
  }

 private:
  // Vertices of the SCC containing s in the subgraph induced by {s, ..., n-1}.
  std::vector<Vertex> component_of(Vertex s) const {
    std::size_t const n = g_.order();
    auto bfs = [&](bool forward) {
      std::vector<bool> seen(n, false);
      std::queue<Vertex> q;
      seen[s] = true;
      q.push(s);
      while (!q.empty()) {
        Vertex const u = q.front();
        q.pop();
        for (Vertex v = s; v < n; ++v) {
          bool const arc = forward ? g_.has_arc(u, v) : g_.has_arc(v, u);
          if (arc && !seen[v]) {
            seen[v] = true;
            q.push(v);
          }
        }
      }
      return seen;
    };
    auto const fwd = bfs(true);
    auto const bwd = bfs(false);
    std::vector<Vertex> comp;
    for (Vertex v = s; v < n; ++v) {
      if (fwd[v] && bwd[v]) {
        comp.push_back(v);
      }
    }
    return comp;
  }

  void unblock(Vertex u) {
    blocked_[u] = false;
    while (!blist_[u].empty()) {
      Vertex const w = blist_[u].back();
      blist_[u].pop_back();
      if (blocked_[w]) {
        unblock(w);
      }
    }
  }

  bool circuit(Vertex v) {
    bool closed = false;
    stack_.push_back(v);
    blocked_[v] = true;
    for (Vertex w : g_.out(v)) {
      if (!in_scope_[w]) {
        continue;
      }
      if (w == start_) {
        if (found_.size() >= max_) {
          throw CycleCapExceeded("more than " + std::to_string(max_) +
                                 " simple cycles");
        }
        found_.push_back(stack_);
        closed = true;
      } else if (!blocked_[w]) {
        if (circuit(w)) {
          closed = true;
        }
      }
    }
    if (closed) {
      unblock(v);
    } else {
      for (Vertex w : g_.out(v)) {
        if (in_scope_[w]) {
          auto& b = blist_[w];
          if (std::find(b.begin(), b.end(), v) == b.end()) {
            b.push_back(v);
          }
        }
      }
    }
    stack_.pop_back();
    return closed;
  }

  SignedDigraph const& g_;
  std::size_t max_;
  Vertex start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::vector<Vertex>> blist_;
  std::vector<bool> in_scope_;
  std::vector<Vertex> stack_;
  std::vector<std::vector<Vertex>> found_;
};

}  // namespace detail

/// Every simple directed cycle exactly once, with its sign.
inline CycleCatalog cycle_catalog(SignedDigraph const& g,
                                  std::size_t max_cycles = kDefaultMaxCycles) {
  if (max_cycles == 0) {
    throw ParameterError("max_cycles must be positive");
  }
  auto raw = detail::JohnsonEnumerator(g, max_cycles).run();
  CycleCatalog cat;
  cat.on_cycle_lengths.assign(g.order(), {});
  cat.cycles.reserve(raw.size());
  for (auto& vs : raw) {
    int s = 1;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      s *= g.sign(vs[i], vs[(i + 1) % vs.size()]);
    }
    cat.cycles.push_back({std::move(vs), s});
  }
  std::sort(cat.cycles.begin(), cat.cycles.end(),
            [](Cycle const& a, Cycle const& b) {
              if (a.length() != b.length()) {
                return a.length() < b.length();
              }
              return a.vertices < b.vertices;
            });
  for (auto const& c : cat.cycles) {
    cat.lengths.push_back(c.length());
    for (Vertex v : c.vertices) {
      cat.on_cycle_lengths[v].push_back(c.length());
    }
  }
  auto dedup = [](std::vector<std::size_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(cat.lengths);
  for (auto& l : cat.on_cycle_lengths) {
    dedup(l);
  }
  return cat;
}

inline std::size_t gcd_of(std::vector<std::size_t> const& values) {
  std::size_t g = 0;
  for (auto v : values) {
    g = std::gcd(g, v);
  }
  return g;
}

inline bool is_primitive(SignedDigraph const& g, CycleCatalog const& cat) {
  return is_strongly_connected(g) && gcd_of(cat.lengths) == 1;
}

inline bool is_primitive(SignedDigraph const& g,
                         std::size_t max_cycles = kDefaultMaxCycles) {
  if (!is_strongly_connected(g)) {
    return false;
  }
  return gcd_of(cycle_catalog(g, max_cycles).lengths) == 1;
}

/// Throws NotPrimitive with a reason unless g is primitive. Uses the BFS
/// period, so no cycle catalog is required.
inline void require_primitive(SignedDigraph const& g) {
  if (!is_strongly_connected(g)) {
    throw NotPrimitive("digraph is not strongly connected");
  }
  auto const p = period(g);
  if (p != 1) {
    throw NotPrimitive("gcd of cycle lengths = " + std::to_string(p));
  }
}

// ---------------------------------------------------------------------------
// Nonpowerfulness

struct DistinguishedPair {
  Cycle first;
  Cycle second;
  /// 1: odd cycle with a negative even cycle; 2: odd cycles of opposite sign.
  int condition = 0;
};

inline std::optional<DistinguishedPair> find_distinguished_pair(
    CycleCatalog const& cat) {
  Cycle const* odd = nullptr;
  Cycle const* odd_pos = nullptr;
  Cycle const* odd_neg = nullptr;
  Cycle const* even_neg = nullptr;
  for (auto const& c : cat.cycles) {
    if (c.length() % 2 == 1) {
      if (odd == nullptr) {
        odd = &c;
      }
      if (c.sign > 0 && odd_pos == nullptr) {
        odd_pos = &c;
      }
      if (c.sign < 0 && odd_neg == nullptr) {
        odd_neg = &c;
      }
    } else if (c.sign < 0 && even_neg == nullptr) {
      even_neg = &c;
    }
  }
  if (odd != nullptr && even_neg != nullptr) {
    return DistinguishedPair{*odd, *even_neg, 1};
  }
  if (odd_pos != nullptr && odd_neg != nullptr) {
    return DistinguishedPair{*odd_pos, *odd_neg, 2};
  }
  return std::nullopt;
}

inline bool is_nonpowerful(SignedDigraph const& g, CycleCatalog const& cat) {
  if (!is_primitive(g, cat)) {
    throw NotPrimitive("nonpowerfulness is only defined for primitive input");
  }
  return find_distinguished_pair(cat).has_value();
}

inline bool is_nonpowerful(SignedDigraph const& g,
                           std::size_t max_cycles = kDefaultMaxCycles) {
  return is_nonpowerful(g, cycle_catalog(g, max_cycles));
}

/// Switching certificate of a powerful strongly connected digraph: every
/// arc (u,v) has sign epsilon * potential[u] * potential[v], so every walk of
/// length t from u to v has sign epsilon^t * potential[u] * potential[v].
struct PowerfulSignature {
  int epsilon = 1;
  std::vector<int> potential;
};

/// Returns the certificate when one exists. For a primitive digraph this
/// happens exactly when no distinguished cycle pair exists.
inline std::optional<PowerfulSignature> powerful_signature(
    SignedDigraph const& g) {
  std::size_t const n = g.order();
  auto const rev = reversed(g);
  for (int eps : {1, -1}) {
    std::vector<int> pot(n, 0);
    bool ok = true;
    for (Vertex root = 0; root < n && ok; ++root) {
      if (pot[root] != 0) {
        continue;
      }
      pot[root] = 1;
      std::queue<Vertex> q;
      q.push(root);
      while (!q.empty() && ok) {
        Vertex const u = q.front();
        q.pop();
        auto visit = [&](Vertex v, int arc_sign) {
          int const want = eps * arc_sign * pot[u];
          if (pot[v] == 0) {
            pot[v] = want;
            q.push(v);
          } else if (pot[v] != want) {
            ok = false;
          }
        };
        for (Vertex v : g.out(u)) {
          visit(v, g.sign(u, v));
        }
        for (Vertex v : rev.out(u)) {
          visit(v, g.sign(v, u));
        }
      }
    }
    if (ok) {
      return PowerfulSignature{eps, std::move(pot)};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism of underlying digraphs

namespace detail {

struct VertexKey {
  std::size_t out_deg;
  std::size_t in_deg;
  bool loop;
  auto operator<=>(VertexKey const&) const = default;
};

inline std::vector<VertexKey> vertex_keys(SignedDigraph const& g) {
  std::vector<VertexKey> k(g.order(), VertexKey{0, 0, false});
  for (auto const& a : g.arcs()) {
    ++k[a.from].out_deg;
    ++k[a.to].in_deg;
    if (a.from == a.to) {
      k[a.from].loop = true;
    }
  }
  return k;
}

class IsoSearch {
 public:
  IsoSearch(SignedDigraph const& a, SignedDigraph const& b, bool with_signs)
      : a_(a),
        b_(b),
        signs_(with_signs),
        ka_(vertex_keys(a)),
        kb_(vertex_keys(b)),
        map_(a.order(), kUnreachable),
        used_(b.order(), false) {}

  bool run() { return extend(0); }

 private:
  int arc(SignedDigraph const& g, Vertex u, Vertex v) const {
    int const s = g.sign(u, v);
    return signs_ ? s : (s != 0 ? 1 : 0);
  }

  bool extend(Vertex u) {
    if (u == a_.order()) {
      return true;
    }
    for (Vertex x = 0; x < b_.order(); ++x) {
      if (used_[x] || !(ka_[u] == kb_[x])) {
        continue;
      }
      bool ok = arc(a_, u, u) == arc(b_, x, x);
      for (Vertex w = 0; w < u && ok; ++w) {
        ok = arc(a_, u, w) == arc(b_, x, map_[w]) &&
             arc(a_, w, u) == arc(b_, map_[w], x);
      }
      if (!ok) {
        continue;
      }
      map_[u] = x;
      used_[x] = true;
      if (extend(u + 1)) {
        return true;
      }
      used_[x] = false;
    }
    map_[u] = kUnreachable;
    return false;
  }

  SignedDigraph const& a_;
  SignedDigraph const& b_;
  bool signs_;
  std::vector<VertexKey> ka_;
  std::vector<VertexKey> kb_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Backtracking isomorphism test; compares underlying digraphs unless
/// `with_signs` is set.
inline bool are_isomorphic(SignedDigraph const& a, SignedDigraph const& b,
                           bool with_signs = false) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) {
    return false;
  }
  auto ka = detail::vertex_keys(a);
  auto kb = detail::vertex_keys(b);
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) {
    return false;
  }
  return detail::IsoSearch(a, b, with_signs).run();
}

/// Canonical form of the underlying digraph: the lexicographically smallest
/// row-major adjacency string over all relabelings that list vertices in
/// nondecreasing (out-degree, in-degree, loop) order. Exponential; meant for
/// small orders.
inline std::string canonical_form(SignedDigraph const& g) {
  std::size_t const n = g.order();
  if (n > 10) {
    throw ParameterError("canonical_form is limited to order <= 10");
  }
  auto const keys = detail::vertex_keys(g);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::sort(perm.begin(), perm.end(),
            [&](Vertex x, Vertex y) { return keys[x] < keys[y]; });
  // Permute only inside blocks of equal key.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && keys[perm[j]] == keys[perm[i]]) {
      ++j;
    }
    blocks.emplace_back(i, j);
    i = j;
  }
  std::string best;
  auto encode = [&] {
    std::string s(n * n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (g.has_arc(perm[i], perm[j])) {
          s[i * n + j] = '1';
        }
      }
    }
    return s;
  };
  auto recurse = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      auto s = encode();
      if (best.empty() || s < best) {
        best = std::move(s);
      }
      return;
    }
    auto const [lo, hi] = blocks[b];
    std::sort(perm.begin() + static_cast<std::ptrdiff_t>(lo),
              perm.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, b + 1);
    } while (std::next_permutation(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                   perm.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  recurse(recurse, 0);
  return std::to_string(n) + ":" + best;
}

}  // namespace signbase
