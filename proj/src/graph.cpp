#include "chromhom/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "chromhom/errors.hpp"

namespace chromhom {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

long long parse_int(std::string_view token, const char* what) {
  long long value = 0;
  std::istringstream in{std::string(token)};
  if (!(in >> value) || !in.eof()) {
    parse_fail(std::string("malformed ") + what + ": '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

Multigraph parse_edge_list(std::string_view text) {
  Multigraph g;
  bool have_header = false;
  long long expected = 0;
  for (auto raw : split_lines(text)) {
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    const auto tok = tokens(line);
    if (tok.size() != 2) parse_fail("expected two integers per line, got '" + std::string(line) + "'");
    if (!have_header) {
      const auto n = parse_int(tok[0], "vertex count");
      expected = parse_int(tok[1], "edge count");
      if (n < 0 || expected < 0) parse_fail("malformed header");
      if (n > 1'000'000) parse_fail("vertex count too large");
      g.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    if (static_cast<long long>(g.edges.size()) == expected) {
      parse_fail("more edge lines than the header announces");
    }
    const auto a = parse_int(tok[0], "vertex");
    const auto b = parse_int(tok[1], "vertex");
    if (a < 1 || a > g.n || b < 1 || b > g.n) {
      parse_fail("vertex index out of range in '" + std::string(line) + "'");
    }
    g.edges.push_back(Edge::make(static_cast<int>(a), static_cast<int>(b)));
  }
  if (!have_header) parse_fail("missing header line");
  if (static_cast<long long>(g.edges.size()) != expected) {
    parse_fail("header announces " + std::to_string(expected) + " edges, found " +
               std::to_string(g.edges.size()));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Multigraph parse_graph6_line(std::string_view line) {
  line = trim(line);
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  if (line.empty()) parse_fail("empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) parse_fail("invalid graph6 character");
  }
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > line.size()) parse_fail("truncated graph6 size field");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::uint64_t>(line[pos + i] - 63);
    pos += count;
    return v;
  };
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100'000) parse_fail("graph6 vertex count too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (line.size() - pos != chars) {
    parse_fail("bad graph6 length: expected " + std::to_string(chars) + " data bytes, found " +
               std::to_string(line.size() - pos));
  }
  Multigraph g;
  g.n = static_cast<int>(n);
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned>(line[pos + k / 6] - 63);
      if ((byte >> (5 - k % 6)) & 1U) {
        g.edges.push_back(Edge{static_cast<int>(i + 1), static_cast<int>(j + 1)});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  for (auto& e : edges_) {
    e = Edge::make(e.u, e.v);
    if (e.u < 1 || e.v > n_) throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (e.is_loop()) throw Error(ErrorCode::InvalidArgument, "loops are not allowed in a simple graph");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate edge in a simple graph");
  }
}

std::optional<std::size_t> Graph::edge_index(Edge e) const {
  e = Edge::make(e.u, e.v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Graph::has_edge(int a, int b) const { return edge_index(Edge::make(a, b)).has_value(); }

int Graph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Edge& e) { return e.touches(v); }));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.u == v) out.push_back(e.v);
    else if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Parsing and encoding

Multigraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edge_list(text);
  std::vector<std::string_view> lines;
  for (auto raw : split_lines(text)) {
    const auto line = strip_comment(raw);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.size() != 1) parse_fail("expected exactly one graph6 line");
  return parse_graph6_line(lines.front());
}

std::vector<Multigraph> parse_graph6_corpus(std::string_view text) {
  std::vector<Multigraph> out;
  for (auto raw : split_lines(text)) {
    const auto line = strip_comment(raw);
    if (!line.empty()) out.push_back(parse_graph6_line(line));
  }
  return out;
}

std::pair<Graph, NormalizationReport> normalize(const Multigraph& g) {
  NormalizationReport report;
  std::set<Edge> kept;
  for (auto e : g.edges) {
    e = Edge::make(e.u, e.v);
    if (e.is_loop()) {
      report.had_loop = true;
      continue;
    }
    if (!kept.insert(e).second) ++report.collapsed_multiedges;
  }
  return {Graph(g.n, std::vector<Edge>(kept.begin(), kept.end())), report};
}

Multigraph as_multigraph(const Graph& g) {
  return Multigraph{g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end())};
}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.vertex_count());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::vector<unsigned> packed((bits + 5) / 6, 0);
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      if (g.has_edge(static_cast<int>(i + 1), static_cast<int>(j + 1))) packed[k / 6] |= 1U << (5 - k % 6);
    }
  }
  for (auto b : packed) out.push_back(static_cast<char>(b + 63));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Elementary operations

EdgePairs edge_pairs_by_type(const Graph& g) {
  EdgePairs out;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i].shares_vertex(edges[j])) out.consecutive.emplace_back(i, j);
      else out.nonconsecutive.emplace_back(i, j);
    }
  }
  return out;
}

Graph subdivide(const Graph& g, Edge e) {
  e = Edge::make(e.u, e.v);
  if (!g.edge_index(e)) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot subdivide (" + std::to_string(e.u) + "," + std::to_string(e.v) + "): not an edge");
  }
  const int fresh = g.vertex_count() + 1;
  std::vector<Edge> edges;
  for (const auto& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  edges.push_back(Edge{e.u, fresh});
  edges.push_back(Edge{e.v, fresh});
  return Graph(fresh, std::move(edges));
}

Graph relabel(const Graph& g, std::span<const int> new_label) {
  const int n = g.vertex_count();
  if (static_cast<int>(new_label.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "relabeling has the wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : new_label) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::InvalidArgument, "relabeling is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back(Edge::make(new_label[static_cast<std::size_t>(e.u - 1)],
                               new_label[static_cast<std::size_t>(e.v - 1)]));
  }
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  int components = n;
  for (const auto& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) edges.push_back(Edge{a, b});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::span<const int> left, std::span<const int> right) {
  std::vector<Edge> edges;
  int n = 0;
  for (int a : left) {
    n = std::max(n, a);
    for (int b : right) {
      n = std::max(n, b);
      edges.push_back(Edge::make(a, b));
    }
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a) edges.push_back(Edge::make(a, a % n + 1));
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 1; a < n; ++a) edges.push_back(Edge{a, a + 1});
  return Graph(n, std::move(edges));
}

Graph petersen_graph() {
  // Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::make(i + 1, (i + 1) % 5 + 1));
    edges.push_back(Edge::make(i + 1, i + 6));
    edges.push_back(Edge::make(i + 6, (i + 2) % 5 + 6));
  }
  return Graph(10, std::move(edges));
}

// ---------------------------------------------------------------------------
// Kuratowski search

const char* to_string(KuratowskiKind kind) { return kind == KuratowskiKind::K5 ? "K5" : "K33"; }

std::span<const std::pair<int, int>> model_edges(KuratowskiKind kind) {
  static const std::array<std::pair<int, int>, 10> k5 = {
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
  static const std::array<std::pair<int, int>, 9> k33 = {
      {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}};
  if (kind == KuratowskiKind::K5) return k5;
  return k33;
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

/// Depth-first completion of internally disjoint branch paths over a bitset
/// adjacency (vertices 0-based here).
class PathCompletion {
 public:
  PathCompletion(const std::vector<Mask>& adj, Mask active, Mask branch,
                 std::vector<std::pair<int, int>> pairs)
      : adj_(adj), active_(active), branch_(branch), pairs_(std::move(pairs)), paths_(pairs_.size()) {}

  bool run() { return solve(0, 0); }
  const std::vector<std::vector<int>>& paths() const { return paths_; }

 private:
  bool solve(std::size_t idx, Mask used) {
    if (idx == pairs_.size()) return true;
    const auto [s, t] = pairs_[idx];
    if (adj_[static_cast<std::size_t>(s)] & bit(t)) {
      paths_[idx] = {s, t};
      return solve(idx + 1, used);
    }
    const Mask free = active_ & ~used & ~branch_;
    for (std::size_t k = idx; k < pairs_.size(); ++k) {
      const auto [a, b] = pairs_[k];
      if ((adj_[static_cast<std::size_t>(a)] & bit(b)) == 0 && !reachable(a, b, free)) return false;
    }
    std::vector<int> path{s};
    return extend(idx, used, path, t, bit(s));
  }

  bool extend(std::size_t idx, Mask used, std::vector<int>& path, int target, Mask on_path) {
    const int cur = path.back();
    const Mask nbrs = adj_[static_cast<std::size_t>(cur)];
    if (path.size() > 1 && (nbrs & bit(target))) {
      path.push_back(target);
      paths_[idx] = path;
      Mask internal = 0;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) internal |= bit(path[i]);
      if (solve(idx + 1, used | internal)) return true;
      path.pop_back();
    }
    Mask next = nbrs & active_ & ~used & ~branch_ & ~on_path;
    while (next) {
      const int w = std::countr_zero(next);
      next &= next - 1;
      path.push_back(w);
      if (extend(idx, used, path, target, on_path | bit(w))) return true;
      path.pop_back();
    }
    return false;
  }

  bool reachable(int a, int b, Mask free) const {
    Mask seen = bit(a), frontier = bit(a);
    while (frontier) {
      Mask next = 0;
      Mask f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[static_cast<std::size_t>(v)];
      }
      if (next & bit(b)) return true;
      next &= free & ~seen;
      seen |= next;
      frontier = next;
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  Mask active_;
  Mask branch_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::vector<int>> paths_;
};

template <typename Visit>
bool for_each_subset(const std::vector<int>& pool, std::size_t size, Visit&& visit) {
  if (pool.size() < size) return false;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> chosen(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) chosen[i] = pool[idx[i]];
    if (visit(chosen)) return true;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<SubdivisionWitness> try_kind(KuratowskiKind kind, const std::vector<Mask>& adj, Mask active,
                                           const std::vector<int>& degree) {
  const int need_degree = kind == KuratowskiKind::K5 ? 4 : 3;
  const std::size_t branch_count = kind == KuratowskiKind::K5 ? 5 : 6;
  std::vector<int> pool;
  for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
    if ((active & bit(v)) && degree[static_cast<std::size_t>(v)] >= need_degree) pool.push_back(v);
  }
  std::optional<SubdivisionWitness> found;
  auto attempt = [&](const std::vector<int>& branch) {
    Mask bmask = 0;
    for (int v : branch) bmask |= bit(v);
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : model_edges(kind)) {
      pairs.emplace_back(branch[static_cast<std::size_t>(a)], branch[static_cast<std::size_t>(b)]);
    }
    // Direct edges first; they never block anything.
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      const bool dx = (adj[static_cast<std::size_t>(pairs[x].first)] & bit(pairs[x].second)) != 0;
      const bool dy = (adj[static_cast<std::size_t>(pairs[y].first)] & bit(pairs[y].second)) != 0;
      return dx && !dy;
    });
    std::vector<std::pair<int, int>> ordered;
    for (auto i : order) ordered.push_back(pairs[i]);
    PathCompletion search(adj, active, bmask, ordered);
    if (!search.run()) return false;
    SubdivisionWitness w;
    w.kind = kind;
    for (int v : branch) w.branch_vertices.push_back(v + 1);
    w.paths.resize(pairs.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto& p = w.paths[order[k]];
      for (int v : search.paths()[k]) p.push_back(v + 1);
    }
    found = std::move(w);
    return true;
  };
  if (kind == KuratowskiKind::K5) {
    for_each_subset(pool, branch_count, attempt);
  } else {
    for_each_subset(pool, branch_count, [&](const std::vector<int>& six) {
      const std::vector<int> rest(six.begin() + 1, six.end());
      return for_each_subset(rest, 2, [&](const std::vector<int>& two) {
        std::vector<int> side_a{six[0], two[0], two[1]};
        std::vector<int> side_b;
        for (int v : rest) {
          if (v != two[0] && v != two[1]) side_b.push_back(v);
        }
        std::vector<int> branch = side_a;
        branch.insert(branch.end(), side_b.begin(), side_b.end());
        return attempt(branch);
      });
    });
  }
  return found;
}

}  // namespace

std::optional<SubdivisionWitness> find_kuratowski_subdivision(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 64) throw Error(ErrorCode::InvalidArgument, "witness search supports at most 64 vertices");
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u - 1)] |= bit(e.v - 1);
    adj[static_cast<std::size_t>(e.v - 1)] |= bit(e.u - 1);
  }
  // Vertices of degree <= 1 cannot lie on any subdivision.
  Mask active = n == 64 ? ~Mask{0} : (bit(n) - 1);
  std::vector<int> degree(static_cast<std::size_t>(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!(active & bit(v))) continue;
      degree[static_cast<std::size_t>(v)] = std::popcount(adj[static_cast<std::size_t>(v)] & active);
      if (degree[static_cast<std::size_t>(v)] <= 1) {
        active &= ~bit(v);
        changed = true;
      }
    }
  }
  if (std::popcount(active) < 5) return std::nullopt;
  if (auto w = try_kind(KuratowskiKind::K5, adj, active, degree)) return w;
  return try_kind(KuratowskiKind::K33, adj, active, degree);
}

bool verify_witness(const Graph& g, const SubdivisionWitness& w) {
  const auto model = model_edges(w.kind);
  const std::size_t branch_count = w.kind == KuratowskiKind::K5 ? 5 : 6;
  if (w.branch_vertices.size() != branch_count || w.paths.size() != model.size()) return false;
  std::set<int> branch(w.branch_vertices.begin(), w.branch_vertices.end());
  if (branch.size() != branch_count) return false;
  for (int v : branch) {
    if (v < 1 || v > g.vertex_count()) return false;
  }
  std::set<int> internal;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto& p = w.paths[i];
    if (p.size() < 2) return false;
    if (p.front() != w.branch_vertices[static_cast<std::size_t>(model[i].first)] ||
        p.back() != w.branch_vertices[static_cast<std::size_t>(model[i].second)]) {
      return false;
    }
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      if (!g.has_edge(p[k], p[k + 1])) return false;
    }
    for (std::size_t k = 1; k + 1 < p.size(); ++k) {
      if (branch.count(p[k]) || !internal.insert(p[k]).second) return false;
    }
  }
  return true;
}

Graph witness_subgraph(const Graph& g, const SubdivisionWitness& w) {
  std::set<Edge> edges;
  for (const auto& p : w.paths) {
    for (std::size_t k = 0; k + 1 < p.size(); ++k) edges.insert(Edge::make(p[k], p[k + 1]));
  }
  return Graph(g.vertex_count(), std::vector<Edge>(edges.begin(), edges.end()));
}

bool is_planar(const Graph& g) {
  // Euler's bound settles dense inputs, but the witness search stays the
  // authority for the answer.
  return !find_kuratowski_subdivision(g).has_value();
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism

namespace {

struct PairIndex {
  int n;
  std::vector<std::vector<int>> index;  // index[i][j] for i != j
  explicit PairIndex(int n_) : n(n_), index(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), -1)) {
    int k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
        index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = k;
        ++k;
      }
    }
  }
};

/// Minimum adjacency code over all vertex permutations.
std::uint32_t canonical_code(std::uint32_t code, int n, const std::vector<std::vector<int>>& perm_maps) {
  const int bits = n * (n - 1) / 2;
  std::uint32_t best = UINT32_MAX;
  for (const auto& map : perm_maps) {
    std::uint32_t out = 0;
    for (int b = 0; b < bits; ++b) {
      if (code & (1U << b)) out |= 1U << map[static_cast<std::size_t>(b)];
    }
    best = std::min(best, out);
  }
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::InvalidArgument, "connected_graphs supports 1 <= n <= 7");
  // All graphs on k vertices are built from all graphs on k-1 vertices by
  // adding a vertex with every possible neighbourhood.
  std::set<std::uint32_t> level{0};
  for (int k = 2; k <= n; ++k) {
    const PairIndex idx(k);
    const PairIndex prev(k - 1);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perm_maps;
    do {
      std::vector<int> map(static_cast<std::size_t>(k * (k - 1) / 2));
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          map[static_cast<std::size_t>(idx.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] =
              idx.index[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        }
      }
      perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<std::uint32_t> next;
    for (auto code : level) {
      std::uint32_t lifted = 0;
      for (int i = 0; i < k - 1; ++i) {
        for (int j = i + 1; j < k - 1; ++j) {
          if (code & (1U << prev.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
            lifted |= 1U << idx.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          }
        }
      }
      for (std::uint32_t nb = 0; nb < (1U << (k - 1)); ++nb) {
        std::uint32_t c = lifted;
        for (int i = 0; i < k - 1; ++i) {
          if (nb & (1U << i)) c |= 1U << idx.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)];
        }
        next.insert(canonical_code(c, k, perm_maps));
      }
    }
    level = std::move(next);
  }
  const PairIndex idx(n);
  std::vector<std::pair<std::pair<int, std::uint32_t>, Graph>> found;
  for (auto code : level) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (code & (1U << idx.index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) edges.push_back(Edge{i + 1, j + 1});
      }
    }
    Graph g(n, std::move(edges));
    if (is_connected(g)) found.push_back({{static_cast<int>(g.edge_count()), code}, std::move(g)});
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

}  // namespace chromhom
