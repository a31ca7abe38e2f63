#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromhom {

/// Unordered pair of 1-indexed vertex labels, stored with u <= v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge make(int a, int b) { return a <= b ? Edge{a, b} : Edge{b, a}; }
  bool is_loop() const { return u == v; }
  bool touches(int x) const { return u == x || v == x; }
  bool shares_vertex(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raw parser output: sorted edge list, loops and repeated edges retained.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;
};

/// Simple labeled graph on vertices 1..n with a strictly increasing
/// lexicographic edge list. Edge indices used throughout the library are
/// positions in that list (0-based in code, 1-based when printed).
class Graph {
 public:
  Graph() = default;
  /// Sorts the edges; throws InvalidArgument on loops, duplicates or labels
  /// outside 1..n.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> edge_index(Edge e) const;
  bool has_edge(int a, int b) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct NormalizationReport {
  bool had_loop = false;
  int collapsed_multiedges = 0;

  bool all_clear() const { return !had_loop && collapsed_multiedges == 0; }
};

enum class GraphFormat { EdgeList, Graph6 };

/// Edge-list text: header "n m", then m lines "u v"; '#' starts a comment.
/// Graph6: one graph per the standard 6-bit upper-triangle encoding.
Multigraph parse_graph(std::string_view text, GraphFormat format);

/// Parses a corpus of graph6 lines (blank lines and '#' comments skipped).
std::vector<Multigraph> parse_graph6_corpus(std::string_view text);

std::pair<Graph, NormalizationReport> normalize(const Multigraph& g);

/// Convenience for callers holding a simple graph already.
Multigraph as_multigraph(const Graph& g);

std::string encode_graph6(const Graph& g);
std::string to_edge_list(const Graph& g);

struct EdgePairs {
  /// Index pairs (i, j), i < j, of edges sharing no vertex.
  std::vector<std::pair<std::size_t, std::size_t>> nonconsecutive;
  /// Index pairs of edges sharing exactly one vertex.
  std::vector<std::pair<std::size_t, std::size_t>> consecutive;
};

EdgePairs edge_pairs_by_type(const Graph& g);

/// Removes e = (i, j) and adds (i, n+1), (j, n+1).
Graph subdivide(const Graph& g, Edge e);

/// Vertex v of g becomes new_label[v - 1]; new_label must be a permutation
/// of 1..n.
Graph relabel(const Graph& g, std::span<const int> new_label);

bool is_connected(const Graph& g);

// Standard families.
Graph complete_graph(int n);
Graph complete_bipartite(std::span<const int> left, std::span<const int> right);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();

// ---------------------------------------------------------------------------
// Kuratowski subdivisions

enum class KuratowskiKind { K5, K33 };

const char* to_string(KuratowskiKind kind);

/// Model edges of K5 or K3,3 as index pairs into branch_vertices. For K5 the
/// order is lexicographic over 0..4; for K3,3 the first three branch vertices
/// form one side and pairs run (a0,b0), (a0,b1), ... side-major.
std::span<const std::pair<int, int>> model_edges(KuratowskiKind kind);

struct SubdivisionWitness {
  KuratowskiKind kind = KuratowskiKind::K5;
  std::vector<int> branch_vertices;
  /// paths[i] realizes model_edges(kind)[i]; it starts at the first branch
  /// vertex of the model edge and ends at the second.
  std::vector<std::vector<int>> paths;
};

/// Exhaustive search over branch-vertex assignments with disjoint-path
/// completion. Returns a witness iff g is non-planar. Intended for desk-scale
/// graphs (n up to a dozen or so); labels must not exceed 64.
std::optional<SubdivisionWitness> find_kuratowski_subdivision(const Graph& g);

/// Checks branch vertices, path endpoints, adjacency along paths and internal
/// disjointness.
bool verify_witness(const Graph& g, const SubdivisionWitness& w);

/// The subgraph of g formed by the witness paths, on the same vertex set.
Graph witness_subgraph(const Graph& g, const SubdivisionWitness& w);

bool is_planar(const Graph& g);

// ---------------------------------------------------------------------------
// Enumeration

/// All connected graphs on n vertices up to isomorphism (n <= 7), each in the
/// labeling that minimizes its upper-triangle adjacency bit string. Ordered by
/// edge count, then by that bit string.
std::vector<Graph> connected_graphs(int n);

}  // namespace chromhom
