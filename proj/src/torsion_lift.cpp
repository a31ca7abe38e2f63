#include "chromhom/torsion_lift.hpp"

#include <algorithm>
#include <numeric>

#include "chromhom/errors.hpp"

namespace chromhom {

namespace {

struct RawTerm {
  int sign;
  int a;
  int b;
};

// (sign, edge, copy), 1-based
constexpr RawTerm kK5H[] = {{1, 9, 1}, {1, 10, 1}, {-1, 2, 1}, {1, 7, 2}, {1, 9, 2}};
// (sign, first, second), copy 1
constexpr RawTerm kK5G[] = {{1, 1, 8},  {1, 1, 9},   {1, 1, 10}, {1, 2, 6},  {-1, 2, 7},
                            {-1, 2, 10}, {1, 3, 5},  {1, 3, 7},  {1, 3, 9},  {1, 4, 5},
                            {1, 4, 6},  {1, 4, 8},   {-1, 5, 10}, {-1, 6, 9}, {1, 7, 8}};
constexpr RawTerm kK33H[] = {{1, 6, 3}, {-1, 7, 3}, {1, 8, 3}, {-1, 9, 2}};
constexpr RawTerm kK33G[] = {{1, 1, 6},  {-1, 1, 7}, {1, 1, 8},  {1, 1, 9},  {-1, 2, 4}, {-1, 2, 5},
                             {1, 2, 7},  {1, 2, 9},  {1, 3, 4},  {-1, 3, 5}, {1, 3, 6},  {1, 3, 8},
                             {1, 4, 8},  {1, 4, 9},  {1, 5, 6},  {1, 5, 7},  {-1, 6, 9}, {1, 7, 8}};

CanonicalSeed make_seed(KuratowskiKind kind, Graph g, std::span<const RawTerm> h, std::span<const RawTerm> gt) {
  CanonicalSeed s;
  s.kind = kind;
  s.graph = std::move(g);
  s.shape = Partition::two_column(s.graph.vertex_count(), 2);
  for (const auto& t : h)
    s.h_terms.push_back({t.sign, static_cast<std::size_t>(t.a - 1), static_cast<std::size_t>(t.b - 1)});
  for (const auto& t : gt)
    s.g_terms.push_back({t.sign, static_cast<std::size_t>(t.a - 1), static_cast<std::size_t>(t.b - 1), 0});
  return s;
}

bool seed_verifies(const CanonicalSeed& s) {
  const auto complex = RestrictedComplex::build(s.graph, s.shape);
  try {
    return check_certificate(seed_certificate(s, complex), complex).valid();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidArgument) return false;  // a quoted pair is consecutive here
    throw;
  }
}

CanonicalSeed build_k5() {
  CanonicalSeed s = make_seed(KuratowskiKind::K5, complete_graph(5), kK5H, kK5G);
  if (!seed_verifies(s)) throw Error(ErrorCode::LiftFailed, "K5 seed certificate does not verify");
  return s;
}

CanonicalSeed build_k33() {
  // bipartitions with 1 on the left, lexicographic: {1,2,3} first
  std::vector<int> mask{1, 1, 1, 0, 0, 0};
  do {
    std::vector<int> left, right;
    for (int v = 1; v <= 6; ++v) (mask[static_cast<std::size_t>(v - 1)] ? left : right).push_back(v);
    if (left.front() != 1) continue;
    CanonicalSeed s = make_seed(KuratowskiKind::K33, complete_bipartite(left, right), kK33H, kK33G);
    s.left_side = left;
    if (seed_verifies(s)) return s;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  throw Error(ErrorCode::LiftFailed, "no K3,3 labeling makes the seed certificate verify");
}

void require_valid(const TorsionCertificate& c, const RestrictedComplex& complex, const std::string& what) {
  if (is_zero(c.h)) throw Error(ErrorCode::LiftFailed, what + ": lifted cycle vanished");
  const auto v = check_certificate(c, complex);
  if (!v.valid())
    throw Error(ErrorCode::LiftFailed, what + ": lifted certificate fails (cycle=" + std::to_string(v.cycle) +
                                           ", doubled=" + std::to_string(v.doubled) +
                                           ", not_in_image=" + std::to_string(v.not_in_image) + ")");
}

CertifiedComplex finish(const Graph& g, const Partition& shape, IntVector h, RestrictedComplex complex, int prime,
                        const std::string& what) {
  auto x = solve_integer(complex.d2(), scaled(h, prime));
  if (!x) throw Error(ErrorCode::LiftFailed, what + ": p*h is not a boundary");
  TorsionCertificate c{g, shape, std::move(h), std::move(*x), prime};
  require_valid(c, complex, what);
  return {std::move(c), std::move(complex)};
}

void add_into(IntVector& acc, const IntVector& v, const mpz_class& scale) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (v[i] != 0) acc[i] += scale * v[i];
}

std::size_t edge_index_or_throw(const Graph& g, Edge e, ErrorCode code) {
  const auto idx = g.edge_index(e);
  if (!idx) throw Error(code, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is missing");
  return *idx;
}

}  // namespace

const CanonicalSeed& canonical_seed(KuratowskiKind kind) {
  static const CanonicalSeed k5 = build_k5();
  static const CanonicalSeed k33 = build_k33();
  return kind == KuratowskiKind::K5 ? k5 : k33;
}

TorsionCertificate seed_certificate(const CanonicalSeed& seed, const RestrictedComplex& complex) {
  TorsionCertificate c{seed.graph, seed.shape, IntVector(complex.basis1().size()),
                       IntVector(complex.basis2().size()), 2};
  for (const auto& t : seed.h_terms) c.h[complex.index1(t.edge, t.copy)] += t.sign;
  for (const auto& t : seed.g_terms) c.witness_x[complex.index2(t.first, t.second, t.copy)] += t.sign;
  return c;
}

int seed_label(KuratowskiKind kind, int branch_index) {
  if (kind == KuratowskiKind::K5) return branch_index + 1;
  const auto& left = canonical_seed(KuratowskiKind::K33).left_side;
  std::vector<int> right;
  for (int v = 1; v <= 6; ++v)
    if (std::find(left.begin(), left.end(), v) == left.end()) right.push_back(v);
  return branch_index < 3 ? left[static_cast<std::size_t>(branch_index)]
                          : right[static_cast<std::size_t>(branch_index - 3)];
}

CertifiedComplex lift_subdivision(const CertifiedComplex& c, Edge e) {
  const Graph& g = c.certificate.graph;
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorCode::NotASubgraph, "subdivided edge is not in the graph");
  const int n = g.vertex_count();
  const int z = n + 1;
  const Graph g2 = subdivide(g, e);
  const int k = c.certificate.shape.two_column_k();
  const Partition shape2 = Partition::two_column(n + 1, k);
  RestrictedComplex complex2 = RestrictedComplex::build(g2, shape2);

  IntVector h2(complex2.basis1().size());
  const int extra[] = {z};
  for (std::size_t r = 0; r < c.certificate.h.size(); ++r) {
    const mpz_class& coeff = c.certificate.h[r];
    if (coeff == 0) continue;
    const auto& entry = c.complex.basis1()[r];
    const Numbering N = entry.x.with_bottom_boxes(extra);
    const Edge edge = g.edge(entry.edge);
    if (edge != e) {
      add_into(h2, complex2.chain_of(edge_index_or_throw(g2, edge, ErrorCode::LiftFailed), N), coeff);
      continue;
    }
    // v[(u w) .. | z] = -v[(w z) .. | u] - v[(u z) .. | w]
    for (auto [kept, single] : {std::pair{e.v, e.u}, std::pair{e.u, e.v}}) {
      Rows rows = N.rows();
      rows.front() = {std::min(kept, z), std::max(kept, z)};
      rows.back() = {single};
      const std::size_t idx = edge_index_or_throw(g2, Edge::make(kept, z), ErrorCode::LiftFailed);
      add_into(h2, complex2.chain_of(idx, Numbering(std::move(rows))), -coeff);
    }
  }
  return finish(g2, shape2, std::move(h2), std::move(complex2), c.certificate.prime, "subdivision lift");
}

CertifiedComplex lift_subgraph(const CertifiedComplex& c, const Graph& g_big, std::span<const int> embedding) {
  const Graph& g = c.certificate.graph;
  const int n = g.vertex_count();
  const int nb = g_big.vertex_count();
  if (embedding.size() != static_cast<std::size_t>(n) || nb < n)
    throw Error(ErrorCode::NotASubgraph, "embedding has the wrong size");
  std::vector<char> used(static_cast<std::size_t>(nb) + 1, 0);
  for (int v : embedding) {
    if (v < 1 || v > nb || used[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::NotASubgraph, "embedding is not injective into the larger graph");
    used[static_cast<std::size_t>(v)] = 1;
  }
  auto image = [&](Edge e) {
    return Edge::make(embedding[static_cast<std::size_t>(e.u - 1)], embedding[static_cast<std::size_t>(e.v - 1)]);
  };
  for (const Edge& e : g.edges())
    if (!g_big.has_edge(image(e).u, image(e).v))
      throw Error(ErrorCode::NotASubgraph, "an edge of the smaller graph has no image");

  bool identity = nb == n;
  for (int v = 1; v <= n && identity; ++v) identity = embedding[static_cast<std::size_t>(v - 1)] == v;
  if (identity && g_big == g) return c;

  std::vector<int> extra;
  for (int v = 1; v <= nb; ++v)
    if (!used[static_cast<std::size_t>(v)]) extra.push_back(v);
  const Partition shape2 = Partition::two_column(nb, c.certificate.shape.two_column_k());
  RestrictedComplex complex2 = RestrictedComplex::build(g_big, shape2);

  // full relabeling of the padded numbering: old v -> embedding, n+i -> extra[i]
  std::vector<int> label(embedding.begin(), embedding.end());
  label.insert(label.end(), extra.begin(), extra.end());
  std::vector<int> pad(extra.size());
  std::iota(pad.begin(), pad.end(), n + 1);

  IntVector h2(complex2.basis1().size());
  for (std::size_t r = 0; r < c.certificate.h.size(); ++r) {
    const mpz_class& coeff = c.certificate.h[r];
    if (coeff == 0) continue;
    const auto& entry = c.complex.basis1()[r];
    const Numbering N = entry.x.with_bottom_boxes(pad).relabeled(label);
    const std::size_t idx = edge_index_or_throw(g_big, image(g.edge(entry.edge)), ErrorCode::NotASubgraph);
    add_into(h2, complex2.chain_of(idx, N), coeff);
  }
  return finish(g_big, shape2, std::move(h2), std::move(complex2), c.certificate.prime, "subgraph lift");
}

NonplanarCertificate certify_nonplanar(const Graph& g) {
  auto witness = find_kuratowski_subdivision(g);
  if (!witness) throw Error(ErrorCode::PlanarInput, "graph is planar; no Kuratowski subdivision exists");
  const SubdivisionWitness& w = *witness;

  NonplanarCertificate out;
  out.seed = w.kind;
  out.witness = w;
  const CanonicalSeed& seed = canonical_seed(w.kind);
  RestrictedComplex seed_complex = RestrictedComplex::build(seed.graph, seed.shape);
  CertifiedComplex cur{seed_certificate(seed, seed_complex), std::move(seed_complex)};

  const int n_seed = seed.graph.vertex_count();
  std::vector<int> canon_to_input(static_cast<std::size_t>(n_seed), 0);
  for (std::size_t i = 0; i < w.branch_vertices.size(); ++i)
    canon_to_input[static_cast<std::size_t>(seed_label(w.kind, static_cast<int>(i)) - 1)] = w.branch_vertices[i];

  // replay each path as subdivisions, seed edges in lexicographic order
  const auto model = model_edges(w.kind);
  std::vector<std::size_t> order(model.size());
  std::iota(order.begin(), order.end(), 0);
  auto seed_edge = [&](std::size_t i) {
    return Edge::make(seed_label(w.kind, model[i].first), seed_label(w.kind, model[i].second));
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seed_edge(a) < seed_edge(b); });
  for (std::size_t i : order) {
    std::vector<int> path = w.paths[i];
    const int la = seed_label(w.kind, model[i].first);
    const int lb = seed_label(w.kind, model[i].second);
    int low = la, high = lb;
    if (la > lb) {
      std::reverse(path.begin(), path.end());
      std::swap(low, high);
    }
    int prev = low;
    for (std::size_t p = 1; p + 1 < path.size(); ++p) {
      const Edge e = Edge::make(prev, high);
      const int z = cur.certificate.graph.vertex_count() + 1;
      cur = lift_subdivision(cur, e);
      canon_to_input.push_back(path[p]);
      out.trace.steps.push_back({LiftStep::Kind::Subdivide, e, z, {}});
      prev = z;
    }
  }

  // canonical copy of the whole graph: remaining vertices follow in order
  const int n = g.vertex_count();
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int v : canon_to_input) used[static_cast<std::size_t>(v)] = 1;
  const std::size_t embedded = canon_to_input.size();
  for (int v = 1; v <= n; ++v)
    if (!used[static_cast<std::size_t>(v)]) canon_to_input.push_back(v);
  std::vector<int> input_to_canon(static_cast<std::size_t>(n));
  for (std::size_t c = 0; c < canon_to_input.size(); ++c)
    input_to_canon[static_cast<std::size_t>(canon_to_input[c] - 1)] = static_cast<int>(c) + 1;
  const Graph canonical_graph = relabel(g, input_to_canon);

  std::vector<int> id(embedded);
  std::iota(id.begin(), id.end(), 1);
  CertifiedComplex canonical = lift_subgraph(cur, canonical_graph, id);
  out.trace.steps.push_back(
      {LiftStep::Kind::Embed, {}, 0, std::vector<int>(canon_to_input.begin(), canon_to_input.begin() + static_cast<std::ptrdiff_t>(embedded))});
  CertifiedComplex input = lift_subgraph(canonical, g, canon_to_input);

  out.canonical = std::move(canonical.certificate);
  out.canonical_to_input = std::move(canon_to_input);
  out.certificate = std::move(input.certificate);
  return out;
}

}  // namespace chromhom
