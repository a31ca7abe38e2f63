#include "chromhom/specht_complex.hpp"

#include <limits>

#include "chromhom/errors.hpp"

namespace chromhom {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

Partition hook_weight(int n, int twos) {
  std::vector<int> p(static_cast<std::size_t>(twos), 2);
  p.resize(static_cast<std::size_t>(n - twos), 1);
  return Partition(std::move(p));
}

}  // namespace

RestrictedBases restricted_bases(const Graph& g, const Partition& shape) {
  const int n = g.vertex_count();
  const int k = shape.two_column_k();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "shape " + shape.to_string() + " is not two-column with k >= 1");
  if (shape.size() != n) throw Error(ErrorCode::InvalidArgument, "shape size does not match the vertex count");

  RestrictedBases b;
  b.shape = shape;
  b.basis0 = enumerate_syt(shape);

  const auto zs = enumerate_ssyt(shape, hook_weight(n, 1));
  b.copies1 = zs.size();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge edge = g.edge(e);
    const Numbering t = numbering_of_subgraph(g, std::span<const Edge>(&edge, 1));
    for (std::size_t l = 0; l < zs.size(); ++l) b.basis1.push_back({e, l, standardize(zs[l], t)});
  }

  b.pairs = edge_pairs_by_type(g).nonconsecutive;
  if (k >= 2) {
    const auto ws = enumerate_ssyt(shape, hook_weight(n, 2));
    b.copies2 = ws.size();
    for (auto [i, j] : b.pairs) {
      const Edge f[2] = {g.edge(i), g.edge(j)};
      const Numbering t = numbering_of_subgraph(g, f);
      for (std::size_t l = 0; l < ws.size(); ++l) b.basis2.push_back({i, j, l, standardize(ws[l], t)});
    }
  }
  return b;
}

RestrictedComplex RestrictedComplex::build(const Graph& g, const Partition& shape, const ComplexOptions& options) {
  RestrictedComplex c;
  c.graph_ = g;
  c.bases_ = restricted_bases(g, shape);
  c.options_ = options;
  c.syt_basis_ = StraighteningBasis(c.bases_.basis0, 0);

  const std::size_t m = g.edge_count();
  const std::size_t K = c.bases_.copies1;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<Numbering> block;
    for (std::size_t l = 0; l < K; ++l) block.push_back(c.bases_.basis1[e * K + l].x);
    c.edge_bases_.emplace_back(block, 1);
  }
  c.pair_offset_.assign(m * m, npos);
  for (std::size_t p = 0; p < c.bases_.pairs.size(); ++p) {
    auto [i, j] = c.bases_.pairs[p];
    c.pair_offset_[i * m + j] = p;
  }

  const auto& b1 = c.bases_.basis1;
  const auto& b2 = c.bases_.basis2;
  c.d1_ = IntMatrix(c.bases_.basis0.size(), b1.size());
  for (std::size_t col = 0; col < b1.size(); ++col) c.d1_.set_column(col, c.d1_column(b1[col].x));
  c.d2_ = IntMatrix(b1.size(), b2.size());
  for (std::size_t col = 0; col < b2.size(); ++col) c.d2_.set_column(col, c.d2_column(b2[col]));

  if (options.check_exact && !(c.d1_ * c.d2_).is_zero())
    throw Error(ErrorCode::ComplexNotExact, "d1 * d2 != 0 for shape " + shape.to_string());
  return c;
}

std::size_t RestrictedComplex::index1(std::size_t edge, std::size_t copy) const {
  if (edge >= graph_.edge_count() || copy >= bases_.copies1)
    throw Error(ErrorCode::InvalidArgument, "basis1 index out of range");
  return edge * bases_.copies1 + copy;
}

std::size_t RestrictedComplex::index2(std::size_t first, std::size_t second, std::size_t copy) const {
  const std::size_t m = graph_.edge_count();
  if (first >= m || second >= m || copy >= bases_.copies2)
    throw Error(ErrorCode::InvalidArgument, "basis2 index out of range");
  const std::size_t p = pair_offset_[first * m + second];
  if (p == npos) throw Error(ErrorCode::InvalidArgument, "edge pair is not a nonconsecutive pair of the graph");
  return p * bases_.copies2 + copy;
}

IntVector RestrictedComplex::chain_of(std::size_t edge, const Numbering& x) const {
  const Edge e = graph_.edge(edge);
  const auto& top = x.rows().front();
  if (top.size() != 2 || Edge::make(top[0], top[1]) != e)
    throw Error(ErrorCode::InvalidArgument, "numbering's first row is not the edge " + std::to_string(edge + 1));
  NumberingVector v(1);
  v.add(x, 1);
  const auto coeffs = straighten(v, edge_bases_[edge]);
  IntVector out(bases_.basis1.size());
  for (std::size_t l = 0; l < coeffs.size(); ++l) out[edge * bases_.copies1 + l] = coeffs[l];
  return out;
}

IntVector RestrictedComplex::d1_column(const Numbering& x) const {
  NumberingVector v;
  v.add(x, 1);
  const auto coeffs = straighten(v, syt_basis_);
  return IntVector(coeffs.begin(), coeffs.end());
}

IntVector RestrictedComplex::d2_column(const Basis2Entry& w) const {
  // removing the larger edge keeps e_first: sign -1; removing the smaller: +1
  const int keep_first = options_.flip_edge_signs ? 1 : -1;
  const int keep_second = -keep_first;
  IntVector col = scaled(chain_of(w.first, w.w), keep_first);
  Rows swapped = w.w.rows();
  std::swap(swapped[0], swapped[1]);
  const IntVector other = chain_of(w.second, Numbering(std::move(swapped)));
  for (std::size_t r = 0; r < col.size(); ++r)
    if (other[r] != 0) col[r] += keep_second * other[r];
  return col;
}

}  // namespace chromhom
