#include "chromhom/tabloid_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "chromhom/errors.hpp"
#include "chromhom/specht_complex.hpp"

namespace chromhom::oracle {

// ---------------------------------------------------------------------------
// Permutation

Permutation Permutation::identity(int n) {
  if (n < 0 || n > kMaxPermutationSize) throw Error(ErrorCode::SizeBoundExceeded, "permutation size out of range");
  Permutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Permutation p = identity(n);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const int x = images[static_cast<std::size_t>(i)];
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
      throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
  }
  return p;
}

Permutation Permutation::carrying(const Numbering& from, const Numbering& to) {
  if (from.shape() != to.shape()) throw Error(ErrorCode::InvalidArgument, "numberings have different shapes");
  const auto wf = from.word();
  const auto wt = to.word();
  std::vector<int> images(wf.size());
  for (std::size_t k = 0; k < wf.size(); ++k) images[static_cast<std::size_t>(wf[k] - 1)] = wt[k];
  return from_images(images);
}

int Permutation::sign() const {
  int s = 1;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) s = -s;
  return s;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int i = 0; i < n_; ++i) p.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)] - 1)] =
      static_cast<std::uint8_t>(i + 1);
  return p;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k = (k << 4) | images_[static_cast<std::size_t>(i)];
  return k;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::InvalidArgument, "composing permutations of different sizes");
  Permutation p = a;
  for (int i = 0; i < a.n_; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(a(b(i + 1)));
  return p;
}

// ---------------------------------------------------------------------------
// GroupAlgebraVector

void GroupAlgebraVector::add(const Permutation& p, long long coeff) {
  if (coeff == 0) return;
  if (p.size() != n_) throw Error(ErrorCode::InvalidArgument, "permutation size differs from the algebra degree");
  auto [it, inserted] = terms_.try_emplace(p.key(), 0);
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

long long GroupAlgebraVector::coefficient(const Permutation& p) const {
  auto it = terms_.find(p.key());
  return it == terms_.end() ? 0 : it->second;
}

GroupAlgebraVector& GroupAlgebraVector::operator+=(const GroupAlgebraVector& o) {
  if (o.n_ != n_ && !o.terms_.empty()) throw Error(ErrorCode::InvalidArgument, "adding vectors of different degree");
  for (const auto& [k, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(k, 0);
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

GroupAlgebraVector operator*(long long c, const GroupAlgebraVector& v) {
  GroupAlgebraVector out(v.n_);
  if (c == 0) return out;
  for (const auto& [k, x] : v.terms_) out.terms_.emplace(k, c * x);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetrizers

namespace {

std::vector<Permutation> block_group(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<Permutation> group{Permutation::identity(n)};
  for (const auto& block : blocks) {
    if (block.size() < 2) continue;
    std::vector<int> perm = block;
    std::sort(perm.begin(), perm.end());
    std::vector<int> sorted = perm;
    std::vector<Permutation> next;
    do {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 1);
      for (std::size_t i = 0; i < sorted.size(); ++i) images[static_cast<std::size_t>(sorted[i] - 1)] = perm[i];
      const Permutation p = Permutation::from_images(images);
      for (const auto& g : group) next.push_back(p * g);
    } while (std::next_permutation(perm.begin(), perm.end()));
    group = std::move(next);
  }
  return group;
}

std::vector<std::vector<int>> columns_of(const Numbering& t) {
  std::vector<std::vector<int>> cols;
  for (const auto& row : t.rows())
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (cols.size() <= c) cols.emplace_back();
      cols[c].push_back(row[c]);
    }
  return cols;
}

}  // namespace

SymmetrizerSpec symmetrizer_spec(const Numbering& t) {
  auto factorial = [](std::size_t k) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  SymmetrizerSpec s{t, 1, 1};
  for (const auto& r : t.rows()) s.row_group_size *= factorial(r.size());
  for (const auto& c : columns_of(t)) s.column_group_size *= factorial(c.size());
  return s;
}

std::vector<Permutation> row_group(const Numbering& t) { return block_group(t.rows(), t.size()); }

std::vector<Permutation> column_group(const Numbering& t) { return block_group(columns_of(t), t.size()); }

GroupAlgebraVector specht_vector(const Numbering& t, const Numbering& s) {
  const int n = t.size();
  if (n > kMaxPermutationSize) throw Error(ErrorCode::SizeBoundExceeded, "numbering too large for the oracle");
  const Permutation sigma = Permutation::carrying(t, s);
  const auto rows = row_group(t);
  const auto cols = column_group(t);
  GroupAlgebraVector v(n);
  for (const auto& z : cols) {
    const Permutation sz = sigma * z;
    const long long sg = z.sign();
    for (const auto& r : rows) v.add(sz * r, sg);
  }
  return v;
}

std::size_t specht_vector_raw_term_count(const Numbering& t) {
  const auto s = symmetrizer_spec(t);
  return s.row_group_size * s.column_group_size;
}

// ---------------------------------------------------------------------------
// Permutation modules

namespace {

std::vector<Permutation> all_permutations(int n) {
  if (n > 9) throw Error(ErrorCode::SizeBoundExceeded, "enumerating S_n beyond n = 9");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(images));
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Coset sigma R(T) is determined by y -> block of sigma^{-1}(y).
std::uint64_t coset_key(const Permutation& p, const std::vector<int>& block_of) {
  std::uint64_t k = 0;
  const Permutation inv = p.inverse();
  for (int y = 1; y <= p.size(); ++y) k = (k << 4) | static_cast<std::uint64_t>(block_of[static_cast<std::size_t>(inv(y))]);
  return k;
}

std::vector<int> block_labels(const Numbering& t) {
  std::vector<int> block_of(static_cast<std::size_t>(t.size()) + 1, 0);
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (int x : t.rows()[r]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
  return block_of;
}

// Basis of M_F as coset sums, plus an index from coset key to position.
struct CosetBasis {
  std::vector<GroupAlgebraVector> vectors;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<int> block_of;
  std::size_t block_size = 1;
};

CosetBasis coset_basis(const std::vector<Permutation>& perms, const Numbering& t) {
  CosetBasis b;
  b.block_of = block_labels(t);
  b.block_size = symmetrizer_spec(t).row_group_size;
  const int n = t.size();
  for (const auto& p : perms) {
    const auto key = coset_key(p, b.block_of);
    auto [it, inserted] = b.index.try_emplace(key, b.vectors.size());
    if (inserted) b.vectors.emplace_back(n);
    b.vectors[it->second].add(p, 1);
  }
  return b;
}

}  // namespace

std::vector<GroupAlgebraVector> permutation_module_basis(const Graph& g, std::span<const Edge> edge_subset) {
  const Numbering t = numbering_of_subgraph(g, edge_subset);
  return coset_basis(all_permutations(g.vertex_count()), t).vectors;
}

// ---------------------------------------------------------------------------
// Exact expansion

namespace {

// Row-reduced copy of a family of vectors, remembering how each reduced row
// combines the originals.
class SpanSolver {
 public:
  explicit SpanSolver(std::span<const GroupAlgebraVector> basis) : count_(basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      Row row;
      for (const auto& [k, c] : basis[i].terms()) row.emplace(k, mpq_class(static_cast<long>(c)));
      std::vector<mpq_class> combo(count_);
      combo[i] = 1;
      // reduce against existing pivots
      for (std::size_t p = 0; p < reduced_.size(); ++p) {
        auto it = row.find(pivots_[p]);
        if (it == row.end()) continue;
        const mpq_class f = it->second;
        axpy(row, reduced_[p], -f);
        for (std::size_t j = 0; j < count_; ++j) combo[j] -= f * combos_[p][j];
      }
      if (row.empty()) {
        dependent_ = true;
        continue;
      }
      const auto pivot = row.begin()->first;
      const mpq_class inv = 1 / row.begin()->second;
      for (auto& [k, c] : row) c *= inv;
      for (auto& c : combo) c *= inv;
      // keep earlier rows reduced at the new pivot
      for (std::size_t p = 0; p < reduced_.size(); ++p) {
        auto it = reduced_[p].find(pivot);
        if (it == reduced_[p].end()) continue;
        const mpq_class f = it->second;
        axpy(reduced_[p], row, -f);
        for (std::size_t j = 0; j < count_; ++j) combos_[p][j] -= f * combo[j];
      }
      pivots_.push_back(pivot);
      reduced_.push_back(std::move(row));
      combos_.push_back(std::move(combo));
    }
  }

  std::size_t rank() const { return reduced_.size(); }

  std::vector<mpz_class> solve(const GroupAlgebraVector& v) const {
    if (dependent_) throw Error(ErrorCode::InvalidArgument, "oracle basis is linearly dependent");
    Row residual;
    for (const auto& [k, c] : v.terms()) residual.emplace(k, mpq_class(static_cast<long>(c)));
    std::vector<mpq_class> coeff(count_);
    for (std::size_t p = 0; p < reduced_.size(); ++p) {
      auto it = residual.find(pivots_[p]);
      if (it == residual.end()) continue;
      const mpq_class a = it->second;
      axpy(residual, reduced_[p], -a);
      for (std::size_t j = 0; j < count_; ++j) coeff[j] += a * combos_[p][j];
    }
    if (!residual.empty()) throw Error(ErrorCode::NotInSpan, "vector is not in the span of the oracle basis");
    std::vector<mpz_class> out(count_);
    for (std::size_t j = 0; j < count_; ++j) {
      if (coeff[j].get_den() != 1) throw Error(ErrorCode::NonIntegerSolution, "oracle expansion is not integral");
      out[j] = coeff[j].get_num();
    }
    return out;
  }

 private:
  using Row = std::map<std::uint64_t, mpq_class>;

  static void axpy(Row& y, const Row& x, const mpq_class& a) {
    for (const auto& [k, c] : x) {
      auto [it, inserted] = y.try_emplace(k, 0);
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }

  std::size_t count_;
  bool dependent_ = false;
  std::vector<std::uint64_t> pivots_;
  std::vector<Row> reduced_;
  std::vector<std::vector<mpq_class>> combos_;
};

}  // namespace

std::vector<mpz_class> expand_in_basis(const GroupAlgebraVector& v, std::span<const GroupAlgebraVector> basis) {
  return SpanSolver(basis).solve(v);
}

std::size_t rank_of(std::span<const GroupAlgebraVector> vectors) { return SpanSolver(vectors).rank(); }

std::pair<IntMatrix, IntMatrix> oracle_restricted_matrices(const Graph& g, const Partition& shape, int size_bound) {
  if (g.vertex_count() > size_bound)
    throw Error(ErrorCode::SizeBoundExceeded, "graph exceeds the restricted oracle size bound");
  const RestrictedBases b = restricted_bases(g, shape);
  const Numbering& ref = b.basis0.front();

  std::vector<GroupAlgebraVector> y;
  for (const auto& t : b.basis0) y.push_back(specht_vector(t, ref));
  const SpanSolver syt(y);

  std::vector<GroupAlgebraVector> x;
  for (const auto& e : b.basis1) x.push_back(specht_vector(e.x, ref));
  IntMatrix d1(b.basis0.size(), b.basis1.size());
  for (std::size_t c = 0; c < x.size(); ++c) d1.set_column(c, syt.solve(x[c]));

  const std::size_t K = b.copies1;
  std::vector<SpanSolver> blocks;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    blocks.emplace_back(std::span<const GroupAlgebraVector>(x).subspan(e * K, K));

  IntMatrix d2(b.basis1.size(), b.basis2.size());
  for (std::size_t c = 0; c < b.basis2.size(); ++c) {
    const auto& w = b.basis2[c];
    const auto v = specht_vector(w.w, ref);
    const auto keep_first = blocks[w.first].solve(v);
    const auto keep_second = blocks[w.second].solve(v);
    for (std::size_t l = 0; l < K; ++l) {
      d2(w.first * K + l, c) -= keep_first[l];
      d2(w.second * K + l, c) += keep_second[l];
    }
  }
  return {d1, d2};
}

// ---------------------------------------------------------------------------
// Full complex

HomologyResult full_h1_small(const Graph& g, int size_bound) {
  const int n = g.vertex_count();
  if (n > size_bound) throw Error(ErrorCode::SizeBoundExceeded, "graph exceeds the full-complex size bound");
  HomologyResult h;
  if (g.edge_count() == 0 || n == 0) return h;

  const auto perms = all_permutations(n);
  const std::size_t m = g.edge_count();
  std::vector<CosetBasis> edge_modules;
  std::vector<std::size_t> offset1{0};
  for (std::size_t e = 0; e < m; ++e) {
    const Edge f = g.edge(e);
    edge_modules.push_back(coset_basis(perms, numbering_of_subgraph(g, std::span<const Edge>(&f, 1))));
    offset1.push_back(offset1.back() + edge_modules.back().vectors.size());
  }
  const std::size_t dim1 = offset1.back();

  // C0 is the regular representation; a coset sum maps to its permutations
  std::unordered_map<std::uint64_t, std::size_t> perm_index;
  for (std::size_t i = 0; i < perms.size(); ++i) perm_index.emplace(perms[i].key(), i);
  IntMatrix d1(perms.size(), dim1);
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t j = 0; j < edge_modules[e].vectors.size(); ++j)
      for (const auto& [k, c] : edge_modules[e].vectors[j].terms()) d1(perm_index.at(k), offset1[e] + j) += static_cast<long>(c);

  // every pair of distinct edges contributes M_{F}
  std::vector<std::vector<GroupAlgebraVector>> pair_cosets;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t dim2 = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge f[2] = {g.edge(i), g.edge(j)};
      pair_cosets.push_back(coset_basis(perms, numbering_of_subgraph(g, f)).vectors);
      pairs.emplace_back(i, j);
      dim2 += pair_cosets.back().size();
    }
  IntMatrix d2(dim1, dim2);
  std::size_t col = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    for (const auto& v : pair_cosets[p]) {
      // removing e_j (larger) keeps e_i with sign -1; removing e_i gives +1
      for (auto [keep, sign] : {std::pair{i, -1}, std::pair{j, 1}}) {
        const CosetBasis& target = edge_modules[keep];
        std::unordered_map<std::size_t, long long> hits;
        for (const auto& [k, c] : v.terms()) {
          // rebuild the permutation from its packed key
          std::vector<int> images(static_cast<std::size_t>(n));
          std::uint64_t kk = k;
          for (int x = n - 1; x >= 0; --x) {
            images[static_cast<std::size_t>(x)] = static_cast<int>(kk & 0xF);
            kk >>= 4;
          }
          const auto perm = Permutation::from_images(images);
          hits[target.index.at(coset_key(perm, target.block_of))] += c;
        }
        for (const auto& [idx, count] : hits)
          d2(offset1[keep] + idx, col) += static_cast<long>(sign * (count / static_cast<long long>(target.block_size)));
      }
      ++col;
    }
  }

  const std::size_t rank1 = invariant_factors(d1).size();
  const auto factors = invariant_factors(d2);
  h.betti = dim1 - rank1 - factors.size();
  for (const auto& d : factors)
    if (d > 1) h.invariant_factors.push_back(d);
  return h;
}

}  // namespace chromhom::oracle
