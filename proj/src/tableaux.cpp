#include "chromhom/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chromhom/errors.hpp"
#include "chromhom/tabloid_oracle.hpp"

namespace chromhom {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); }

std::string rows_to_string(const Rows& rows) {
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) os << '|';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) os << ',';
      os << rows[r][c];
    }
  }
  os << ')';
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) invalid("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) invalid("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::two_column(int n, int k) {
  if (k < 0 || 2 * k > n) invalid("two-column shape needs 0 <= 2k <= n");
  std::vector<int> p(static_cast<std::size_t>(k), 2);
  p.resize(static_cast<std::size_t>(n - k), 1);
  return Partition(std::move(p));
}

bool Partition::is_two_column(int k) const { return k >= 1 && two_column_k() == k; }

int Partition::two_column_k() const {
  int k = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 2) {
      if (static_cast<int>(i) != k) return -1;
      ++k;
    } else if (parts_[i] != 1) {
      return -1;
    }
  }
  return k >= 1 ? k : -1;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Filling / Numbering

Filling::Filling(Rows rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) invalid("filling rows must be nonempty");
    if (r && rows_[r].size() > rows_[r - 1].size()) invalid("filling row lengths must be weakly decreasing");
    for (int x : rows_[r])
      if (x <= 0) invalid("filling entries must be positive");
  }
}

Partition Filling::shape() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
  return Partition(std::move(p));
}

int Filling::size() const {
  int s = 0;
  for (const auto& r : rows_) s += static_cast<int>(r.size());
  return s;
}

std::vector<int> Filling::word() const {
  std::vector<int> w;
  for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string Filling::to_string() const { return rows_to_string(rows_); }

Numbering::Numbering(Rows rows) : Filling(std::move(rows)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& r : rows_)
    for (int x : r) {
      if (x > n || seen[static_cast<std::size_t>(x)]) invalid("numbering entries must be exactly 1..n");
      seen[static_cast<std::size_t>(x)] = 1;
    }
}

Numbering Numbering::with_bottom_boxes(std::span<const int> entries) const {
  Rows rows = rows_;
  for (int x : entries) rows.push_back({x});
  return Numbering(std::move(rows));
}

Numbering Numbering::relabeled(std::span<const int> label) const {
  if (label.size() != static_cast<std::size_t>(size())) invalid("relabeling has wrong length");
  Rows rows = rows_;
  for (auto& r : rows)
    for (int& x : r) x = label[static_cast<std::size_t>(x - 1)];
  return Numbering(std::move(rows));
}

bool total_order_less(const Filling& a, const Filling& b) {
  const Rows& ra = a.rows();
  const Rows& rb = b.rows();
  const std::size_t nr = std::min(ra.size(), rb.size());
  for (std::size_t r = 0; r < nr; ++r) {
    if (ra[r] == rb[r]) continue;
    const std::size_t len = std::min(ra[r].size(), rb[r].size());
    for (std::size_t c = len; c-- > 0;)
      if (ra[r][c] != rb[r][c]) return ra[r][c] < rb[r][c];
    return ra[r].size() < rb[r].size();
  }
  return ra.size() < rb.size();
}

SignedNumbering canonicalize(const Numbering& t, int frozen_rows) {
  Rows rows = t.rows();
  for (auto& r : rows) std::sort(r.begin(), r.end());
  int sign = 1;
  std::size_t i = static_cast<std::size_t>(std::max(frozen_rows, 0));
  while (i < rows.size()) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].size() == rows[i].size()) ++j;
    // insertion sort counts transpositions
    for (std::size_t a = i + 1; a < j; ++a)
      for (std::size_t b = a; b > i && rows[b - 1][0] > rows[b][0]; --b) {
        std::swap(rows[b - 1], rows[b]);
        if (rows[b].size() % 2 == 1) sign = -sign;
      }
    i = j;
  }
  return {sign, Numbering(std::move(rows))};
}

// ---------------------------------------------------------------------------
// NumberingVector

void NumberingVector::add(const Numbering& t, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [sign, key] = canonicalize(t, frozen_rows_);
  auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
  if (sign > 0)
    it->second += coeff;
  else
    it->second -= coeff;
  if (it->second == 0) terms_.erase(it);
}

void NumberingVector::add(const NumberingVector& other, const mpz_class& scale) {
  for (const auto& [t, c] : other.terms_) add(t, c * scale);
}

mpz_class NumberingVector::coefficient(const Numbering& t) const {
  auto [sign, key] = canonicalize(t, frozen_rows_);
  auto it = terms_.find(key);
  if (it == terms_.end()) return 0;
  return sign > 0 ? it->second : mpz_class(-it->second);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void syt_rec(const std::vector<int>& shape, Rows& filled, int v, int n, std::vector<Numbering>& out) {
  if (v > n) {
    out.emplace_back(filled);
    return;
  }
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const int len = static_cast<int>(filled[i].size());
    if (len < shape[i] && (i == 0 || static_cast<int>(filled[i - 1].size()) > len)) {
      filled[i].push_back(v);
      syt_rec(shape, filled, v + 1, n, out);
      filled[i].pop_back();
    }
  }
}

struct SsytSearch {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  Rows grid;
  std::vector<int> remaining;
  std::vector<Filling> out;

  void run(std::size_t idx) {
    if (idx == cells.size()) {
      out.emplace_back(grid);
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[r][c - 1]);
    if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
      auto& left = remaining[static_cast<std::size_t>(v - 1)];
      if (left == 0) continue;
      --left;
      grid[r][c] = v;
      run(idx + 1);
      ++left;
    }
  }
};

}  // namespace

std::vector<Numbering> enumerate_syt(const Partition& shape) {
  std::vector<int> parts(shape.parts().begin(), shape.parts().end());
  Rows filled(parts.size());
  std::vector<Numbering> out;
  syt_rec(parts, filled, 1, shape.size(), out);
  std::sort(out.begin(), out.end(), [](const Numbering& a, const Numbering& b) { return total_order_less(a, b); });
  return out;
}

std::vector<Filling> enumerate_ssyt(const Partition& shape, const Partition& weight) {
  if (shape.size() != weight.size()) invalid("shape and weight sizes differ");
  SsytSearch s;
  for (std::size_t r = 0; r < shape.length(); ++r) {
    s.grid.emplace_back(static_cast<std::size_t>(shape.parts()[r]), 0);
    for (int c = 0; c < shape.parts()[r]; ++c) s.cells.emplace_back(r, static_cast<std::size_t>(c));
  }
  s.remaining.assign(weight.parts().begin(), weight.parts().end());
  s.run(0);
  std::sort(s.out.begin(), s.out.end(), [](const Filling& a, const Filling& b) { return total_order_less(a, b); });
  return s.out;
}

Numbering numbering_of_subgraph(const Graph& g, std::span<const Edge> edge_subset) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : edge_subset) {
    if (!g.has_edge(e.u, e.v)) invalid("edge subset is not contained in the graph");
    parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  }
  std::vector<std::vector<int>> comps(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) comps[static_cast<std::size_t>(find(v))].push_back(v);
  Rows rows;
  for (auto& c : comps)
    if (!c.empty()) rows.push_back(std::move(c));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return Numbering(std::move(rows));
}

Numbering standardize(const Filling& y, const Numbering& t) {
  if (y.size() != t.size()) invalid("standardize: sizes differ");
  const std::vector<int> wy = y.word();
  const std::vector<int> wt = t.word();
  std::vector<int> content(t.rows().size(), 0);
  for (int v : wy) {
    if (v > static_cast<int>(content.size())) invalid("standardize: content does not match row lengths");
    ++content[static_cast<std::size_t>(v - 1)];
  }
  for (std::size_t r = 0; r < content.size(); ++r)
    if (content[r] != static_cast<int>(t.rows()[r].size()))
      invalid("standardize: content does not match row lengths");
  std::vector<std::size_t> order(wy.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return wy[a] < wy[b]; });
  std::vector<std::size_t> rank(wy.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
  Rows out;
  std::size_t p = 0;
  for (const auto& r : y.rows()) {
    std::vector<int> row;
    for (std::size_t q = 0; q < r.size(); ++q) row.push_back(wt[rank[p + q]]);
    p += r.size();
    out.push_back(std::move(row));
  }
  return Numbering(std::move(out));
}

// ---------------------------------------------------------------------------
// Exchange relations

std::vector<SignedNumbering> pi_terms(const Numbering& s, int i, int j) {
  const Rows& rows = s.rows();
  if (i < 1 || static_cast<std::size_t>(i) >= rows.size()) invalid("pi: row index out of range");
  const auto& upper = rows[static_cast<std::size_t>(i - 1)];
  const auto& lower = rows[static_cast<std::size_t>(i)];
  if (j < 1 || static_cast<std::size_t>(j) > lower.size() || static_cast<std::size_t>(j) > upper.size())
    invalid("pi: prefix length out of range");
  const int sign = (j % 2) ? -1 : 1;
  std::vector<SignedNumbering> out;
  // choose j positions of the upper row, increasing
  std::vector<int> mask(upper.size(), 0);
  std::fill(mask.begin(), mask.begin() + j, 1);
  do {
    Rows nr = rows;
    auto& up = nr[static_cast<std::size_t>(i - 1)];
    auto& lo = nr[static_cast<std::size_t>(i)];
    std::size_t k = 0;
    for (std::size_t c = 0; c < upper.size(); ++c)
      if (mask[c]) {
        lo[k] = upper[c];
        up[c] = lower[k];
        ++k;
      }
    out.push_back({sign, Numbering(std::move(nr))});
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

NumberingVector pi_expand(const Numbering& s, int i, int j) {
  NumberingVector v;
  for (const auto& [sign, t] : pi_terms(s, i, j)) v.add(t, sign);
  return v;
}

// ---------------------------------------------------------------------------
// Straightening

StraighteningBasis::StraighteningBasis(std::span<const Numbering> basis, int frozen_rows)
    : frozen_rows_(frozen_rows), basis_(basis.begin(), basis.end()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto [sign, key] = canonicalize(basis_[i], frozen_rows_);
    if (sign != 1 || key != basis_[i]) invalid("straightening basis entries must be canonical");
    if (!index_.emplace(key, i).second) invalid("straightening basis entries must be distinct");
  }
}

const std::size_t* StraighteningBasis::find(const Numbering& canonical_key) const {
  auto it = index_.find(canonical_key);
  return it == index_.end() ? nullptr : &it->second;
}

namespace {

// Topmost non-frozen row pair with a column-increase violation; rows are
// canonical. Returns the 1-based upper row, or 0.
int topmost_violation(const Numbering& t, int frozen) {
  const Rows& rows = t.rows();
  for (std::size_t i = static_cast<std::size_t>(std::max(frozen, 0)); i + 1 < rows.size(); ++i) {
    const auto& a = rows[i];
    const auto& b = rows[i + 1];
    for (std::size_t c = 0; c < b.size(); ++c)
      if (a[c] > b[c]) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::vector<mpz_class> oracle_straighten(const NumberingVector& v, const StraighteningBasis& basis) {
  const Numbering& any = basis.size() ? basis.at(0) : v.terms().begin()->first;
  if (any.size() > oracle::kDefaultRestrictedBound)
    throw Error(ErrorCode::NotInSpan, "straightening stalled beyond the oracle size bound");
  const Numbering ref = enumerate_syt(any.shape()).front();
  std::vector<oracle::GroupAlgebraVector> bvecs;
  for (std::size_t i = 0; i < basis.size(); ++i) bvecs.push_back(oracle::specht_vector(basis.at(i), ref));
  oracle::GroupAlgebraVector target(any.size());
  for (const auto& [t, c] : v.terms()) target += c.get_si() * oracle::specht_vector(t, ref);
  return oracle::expand_in_basis(target, bvecs);
}

}  // namespace

std::vector<mpz_class> straighten(const NumberingVector& v, const StraighteningBasis& basis,
                                  const StraightenOptions& options) {
  const int frozen = basis.frozen_rows();
  std::vector<mpz_class> out(basis.size());
  if (v.empty()) return out;

  std::map<Numbering, mpz_class> work;
  auto accumulate = [&](const Numbering& t, int sign, const mpz_class& c) {
    auto [s, key] = canonicalize(t, frozen);
    auto [it, inserted] = work.try_emplace(std::move(key), 0);
    if (s * sign > 0)
      it->second += c;
    else
      it->second -= c;
    if (it->second == 0) work.erase(it);
  };
  for (const auto& [t, c] : v.terms()) accumulate(t, 1, c);

  std::size_t steps = 0;
  bool stalled = false;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Numbering& t = node.key();
    const mpz_class& c = node.mapped();
    const int i = topmost_violation(t, frozen);
    if (i == 0) {
      if (const std::size_t* pos = basis.find(t)) {
        out[*pos] += c;
        continue;
      }
      stalled = true;
      break;
    }
    if (++steps > options.max_steps) {
      stalled = true;
      break;
    }
    for (const auto& [sign, u] : pi_terms(t, i, 1)) accumulate(u, sign, c);
  }
  if (!stalled) return out;
  if (!options.oracle_fallback)
    throw Error(ErrorCode::NotInSpan, "straightening stalled on a non-basis term");
  NumberingVector original(frozen);
  original.add(v, 1);
  return oracle_straighten(original, basis);
}

std::vector<mpz_class> straighten(const NumberingVector& v, std::span<const Numbering> basis, int frozen_rows,
                                  const StraightenOptions& options) {
  return straighten(v, StraighteningBasis(basis, frozen_rows), options);
}

}  // namespace chromhom
