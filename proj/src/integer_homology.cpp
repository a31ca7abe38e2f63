#include "chromhom/integer_homology.hpp"

#include <algorithm>
#include <sstream>

#include "chromhom/errors.hpp"

namespace chromhom {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void IntMatrix::set_column(std::size_t c, const IntVector& values) {
  if (values.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return x == 0; });
}

std::size_t IntMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const mpz_class& x) { return x != 0; }));
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    const mpz_class& s = (*this)(source, c);
    if (s != 0) (*this)(target, c) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const mpz_class& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const mpz_class& s = (*this)(r, source);
    if (s != 0) (*this)(r, target) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const mpz_class& y = b(k, j);
        if (y != 0) p(i, j) += x * y;
      }
    }
  return p;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (x[k] != 0 && a(i, k) != 0) y[i] += a(i, k) * x[k];
  return y;
}

IntVector scaled(const IntVector& v, const mpz_class& factor) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * factor;
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  // Bareiss
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) d.push_back(S(i, i));
  return d;
}

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

// Shared dense SNF; U and V are updated only when non-null.
void dense_snf(IntMatrix& A, IntMatrix* U, IntMatrix* V) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  auto row_swap = [&](std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    if (U) U->swap_rows(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    if (V) V->swap_cols(a, b);
  };
  auto row_add = [&](std::size_t t, std::size_t s, const mpz_class& f) {
    A.add_row_multiple(t, s, f);
    if (U) U->add_row_multiple(t, s, f);
  };
  auto col_add = [&](std::size_t t, std::size_t s, const mpz_class& f) {
    A.add_col_multiple(t, s, f);
    if (V) V->add_col_multiple(t, s, f);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // global minimum-magnitude pivot in the trailing block
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (A(i, j) != 0 && (bi == m || cmpabs(A(i, j), A(bi, bj)) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    row_swap(t, bi);
    col_swap(t, bj);

    for (;;) {
      bool clean = true;
      mpz_class q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (clean) {
        std::size_t bad = m;
        for (std::size_t i = t + 1; i < m && bad == m; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
              bad = i;
              break;
            }
        if (bad == m) break;
        row_add(t, bad, 1);
        continue;
      }
      // move the smallest remainder in row/column t to the pivot
      std::size_t best_i = t, best_j = t;
      for (std::size_t i = t + 1; i < m; ++i)
        if (A(i, t) != 0 && cmpabs(A(i, t), A(best_i, best_j)) < 0) {
          best_i = i;
          best_j = t;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (A(t, j) != 0 && cmpabs(A(t, j), A(best_i, best_j)) < 0) {
          best_i = t;
          best_j = j;
        }
      if (best_i != t) row_swap(t, best_i);
      if (best_j != t) col_swap(t, best_j);
    }
    if (A(t, t) < 0) {
      A.negate_row(t);
      if (U) U->negate_row(t);
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  dense_snf(f.S, &f.U, &f.V);
  return f;
}

std::vector<mpz_class> invariant_factors(const IntMatrix& m) {
  // sparse rows: sorted (col, value)
  using Row = std::vector<std::pair<std::size_t, mpz_class>>;
  std::vector<Row> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) rows[r].emplace_back(c, m(r, c));

  std::size_t units = 0;
  std::vector<char> alive(rows.size(), 1);
  std::vector<char> col_alive(m.cols(), 1);
  for (;;) {
    // unit entry in the shortest row
    std::size_t pr = rows.size(), pc = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      if (pr != rows.size() && rows[r].size() >= rows[pr].size()) continue;
      for (const auto& [c, v] : rows[r])
        if (v == 1 || v == -1) {
          pr = r;
          pc = c;
          break;
        }
    }
    if (pr == rows.size()) break;
    const Row pivot = rows[pr];
    const mpz_class pv = std::find_if(pivot.begin(), pivot.end(), [&](const auto& e) { return e.first == pc; })->second;
    alive[pr] = 0;
    col_alive[pc] = 0;
    ++units;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      auto it = std::lower_bound(rows[r].begin(), rows[r].end(), pc,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      if (it == rows[r].end() || it->first != pc) continue;
      const mpz_class f = -(it->second * pv);  // pv = +-1 so pv^-1 = pv
      Row merged;
      merged.reserve(rows[r].size() + pivot.size());
      auto a = rows[r].begin();
      auto b = pivot.begin();
      while (a != rows[r].end() || b != pivot.end()) {
        if (b == pivot.end() || (a != rows[r].end() && a->first < b->first)) {
          merged.push_back(std::move(*a++));
        } else if (a == rows[r].end() || b->first < a->first) {
          merged.emplace_back(b->first, f * b->second);
          ++b;
        } else {
          mpz_class v = a->second + f * b->second;
          if (v != 0) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      rows[r] = std::move(merged);
    }
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (alive[r] && !rows[r].empty()) live_rows.push_back(r);
  std::vector<std::size_t> col_pos(m.cols(), 0);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (col_alive[c]) {
      col_pos[c] = live_cols.size();
      live_cols.push_back(c);
    }
  IntMatrix rest(live_rows.size(), live_cols.size());
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, v] : rows[live_rows[i]]) rest(i, col_pos[c]) = v;
  dense_snf(rest, nullptr, nullptr);

  std::vector<mpz_class> out(units, mpz_class(1));
  for (std::size_t i = 0; i < std::min(rest.rows(), rest.cols()); ++i)
    if (rest(i, i) != 0) out.push_back(rest(i, i));
  return out;
}

// ---------------------------------------------------------------------------
// Column Hermite form

ColumnEchelonForm column_hermite_form(const IntMatrix& m) {
  ColumnEchelonForm f{m, IntMatrix::identity(m.cols()), IntMatrix::identity(m.cols()), {}};
  IntMatrix& H = f.H;
  IntMatrix& V = f.V;
  IntMatrix& W = f.V_inverse;
  const std::size_t n = m.cols();

  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    H.swap_cols(a, b);
    V.swap_cols(a, b);
    W.swap_rows(a, b);
  };
  // col_t += q col_s  <=>  row_s of V^-1 -= q row_t
  auto col_add = [&](std::size_t t, std::size_t s, const mpz_class& q) {
    if (q == 0) return;
    H.add_col_multiple(t, s, q);
    V.add_col_multiple(t, s, q);
    W.add_row_multiple(s, t, -q);
  };
  auto col_negate = [&](std::size_t c) {
    H.negate_col(c);
    V.negate_col(c);
    W.negate_row(c);
  };

  std::size_t rank = 0;
  for (std::size_t r = 0; r < m.rows() && rank < n; ++r) {
    // Euclid on row r across columns rank..n-1
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = rank; c < n; ++c)
        if (H(r, c) != 0 && (best == n || cmpabs(H(r, c), H(r, best)) < 0)) best = c;
      if (best == n) break;
      col_swap(rank, best);
      bool done = true;
      mpz_class q;
      for (std::size_t c = rank + 1; c < n; ++c) {
        if (H(r, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), H(r, c).get_mpz_t(), H(r, rank).get_mpz_t());
        col_add(c, rank, -q);
        if (H(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, rank) == 0) continue;
    if (H(r, rank) < 0) col_negate(rank);
    mpz_class q;
    for (std::size_t c = 0; c < rank; ++c) {
      mpz_fdiv_q(q.get_mpz_t(), H(r, c).get_mpz_t(), H(r, rank).get_mpz_t());
      col_add(c, rank, -q);
    }
    f.pivot_rows.push_back(r);
    ++rank;
  }
  return f;
}

std::size_t rank(const IntMatrix& m) { return invariant_factors(m).size(); }

IntMatrix kernel_basis(const IntMatrix& m) {
  const auto f = column_hermite_form(m);
  const std::size_t r = f.rank();
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t c = r; c < m.cols(); ++c)
    for (std::size_t i = 0; i < m.cols(); ++i) k(i, c - r) = f.V(i, c);
  return k;
}

namespace {

std::optional<IntVector> solve_with(const ColumnEchelonForm& f, const IntVector& b) {
  const IntMatrix& H = f.H;
  if (b.size() != H.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  IntVector residual = b;
  IntVector y(H.cols());
  std::size_t next_row = 0;
  for (std::size_t k = 0; k < f.rank(); ++k) {
    const std::size_t p = f.pivot_rows[k];
    for (; next_row < p; ++next_row)
      if (residual[next_row] != 0) return std::nullopt;
    if (!mpz_divisible_p(residual[p].get_mpz_t(), H(p, k).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[k].get_mpz_t(), residual[p].get_mpz_t(), H(p, k).get_mpz_t());
    for (std::size_t i = p; i < H.rows(); ++i)
      if (H(i, k) != 0) residual[i] -= y[k] * H(i, k);
    next_row = p + 1;
  }
  for (std::size_t i = next_row; i < residual.size(); ++i)
    if (residual[i] != 0) return std::nullopt;
  return f.V * y;
}

}  // namespace

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  return solve_with(column_hermite_form(m), b);
}

// ---------------------------------------------------------------------------
// Homology

bool HomologyResult::has_z2() const {
  return std::any_of(invariant_factors.begin(), invariant_factors.end(),
                     [](const mpz_class& d) { return mpz_even_p(d.get_mpz_t()) != 0; });
}

std::string HomologyResult::to_string() const {
  std::vector<std::string> parts;
  if (betti == 1) parts.push_back("Z");
  else if (betti > 1) parts.push_back("Z^" + std::to_string(betti));
  for (const auto& d : invariant_factors) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

HomologyResult homology_group(const IntMatrix& d1, const IntMatrix& d2) {
  if (d1.cols() != d2.rows())
    throw Error(ErrorCode::DimensionMismatch, "d1 columns do not match d2 rows");
  if (!(d1 * d2).is_zero()) throw Error(ErrorCode::ComplexNotExact, "d1 * d2 != 0");
  const auto f = column_hermite_form(d1);
  const std::size_t r = f.rank();
  const std::size_t kdim = d1.cols() - r;
  // coordinates of im d2 in the kernel basis: rows r.. of V^-1 d2
  IntMatrix a(kdim, d2.cols());
  for (std::size_t i = 0; i < kdim; ++i)
    for (std::size_t k = 0; k < d1.cols(); ++k) {
      const mpz_class& w = f.V_inverse(r + i, k);
      if (w == 0) continue;
      for (std::size_t j = 0; j < d2.cols(); ++j)
        if (d2(k, j) != 0) a(i, j) += w * d2(k, j);
    }
  HomologyResult h;
  const auto factors = invariant_factors(a);
  h.betti = kdim - factors.size();
  for (const auto& d : factors)
    if (d > 1) h.invariant_factors.push_back(d);
  return h;
}

}  // namespace chromhom
