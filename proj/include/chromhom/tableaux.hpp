#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "chromhom/graph.hpp"

namespace chromhom {

using Rows = std::vector<std::vector<int>>;

class Partition {
 public:
  Partition() = default;
  /// Throws InvalidArgument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// The shape (2^k, 1^(n-2k)).
  static Partition two_column(int n, int k);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool is_two_column(int k) const;
  /// k when the shape is (2^k, 1^(n-2k)) with k >= 1, otherwise -1.
  int two_column_k() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A filling of a Young diagram with positive integers (repeats allowed);
/// semistandard tableaux are fillings.
class Filling {
 public:
  Filling() = default;
  explicit Filling(Rows rows);

  const Rows& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  /// Entries read left to right along rows, top row first.
  std::vector<int> word() const;
  std::string to_string() const;

  friend auto operator<=>(const Filling&, const Filling&) = default;

 protected:
  Rows rows_;
};

/// A filling whose entries are exactly 1..n, each once.
class Numbering : public Filling {
 public:
  Numbering() = default;
  explicit Numbering(Rows rows);

  /// Appends single-box rows holding the given entries (which must extend
  /// 1..n to 1..n+count).
  Numbering with_bottom_boxes(std::span<const int> entries) const;
  /// Applies the entry relabeling v -> label[v - 1].
  Numbering relabeled(std::span<const int> label) const;

  friend auto operator<=>(const Numbering&, const Numbering&) = default;
};

/// The total order on fillings of one shape: the first (topmost) row where
/// the fillings differ decides, at the rightmost column differing in that
/// row; the larger entry there gives the larger filling.
bool total_order_less(const Filling& a, const Filling& b);

struct SignedNumbering {
  int sign = 1;
  Numbering numbering;
};

/// Canonical representative of the Specht vector a numbering indexes: every
/// row sorted ascending; below the first `frozen_rows` rows, equal-length rows
/// are ordered by first entry. Reordering rows of length L contributes
/// (-1)^L per transposition, so single-box rows anticommute.
SignedNumbering canonicalize(const Numbering& t, int frozen_rows = 0);

/// Formal integer combination of numberings of one shape, keyed by canonical
/// form relative to a fixed number of frozen top rows.
class NumberingVector {
 public:
  explicit NumberingVector(int frozen_rows = 0) : frozen_rows_(frozen_rows) {}

  void add(const Numbering& t, const mpz_class& coeff);
  void add(const NumberingVector& other, const mpz_class& scale);

  int frozen_rows() const { return frozen_rows_; }
  const std::map<Numbering, mpz_class>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  mpz_class coefficient(const Numbering& t) const;

 private:
  int frozen_rows_;
  std::map<Numbering, mpz_class> terms_;
};

/// Standard Young tableaux of a shape in ascending total order.
std::vector<Numbering> enumerate_syt(const Partition& shape);

/// Semistandard tableaux of given shape and content, ascending total order.
std::vector<Filling> enumerate_ssyt(const Partition& shape, const Partition& weight);

/// T(F): one row per connected component of the spanning subgraph with edge
/// set F, entries ascending; longer rows first, equal lengths by minimum.
Numbering numbering_of_subgraph(const Graph& g, std::span<const Edge> edge_subset);

/// Replaces the k-th word entry of y by the (rank of y_k in a stable sort of
/// w(y))-th entry of w(t).
Numbering standardize(const Filling& y, const Numbering& t);

/// The raw terms of pi_{i,j}(s) = (-1)^j sum over U in Xi_{i,j}(s): U swaps
/// the first j entries of row i+1 with j entries of row i (rows 1-based),
/// keeping both subsets in order.
std::vector<SignedNumbering> pi_terms(const Numbering& s, int i, int j);

/// pi_{i,j}(s) with keys canonicalized (no frozen rows).
NumberingVector pi_expand(const Numbering& s, int i, int j);

/// Index of canonical basis numberings relative to a frozen-row count.
class StraighteningBasis {
 public:
  StraighteningBasis(std::span<const Numbering> basis, int frozen_rows);

  int frozen_rows() const { return frozen_rows_; }
  std::size_t size() const { return basis_.size(); }
  const Numbering& at(std::size_t i) const { return basis_.at(i); }
  /// Position of a canonical key, if it is a basis member.
  const std::size_t* find(const Numbering& canonical_key) const;

 private:
  int frozen_rows_;
  std::vector<Numbering> basis_;
  std::map<Numbering, std::size_t> index_;
};

struct StraightenOptions {
  std::size_t max_steps = 1'000'000;
  /// Falls back to the group-algebra solve when rewriting stalls or leaves a
  /// non-basis standard term (only for n within the oracle bound).
  bool oracle_fallback = true;
};

/// Coefficients c with v = sum c_b b as Specht vectors. Applies pi_{i,1} at
/// the topmost column-increase violation below the frozen rows until every
/// term is a basis member. Throws NotInSpan when neither the rewrite nor the
/// fallback succeeds.
std::vector<mpz_class> straighten(const NumberingVector& v, const StraighteningBasis& basis,
                                  const StraightenOptions& options = {});

std::vector<mpz_class> straighten(const NumberingVector& v, std::span<const Numbering> basis, int frozen_rows,
                                  const StraightenOptions& options = {});

}  // namespace chromhom
