#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "chromhom/graph.hpp"
#include "chromhom/integer_homology.hpp"
#include "chromhom/tableaux.hpp"

// Brute-force realization of Specht vectors inside the integral group algebra
// of S_n. Everything here is deliberately naive; it exists to check the
// symbolic layer.

namespace chromhom::oracle {

inline constexpr int kMaxPermutationSize = 12;
inline constexpr int kDefaultRestrictedBound = 7;
inline constexpr int kDefaultFullBound = 5;

/// Permutation of {1..n} in one-line notation. Composition applies the right
/// factor first: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// images[x - 1] = image of x.
  static Permutation from_images(std::span<const int> images);
  /// The relabeling carrying numbering `from` to numbering `to` entry-wise,
  /// i.e. sigma with sigma . from = to.
  static Permutation carrying(const Numbering& from, const Numbering& to);

  int size() const { return n_; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  int sign() const;
  Permutation inverse() const;
  /// Packed key; distinct permutations of the same size have distinct keys.
  std::uint64_t key() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxPermutationSize> images_{};
};

/// Integer combination of permutations of one fixed size.
class GroupAlgebraVector {
 public:
  explicit GroupAlgebraVector(int n = 0) : n_(n) {}

  int degree() const { return n_; }
  void add(const Permutation& p, long long coeff);
  const std::map<std::uint64_t, long long>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  long long coefficient(const Permutation& p) const;

  GroupAlgebraVector& operator+=(const GroupAlgebraVector& o);
  friend GroupAlgebraVector operator*(long long c, const GroupAlgebraVector& v);
  friend bool operator==(const GroupAlgebraVector&, const GroupAlgebraVector&) = default;

 private:
  int n_;
  std::map<std::uint64_t, long long> terms_;
};

struct SymmetrizerSpec {
  Numbering t;
  std::size_t row_group_size = 0;
  std::size_t column_group_size = 0;
};

SymmetrizerSpec symmetrizer_spec(const Numbering& t);

/// All permutations preserving each row (or each column) of t.
std::vector<Permutation> row_group(const Numbering& t);
std::vector<Permutation> column_group(const Numbering& t);

/// v_t^s = sigma_{t,s} b_t a_t with sigma_{t,s} . t = s.
GroupAlgebraVector specht_vector(const Numbering& t, const Numbering& s);

/// Number of products sigma * zeta * rho summed before cancellation.
std::size_t specht_vector_raw_term_count(const Numbering& t);

/// Left-coset sums of R(T(F)): an integral basis of M_F = Z[S_n] a_{T(F)}.
std::vector<GroupAlgebraVector> permutation_module_basis(const Graph& g, std::span<const Edge> edge_subset);

/// Exact coefficients of v over an independent basis; throws NotInSpan or
/// NonIntegerSolution.
std::vector<mpz_class> expand_in_basis(const GroupAlgebraVector& v, std::span<const GroupAlgebraVector> basis);

/// Rank over the rationals of a family of group-algebra vectors.
std::size_t rank_of(std::span<const GroupAlgebraVector> vectors);

/// Differentials of the restricted complex computed purely from group-algebra
/// vectors, over the same bases as RestrictedComplex.
std::pair<IntMatrix, IntMatrix> oracle_restricted_matrices(const Graph& g, const Partition& shape,
                                                           int size_bound = kDefaultRestrictedBound);

/// H_1 of the whole q-degree-zero complex C_2 -> C_1 -> C_0 over the integers
/// (all summands, including consecutive edge pairs).
HomologyResult full_h1_small(const Graph& g, int size_bound = kDefaultFullBound);

}  // namespace chromhom::oracle
