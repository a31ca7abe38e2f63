#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chromhom/graph.hpp"
#include "chromhom/integer_homology.hpp"
#include "chromhom/tableaux.hpp"

namespace chromhom {

/// X_i^j: copy j of the Specht module inside M_{F_{e_i}}.
struct Basis1Entry {
  std::size_t edge = 0;
  std::size_t copy = 0;
  Numbering x;
};

/// W_{i,j}^l: copy l inside M_{F_{e_i, e_j}} for a nonconsecutive pair i < j.
struct Basis2Entry {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t copy = 0;
  Numbering w;
};

/// Indexed bases of the three chain groups restricted to one two-column
/// shape. Block-major: by edge (pair) index, then by copy.
struct RestrictedBases {
  Partition shape;
  std::vector<Numbering> basis0;
  std::vector<Basis1Entry> basis1;
  std::vector<Basis2Entry> basis2;
  std::size_t copies1 = 0;  ///< K_{lambda,(2,1^(n-2))}
  std::size_t copies2 = 0;  ///< K_{lambda,(2,2,1^(n-4))}, zero when k = 1
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  ///< nonconsecutive edge pairs
};

/// Throws InvalidArgument unless shape is (2^k, 1^(n-2k)) with k >= 1 and
/// n equal to the vertex count.
RestrictedBases restricted_bases(const Graph& g, const Partition& shape);

struct ComplexOptions {
  /// Verify d1 * d2 = 0 after construction (throws ComplexNotExact).
  bool check_exact = true;
  /// Mutation mode for the reproduction battery: swaps the signs attached to
  /// removing the smaller and the larger edge.
  bool flip_edge_signs = false;
};

class RestrictedComplex {
 public:
  static RestrictedComplex build(const Graph& g, const Partition& shape, const ComplexOptions& options = {});

  const Graph& graph() const { return graph_; }
  const Partition& shape() const { return bases_.shape; }
  const RestrictedBases& bases() const { return bases_; }
  const std::vector<Numbering>& basis0() const { return bases_.basis0; }
  const std::vector<Basis1Entry>& basis1() const { return bases_.basis1; }
  const std::vector<Basis2Entry>& basis2() const { return bases_.basis2; }
  const IntMatrix& d1() const { return d1_; }
  const IntMatrix& d2() const { return d2_; }

  /// Row of X_edge^copy in basis1 (0-based indices).
  std::size_t index1(std::size_t edge, std::size_t copy) const;
  /// Column of W for the given nonconsecutive pair (i < j); throws
  /// InvalidArgument when the pair is consecutive or absent.
  std::size_t index2(std::size_t first, std::size_t second, std::size_t copy) const;

  /// Straightens the Specht vector of x (its first row must be the endpoints
  /// of `edge`) inside M_{F_edge}; returns coordinates over basis1.
  IntVector chain_of(std::size_t edge, const Numbering& x) const;

  IntVector d1_column(const Numbering& x) const;
  IntVector d2_column(const Basis2Entry& w) const;

 private:
  Graph graph_;
  RestrictedBases bases_;
  ComplexOptions options_;
  std::vector<StraighteningBasis> edge_bases_;
  StraighteningBasis syt_basis_{{}, 0};
  std::vector<std::size_t> pair_offset_;  ///< flattened (i, j) -> pair index or npos
  IntMatrix d1_;
  IntMatrix d2_;
};

}  // namespace chromhom
