#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chromhom/certificate.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/specht_complex.hpp"

namespace chromhom {

struct SeedTerm1 {
  int sign = 1;
  std::size_t edge = 0;  ///< 0-based edge index
  std::size_t copy = 0;
};

struct SeedTerm2 {
  int sign = 1;
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t copy = 0;
};

/// Hand-derived certificates on K5 and K3,3 with fixed labelings.
struct CanonicalSeed {
  KuratowskiKind kind = KuratowskiKind::K5;
  Graph graph;
  Partition shape;
  std::vector<SeedTerm1> h_terms;
  std::vector<SeedTerm2> g_terms;
  /// K3,3 only: the side containing vertex 1.
  std::vector<int> left_side;
};

/// Built and verified once; throws LiftFailed if a seed does not verify.
const CanonicalSeed& canonical_seed(KuratowskiKind kind);

/// The seed as a certificate (witness_x taken from the quoted g terms).
TorsionCertificate seed_certificate(const CanonicalSeed& seed, const RestrictedComplex& complex);

/// Seed vertex label of a branch vertex (index into branch_vertices).
int seed_label(KuratowskiKind kind, int branch_index);

/// Certificate together with the complex it was verified on.
struct CertifiedComplex {
  TorsionCertificate certificate;
  RestrictedComplex complex;
};

/// Lifts through subdivide(c.graph, e); the new vertex is n+1.
CertifiedComplex lift_subdivision(const CertifiedComplex& c, Edge e);

/// embedding[v - 1] is the vertex of g_big that vertex v of the certificate's
/// graph maps to. The remaining vertices of g_big become extra bottom boxes.
CertifiedComplex lift_subgraph(const CertifiedComplex& c, const Graph& g_big, std::span<const int> embedding);

struct LiftStep {
  enum class Kind { Subdivide, Embed };
  Kind kind = Kind::Subdivide;
  Edge edge;                    ///< subdivided edge (Subdivide)
  int new_vertex = 0;           ///< label of the added vertex (Subdivide)
  std::vector<int> vertex_map;  ///< Embed: v -> vertex_map[v - 1]
};

struct LiftTrace {
  std::vector<LiftStep> steps;
};

struct NonplanarCertificate {
  KuratowskiKind seed = KuratowskiKind::K5;
  SubdivisionWitness witness;
  LiftTrace trace;
  /// Certificate on the canonically labeled copy: seed labels first, then
  /// subdivision vertices, then the remaining vertices in increasing order.
  TorsionCertificate canonical;
  /// canonical_to_input[c - 1] is the input vertex carrying canonical label c.
  std::vector<int> canonical_to_input;
  /// Certificate in the input labeling.
  TorsionCertificate certificate;
};

/// Throws PlanarInput when g has no Kuratowski subdivision.
NonplanarCertificate certify_nonplanar(const Graph& g);

}  // namespace chromhom
