#pragma once

#include "chromhom/graph.hpp"
#include "chromhom/integer_homology.hpp"
#include "chromhom/specht_complex.hpp"
#include "chromhom/tableaux.hpp"

namespace chromhom {

/// A 1-cycle h with p*h = d2(witness_x) while h itself is not a boundary.
struct TorsionCertificate {
  Graph graph;
  Partition shape;
  IntVector h;          ///< over basis1
  IntVector witness_x;  ///< over basis2
  int prime = 2;
};

struct CertificateVerdict {
  bool cycle = false;         ///< d1 h = 0
  bool doubled = false;       ///< d2 x = p h
  bool not_in_image = false;  ///< d2 y = h has no integer solution

  bool valid() const { return cycle && doubled && not_in_image; }
};

/// Throws DimensionMismatch when the vectors do not fit the complex.
CertificateVerdict check_certificate(const TorsionCertificate& c, const RestrictedComplex& complex);

/// Builds the complex from the certificate's own graph and shape first.
CertificateVerdict check_certificate(const TorsionCertificate& c);

}  // namespace chromhom
