#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "chromhom/certificate.hpp"
#include "chromhom/graph.hpp"
#include "chromhom/torsion_lift.hpp"

namespace chromhom {

using Json = nlohmann::json;

/// Which two-column shapes (2^k, 1^(n-2k)) to scan.
struct ShapeScan {
  int k = 2;
  bool all_shapes = false;  ///< 2 <= k <= n/2

  std::vector<int> ks(int n) const;
};

/// Per-shape homology of the restricted complexes. A graph with a loop
/// reports zero homology without building anything.
Json homology_report(const Graph& g, const NormalizationReport& norm, const ShapeScan& scan);

/// Certificate document: graph, shape, prime, sparse h and x, verdict.
Json certificate_json(const TorsionCertificate& c, const RestrictedComplex& complex);

/// Full pipeline output: the certificate in input labels plus the canonical
/// copy, the Kuratowski witness and the lift trace.
Json certificate_json(const NonplanarCertificate& c);

struct ParsedCertificate {
  TorsionCertificate certificate;
  RestrictedComplex complex;
};

/// Rebuilds the complex from the document's graph and shape and maps the
/// sparse terms onto it. Throws ParseError on malformed documents and
/// DimensionMismatch when indices do not fit.
ParsedCertificate certificate_from_json(const Json& doc);

/// Independent re-verification. When `supplied` is given it must be the
/// certificate's graph (DimensionMismatch otherwise).
CertificateVerdict check_certificate_json(const Json& doc, const Graph* supplied = nullptr);

/// One survey row. Throws InvariantViolation if a non-planar graph shows no
/// even invariant factor.
struct SurveyResult {
  Json record;
  Json certificate;  ///< null for planar graphs
};

SurveyResult survey_record(const Graph& g, const ShapeScan& scan);

struct BatteryCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Golden battery over the hand-computed worked examples. `mutate` flips the edge-removal
/// sign convention so the d2 check is expected to fail.
std::vector<BatteryCheck> reproduction_battery(bool mutate = false);

Json to_json(const HomologyResult& h);
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

}  // namespace chromhom
