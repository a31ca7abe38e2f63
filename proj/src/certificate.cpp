#include "chromhom/certificate.hpp"

#include "chromhom/errors.hpp"

namespace chromhom {

CertificateVerdict check_certificate(const TorsionCertificate& c, const RestrictedComplex& complex) {
  if (c.h.size() != complex.basis1().size() || c.witness_x.size() != complex.basis2().size())
    throw Error(ErrorCode::DimensionMismatch, "certificate vectors do not match the complex dimensions");
  if (c.prime < 2) throw Error(ErrorCode::InvalidArgument, "certificate prime must be at least 2");
  CertificateVerdict v;
  v.cycle = is_zero(complex.d1() * c.h);
  v.doubled = complex.d2() * c.witness_x == scaled(c.h, c.prime);
  v.not_in_image = !solve_integer(complex.d2(), c.h).has_value();
  return v;
}

CertificateVerdict check_certificate(const TorsionCertificate& c) {
  return check_certificate(c, RestrictedComplex::build(c.graph, c.shape));
}

}  // namespace chromhom
