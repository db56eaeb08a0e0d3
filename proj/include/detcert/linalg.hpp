#pragma once

#include "detcert/matrix.hpp"

namespace detcert {

// Exact determinant via fraction-free Bareiss elimination. Pivots are chosen
// deterministically (first nonzero in column order). Returns 0 for singular
// input.
BigInt det_exact(const IntMatrix& m);
Rational det_exact(const RatMatrix& m);

// Exact inverse via one-step fraction-free Gauss-Jordan elimination on the
// augmented matrix; every entry comes out as adjugate-entry over determinant,
// reduced. Throws SingularMatrix when det = 0.
RatMatrix inverse_exact(const IntMatrix& m);
RatMatrix inverse_exact(const RatMatrix& m);

// Exact products. Throw DimensionMismatch when inner dimensions disagree.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace detcert
