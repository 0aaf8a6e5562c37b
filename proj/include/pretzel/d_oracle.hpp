#ifndef PRETZEL_D_ORACLE_HPP
#define PRETZEL_D_ORACLE_HPP

#include "pretzel/int_matrix.hpp"
#include "pretzel/spinc.hpp"

namespace pretzel {

// Brute-force cross-check of the correction-term maximization, independent of
// the Fincke-Pohst engine.  The coset v0 + 2Gy is enumerated directly in
// y-space: integer coordinate ascent seeds an incumbent, and every lattice
// point that could still beat it lies in the certified region
//   (y_k - c_k)^2 < gap * (-G^-1)_kk          for each k,
//   prefix^T * inv(top-left block of -G^-1) * prefix < gap,
// both exact rational consequences of Cauchy-Schwarz/Schur, so the scan is
// exhaustive.  Intended for tests and `dinv --oracle`.
Rat d_invariant_oracle(const IntMatrix& g, const SpincClass& s);

} // namespace pretzel

#endif
