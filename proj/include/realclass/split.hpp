#pragma once

// Splitting Lemma over Q: f ~ g(x_1..x_c) + sum_{i>c} d_i x_i^2.
//
// The real-valued normalization d_i = +-1 would need square roots, so the
// diagonal entries are kept as nonzero rationals. Rescaling x_i by
// 1/sqrt|d_i| only touches the nondegenerate variables and changes neither
// the residual part nor the inertia index.

#include <vector>

#include "realclass/linalg.hpp"
#include "realclass/polyring.hpp"

namespace realclass::splitting {

struct QuadDiag {
  Matrix transform;            // T, invertible
  std::vector<Rational> diag;  // T^t M T = diag(d_1..d_n)
  int corank = 0;              // number of zero entries
  int inertia = 0;             // number of negative entries
};

// Symmetric Gaussian congruence. Entries are ordered zeros, then negatives,
// then positives.
QuadDiag diagonalize_quadratic(const Matrix& m);

struct SplitResult {
  int corank = 0;
  int inertia = 0;
  // In the first `corank` ambient variable names; every term has degree >= 3.
  Poly residual;
  // substitute(f, change, k) = residual + sum_i quad_coeffs[i] x_{c+i}^2
  // up to degree k.
  CoordChange change;
  std::vector<Rational> quad_coeffs;

  // The residual viewed in all ambient variables.
  Poly embedded_residual() const;
  // sum_{i>c} d_i x_i^2 in the ambient variables.
  Poly quadratic_part() const;
};

// Requires f in m^2 (throws ClassificationError(NotInM2) otherwise) and k >= 2.
// Throws ClassificationError(Internal) if a pass fails to raise the order of
// the mixed terms.
SplitResult split(const Poly& f, int k);

int corank(const Poly& f);

}  // namespace realclass::splitting
