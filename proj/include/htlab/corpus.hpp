// Seeded corpora: random polynomials and the symbol families used by the
// studies (lacunary series in Lambda_alpha, smooth geometric symbols, and
// a rough control symbol whose ratios are expected to grow).

#ifndef HTLAB_CORPUS_HPP
#define HTLAB_CORPUS_HPP

#include <cmath>
#include <vector>

#include "htlab/rng.hpp"
#include "htlab/trigpoly.hpp"

namespace htlab {

/** Dense analytic polynomial of the given degree, coefficients in [-1,1]^2. */
inline TrigPoly random_analytic_poly(Rng& rng, int degree) {
  TrigPoly f;
  for (int n = 0; n <= degree; ++n) f.add(n, rng.box());
  return f;
}

/** Dense polynomial with frequencies in [-degree, degree]. */
inline TrigPoly random_trig_poly(Rng& rng, int degree) {
  TrigPoly f;
  for (int n = -degree; n <= degree; ++n) f.add(n, rng.box());
  return f;
}

/** Lacunary series sum_{j<=J} 2^{-j alpha} e^{i 2^j x}, a member of Lambda_alpha. */
inline TrigPoly lacunary_symbol(double alpha, int J) {
  TrigPoly b;
  for (int j = 0; j <= J; ++j) b.add(1 << j, std::pow(2.0, -alpha * j));
  return b;
}

/** Smooth symbol: finite geometric series sum_{k<=deg} rho^k z^k. */
inline TrigPoly geometric_symbol(double rho, int degree) {
  TrigPoly b;
  double c = 1.0;
  for (int k = 0; k <= degree; ++k, c *= rho) b.add(k, c);
  return b;
}

/** Rough control symbol: partial sum of sum_k k^{-1/2} e^{ikx}. */
inline TrigPoly rough_control_symbol(int degree) {
  TrigPoly b;
  for (int k = 1; k <= degree; ++k) b.add(k, std::pow(static_cast<double>(k), -0.5));
  return b;
}

}  // namespace htlab

#endif  // HTLAB_CORPUS_HPP
