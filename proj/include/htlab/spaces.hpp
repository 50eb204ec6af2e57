/**
 * \file spaces.hpp
 * \brief Grid norms: L^p (quasi-)norms, Hardy norms of analytic
 *        polynomials, Lipschitz/Hoelder norms via finite differences,
 *        and the torus fractional integral.
 *
 * All norms use the normalized measure dx/2pi, realized as uniform-grid
 * averages.  For p >= 1 and band-limited inputs the rectangle rule
 * converges; for |f|^2 it is exact once M >= 2 deg + 1.
 */

#ifndef HTLAB_SPACES_HPP
#define HTLAB_SPACES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "htlab/trigpoly.hpp"

namespace htlab {

/**
 * Exponent bundle for the mapping estimates: input exponent q, output
 * exponent p, Lipschitz order alpha, and the bilinear output exponent r
 * with 1/r = 1/p + 1/q.
 */
struct NormSpec {
  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;

  /** Difference order used by the Lipschitz seminorm. */
  int diff_order() const { return static_cast<int>(std::floor(alpha)) + 1; }

  static double bilinear_r(double p, double q) { return 1.0 / (1.0 / p + 1.0 / q); }

  /** alpha = 1/q - 1/p with 0 < q < p, 1 < p. */
  static NormSpec hankel_pair(double q, double p) {
    if (!(q > 0.0 && q < p && p > 1.0))
      throw std::invalid_argument("NormSpec: need 0 < q < p, p > 1");
    return NormSpec{p, q, 1.0 / q - 1.0 / p};
  }
};

/** ((1/M) sum |s_j|^p)^{1/p}; max modulus for p = infinity. */
inline double lp_norm(const std::vector<cplx>& samples, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
  if (samples.empty()) return 0.0;
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& s : samples) m = std::max(m, std::abs(s));
    return m;
  }
  double acc = 0.0;
  for (const cplx& s : samples) acc += std::pow(std::abs(s), p);
  return std::pow(acc / static_cast<double>(samples.size()), 1.0 / p);
}

inline double lp_norm(const TrigPoly& f, double p, int M) {
  return lp_norm(eval_grid(f, M), p);
}

/**
 * Hardy (quasi-)norm of an analytic polynomial: its boundary L^p norm.
 * Rejects non-analytic input.
 */
inline double hardy_norm(const TrigPoly& f, double p, int M) {
  if (!f.is_analytic())
    throw std::invalid_argument("hardy_norm: input must be analytic");
  return lp_norm(f, p, M);
}

namespace detail {
inline long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace detail

/**
 * Lipschitz seminorm of order alpha on the grid:
 *   sup over x_j and steps h = 2pi k/M, 1 <= k <= M/4, of
 *   |Delta_h^m f(x_j)| / h^alpha,  m = floor(alpha) + 1,
 * with forward differences and periodic wraparound.  At integer alpha
 * this is the Zygmund-type seminorm.
 */
inline double lipschitz_seminorm(const TrigPoly& b, double alpha, int M) {
  if (!(alpha > 0.0)) throw std::invalid_argument("lipschitz_seminorm: alpha must be > 0");
  const int m = static_cast<int>(std::floor(alpha)) + 1;
  const std::vector<cplx> s = eval_grid(b, M);
  std::vector<double> w(m + 1);
  for (int l = 0; l <= m; ++l)
    w[l] = ((m - l) % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(detail::binom(m, l));
  double semi = 0.0;
  for (int k = 1; k <= M / 4; ++k) {
    const double h = two_pi * k / M;
    const double scale = std::pow(h, -alpha);
    for (int j = 0; j < M; ++j) {
      cplx d = 0.0;
      for (int l = 0; l <= m; ++l) d += w[l] * s[(j + static_cast<long>(l) * k) % M];
      semi = std::max(semi, std::abs(d) * scale);
    }
  }
  return semi;
}

/** sup-norm on the grid plus the order-alpha difference seminorm. */
inline double lipschitz_norm(const TrigPoly& b, double alpha, int M) {
  double sup = lp_norm(b, std::numeric_limits<double>::infinity(), M);
  return sup + lipschitz_seminorm(b, alpha, M);
}

/**
 * First-difference Hoelder quotient
 *   sup over grid pairs x != y of |b(x) - b(y)| / d(x, y)^alpha,
 * the measured constant in |b(u) - b(v)| <= L d(u, v)^alpha.
 */
inline double holder_quotient(const TrigPoly& b, double alpha, int M) {
  const std::vector<cplx> s = eval_grid(b, M);
  double best = 0.0;
  for (int k = 1; k < M; ++k) {
    const double d = two_pi * std::min(k, M - k) / M;
    const double scale = std::pow(d, -alpha);
    for (int j = 0; j < M; ++j)
      best = std::max(best, std::abs(s[(j + k) % M] - s[j]) * scale);
  }
  return best;
}

/**
 * Torus fractional integral against the Riesz potential d(x,y)^{alpha-1}:
 *   I_alpha f(x_j) = (1/2pi) sum_k d(x_j, t_k)^{alpha-1} f(t_k) (2pi/M)
 * over midpoint-offset nodes t_k = x_j + (k + 1/2) 2pi/M.  Grid samples
 * are read as a step function (sample i covers [x_i, x_{i+1})).
 */
inline std::vector<cplx> fractional_integral(const std::vector<cplx>& f, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("fractional_integral: alpha must lie in (0,1)");
  const int M = static_cast<int>(f.size());
  if (M < 1) throw std::invalid_argument("fractional_integral: empty sample vector");
  std::vector<double> w(M);
  for (int k = 0; k < M; ++k) {
    const double off = (k + 0.5) * two_pi / M;
    w[k] = std::pow(std::min(off, two_pi - off), alpha - 1.0);
  }
  std::vector<cplx> out(M, cplx(0.0));
  for (int j = 0; j < M; ++j) {
    cplx acc = 0.0;
    // t_k lies in cell j + k, whose step value is f[(j + k) mod M]
    for (int k = 0; k < M; ++k) acc += w[k] * f[(j + k) % M];
    out[j] = acc / static_cast<double>(M);
  }
  return out;
}

}  // namespace htlab

#endif  // HTLAB_SPACES_HPP
