/**
 * \file bht.hpp
 * \brief Periodic bilinear Hilbert transform and its subtracted form,
 *        each computed by two independent routes.
 *
 * Conventions (fixed across the library):
 *
 *   H(b,g)(x)  = p.v. (1/2pi) int_T b(x+t) g(2t) cot((x-t)/2) dt
 *              = -i sum_{k,m} b_k g_m sign(k+2m) e^{i(2k+2m)x},
 *
 *   Ht(b,g)(x) = (1/2pi) int_T (b(x+t) - b(2x)) g(2t) cot((x-t)/2) dt,
 *
 * and exactly H(b,g) = Ht(b,g) + b(2x) (Hg)(2x).  The quadrature routes
 * use midpoint-offset nodes t_k = x_j + (k+1/2) 2pi/M; the nodes come in
 * pairs symmetric about the singularity, so the rule is a symmetric p.v.
 * discretization and no limiting procedure is needed.
 */

#ifndef HTLAB_BHT_HPP
#define HTLAB_BHT_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "htlab/hankel.hpp"
#include "htlab/trigpoly.hpp"

namespace htlab {

/**
 * Multiplier route: -i sum b_k g_m sign(k+2m) e^{i(2k+2m)x}.
 * The output has even frequencies only, within [-4D, 4D] for degree-D
 * inputs.  Accepts arbitrary (not only analytic) b and g.
 */
inline TrigPoly bht_multiplier(const TrigPoly& b, const TrigPoly& g) {
  TrigPoly out;
  const cplx minus_i(0.0, -1.0);
  for (const auto& [k, bk] : b.support())
    for (const auto& [m, gm] : g.support()) {
      const int s = k + 2 * m;
      if (s > 0) out.add(2 * (k + m), minus_i * bk * gm);
      else if (s < 0) out.add(2 * (k + m), -minus_i * bk * gm);
    }
  return out;
}

namespace detail {

/**
 * cot((x_j - t_k)/2) at offset node k; depends on k only.  The table is
 * filled antisymmetrically (C[M-1-k] = -C[k] exactly), so constants
 * integrate to zero without roundoff.
 */
inline std::vector<double> pv_kernel_table(int M) {
  std::vector<double> C(static_cast<size_t>(M));
  for (int k = 0; k < M / 2; ++k) {
    C[k] = -1.0 / std::tan((k + 0.5) * pi / M);
    C[static_cast<size_t>(M) - 1 - k] = -C[k];
  }
  return C;
}

inline void require_even(int M, const char* who) {
  if (M < 2 || M % 2 != 0) throw std::invalid_argument(std::string(who) + ": M must be even");
}

}  // namespace detail

/**
 * p.v. quadrature of the unsubtracted integrand b(x+t) g(2t) cot((x-t)/2)
 * on midpoint-offset nodes; returns samples on the M-point grid.
 */
inline std::vector<cplx> pv_quadrature(const TrigPoly& b, const TrigPoly& g, int M) {
  detail::require_even(M, "pv_quadrature");
  const std::vector<double> C = detail::pv_kernel_table(M);
  // x_j + t_k lies on the half-shifted grid, 2 t_k on the integer grid
  const std::vector<cplx> bs = eval_shifted_grid(b, M);
  const std::vector<cplx> gs = eval_grid(g, M);
  std::vector<cplx> out(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) {
    cplx acc = 0.0;
    for (int k = 0; k < M; ++k)
      acc += bs[(2 * j + k) % M] * gs[(2 * j + 2 * k + 1) % M] * C[k];
    out[j] = acc / static_cast<double>(M);
  }
  return out;
}

/**
 * Quadrature for the subtracted transform Ht(b,g); the integrand is
 * bounded near t = x for Lipschitz b, no p.v. limit involved.
 */
inline std::vector<cplx> bht_tilde_quadrature(const TrigPoly& b, const TrigPoly& g, int M) {
  detail::require_even(M, "bht_tilde_quadrature");
  const std::vector<double> C = detail::pv_kernel_table(M);
  const std::vector<cplx> bs = eval_shifted_grid(b, M);
  const std::vector<cplx> bo = eval_grid(b, M);
  const std::vector<cplx> gs = eval_grid(g, M);
  std::vector<cplx> out(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) {
    const cplx b2 = bo[(2 * j) % M];
    cplx acc = 0.0;
    for (int k = 0; k < M; ++k)
      acc += (bs[(2 * j + k) % M] - b2) * gs[(2 * j + 2 * k + 1) % M] * C[k];
    out[j] = acc / static_cast<double>(M);
  }
  return out;
}

/**
 * Ht(b, g) for a step-function second argument (e.g. an atom profile):
 * g_cells[i] is the value on [x_i, x_{i+1}) of the coarse grid of size
 * g_cells.size(), which must divide M.  The node images 2 t_k are then
 * interior points of the coarse cells, so every cell is seen by the rule.
 */
inline std::vector<cplx> bht_tilde_quadrature(const TrigPoly& b,
                                              const std::vector<cplx>& g_cells, int M) {
  detail::require_even(M, "bht_tilde_quadrature");
  const int Ma = static_cast<int>(g_cells.size());
  if (Ma < 1 || M % Ma != 0)
    throw std::invalid_argument("bht_tilde_quadrature: cell count must divide M");
  const int c = M / Ma;
  const std::vector<double> C = detail::pv_kernel_table(M);
  const std::vector<cplx> bs = eval_shifted_grid(b, M);
  const std::vector<cplx> bo = eval_grid(b, M);
  std::vector<cplx> out(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) {
    const cplx b2 = bo[(2 * j) % M];
    cplx acc = 0.0;
    for (int k = 0; k < M; ++k)
      acc += (bs[(2 * j + k) % M] - b2) * g_cells[((2 * j + 2 * k + 1) % M) / c] * C[k];
    out[j] = acc / static_cast<double>(M);
  }
  return out;
}

/**
 * The exact difference H(b,g) - Ht(b,g) under the module conventions:
 * x -> b(2x) (Hg)(2x).
 */
inline TrigPoly correction_term(const TrigPoly& b, const TrigPoly& g) {
  return multiply(dilate2(b), dilate2(hilbert(g)));
}

/**
 * Reconstruction of the truncated Hankel operator from the bilinear
 * Hilbert transform.  For analytic b and f, with F(x) = f(e^{-ix}):
 *
 *   S_m = m-th coefficient (at frequency 2m, m >= 0) of i H(b,F)
 *       = sum_n a_n b_{m+n} sign(m-n),
 *   T_m = (H_b f)_m = sum_n a_n b_{m+n},
 *   D_m = a_m b_{2m},
 *
 * and (S_m + T_m + D_m)/2 = sum_{n <= m} a_n b_{m+n}, the m-th
 * coefficient of Pi_{1,0}(H_b) f.
 */
inline TrigPoly reconstruct_truncation(const TrigPoly& b, const TrigPoly& f) {
  if (!b.is_analytic() || !f.is_analytic())
    throw std::invalid_argument("reconstruct_truncation: inputs must be analytic");
  const TrigPoly F = to_conjugate_variable(f);
  const TrigPoly S = bht_multiplier(b, F) * cplx(0.0, 1.0);
  const TrigPoly T = hankel_apply(b, f);
  TrigPoly out;
  const int mmax = b.max_freq();
  for (int m = 0; m <= mmax; ++m) {
    const cplx sm = S.coeff(2 * m);
    const cplx tm = T.coeff(m);
    const cplx dm = f.coeff(m) * b.coeff(2 * m);
    out.add(m, 0.5 * (sm + tm + dm));
  }
  return out;
}

/** K(x) = x / tan(x/2) with x reduced to (-pi, pi]; K(0) = 2. */
inline double kernel_K(double x) {
  const double r = reduce_to_pi(x);
  if (r == 0.0) return 2.0;
  return r / std::tan(r / 2.0);
}

/** Grid convolution (K * a)(x_j) = (1/M) sum_i K(x_j - x_i) a_i. */
inline std::vector<cplx> kernel_K_convolve(const std::vector<cplx>& a) {
  const int M = static_cast<int>(a.size());
  if (M < 8) throw std::invalid_argument("kernel_K_convolve: need M >= 8");
  std::vector<double> K(static_cast<size_t>(M));
  for (int o = 0; o < M; ++o) K[o] = kernel_K(two_pi * o / M);
  std::vector<cplx> out(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) {
    cplx acc = 0.0;
    for (int i = 0; i < M; ++i) acc += K[(j - i + M) % M] * a[i];
    out[j] = acc / static_cast<double>(M);
  }
  return out;
}

inline std::vector<cplx> kernel_K_convolve(const TrigPoly& a, int M) {
  return kernel_K_convolve(eval_grid(a, M));
}

}  // namespace htlab

#endif  // HTLAB_BHT_HPP
