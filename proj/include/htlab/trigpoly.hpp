/**
 * \file trigpoly.hpp
 * \brief Trigonometric polynomials on the torus T = R/2piZ.
 *
 * A TrigPoly is a finitely supported map from integer frequencies to
 * complex amplitudes, representing x -> sum_n c_n e^{inx}.  All Fourier
 * conventions of the library are fixed here:
 *
 *   c_n = (1/2pi) int_T f(x) e^{-inx} dx,
 *
 * and every torus integral carries the 1/2pi normalization.
 */

#ifndef HTLAB_TRIGPOLY_HPP
#define HTLAB_TRIGPOLY_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace htlab {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;
inline constexpr double pi = 3.1415926535897932384626433832795;

/** Distance on the torus: min over representatives of |a - b| mod 2pi. */
inline double torus_distance(double a, double b) {
  double r = std::fmod(std::fabs(a - b), two_pi);
  return std::min(r, two_pi - r);
}

/** Reduce x to the representative in (-pi, pi]. */
inline double reduce_to_pi(double x) {
  double r = std::fmod(x, two_pi);
  if (r > pi) r -= two_pi;
  if (r <= -pi) r += two_pi;
  return r;
}

/** Uniform grid x_j = 2pi j / M, j = 0..M-1. */
struct Grid {
  int size;
  explicit Grid(int m) : size(m) {
    if (m < 1) throw std::invalid_argument("Grid: size must be >= 1");
  }
  double point(int j) const { return two_pi * j / size; }
};

/**
 * Finitely supported Fourier series x -> sum c_n e^{inx}.
 *
 * Coefficients are held sparsely in an ordered map; exact zeros are
 * pruned, so equality can be tested coefficient-wise over the union of
 * supports.  Values are immutable in spirit: every operation returns a
 * new polynomial.
 */
class TrigPoly {
 public:
  TrigPoly() = default;

  TrigPoly(std::initializer_list<std::pair<int, cplx>> terms) {
    for (const auto& [n, c] : terms) add(n, c);
  }

  /** The monomial c e^{inx}. */
  static TrigPoly monomial(int n, cplx c = 1.0) {
    TrigPoly f;
    f.add(n, c);
    return f;
  }

  static TrigPoly constant(cplx c) { return monomial(0, c); }

  /** Coefficient at frequency n (0 when absent). */
  cplx coeff(int n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? cplx(0.0) : it->second;
  }

  /** Accumulate c into the coefficient at frequency n. */
  void add(int n, cplx c) {
    auto it = coeffs_.find(n);
    if (it == coeffs_.end()) {
      if (c != cplx(0.0)) coeffs_.emplace(n, c);
    } else {
      it->second += c;
      if (it->second == cplx(0.0)) coeffs_.erase(it);
    }
  }

  const std::map<int, cplx>& support() const { return coeffs_; }

  bool empty() const { return coeffs_.empty(); }

  int min_freq() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
  int max_freq() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  /** max |n| over the support (0 for the zero polynomial). */
  int degree() const {
    if (coeffs_.empty()) return 0;
    return std::max(std::abs(min_freq()), std::abs(max_freq()));
  }

  /** Support contained in the nonnegative frequencies. */
  bool is_analytic() const { return coeffs_.empty() || min_freq() >= 0; }

  /** Point evaluation sum c_n e^{inx}. */
  cplx operator()(double x) const {
    cplx acc = 0.0;
    for (const auto& [n, c] : coeffs_)
      acc += c * std::polar(1.0, std::fmod(static_cast<double>(n) * x, two_pi));
    return acc;
  }

  TrigPoly& operator+=(const TrigPoly& g) {
    for (const auto& [n, c] : g.coeffs_) add(n, c);
    return *this;
  }
  TrigPoly& operator-=(const TrigPoly& g) {
    for (const auto& [n, c] : g.coeffs_) add(n, -c);
    return *this;
  }
  TrigPoly& operator*=(cplx s) {
    if (s == cplx(0.0)) {
      coeffs_.clear();
    } else {
      for (auto& [n, c] : coeffs_) c *= s;
    }
    return *this;
  }

  friend TrigPoly operator+(TrigPoly f, const TrigPoly& g) { return f += g; }
  friend TrigPoly operator-(TrigPoly f, const TrigPoly& g) { return f -= g; }
  friend TrigPoly operator*(TrigPoly f, cplx s) { return f *= s; }
  friend TrigPoly operator*(cplx s, TrigPoly f) { return f *= s; }

 private:
  std::map<int, cplx> coeffs_;
};

/** exp(2pi i r / den) with the phase reduced exactly in integers. */
inline cplx unit_root(std::int64_t r, std::int64_t den) {
  r %= den;
  if (r < 0) r += den;
  return std::polar(1.0, two_pi * static_cast<double>(r) / static_cast<double>(den));
}

/**
 * Samples of f on the uniform grid, sample j = sum c_n e^{in 2pi j/M}.
 * Phases are reduced in integer arithmetic, so grid values are accurate
 * to roundoff regardless of M.
 */
inline std::vector<cplx> eval_grid(const TrigPoly& f, int M) {
  if (M < 1) throw std::invalid_argument("eval_grid: M must be >= 1");
  std::vector<cplx> out(M, cplx(0.0));
  for (const auto& [n, c] : f.support()) {
    std::int64_t nn = n;
    for (int j = 0; j < M; ++j) out[j] += c * unit_root(nn * j, M);
  }
  return out;
}

/** Samples of f on the half-shifted grid x = (j + 1/2) 2pi/M. */
inline std::vector<cplx> eval_shifted_grid(const TrigPoly& f, int M) {
  if (M < 1) throw std::invalid_argument("eval_shifted_grid: M must be >= 1");
  std::vector<cplx> out(M, cplx(0.0));
  for (const auto& [n, c] : f.support()) {
    std::int64_t nn = n;
    for (int j = 0; j < M; ++j) out[j] += c * unit_root(nn * (2 * j + 1), 2 * M);
  }
  return out;
}

/**
 * The unique polynomial supported in [-band, band] with the given grid
 * samples.  Inverse of eval_grid whenever M >= 2 band + 1.
 */
inline TrigPoly from_grid(const std::vector<cplx>& samples, int band) {
  const int M = static_cast<int>(samples.size());
  if (band < 0) throw std::invalid_argument("from_grid: band must be >= 0");
  if (M < 2 * band + 1)
    throw std::invalid_argument("from_grid: band too large for sample count");
  TrigPoly f;
  for (int n = -band; n <= band; ++n) {
    cplx c = 0.0;
    for (int j = 0; j < M; ++j)
      c += samples[j] * unit_root(-static_cast<std::int64_t>(n) * j, M);
    f.add(n, c / static_cast<double>(M));
  }
  return f;
}

/** Coefficient convolution (pointwise product of the functions). */
inline TrigPoly multiply(const TrigPoly& f, const TrigPoly& g) {
  TrigPoly out;
  for (const auto& [n, a] : f.support())
    for (const auto& [m, b] : g.support()) out.add(n + m, a * b);
  return out;
}

/** Index negation c_n -> c_{-n}; realizes f(conj zeta) on |zeta| = 1. */
inline TrigPoly flip(const TrigPoly& f) {
  TrigPoly out;
  for (const auto& [n, c] : f.support()) out.add(-n, c);
  return out;
}

/** Cauchy projection: keep exactly the frequencies n >= 0. */
inline TrigPoly cauchy_projection(const TrigPoly& f) {
  TrigPoly out;
  for (const auto& [n, c] : f.support())
    if (n >= 0) out.add(n, c);
  return out;
}

/**
 * Conjugate-function multiplier c_n -> -i sign(n) c_n, sign(0) = 0.
 * Equals p.v. (1/2pi) int f(t) cot((x-t)/2) dt.
 */
inline TrigPoly hilbert(const TrigPoly& f) {
  TrigPoly out;
  const cplx minus_i(0.0, -1.0);
  for (const auto& [n, c] : f.support()) {
    if (n > 0) out.add(n, minus_i * c);
    else if (n < 0) out.add(n, -minus_i * c);
  }
  return out;
}

/** Dilation t -> f(2t): coefficient at n moves to 2n. */
inline TrigPoly dilate2(const TrigPoly& f) {
  TrigPoly out;
  for (const auto& [n, c] : f.support()) out.add(2 * n, c);
  return out;
}

/**
 * For analytic f(z) = sum a_n z^n, the torus function F(x) = f(e^{-ix}),
 * i.e. coefficient at n moves to -n.  Rejects non-analytic input.
 */
inline TrigPoly to_conjugate_variable(const TrigPoly& f) {
  if (!f.is_analytic())
    throw std::invalid_argument("to_conjugate_variable: input must be analytic");
  return flip(f);
}

/** Largest coefficient gap over the union of supports. */
inline double max_coeff_diff(const TrigPoly& f, const TrigPoly& g) {
  double worst = 0.0;
  for (const auto& [n, c] : f.support())
    worst = std::max(worst, std::abs(c - g.coeff(n)));
  for (const auto& [n, c] : g.support())
    worst = std::max(worst, std::abs(f.coeff(n) - c));
  return worst;
}

/** Coefficient-wise equality up to an absolute tolerance. */
inline bool approx_equal(const TrigPoly& f, const TrigPoly& g, double tol) {
  return max_coeff_diff(f, g) <= tol;
}

}  // namespace htlab

#endif  // HTLAB_TRIGPOLY_HPP
