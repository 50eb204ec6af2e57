/**
 * \file hankel.hpp
 * \brief Hankel operators, finite sections, truncation masks, and
 *        operator-norm estimators.
 *
 * For an analytic symbol b(z) = sum b_k z^k the Hankel operator acts on
 * analytic f(z) = sum a_n z^n by (H_b f)_m = sum_n a_n b_{m+n}; its
 * matrix (b_{m+n}) is constant along anti-diagonals.  The multilinear
 * version applies H_b to the product f_1 ... f_n and has an
 * (n+1)-dimensional matrix constant on the hyperplanes i_0+...+i_n = c.
 * A truncation mask (beta, gamma) keeps the entries with
 * beta . (i_1..i_n) + gamma <= i_0 (equality kept).
 */

#ifndef HTLAB_HANKEL_HPP
#define HTLAB_HANKEL_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "htlab/rng.hpp"
#include "htlab/trigpoly.hpp"

namespace htlab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/** (H_b f)_m = sum_n a_n b_{m+n}; exact finite sums. */
inline TrigPoly hankel_apply(const TrigPoly& b, const TrigPoly& f) {
  if (!b.is_analytic() || !f.is_analytic())
    throw std::invalid_argument("hankel_apply: symbol and argument must be analytic");
  TrigPoly out;
  for (const auto& [k, bk] : b.support())
    for (const auto& [n, an] : f.support())
      if (k - n >= 0) out.add(k - n, an * bk);
  return out;
}

/** The integral form H_b f = C(b fcheck); equals hankel_apply exactly. */
inline TrigPoly hankel_integral(const TrigPoly& b, const TrigPoly& f) {
  if (!b.is_analytic() || !f.is_analytic())
    throw std::invalid_argument("hankel_integral: symbol and argument must be analytic");
  return cauchy_projection(multiply(b, flip(f)));
}

/** H_b^{(n)}(f_1,...,f_n) = H_b(f_1 ... f_n). */
inline TrigPoly multilinear_apply(const TrigPoly& b, const std::vector<TrigPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("multilinear_apply: empty argument list");
  TrigPoly prod = TrigPoly::constant(1.0);
  for (const TrigPoly& f : fs) {
    if (!f.is_analytic())
      throw std::invalid_argument("multilinear_apply: arguments must be analytic");
    prod = multiply(prod, f);
  }
  return hankel_apply(b, prod);
}

/** Entrywise mask keeping (i_0, ivec) iff beta . ivec + gamma <= i_0. */
struct TruncationMask {
  std::vector<double> beta;
  double gamma = 0.0;

  TruncationMask(std::vector<double> b, double g) : beta(std::move(b)), gamma(g) {
    if (beta.empty()) throw std::invalid_argument("TruncationMask: arity must be >= 1");
  }

  /** The studied case beta = (1,...,1), gamma = 0. */
  static TruncationMask pi_1_0(int arity) {
    return TruncationMask(std::vector<double>(static_cast<size_t>(arity), 1.0), 0.0);
  }

  int arity() const { return static_cast<int>(beta.size()); }

  bool keep(long i0, const std::vector<long>& idx) const {
    double dot = gamma;
    for (size_t l = 0; l < beta.size(); ++l) dot += beta[l] * static_cast<double>(idx[l]);
    return dot <= static_cast<double>(i0);
  }

  bool all_ones() const {
    for (double bl : beta)
      if (bl != 1.0) return false;
    return true;
  }

  /** True when no entry of an N-section is removed. */
  bool keeps_all(int N) const {
    double worst = gamma;
    for (double bl : beta) worst += std::max(bl * (N - 1.0), 0.0);
    return worst <= 0.0;
  }
};

/**
 * Masked multilinear action: the i_0-th output coefficient is the sum of
 * b_{i_0+i_1+...+i_n} prod_j a^j_{i_j} over kept index tuples.
 */
inline TrigPoly truncate_apply(const TruncationMask& mask, const TrigPoly& b,
                               const std::vector<TrigPoly>& fs) {
  if (static_cast<int>(fs.size()) != mask.arity())
    throw std::invalid_argument("truncate_apply: mask arity must match argument count");
  if (!b.is_analytic())
    throw std::invalid_argument("truncate_apply: symbol must be analytic");
  const int n = static_cast<int>(fs.size());
  std::vector<std::vector<std::pair<long, cplx>>> terms(n);
  for (int j = 0; j < n; ++j) {
    if (!fs[j].is_analytic())
      throw std::invalid_argument("truncate_apply: arguments must be analytic");
    if (fs[j].empty()) return TrigPoly{};
    for (const auto& [fr, c] : fs[j].support()) terms[j].push_back({fr, c});
  }
  const long out_max = b.max_freq();
  TrigPoly out;
  std::vector<size_t> od(n, 0);  // odometer over the argument supports
  std::vector<long> idx(n);
  while (true) {
    long s = 0;
    cplx w = 1.0;
    double dot = mask.gamma;
    for (int j = 0; j < n; ++j) {
      idx[j] = terms[j][od[j]].first;
      s += idx[j];
      w *= terms[j][od[j]].second;
      dot += mask.beta[j] * static_cast<double>(idx[j]);
    }
    const long m0 = std::max(0L, static_cast<long>(std::ceil(dot)));
    for (long m = m0; m + s <= out_max; ++m) {
      cplx bc = b.coeff(static_cast<int>(m + s));
      if (bc != cplx(0.0)) out.add(static_cast<int>(m), bc * w);
    }
    int j = n - 1;
    while (j >= 0 && ++od[j] == terms[j].size()) od[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

/** N x N finite section with entry(m, n) = b_{m+n}. */
class HankelSection {
 public:
  HankelSection(int N, std::vector<cplx> symbol) : N_(N), sym_(std::move(symbol)) {
    if (N < 1) throw std::invalid_argument("HankelSection: N must be >= 1");
    sym_.resize(2 * static_cast<size_t>(N) - 1, cplx(0.0));
  }

  int size() const { return N_; }
  cplx entry(int m, int n) const { return sym_[static_cast<size_t>(m) + n]; }
  const std::vector<cplx>& symbol() const { return sym_; }

  Matrix to_matrix() const {
    Matrix A(N_, N_);
    for (int m = 0; m < N_; ++m)
      for (int n = 0; n < N_; ++n) A(m, n) = entry(m, n);
    return A;
  }

  /** Dense matrix with the masked entries zeroed (arity-1 mask). */
  Matrix to_matrix(const TruncationMask& mask) const {
    if (mask.arity() != 1)
      throw std::invalid_argument("HankelSection: mask arity must be 1");
    Matrix A = Matrix::Zero(N_, N_);
    std::vector<long> idx(1);
    for (int m = 0; m < N_; ++m)
      for (int n = 0; n < N_; ++n) {
        idx[0] = n;
        if (mask.keep(m, idx)) A(m, n) = entry(m, n);
      }
    return A;
  }

 private:
  int N_;
  std::vector<cplx> sym_;
};

/** (n+1)-dimensional finite section; entries constant on index-sum hyperplanes. */
class MultilinearHankelSection {
 public:
  MultilinearHankelSection(int arity, int N, std::vector<cplx> symbol)
      : n_(arity), N_(N), sym_(std::move(symbol)) {
    if (arity < 1) throw std::invalid_argument("MultilinearHankelSection: arity must be >= 1");
    if (N < 1) throw std::invalid_argument("MultilinearHankelSection: N must be >= 1");
    sym_.resize(static_cast<size_t>(n_ + 1) * (N_ - 1) + 1, cplx(0.0));
  }

  int arity() const { return n_; }
  int size() const { return N_; }
  const std::vector<cplx>& symbol() const { return sym_; }

  cplx entry(long i0, const std::vector<long>& idx) const {
    long s = i0;
    for (long i : idx) s += i;
    return sym_[static_cast<size_t>(s)];
  }

  /**
   * Action on n coefficient vectors of length N; m-th output coordinate
   * sums b_{m+i_1+...+i_n} a^1_{i_1} ... a^n_{i_n} over kept tuples.
   */
  Vector apply(const std::vector<Vector>& args,
               const std::optional<TruncationMask>& mask = std::nullopt) const {
    check_args(args);
    Vector out = Vector::Zero(N_);
    std::vector<long> idx(n_, 0);
    while (true) {
      cplx w = 1.0;
      long s = 0;
      for (int j = 0; j < n_; ++j) {
        w *= args[j](idx[j]);
        s += idx[j];
      }
      if (w != cplx(0.0)) {
        long m0 = 0;
        if (mask) {
          double dot = mask->gamma;
          for (int j = 0; j < n_; ++j) dot += mask->beta[j] * static_cast<double>(idx[j]);
          m0 = std::max(0L, static_cast<long>(std::ceil(dot)));
        }
        for (long m = m0; m < N_; ++m) out(m) += sym_[static_cast<size_t>(m + s)] * w;
      }
      int j = n_ - 1;
      while (j >= 0 && ++idx[j] == N_) idx[j--] = 0;
      if (j < 0) break;
    }
    return out;
  }

  /**
   * Matrix of the linear map obtained by freezing every argument except
   * slot `free`; row m, column i.
   */
  Matrix frozen_matrix(const std::vector<Vector>& args, int free,
                       const std::optional<TruncationMask>& mask = std::nullopt) const {
    check_args(args);
    if (free < 0 || free >= n_)
      throw std::invalid_argument("frozen_matrix: free slot out of range");
    const bool vacuous = mask && mask->keeps_all(N_);
    if (!mask || vacuous || mask->all_ones()) {
      // collapse the frozen arguments to their coefficient convolution g
      std::vector<cplx> g{cplx(1.0)};
      for (int j = 0; j < n_; ++j) {
        if (j == free) continue;
        std::vector<cplx> next(g.size() + static_cast<size_t>(N_) - 1, cplx(0.0));
        for (size_t s = 0; s < g.size(); ++s)
          for (int i = 0; i < N_; ++i) next[s + i] += g[s] * args[j](i);
        g.swap(next);
      }
      Matrix A = Matrix::Zero(N_, N_);
      const bool masked = mask && !vacuous;
      for (int m = 0; m < N_; ++m)
        for (int i = 0; i < N_; ++i) {
          long smax = static_cast<long>(g.size()) - 1;
          if (masked)
            smax = std::min(smax, static_cast<long>(std::floor(m - i - mask->gamma)));
          cplx acc = 0.0;
          for (long s = 0; s <= smax; ++s) acc += g[s] * sym_[static_cast<size_t>(m + i + s)];
          A(m, i) = acc;
        }
      return A;
    }
    // general mask: enumerate the frozen index tuples
    Matrix A = Matrix::Zero(N_, N_);
    std::vector<long> idx(n_ - 1, 0);
    while (true) {
      cplx w = 1.0;
      long s = 0;
      double dot = mask->gamma;
      int slot = 0;
      for (int j = 0; j < n_; ++j) {
        if (j == free) continue;
        w *= args[j](idx[slot]);
        s += idx[slot];
        dot += mask->beta[j] * static_cast<double>(idx[slot]);
        ++slot;
      }
      if (w != cplx(0.0)) {
        for (int i = 0; i < N_; ++i) {
          const long m0 = std::max(
              0L, static_cast<long>(std::ceil(dot + mask->beta[free] * i)));
          for (long m = m0; m < N_; ++m)
            A(m, i) += sym_[static_cast<size_t>(m + i + s)] * w;
        }
      }
      int j = n_ - 2;
      while (j >= 0 && ++idx[j] == N_) idx[j--] = 0;
      if (j < 0) break;
    }
    return A;
  }

 private:
  void check_args(const std::vector<Vector>& args) const {
    if (static_cast<int>(args.size()) != n_)
      throw std::invalid_argument("MultilinearHankelSection: wrong argument count");
    for (const Vector& a : args)
      if (a.size() != N_)
        throw std::invalid_argument("MultilinearHankelSection: argument length must equal N");
  }

  int n_, N_;
  std::vector<cplx> sym_;
};

/** Slice the analytic symbol's coefficients into an N x N section. */
inline HankelSection section(const TrigPoly& b, int N) {
  if (!b.is_analytic()) throw std::invalid_argument("section: symbol must be analytic");
  std::vector<cplx> sym(2 * static_cast<size_t>(N) - 1, cplx(0.0));
  for (size_t k = 0; k < sym.size(); ++k) sym[k] = b.coeff(static_cast<int>(k));
  return HankelSection(N, std::move(sym));
}

inline MultilinearHankelSection msection(const TrigPoly& b, int arity, int N) {
  if (!b.is_analytic()) throw std::invalid_argument("msection: symbol must be analytic");
  std::vector<cplx> sym(static_cast<size_t>(arity + 1) * (N - 1) + 1, cplx(0.0));
  for (size_t k = 0; k < sym.size(); ++k) sym[k] = b.coeff(static_cast<int>(k));
  return MultilinearHankelSection(arity, N, std::move(sym));
}

/** Largest singular value by full SVD. */
inline double svd_norm(const Matrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(A);
  return svd.singularValues()(0);
}

struct PowerIterOptions {
  int restarts = 10;
  double rel_tol = 1e-9;       // certified relative error on sigma_max^2
  long max_iters = 200000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

namespace detail {

/**
 * Power iteration on A^H A from a given start vector.  Runs until the
 * residual ||A^H A v - lambda v|| certifies that some eigenvalue of
 * A^H A lies within rel_tol * lambda of the Rayleigh quotient lambda.
 * Returns the achieved value ||A v|| (a true lower bound for sigma_max)
 * and leaves the iterate in v.
 */
inline double power_from(const Matrix& A, Vector& v, double rel_tol, long max_iters) {
  double nv = v.norm();
  if (nv == 0.0) return 0.0;
  v /= nv;
  double lambda = 0.0;
  for (long it = 0; it < max_iters; ++it) {
    Vector av = A * v;
    Vector w = A.adjoint() * av;
    lambda = av.squaredNorm();  // = v^H A^H A v for unit v
    const double resid = (w - lambda * v).norm();
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    if (resid <= rel_tol * std::max(lambda, 1e-300)) break;
  }
  return (A * v).norm();
}

}  // namespace detail

/** Largest singular value by seeded power iteration on A^H A. */
inline double power_norm(const Matrix& A, const PowerIterOptions& opt = {}) {
  if (A.size() == 0) return 0.0;
  Rng rng(opt.seed);
  double best = 0.0;
  for (int r = 0; r < opt.restarts; ++r) {
    Vector v(A.cols());
    for (int i = 0; i < A.cols(); ++i) v(i) = rng.box();
    best = std::max(best, detail::power_from(A, v, opt.rel_tol, opt.max_iters));
  }
  return best;
}

/**
 * Operator norm on l^2: largest singular value, computed by both full
 * SVD and power iteration.  The two routes must agree to 1e-8 relative;
 * disagreement indicates a numerical failure and throws.
 */
inline double operator_norm_l2(const Matrix& A) {
  const double s = svd_norm(A);
  const double p = power_norm(A);
  if (std::abs(s - p) > 1e-8 * std::max({s, p, 1e-300}))
    throw std::runtime_error("operator_norm_l2: SVD and power iteration disagree");
  return s;
}

inline double operator_norm_l2(const HankelSection& sec) {
  return operator_norm_l2(sec.to_matrix());
}

inline double operator_norm_l2(const HankelSection& sec, const TruncationMask& mask) {
  return operator_norm_l2(sec.to_matrix(mask));
}

/**
 * Certified lower bound on sup ||T(f_1,...,f_n)||_2 over unit l^2 inputs
 * supported in [0, N), by alternating maximization: freeze all arguments
 * but one, replace the free argument by the top right-singular vector of
 * the frozen (linear) map, sweep until the relative gain drops below
 * 1e-9, and keep the best over `rounds` seeded random restarts.  The
 * returned value is always achieved by concrete unit vectors.
 */
inline double multilinear_norm_lower(const TrigPoly& b, int arity, int N, int rounds,
                                     std::uint64_t seed,
                                     const std::optional<TruncationMask>& mask = std::nullopt) {
  if (rounds < 1) throw std::invalid_argument("multilinear_norm_lower: rounds must be >= 1");
  if (mask && mask->arity() != arity)
    throw std::invalid_argument("multilinear_norm_lower: mask arity mismatch");
  const MultilinearHankelSection sec = msection(b, arity, N);
  bool zero = true;
  for (const cplx& c : sec.symbol())
    if (c != cplx(0.0)) zero = false;
  if (zero) return 0.0;

  Rng rng(seed);
  double best = 0.0;
  for (int round = 0; round < rounds; ++round) {
    std::vector<Vector> args(static_cast<size_t>(arity));
    for (Vector& a : args) {
      a.resize(N);
      for (int i = 0; i < N; ++i) a(i) = rng.box();
      a /= a.norm();
    }
    double value = sec.apply(args, mask).norm();
    for (int sweep = 0; sweep < 200; ++sweep) {
      double prev = value;
      for (int j = 0; j < arity; ++j) {
        const Matrix A = sec.frozen_matrix(args, j, mask);
        value = detail::power_from(A, args[j], 1e-11, 200000);
      }
      if (value - prev <= 1e-9 * std::max(value, 1e-300)) break;
    }
    best = std::max(best, sec.apply(args, mask).norm());
  }
  return best;
}

/**
 * max over the corpus of ||H_b f||_{H^p} / ||f||_{H^q}; members with
 * ||f||_{H^q} below 1e-14 are skipped.
 */
inline double norm_ratio_qp(const TrigPoly& b, const std::vector<TrigPoly>& corpus,
                            double q, double p, int M) {
  if (corpus.empty()) throw std::invalid_argument("norm_ratio_qp: empty corpus");
  NormSpec::hankel_pair(q, p);  // validates 0 < q < p, p > 1
  double best = 0.0;
  for (const TrigPoly& f : corpus) {
    const double nf = hardy_norm(f, q, M);
    if (nf < 1e-14) continue;
    best = std::max(best, hardy_norm(hankel_apply(b, f), p, M) / nf);
  }
  return best;
}

/** Dense row-major CSV export; each cell is re<sign>im i. */
inline void write_csv(const Matrix& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  char buf[96];
  for (Eigen::Index m = 0; m < A.rows(); ++m) {
    for (Eigen::Index n = 0; n < A.cols(); ++n) {
      const cplx v = A(m, n);
      std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v.real(), v.imag());
      out << (n ? "," : "") << buf;
    }
    out << "\n";
  }
}

inline void write_csv(const HankelSection& sec, const std::string& path) {
  write_csv(sec.to_matrix(), path);
}

}  // namespace htlab

#endif  // HTLAB_HANKEL_HPP
