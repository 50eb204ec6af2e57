/**
 * \file atoms.hpp
 * \brief H^q(T) atoms as grid-backed step profiles.
 *
 * An interval atom for 0 < q <= 1 is supported in I = (x_I - r, x_I + r)
 * with r < pi/4, has sup norm exactly |I|^{-1/q} (|I| = 2r), and carries
 * vanishing moments int a(t) (t - x_I)^j dt = 0 for j = 0..m with
 * m = [1/q] - 1 (integer part).  Profiles are random step functions on a
 * grid with the moments projected out exactly in grid arithmetic, which
 * is why step profiles are used instead of band-limited ones.
 */

#ifndef HTLAB_ATOMS_HPP
#define HTLAB_ATOMS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "htlab/rng.hpp"
#include "htlab/trigpoly.hpp"

namespace htlab {

struct Atom {
  enum class Kind { constant, interval };

  Kind kind = Kind::interval;
  double q = 1.0;
  double center = 0.0;
  double radius = 0.0;
  int moment_order = 0;
  std::vector<double> samples;  // one value per grid cell [x_i, x_{i+1})

  int grid_size() const { return static_cast<int>(samples.size()); }

  std::vector<cplx> cells() const {
    return std::vector<cplx>(samples.begin(), samples.end());
  }
};

inline int atom_moment_order(double q) {
  return static_cast<int>(std::floor(1.0 / q)) - 1;
}

/** The constant atom: a == (2pi)^{-1/q}, no support or moment condition. */
inline Atom make_constant_atom(double q, int grid_size = 2048) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("make_constant_atom: need 0 < q <= 1");
  Atom a;
  a.kind = Atom::Kind::constant;
  a.q = q;
  a.radius = pi;
  a.moment_order = -1;
  a.samples.assign(static_cast<size_t>(grid_size), std::pow(two_pi, -1.0 / q));
  return a;
}

/**
 * Seeded random interval atom.  Draws a random step profile on the grid
 * cells inside I, orthogonalizes it against the monomials (t - x_I)^j,
 * j <= m, in the grid inner product, and rescales to sup norm exactly
 * |I|^{-1/q}.  Degenerate draws retry with the next seed (at most 16).
 */
inline Atom make_atom(double q, double center, double radius, std::uint64_t seed,
                      int grid_size = 2048) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("make_atom: need 0 < q <= 1");
  if (!(radius > 0.0 && radius < pi / 4))
    throw std::invalid_argument("make_atom: need 0 < radius < pi/4");
  const int M = grid_size;
  const int m = atom_moment_order(q);

  std::vector<int> idx;
  std::vector<double> off;  // reduced offsets x_i - center, |off| < radius
  for (int i = 0; i < M; ++i) {
    const double d = reduce_to_pi(two_pi * i / M - center);
    if (std::fabs(d) < radius) {
      idx.push_back(i);
      off.push_back(d);
    }
  }
  const int cells = static_cast<int>(idx.size());
  if (cells < m + 2)
    throw std::invalid_argument("make_atom: grid too coarse to resolve the interval");

  // orthonormal basis of the scaled monomials ((t - x_I)/radius)^j on the cells
  std::vector<std::vector<double>> basis;
  for (int j = 0; j <= m; ++j) {
    std::vector<double> w(static_cast<size_t>(cells));
    for (int i = 0; i < cells; ++i) w[i] = std::pow(off[i] / radius, j);
    for (const auto& e : basis) {
      double dot = 0.0;
      for (int i = 0; i < cells; ++i) dot += w[i] * e[i];
      for (int i = 0; i < cells; ++i) w[i] -= dot * e[i];
    }
    double nrm = 0.0;
    for (double v : w) nrm += v * v;
    nrm = std::sqrt(nrm);
    if (nrm < 1e-12)
      throw std::invalid_argument("make_atom: moment basis degenerate on this grid");
    for (double& v : w) v /= nrm;
    basis.push_back(std::move(w));
  }

  for (int attempt = 0; attempt < 16; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<double> prof(static_cast<size_t>(cells));
    for (double& v : prof) v = rng.uniform(-1.0, 1.0);
    for (const auto& e : basis) {
      double dot = 0.0;
      for (int i = 0; i < cells; ++i) dot += prof[i] * e[i];
      for (int i = 0; i < cells; ++i) prof[i] -= dot * e[i];
    }
    double sup = 0.0;
    for (double v : prof) sup = std::max(sup, std::fabs(v));
    if (sup <= 1e-8) continue;  // profile killed by the projection

    const double target = std::pow(2.0 * radius, -1.0 / q);
    Atom a;
    a.kind = Atom::Kind::interval;
    a.q = q;
    a.center = center;
    a.radius = radius;
    a.moment_order = m;
    a.samples.assign(static_cast<size_t>(M), 0.0);
    for (int i = 0; i < cells; ++i) a.samples[static_cast<size_t>(idx[i])] = prof[i] / sup * target;
    return a;
  }
  throw std::runtime_error("make_atom: no usable profile after 16 seeds");
}

struct AtomCheck {
  double support_leak = 0.0;     // max |a| at samples outside I
  double sup_excess = 0.0;       // max |a| minus |I|^{-1/q}
  double moment_residual = 0.0;  // max_j |int a (t-x_I)^j dt|, plain dt
  bool pass = false;
};

/** Recompute the defining atom bounds from the samples. */
inline AtomCheck check_atom(const Atom& a, double tol = 1e-10) {
  AtomCheck r;
  const int M = a.grid_size();
  const double h = two_pi / M;
  double sup = 0.0;
  for (double v : a.samples) sup = std::max(sup, std::fabs(v));
  if (a.kind == Atom::Kind::constant) {
    r.sup_excess = sup - std::pow(two_pi, -1.0 / a.q);
    r.pass = r.sup_excess <= tol;
    return r;
  }
  for (int i = 0; i < M; ++i) {
    const double d = reduce_to_pi(h * i - a.center);
    if (std::fabs(d) >= a.radius)
      r.support_leak = std::max(r.support_leak, std::fabs(a.samples[static_cast<size_t>(i)]));
  }
  r.sup_excess = sup - std::pow(2.0 * a.radius, -1.0 / a.q);
  for (int j = 0; j <= a.moment_order; ++j) {
    double mom = 0.0;
    for (int i = 0; i < M; ++i) {
      const double d = reduce_to_pi(h * i - a.center);
      mom += a.samples[static_cast<size_t>(i)] * std::pow(d, j);
    }
    r.moment_residual = std::max(r.moment_residual, std::fabs(mom * h));
  }
  r.pass = r.support_leak <= tol && r.sup_excess <= tol && r.moment_residual <= tol;
  return r;
}

/**
 * One atom per (scale, seed) pair, centers drawn from the per-pair seed.
 * Deterministic given the seed list.
 */
inline std::vector<Atom> dyadic_atom_family(double q, const std::vector<double>& scales,
                                            const std::vector<std::uint64_t>& seeds,
                                            int grid_size = 2048) {
  std::vector<Atom> out;
  for (size_t si = 0; si < scales.size(); ++si)
    for (std::uint64_t seed : seeds) {
      const std::uint64_t mixed = seed * 1000003ULL + static_cast<std::uint64_t>(si);
      Rng rng(mixed);
      const double center = rng.uniform(0.0, two_pi);
      out.push_back(make_atom(q, center, scales[si], mixed ^ 0x9e3779b97f4a7c15ULL, grid_size));
    }
  return out;
}

}  // namespace htlab

#endif  // HTLAB_ATOMS_HPP
