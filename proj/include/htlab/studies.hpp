/**
 * \file studies.hpp
 * \brief The named experiment runners.
 *
 * Every study is a pure function of its configuration: corpora are drawn
 * from an RNG seeded by (config seed, scenario name), aggregation is
 * order-independent, and no clock or environment state enters a report.
 */

#ifndef HTLAB_STUDIES_HPP
#define HTLAB_STUDIES_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "htlab/atoms.hpp"
#include "htlab/bht.hpp"
#include "htlab/config.hpp"
#include "htlab/corpus.hpp"
#include "htlab/hankel.hpp"
#include "htlab/report.hpp"
#include "htlab/spaces.hpp"
#include "htlab/trigpoly.hpp"

namespace htlab {

namespace detail {

inline std::uint64_t scenario_seed(std::uint64_t seed, const std::string& scenario) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the scenario name
  for (char c : scenario) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

inline double max_sample_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/** Record a residual check: max-residual row, pass row, witness on failure. */
struct CheckRecorder {
  Report& rep;
  std::string scenario;

  void record(const std::string& name, double residual, double tol,
              const std::string& witness_params) {
    rep.tolerances[name + "_tol"] = tol;
    rep.add(scenario, "", name + "_max_residual", residual);
    const bool ok = residual <= tol;
    rep.add(scenario, "", name + "_pass", ok ? 1.0 : 0.0);
    if (!ok) rep.add(scenario, witness_params, name + "_witness", residual);
  }
};

}  // namespace detail

/**
 * Exact-identity suite: the two Hankel definitions, the multilinear /
 * linear Pi_{1,0} correspondence, the reconstruction of Pi_{1,0} from the
 * bilinear Hilbert transform, the splitting H = Ht + correction on a
 * grid, and the doubled-frequency identity C(b(2.)F(2.)) = H_b f (z^2).
 */
inline Report run_identity_suite(const ExperimentConfig& cfg) {
  Report rep;
  rep.seed = cfg.seed;
  detail::CheckRecorder rec{rep, "identity"};
  const double tol = 1e-12;

  // two definitions of H_b agree coefficient-wise
  {
    Rng rng(detail::scenario_seed(cfg.seed, "identity/hankel"));
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < cfg.corpus; ++i) {
      const TrigPoly b = random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.degree)));
      const TrigPoly f = random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.degree)));
      const double r = max_coeff_diff(hankel_apply(b, f), hankel_integral(b, f));
      if (r > worst) {
        worst = r;
        witness = "b=" + trigpoly_to_json(b).dump() + ";f=" + trigpoly_to_json(f).dump();
      }
    }
    rec.record("hankel_definitions", worst, tol, witness);
  }

  // truncation of the multilinear operator vs truncation of H_b at the product
  for (int n : {2, 3}) {
    Rng rng(detail::scenario_seed(cfg.seed, "identity/correspondence" + std::to_string(n)));
    const int deg = std::min(cfg.degree, n == 2 ? 24 : 12);
    const TruncationMask mask = TruncationMask::pi_1_0(n);
    const TruncationMask mask1 = TruncationMask::pi_1_0(1);
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < std::max(1, cfg.corpus / 4); ++i) {
      const TrigPoly b = random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.degree)));
      std::vector<TrigPoly> fs;
      TrigPoly prod = TrigPoly::constant(1.0);
      for (int j = 0; j < n; ++j) {
        fs.push_back(random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, deg))));
        prod = multiply(prod, fs.back());
      }
      const double r =
          max_coeff_diff(truncate_apply(mask, b, fs), truncate_apply(mask1, b, {prod}));
      if (r > worst) {
        worst = r;
        witness = "b=" + trigpoly_to_json(b).dump() + ";n=" + std::to_string(n);
      }
    }
    rec.record("correspondence_n" + std::to_string(n), worst, tol, witness);
  }

  // reconstruction of Pi_{1,0} H_b from the analytic part of H(b, F)
  {
    Rng rng(detail::scenario_seed(cfg.seed, "identity/reconstruction"));
    const TruncationMask mask1 = TruncationMask::pi_1_0(1);
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < cfg.corpus; ++i) {
      const TrigPoly b = random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.degree)));
      const TrigPoly f = random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.degree)));
      const double r =
          max_coeff_diff(reconstruct_truncation(b, f), truncate_apply(mask1, b, {f}));
      if (r > worst) {
        worst = r;
        witness = "b=" + trigpoly_to_json(b).dump() + ";f=" + trigpoly_to_json(f).dump();
      }
    }
    rec.record("reconstruction", worst, tol, witness);
  }

  // splitting identity on the grid: H(b,g) - correction = Ht(b,g)
  {
    Rng rng(detail::scenario_seed(cfg.seed, "identity/splitting"));
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < std::max(1, cfg.corpus / 4); ++i) {
      const TrigPoly b = random_trig_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.bht_degree)));
      const TrigPoly g = random_trig_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.bht_degree)));
      const std::vector<cplx> lhs =
          eval_grid(bht_multiplier(b, g) - correction_term(b, g), cfg.grid);
      const double r = detail::max_sample_diff(lhs, bht_tilde_quadrature(b, g, cfg.grid));
      if (r > worst) {
        worst = r;
        witness = "b=" + trigpoly_to_json(b).dump() + ";g=" + trigpoly_to_json(g).dump();
      }
    }
    rec.record("splitting", worst, tol, witness);
  }

  // C(b(2x) F(2x)) carries H_b(f) at doubled frequencies
  {
    Rng rng(detail::scenario_seed(cfg.seed, "identity/doubling"));
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < cfg.corpus; ++i) {
      const TrigPoly b = random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.degree)));
      const TrigPoly f = random_analytic_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.degree)));
      const TrigPoly lhs =
          cauchy_projection(multiply(dilate2(b), dilate2(to_conjugate_variable(f))));
      TrigPoly rhs;  // H_b(f)(z^2)
      for (const auto& [m, c] : hankel_apply(b, f).support()) rhs.add(2 * m, c);
      const double r = max_coeff_diff(lhs, rhs);
      if (r > worst) {
        worst = r;
        witness = "b=" + trigpoly_to_json(b).dump() + ";f=" + trigpoly_to_json(f).dump();
      }
    }
    rec.record("doubling", worst, tol, witness);
  }

  return rep;
}

/**
 * Norm probe for the truncation of multilinear sections: lacunary symbol
 * in Lambda_{(n-1)/2}, lower bounds for the full and masked operators
 * across section sizes, and their ratio.
 */
inline Report run_truncation_norm_study(const ExperimentConfig& cfg) {
  Report rep;
  rep.seed = cfg.seed;
  const int n = cfg.arity;
  const double alpha = n > 1 ? (n - 1) / 2.0 : cfg.alpha;
  const TrigPoly b = lacunary_symbol(alpha, cfg.lacunary_terms);
  const TruncationMask mask = static_cast<int>(cfg.beta.size()) == n
                                  ? TruncationMask(cfg.beta, cfg.gamma)
                                  : TruncationMask(std::vector<double>(n, 1.0), cfg.gamma);
  const std::uint64_t seed = detail::scenario_seed(cfg.seed, "truncnorm");
  for (int N : cfg.sections) {
    const std::string params = "n=" + std::to_string(n) + ";N=" + std::to_string(N);
    const double full = multilinear_norm_lower(b, n, N, cfg.rounds, seed);
    const double masked = multilinear_norm_lower(b, n, N, cfg.rounds, seed, mask);
    rep.add("truncnorm", params, "norm_full", full);
    rep.add("truncnorm", params, "norm_masked", masked);
    rep.add("truncnorm", params, "ratio", full > 0.0 ? masked / full : 0.0);
  }
  return rep;
}

inline TrigPoly study_symbol(const ExperimentConfig& cfg, double alpha) {
  if (cfg.symbol == "lacunary") return lacunary_symbol(alpha, cfg.lacunary_terms);
  if (cfg.symbol == "smooth") return geometric_symbol(0.9, 64);
  if (cfg.symbol == "control") return rough_control_symbol(128);
  throw std::invalid_argument("study_symbol: unknown symbol family " + cfg.symbol);
}

/**
 * Atom probe for the H^q -> L^p bound of the subtracted transform:
 * records ||Ht(b, a)||_p / ||b||_{Lambda_alpha} per atom and the family
 * supremum.  The quadrature grid is twice the atom grid so the rule sees
 * every atom cell.
 */
inline Report run_atom_study(const ExperimentConfig& cfg) {
  Report rep;
  rep.seed = cfg.seed;
  const double alpha = 1.0 / cfg.q - 1.0 / cfg.p;
  const TrigPoly b = study_symbol(cfg, alpha);
  const int M = 2 * cfg.atom_grid;
  const double bnorm = lipschitz_norm(b, alpha, M);
  std::vector<std::uint64_t> seeds;
  for (int s = 0; s < cfg.atom_seeds; ++s) seeds.push_back(cfg.seed + static_cast<std::uint64_t>(s));

  double sup = 0.0;
  const std::vector<Atom> atoms = dyadic_atom_family(cfg.q, cfg.scales, seeds, cfg.atom_grid);
  for (size_t ai = 0; ai < atoms.size(); ++ai) {
    const double scale = cfg.scales[ai / seeds.size()];
    const std::uint64_t seed = seeds[ai % seeds.size()];
    const double num = lp_norm(bht_tilde_quadrature(b, atoms[ai].cells(), M), cfg.p);
    const double ratio = bnorm > 0.0 ? num / bnorm : 0.0;
    sup = std::max(sup, ratio);
    rep.add("atoms",
            "q=" + format_double(cfg.q) + ";scale=" + format_double(scale) +
                ";seed=" + std::to_string(seed),
            "ratio", ratio);
  }
  rep.add("atoms", "q=" + format_double(cfg.q), "ratio_supremum", sup);
  rep.add("atoms", "q=" + format_double(cfg.q), "lipschitz_norm", bnorm);
  return rep;
}

/**
 * Error-versus-M table for both quadrature routes against multiplier-route
 * references, on a corpus of random pairs.
 */
inline Report run_bht_convergence(const ExperimentConfig& cfg) {
  Report rep;
  rep.seed = cfg.seed;
  Rng rng(detail::scenario_seed(cfg.seed, "bhtconv"));
  std::vector<double> worst_pv(cfg.grids.size(), 0.0), worst_tilde(cfg.grids.size(), 0.0);
  for (int i = 0; i < cfg.corpus; ++i) {
    const TrigPoly b = random_trig_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.bht_degree)));
    const TrigPoly g = random_trig_poly(rng, static_cast<int>(rng.uniform_int(0, cfg.bht_degree)));
    const TrigPoly href = bht_multiplier(b, g);
    const TrigPoly tref = href - correction_term(b, g);
    for (size_t mi = 0; mi < cfg.grids.size(); ++mi) {
      const int M = cfg.grids[mi];
      const double epv = detail::max_sample_diff(eval_grid(href, M), pv_quadrature(b, g, M));
      const double eti =
          detail::max_sample_diff(eval_grid(tref, M), bht_tilde_quadrature(b, g, M));
      const std::string params = "pair=" + std::to_string(i) + ";M=" + std::to_string(M);
      rep.add("bhtconv", params, "error_pv", epv);
      rep.add("bhtconv", params, "error_tilde", eti);
      worst_pv[mi] = std::max(worst_pv[mi], epv);
      worst_tilde[mi] = std::max(worst_tilde[mi], eti);
    }
  }
  for (size_t mi = 0; mi < cfg.grids.size(); ++mi) {
    const std::string params = "M=" + std::to_string(cfg.grids[mi]);
    rep.add("bhtconv", params, "max_error_pv", worst_pv[mi]);
    rep.add("bhtconv", params, "max_error_tilde", worst_tilde[mi]);
  }
  return rep;
}

/** Dispatch on config.scenario. */
inline Report run_scenario(ExperimentConfig cfg) {
  validate_config(cfg);
  if (cfg.scenario == "identity") return run_identity_suite(cfg);
  if (cfg.scenario == "truncnorm") return run_truncation_norm_study(cfg);
  if (cfg.scenario == "atoms") return run_atom_study(cfg);
  if (cfg.scenario == "bhtconv") return run_bht_convergence(cfg);
  throw std::invalid_argument("run_scenario: unknown scenario " + cfg.scenario);
}

}  // namespace htlab

#endif  // HTLAB_STUDIES_HPP
