// Experiment configuration: a flat struct mirrored by a flat key = value
// text file.  Lists are comma-separated; '#' starts a comment.

#ifndef HTLAB_CONFIG_HPP
#define HTLAB_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace htlab {

struct ExperimentConfig {
  std::string scenario = "identity";
  std::uint64_t seed = 42;

  int degree = 64;       // degree bound for coefficient-identity corpora
  int bht_degree = 8;    // degree bound for grid-quadrature corpora
  int grid = 1024;       // working grid size M
  std::vector<int> grids = {256, 512, 1024, 2048, 4096};

  double p = 2.0;
  double q = 1.0;
  double alpha = 0.5;

  int arity = 2;
  std::vector<double> beta = {1.0, 1.0};
  double gamma = 0.0;
  std::vector<int> sections = {16, 32, 64, 128};
  int rounds = 10;       // random restarts in the norm probes
  int lacunary_terms = 8;

  int corpus = 200;      // corpus size for identity checks
  std::string symbol = "lacunary";  // lacunary | smooth | control
  std::vector<double> scales = {pi_over(8), pi_over(16), pi_over(32), pi_over(64)};
  int atom_seeds = 5;
  int atom_grid = 2048;

  std::string out;
  std::string format = "csv";
  bool plots = false;

  static double pi_over(int d) { return 3.1415926535897932384626433832795 / d; }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

template <typename T>
inline std::vector<T> parse_list(const std::string& v) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(trim(item));
    T x;
    is >> x;
    if (is.fail()) throw std::invalid_argument("config: bad list item '" + item + "'");
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

inline void apply_config_entry(ExperimentConfig& c, const std::string& key,
                               const std::string& value) {
  const std::string v = detail::trim(value);
  auto as_int = [&] { return std::stoi(v); };
  auto as_double = [&] { return std::stod(v); };
  if (key == "scenario") c.scenario = v;
  else if (key == "seed") c.seed = std::stoull(v);
  else if (key == "degree") c.degree = as_int();
  else if (key == "bht_degree") c.bht_degree = as_int();
  else if (key == "grid") c.grid = as_int();
  else if (key == "grids") c.grids = detail::parse_list<int>(v);
  else if (key == "p") c.p = as_double();
  else if (key == "q") c.q = as_double();
  else if (key == "alpha") c.alpha = as_double();
  else if (key == "arity") c.arity = as_int();
  else if (key == "beta") c.beta = detail::parse_list<double>(v);
  else if (key == "gamma") c.gamma = as_double();
  else if (key == "sections") c.sections = detail::parse_list<int>(v);
  else if (key == "rounds") c.rounds = as_int();
  else if (key == "lacunary_terms") c.lacunary_terms = as_int();
  else if (key == "corpus") c.corpus = as_int();
  else if (key == "symbol") c.symbol = v;
  else if (key == "scales") c.scales = detail::parse_list<double>(v);
  else if (key == "atom_seeds") c.atom_seeds = as_int();
  else if (key == "atom_grid") c.atom_grid = as_int();
  else if (key == "out") c.out = v;
  else if (key == "format") c.format = v;
  else if (key == "plots") c.plots = (v == "1" || v == "true" || v == "yes");
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  ExperimentConfig c;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value, got '" + line + "'");
    apply_config_entry(c, detail::trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return c;
}

/** Scenario-dependent coherence checks; fixes alpha from (q, p) where demanded. */
inline void validate_config(ExperimentConfig& c) {
  if (c.arity < 1) throw std::invalid_argument("config: arity must be >= 1");
  if (c.grid % 2 != 0) throw std::invalid_argument("config: grid must be even");
  for (int m : c.grids)
    if (m % 2 != 0) throw std::invalid_argument("config: grids must be even");
  if (c.scenario == "atoms") {
    if (!(c.q > 0.0 && c.q <= 1.0 && c.p > 1.0))
      throw std::invalid_argument("config: atoms scenario needs 0 < q <= 1 < p");
    c.alpha = 1.0 / c.q - 1.0 / c.p;  // Hankel-pair exponent law
  }
  if (c.format != "csv" && c.format != "json")
    throw std::invalid_argument("config: format must be csv or json");
}

}  // namespace htlab

#endif  // HTLAB_CONFIG_HPP
