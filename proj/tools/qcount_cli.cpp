// Batch front end: runs the experiments from JSON configs / flags and emits
// deterministic CSV artifacts plus a JSON summary per command.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "qcount/csv.hpp"
#include "qcount/errors.hpp"
#include "qcount/fourier.hpp"
#include "qcount/gates.hpp"
#include "qcount/grover.hpp"
#include "qcount/phase.hpp"
#include "qcount/walk.hpp"

namespace {

using nlohmann::json;
using namespace qcount;

constexpr int kExitPass = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single JSON config shared by all subcommands; flags win over config keys.
class ConfigSource {
 public:
  void load(const std::string& path, const std::vector<std::string>& allowed_keys) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file: " + path);
    json parsed;
    try {
      in >> parsed;
    } catch (const json::exception& e) {
      throw UsageError("config parse error: " + std::string(e.what()));
    }
    if (!parsed.is_object()) throw UsageError("config must be a JSON object");
    for (const auto& [key, value] : parsed.items()) {
      (void)value;
      bool known = false;
      for (const std::string& k : allowed_keys) known = known || k == key;
      if (!known) throw UsageError("unknown config key: " + key);
    }
    data_ = std::move(parsed);
  }

  template <typename T>
  void apply(const CLI::Option* flag, const std::string& key, T& target) const {
    if (flag != nullptr && flag->count() > 0) return;  // explicit flag wins
    if (!data_.contains(key)) return;
    try {
      target = data_.at(key).get<T>();
    } catch (const json::exception&) {
      throw UsageError("config key '" + key + "' has the wrong type");
    }
  }

 private:
  json data_;
};

void write_output(const std::string& csv, const json& summary, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot write output file: " + out_path);
    out << csv;
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << csv;
    std::cerr << summary.dump(2) << "\n";
  }
}

struct GlobalOptions {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 1;
  std::size_t trials = 2000;
  const CLI::Option* seed_flag = nullptr;
  const CLI::Option* trials_flag = nullptr;
};

int cmd_qft_verify(int p_max, const std::string& out_path) {
  if (p_max < 1 || p_max > 12) throw UsageError("--p-max must be in [1, 12]");
  CsvWriter csv;
  csv.header({"p", "max_abs_dev", "pass"});
  bool all_pass = true;
  double worst = 0.0;
  for (int p = 1; p <= p_max; ++p) {
    const double dev = max_abs_diff(qft_circuit(p).matrix(), qft(p));
    const double inv_dev = max_abs_diff(qft_inverse_circuit(p).matrix(), qft_inverse(p));
    const double row_dev = std::max(dev, inv_dev);
    const bool pass = row_dev < 1e-12;
    all_pass = all_pass && pass;
    worst = std::max(worst, row_dev);
    csv.begin_row();
    csv.field(p);
    csv.field(row_dev);
    csv.field(pass);
    csv.end_row();
  }
  write_output(csv.str(), json{{"command", "qft-verify"},
                               {"p_max", p_max},
                               {"max_abs_dev", worst},
                               {"pass", all_pass}},
               out_path);
  return all_pass ? kExitPass : kExitAssertion;
}

int cmd_fourier_fig(std::size_t dim, const std::vector<double>& omegas,
                    const std::string& out_path) {
  CsvWriter csv;
  csv.header({"omega", "l", "re", "im"});
  for (double omega : omegas) {
    const StateVector f = fourier_state(dim, omega);
    for (std::size_t l = 0; l < dim; ++l) {
      csv.begin_row();
      csv.field(omega);
      csv.field(l);
      csv.field(f[l].real());
      csv.field(f[l].imag());
      csv.end_row();
    }
  }
  write_output(csv.str(),
               json{{"command", "fourier-fig"}, {"P", dim}, {"states", omegas.size()}},
               out_path);
  return kExitPass;
}

int cmd_fw_min(const std::vector<std::size_t>& dims, double resolution,
               const std::string& out_path) {
  if (!(resolution > 0.0) || resolution > 0.1)
    throw UsageError("fw-min: resolution must be in (0, 0.1]");
  const double bound = 8.0 / (std::numbers::pi * std::numbers::pi);
  CsvWriter csv;
  csv.header({"P", "w", "f", "bound", "pass"});
  json minima = json::array();
  bool all_pass = true;
  for (std::size_t dim : dims) {
    const auto steps = static_cast<std::size_t>(std::llround(1.0 / resolution));
    double best_w = 0.5, best_f = f_of_w(dim, 0.5);
    for (std::size_t i = 1; i < steps; ++i) {
      const double w = static_cast<double>(i) * resolution;
      const double f = f_of_w(dim, w);
      if (f < best_f) {
        best_f = f;
        best_w = w;
      }
      csv.begin_row();
      csv.field(dim);
      csv.field(w);
      csv.field(f);
      csv.field(bound);
      csv.field(f >= bound - 1e-12);
      csv.end_row();
    }
    const bool min_ok = best_f >= bound - 1e-12 && (dim <= 2 || std::abs(best_w - 0.5) <= resolution + 1e-12);
    all_pass = all_pass && min_ok;
    minima.push_back(json{{"P", dim}, {"argmin", best_w}, {"min", best_f}, {"pass", min_ok}});
  }
  write_output(csv.str(),
               json{{"command", "fw-min"}, {"minima", minima}, {"pass", all_pass}}, out_path);
  return all_pass ? kExitPass : kExitAssertion;
}

int cmd_appendix_a(const std::vector<std::size_t>& dims, double resolution,
                   const std::string& out_path) {
  const FunctionMinimumReport report = f_minimum_suite(dims, resolution);
  CsvWriter csv;
  csv.header({"P", "argmin", "min_value", "bound", "argmin_checked", "pass"});
  for (const MinimumCheck& m : report.minima) {
    csv.begin_row();
    csv.field(m.dim);
    csv.field(m.argmin);
    csv.field(m.min_value);
    csv.field(m.lower_bound);
    csv.field(m.argmin_checked);
    csv.field(m.pass);
    csv.end_row();
  }
  json violations = json::array();
  for (const InequalityViolation& v : report.violations)
    violations.push_back(
        json{{"P", v.dim}, {"check", v.check}, {"x", v.x}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  write_output(csv.str(),
               json{{"command", "appendix-a"},
                    {"resolution", report.resolution},
                    {"violations", violations},
                    {"pass", report.pass}},
               out_path);
  return report.pass ? kExitPass : kExitAssertion;
}

int cmd_grover(std::size_t domain, std::size_t k, std::size_t trials, std::uint64_t seed,
               const std::string& out_path) {
  MarkedSet marked = MarkedSet::first_k(domain, k);
  CsvWriter csv;
  csv.header({"trial", "outcome", "success", "iterations"});
  const Rng base(seed);
  std::size_t hits = 0;
  double exact_probability = 0.0;
  std::size_t iterations = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = base.substream(i);
    const SearchResult r = grover_search(marked, rng);
    exact_probability = r.success_probability;
    iterations = r.iterations;
    hits += r.success ? 1 : 0;
    csv.begin_row();
    csv.field(i);
    csv.field(r.outcome);
    csv.field(r.success);
    csv.field(r.iterations);
    csv.end_row();
  }
  const double bound = 1.0 - static_cast<double>(k) / static_cast<double>(domain);
  const bool pass = exact_probability >= bound - 1e-12;
  write_output(
      csv.str(),
      json{{"command", "grover"},
           {"N", domain},
           {"k", k},
           {"iterations", iterations},
           {"exact_success_probability", exact_probability},
           {"success_bound", bound},
           {"observed_frequency",
            trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials)},
           {"pass", pass}},
      out_path);
  return pass ? kExitPass : kExitAssertion;
}

int cmd_count(std::size_t domain, std::size_t k, int p, std::size_t trials, std::uint64_t seed,
              const std::string& out_path) {
  const CountReport report = quantum_count_experiment(MarkedSet::first_k(domain, k), p, trials, seed);
  write_output(report.to_csv(),
               json{{"command", "count"},
                    {"N", domain},
                    {"k", k},
                    {"p", p},
                    {"trials", trials},
                    {"seed", seed},
                    {"bound", report.bound},
                    {"success_frequency", report.success_frequency},
                    {"threshold", report.threshold},
                    {"pass", report.pass}},
               out_path);
  return report.pass ? kExitPass : kExitAssertion;
}

int cmd_walk_count(std::size_t n1, std::size_t k1, int p, int t, std::size_t trials,
                   std::uint64_t seed, const std::string& out_path,
                   const std::string& graph_out) {
  const WalkSpace ws(edge_color_bipartite(complete_bipartite(n1, n1)));
  const BipartiteMarking bm = BipartiteMarking::first_k(n1, n1, k1, k1);
  if (!graph_out.empty()) {
    std::ofstream out(graph_out, std::ios::binary);
    if (!out) throw UsageError("cannot write graph file: " + graph_out);
    out << to_json(ws.graph());
  }
  const WalkCountReport report = monte_carlo_count(ws, bm, p, t, trials, seed);
  write_output(report.to_csv(),
               json{{"command", "walk-count"},
                    {"n1", n1},
                    {"k1", k1},
                    {"p", p},
                    {"t", t},
                    {"trials", trials},
                    {"seed", seed},
                    {"bound", report.bound},
                    {"success_frequency", report.success_frequency},
                    {"threshold", report.threshold},
                    {"mean_k", report.mean_k},
                    {"stddev_k", report.stddev_k},
                    {"total_queries", report.total_queries},
                    {"pass", report.pass}},
               out_path);
  return report.pass ? kExitPass : kExitAssertion;
}

int cmd_spectrum(std::size_t n1, std::size_t n2, std::size_t k1, std::size_t k2,
                 const std::string& out_path) {
  if (k1 > n1 || k2 > n2) throw UsageError("spectrum: k exceeds the partition size");
  const WalkAngles angles =
      WalkAngles::from_marking(BipartiteMarking::first_k(n1, n2, k1, k2));
  const ReducedWalkSystem sys = reduced_operator(angles);
  const auto table = projection_probabilities(angles);

  CsvWriter csv;
  csv.header({"label", "angle", "re", "im", "probability"});
  double total = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    csv.begin_row();
    csv.field(sys.eigenpairs[i].label);
    csv.field(sys.eigenpairs[i].angle);
    csv.field(sys.eigenpairs[i].value.real());
    csv.field(sys.eigenpairs[i].value.imag());
    csv.field(table[i].probability);
    csv.end_row();
    total += table[i].probability;
  }
  const bool pass = std::abs(total - 1.0) <= 1e-12;
  write_output(csv.str(),
               json{{"command", "spectrum"},
                    {"n1", n1},
                    {"n2", n2},
                    {"k1", k1},
                    {"k2", k2},
                    {"theta1", angles.theta1},
                    {"theta2", angles.theta2},
                    {"sigma", angles.sigma()},
                    {"delta", angles.delta()},
                    {"probability_sum", total},
                    {"pass", pass}},
               out_path);
  return pass ? kExitPass : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum counting simulator: transforms, search, counting, coined walks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config_path, "JSON config file (flags override)");
  app.add_option("--out", global.out_path, "CSV output path (stdout if omitted)");
  global.seed_flag = app.add_option("--seed", global.seed, "base RNG seed");
  global.trials_flag = app.add_option("--trials", global.trials, "Monte Carlo trials");

  // qft-verify
  auto* qft_cmd = app.add_subcommand("qft-verify", "circuit vs analytic transform");
  int p_max = 6;
  const CLI::Option* p_max_flag = qft_cmd->add_option("--p-max", p_max, "largest register");

  // fourier-fig
  auto* fig_cmd = app.add_subcommand("fourier-fig", "amplitude tables of |F_P(omega)>");
  std::size_t fig_dim = 8;
  std::vector<double> fig_omegas = {1.0, 1.01, 1.5, 1.99, 2.0};
  const CLI::Option* fig_dim_flag = fig_cmd->add_option("--P", fig_dim, "space dimension");
  const CLI::Option* fig_omega_flag =
      fig_cmd->add_option("--omega", fig_omegas, "omega values");

  // fw-min
  auto* fw_cmd = app.add_subcommand("fw-min", "f(w) curves with minima");
  std::vector<std::size_t> fw_dims = {3, 30};
  double fw_resolution = 1e-3;
  const CLI::Option* fw_dims_flag = fw_cmd->add_option("--P", fw_dims, "dimensions");
  const CLI::Option* fw_res_flag =
      fw_cmd->add_option("--resolution", fw_resolution, "w grid step");

  // appendix-a
  auto* appendix_cmd = app.add_subcommand("appendix-a", "minimum/inequality verification");
  std::vector<std::size_t> ap_dims = {1, 2, 3, 4, 8, 16, 30, 64};
  double ap_resolution = 1e-3;
  const CLI::Option* ap_dims_flag = appendix_cmd->add_option("--P", ap_dims, "dimensions");
  const CLI::Option* ap_res_flag =
      appendix_cmd->add_option("--resolution", ap_resolution, "grid step");

  // grover
  auto* grover_cmd = app.add_subcommand("grover", "search trials");
  std::size_t g_domain = 16, g_k = 4;
  const CLI::Option* g_domain_flag = grover_cmd->add_option("--N", g_domain, "domain size");
  const CLI::Option* g_k_flag = grover_cmd->add_option("--k", g_k, "marked count");

  // count
  auto* count_cmd = app.add_subcommand("count", "Grover counting trials");
  std::size_t c_domain = 16, c_k = 4;
  int c_p = 5;
  const CLI::Option* c_domain_flag = count_cmd->add_option("--N", c_domain, "domain size");
  const CLI::Option* c_k_flag = count_cmd->add_option("--k", c_k, "marked count");
  const CLI::Option* c_p_flag = count_cmd->add_option("--p", c_p, "precision bits");

  // walk-count
  auto* walk_cmd = app.add_subcommand("walk-count", "bipartite counting trials");
  std::size_t w_n1 = 4, w_k1 = 1;
  int w_p = 5, w_t = 3;
  std::string w_graph_out;
  const CLI::Option* w_n1_flag = walk_cmd->add_option("--n1", w_n1, "partition size");
  const CLI::Option* w_k1_flag = walk_cmd->add_option("--k1", w_k1, "marked per side");
  const CLI::Option* w_p_flag = walk_cmd->add_option("--p", w_p, "precision bits");
  const CLI::Option* w_t_flag = walk_cmd->add_option("--t", w_t, "max iterations");
  walk_cmd->add_option("--graph-out", w_graph_out, "write the colored graph as JSON");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "reduced-operator eigenvalues");
  std::size_t s_n1 = 40, s_n2 = 0, s_k1 = 2, s_k2 = 1;
  const CLI::Option* s_n1_flag = spectrum_cmd->add_option("--n1", s_n1, "partition 1 size");
  const CLI::Option* s_n2_flag =
      spectrum_cmd->add_option("--n2", s_n2, "partition 2 size (defaults to n1)");
  const CLI::Option* s_k1_flag = spectrum_cmd->add_option("--k1", s_k1, "marked in V1");
  const CLI::Option* s_k2_flag = spectrum_cmd->add_option("--k2", s_k2, "marked in V2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    ConfigSource config;
    if (!global.config_path.empty()) {
      config.load(global.config_path,
                  {"seed", "trials", "p_max", "P", "omega", "resolution", "N", "k", "p", "n1",
                   "n2", "k1", "k2", "t", "graph_out"});
    }
    config.apply(global.seed_flag, "seed", global.seed);
    config.apply(global.trials_flag, "trials", global.trials);

    if (qft_cmd->parsed()) {
      config.apply(p_max_flag, "p_max", p_max);
      return cmd_qft_verify(p_max, global.out_path);
    }
    if (fig_cmd->parsed()) {
      config.apply(fig_dim_flag, "P", fig_dim);
      config.apply(fig_omega_flag, "omega", fig_omegas);
      return cmd_fourier_fig(fig_dim, fig_omegas, global.out_path);
    }
    if (fw_cmd->parsed()) {
      config.apply(fw_dims_flag, "P", fw_dims);
      config.apply(fw_res_flag, "resolution", fw_resolution);
      return cmd_fw_min(fw_dims, fw_resolution, global.out_path);
    }
    if (appendix_cmd->parsed()) {
      config.apply(ap_dims_flag, "P", ap_dims);
      config.apply(ap_res_flag, "resolution", ap_resolution);
      return cmd_appendix_a(ap_dims, ap_resolution, global.out_path);
    }
    if (grover_cmd->parsed()) {
      config.apply(g_domain_flag, "N", g_domain);
      config.apply(g_k_flag, "k", g_k);
      return cmd_grover(g_domain, g_k, global.trials, global.seed, global.out_path);
    }
    if (count_cmd->parsed()) {
      config.apply(c_domain_flag, "N", c_domain);
      config.apply(c_k_flag, "k", c_k);
      config.apply(c_p_flag, "p", c_p);
      return cmd_count(c_domain, c_k, c_p, global.trials, global.seed, global.out_path);
    }
    if (walk_cmd->parsed()) {
      config.apply(w_n1_flag, "n1", w_n1);
      config.apply(w_k1_flag, "k1", w_k1);
      config.apply(w_p_flag, "p", w_p);
      config.apply(w_t_flag, "t", w_t);
      config.apply(static_cast<const CLI::Option*>(nullptr), "graph_out", w_graph_out);
      return cmd_walk_count(w_n1, w_k1, w_p, w_t, global.trials, global.seed, global.out_path,
                            w_graph_out);
    }
    if (spectrum_cmd->parsed()) {
      config.apply(s_n1_flag, "n1", s_n1);
      config.apply(s_n2_flag, "n2", s_n2);
      config.apply(s_k1_flag, "k1", s_k1);
      config.apply(s_k2_flag, "k2", s_k2);
      if (s_n2 == 0) s_n2 = s_n1;
      return cmd_spectrum(s_n1, s_n2, s_k1, s_k2, global.out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertion;
  }
  return kExitUsage;
}
