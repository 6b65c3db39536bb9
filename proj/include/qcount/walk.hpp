#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcount/graph.hpp"
#include "qcount/phase.hpp"

namespace qcount {

// Position (x) coin space over a properly colored d-regular graph.  The coin
// value c at vertex v points along the unique incident edge of color c.
class WalkSpace {
 public:
  explicit WalkSpace(ColoredGraph graph);

  const ColoredGraph& graph() const { return graph_; }
  std::size_t position_dim() const { return graph_.graph.vertex_count(); }
  std::size_t coin_dim() const { return graph_.degree; }
  HilbertDims dims() const;

  // Endpoint of the color-c edge at v.
  std::size_t neighbor(std::size_t v, std::size_t c) const;
  // Color of edge vu.
  std::size_t edge_color(std::size_t v, std::size_t u) const;

 private:
  ColoredGraph graph_;
  std::vector<std::vector<std::size_t>> neighbor_;  // [v][c] -> u
};

// Marked vertex classes K1 within V1 = {0..n1-1} and K2 within
// V2 = {n1..n1+n2-1}.
class BipartiteMarking {
 public:
  BipartiteMarking(std::size_t n1, std::size_t n2, std::vector<std::size_t> marked1,
                   std::vector<std::size_t> marked2);

  // Marks the first k1 vertices of V1 and the first k2 of V2.
  static BipartiteMarking first_k(std::size_t n1, std::size_t n2, std::size_t k1,
                                  std::size_t k2);

  std::size_t n1() const { return n1_; }
  std::size_t n2() const { return n2_; }
  std::size_t k1() const { return marked1_.size(); }
  std::size_t k2() const { return marked2_.size(); }
  std::size_t total_vertices() const { return n1_ + n2_; }
  std::size_t total_marked() const { return k1() + k2(); }
  const std::vector<std::size_t>& marked1() const { return marked1_; }
  const std::vector<std::size_t>& marked2() const { return marked2_; }
  bool is_marked(std::size_t vertex) const;
  // The counting algorithm requires n1 == n2 and k1 == k2.
  bool restricted_scope() const { return n1_ == n2_ && k1() == k2(); }

 private:
  std::size_t n1_, n2_;
  std::vector<std::size_t> marked1_, marked2_;  // sorted global vertex ids
};

// Marking angles: cos(theta_j) = 1 - 2 k_j / N_j.
struct WalkAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;

  double sigma() const { return (theta1 + theta2) / 2.0; }
  double delta() const { return (theta1 - theta2) / 2.0; }

  static WalkAngles from_marking(const BipartiteMarking& bm);
  static WalkAngles from_angles(double theta1, double theta2);
};

// Flip-flop shift S|v,c> = |u,c> with cor(vu) = c; an involution.
DenseUnitary flip_flop_shift(const WalkSpace& ws);
// Grover coin 2/d J - I on the coin space.
DenseUnitary grover_coin(std::size_t coin_dim);
// U_w = S (I (x) C)
DenseUnitary walk_operator(const WalkSpace& ws);
// U = U_w O with O = (I - 2 sum_{j in K} |j><j|) (x) I
DenseUnitary search_operator(const WalkSpace& ws, const BipartiteMarking& bm);

inline constexpr std::array<const char*, 8> kReducedBasisLabels = {
    "K1,K2", "K1,K2c", "K1c,K2", "K1c,K2c", "K2,K1", "K2,K1c", "K2c,K1", "K2c,K1c"};

// The eight class superpositions |S_i,S_j> in the full N d space, ordered as
// kReducedBasisLabels.  Requires all four classes nonempty.
std::array<StateVector, 8> reduced_basis(const WalkSpace& ws, const BipartiteMarking& bm);

struct ReducedEigenpair {
  std::string label;            // signed angle name, e.g. "+Sigma"
  double angle;                 // eigenvalue = e^{i angle}
  Complex value;
  std::array<Complex, 8> vector;
  Complex d_coeff;              // <lambda|D> against the reduced |D> coordinates
};

struct ReducedWalkSystem {
  WalkAngles angles;
  DenseUnitary u_prime;  // 8x8 block matrix [[0, U'(theta1)], [U'(theta2), 0]]
  std::array<ReducedEigenpair, 8> eigenpairs;
};

// Closed-form reduced operator and its analytic eigensystem.
ReducedWalkSystem reduced_operator(const WalkAngles& angles);

// 4x4 block U'(theta).
DenseUnitary reduced_block(double theta);

struct ReductionCheck {
  double max_abs_deviation;  // max |<B_a|U|B_b> - U'_ab|
  double max_leakage;        // residual of U|B_b> outside span(B)
};

// Full-space check that U restricted to span(B) is exactly U'.
ReductionCheck verify_reduction(const WalkSpace& ws, const BipartiteMarking& bm);

// |D>: uniform superposition over all |j,c>.
StateVector edge_superposition(const WalkSpace& ws);
// Coordinates of |D> in the reduced basis, expressed through the angles:
// (s1 s2, s1 c2, c1 s2, c1 c2, s2 s1, s2 c1, c2 s1, c2 c1) / sqrt(2) with
// s_j = sin(theta_j / 2), c_j = cos(theta_j / 2).
std::array<double, 8> reduced_edge_coefficients(const WalkAngles& angles);

struct AngleProbability {
  std::string label;
  double angle;
  double probability;
};

// Estimation probability of each signed eigenvalue angle:
// +-Sigma: cos^2(Delta/2)/4; +-(Sigma+pi): sin^2(Delta/2)/4;
// +-Delta: cos^2(Sigma/2)/4; +-(Delta+pi): sin^2(Sigma/2)/4.
std::array<AngleProbability, 8> projection_probabilities(const WalkAngles& angles);

struct BipartiteErrorBounds {
  double loose;  // 2 pi sqrt(k(N-k))/P + pi^2 N / P
  double tight;  // 2 pi sqrt(k(N-k))/P + pi^2 N / P^2
};

// Both printed normalizations of the |k' - k| bound; callers pick one.
BipartiteErrorBounds bipartite_error_bound(std::size_t total_vertices, std::size_t total_marked,
                                           std::size_t big_p);

// (1 - 2^-t) 8/pi^2
double success_probability_bound(int t);

struct BipartiteCountResult {
  double k_est;
  double theta_prime;     // folded angle estimate in [0, pi]
  long long queries;      // t_used (P-1), plus 1 when the probe ran
  double success_bound;   // (1 - 2^-t) 8/pi^2
  int iterations;         // phase estimations executed
  bool probe_used;        // classical single-element branch taken
};

using OracleProbe = std::function<bool(std::size_t)>;

// Counting on the complete bipartite graph (restricted scope k1 = k2,
// n1 = n2).  Repeats phase estimation of U on |D> until the angle estimate
// leaves {0, pi} (exact membership on the outcome grid: omega' in {0, P/2})
// or t attempts are exhausted; the exhausted branch classically probes one
// random element to separate k = 0 from k = N.
BipartiteCountResult bipartite_count(const WalkSpace& ws, const BipartiteMarking& bm, int p,
                                     int t, Rng& rng, const OracleProbe& oracle_probe);
// Convenience overload probing against the marking itself.
BipartiteCountResult bipartite_count(const WalkSpace& ws, const BipartiteMarking& bm, int p,
                                     int t, Rng& rng);

struct WalkCountTrial {
  std::uint64_t trial;
  int iterations;
  bool probe_used;
  double theta_prime;
  double k_est;
  long long queries;
  double bound;
  bool pass;
};

struct WalkCountReport {
  std::size_t n1 = 0;
  std::size_t k1 = 0;
  int precision_bits = 0;
  int max_iterations = 0;
  std::uint64_t seed = 0;
  std::vector<WalkCountTrial> trials;
  double bound = 0.0;             // loose |k'-k| bound (0 for exact cases)
  double success_frequency = 0.0;
  double mean_k = 0.0;
  double stddev_k = 0.0;
  long long total_queries = 0;
  double threshold = 0.0;         // success_probability_bound(t) - 3 sigma
  bool pass = false;

  std::string to_csv() const;
};

// Seeded Monte Carlo harness over independent substreams.
WalkCountReport monte_carlo_count(const WalkSpace& ws, const BipartiteMarking& bm, int p, int t,
                                  std::size_t trials, std::uint64_t seed);

}  // namespace qcount
