#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcount/phase.hpp"

namespace qcount {

// Oracle input data: domain {0..N-1} with N a power of two, plus the set of
// marked indices.
class MarkedSet {
 public:
  MarkedSet(std::size_t domain_size, std::vector<std::size_t> marked);

  static MarkedSet first_k(std::size_t domain_size, std::size_t k);

  std::size_t domain_size() const { return domain_size_; }
  int qubit_count() const { return qubit_count_; }
  std::size_t count() const { return marked_.size(); }  // k
  const std::vector<std::size_t>& marked() const { return marked_; }
  bool contains(std::size_t index) const;

 private:
  std::size_t domain_size_;
  int qubit_count_;
  std::vector<std::size_t> marked_;  // sorted, unique
};

// sin(theta) = sqrt(k/N), cos(theta) = sqrt((N-k)/N), 0 <= theta <= pi/2.
struct GroverAngles {
  double theta;
  double sin_theta;
  double cos_theta;

  static GroverAngles from_counts(std::size_t domain_size, std::size_t k);
};

// Diagonal +-1 oracle on [N]: -1 at marked indices.
DenseUnitary phase_oracle(const MarkedSet& m);
// Bit-flip oracle on [N, 2]: |x>|b> -> |x>|b xor f(x)>.
DenseUnitary bit_oracle(const MarkedSet& m);
// Diffusion G = H^n (2|0><0| - I) H^n: entries 2/N off the diagonal and
// 2/N - 1 on it.
DenseUnitary diffusion(int qubit_count);
// Evolution operator U_G = G O_f.
DenseUnitary grover_step(const MarkedSet& m);

// floor((pi/4) sqrt(N/k))
std::size_t grover_iteration_count(std::size_t domain_size, std::size_t k);

struct SearchResult {
  std::size_t outcome;
  bool success;
  std::size_t iterations;
  double success_probability;  // exact probability of a marked outcome
};

// Runs t = floor((pi/4) sqrt(N/k)) iterations from the uniform state and
// measures.  Requires 1 <= k <= N-1.
SearchResult grover_search(const MarkedSet& m, Rng& rng);

struct CountEstimate {
  double k_est;
  double theta_prime;
  long long queries;     // oracle queries consumed
  double success_bound;  // probability with which the error bound holds
};

// Phase-estimates U_G on the uniform state with p precision bits, folds the
// angle estimate into [0, pi/2] and returns k' = sin^2(theta') N.
CountEstimate quantum_count(const MarkedSet& m, int p, Rng& rng);

// 2 pi sqrt(k(N-k))/P + pi^2 N / P^2, valid for 0 < k < N.
double count_error_bound(std::size_t domain_size, std::size_t k, std::size_t big_p);
// 2 pi sin(theta)cos(theta)/P + pi^2/P, the |sin^2 theta' - sin^2 theta| bound.
double sin_sq_error_bound(double theta, std::size_t big_p);

struct CountTrial {
  std::uint64_t trial;
  std::size_t outcome;  // raw first-register outcome
  double theta_prime;
  double k_est;
  double bound;
  bool pass;  // |k_est - k| <= bound
};

struct CountReport {
  std::size_t domain_size = 0;
  std::size_t k = 0;
  int precision_bits = 0;
  std::uint64_t seed = 0;
  std::vector<CountTrial> trials;
  double bound = 0.0;
  double success_frequency = 0.0;
  double threshold = 0.0;  // 8/pi^2 - 3 sigma_binomial
  bool pass = false;

  std::string to_csv() const;
};

// Seeded Monte Carlo harness: `trials` independent counting runs sharing one
// precomputed outcome distribution, checked against count_error_bound.
CountReport quantum_count_experiment(const MarkedSet& m, int p, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace qcount
