#include "qcount/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcount/csv.hpp"
#include "qcount/errors.hpp"

namespace qcount {

namespace {

constexpr double kPi = std::numbers::pi;
const double kEightOverPiSq = 8.0 / (kPi * kPi);

bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

}  // namespace

MarkedSet::MarkedSet(std::size_t domain_size, std::vector<std::size_t> marked)
    : domain_size_(domain_size), marked_(std::move(marked)) {
  if (!is_power_of_two(domain_size_) || domain_size_ < 2)
    throw DomainError("MarkedSet: domain size must be a power of two >= 2");
  qubit_count_ = 0;
  for (std::size_t n = domain_size_; n > 1; n >>= 1) ++qubit_count_;
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  if (!marked_.empty() && marked_.back() >= domain_size_)
    throw DomainError("MarkedSet: marked index outside the domain");
}

MarkedSet MarkedSet::first_k(std::size_t domain_size, std::size_t k) {
  if (k > domain_size) throw DomainError("MarkedSet::first_k: k exceeds the domain");
  std::vector<std::size_t> marked(k);
  for (std::size_t i = 0; i < k; ++i) marked[i] = i;
  return MarkedSet(domain_size, std::move(marked));
}

bool MarkedSet::contains(std::size_t index) const {
  return std::binary_search(marked_.begin(), marked_.end(), index);
}

GroverAngles GroverAngles::from_counts(std::size_t domain_size, std::size_t k) {
  if (k > domain_size) throw DomainError("GroverAngles: k exceeds the domain");
  const double ratio = static_cast<double>(k) / static_cast<double>(domain_size);
  GroverAngles a;
  a.sin_theta = std::sqrt(ratio);
  a.cos_theta = std::sqrt(1.0 - ratio);
  a.theta = std::asin(a.sin_theta);
  return a;
}

DenseUnitary phase_oracle(const MarkedSet& m) {
  std::vector<Complex> phases(m.domain_size(), Complex{1.0, 0.0});
  for (std::size_t j : m.marked()) phases[j] = Complex{-1.0, 0.0};
  return DenseUnitary::diagonal(HilbertDims::single(m.domain_size()), phases);
}

DenseUnitary bit_oracle(const MarkedSet& m) {
  const std::size_t n = m.domain_size();
  std::vector<std::size_t> image(2 * n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t f = m.contains(x) ? 1 : 0;
    image[2 * x + 0] = 2 * x + (0 ^ f);
    image[2 * x + 1] = 2 * x + (1 ^ f);
  }
  return DenseUnitary::permutation(HilbertDims::single(n).tensor(HilbertDims::single(2)), image);
}

DenseUnitary diffusion(int qubit_count) {
  if (qubit_count < 1) throw DomainError("diffusion: qubit count must be >= 1");
  const std::size_t n = std::size_t{1} << qubit_count;
  const double off = 2.0 / static_cast<double>(n);
  std::vector<Complex> entries(n * n, Complex{off, 0.0});
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Complex{off - 1.0, 0.0};
  return DenseUnitary::from_entries_unchecked(HilbertDims::single(n), std::move(entries));
}

DenseUnitary grover_step(const MarkedSet& m) {
  // G O_f; the oracle is a +-1 diagonal, so the product is G with marked
  // columns negated (bit-identical to the explicit matrix product).
  const std::size_t n = m.domain_size();
  const double off = 2.0 / static_cast<double>(n);
  std::vector<Complex> entries(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    const double sign = m.contains(c) ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r)
      entries[r * n + c] = Complex{sign * (r == c ? off - 1.0 : off), 0.0};
  }
  return DenseUnitary::from_entries_unchecked(HilbertDims::single(n), std::move(entries));
}

std::size_t grover_iteration_count(std::size_t domain_size, std::size_t k) {
  if (k == 0 || k >= domain_size)
    throw DomainError("grover_iteration_count: requires 1 <= k <= N-1");
  const double ratio = static_cast<double>(domain_size) / static_cast<double>(k);
  return static_cast<std::size_t>(std::floor(kPi / 4.0 * std::sqrt(ratio)));
}

SearchResult grover_search(const MarkedSet& m, Rng& rng) {
  if (m.count() == 0 || m.count() >= m.domain_size())
    throw DomainError("grover_search: rotation angle undefined for k in {0, N}");
  const std::size_t t = grover_iteration_count(m.domain_size(), m.count());
  const DenseUnitary step = grover_step(m);
  StateVector state = StateVector::uniform(HilbertDims::single(m.domain_size()));
  for (std::size_t i = 0; i < t; ++i) state = apply(step, state);
  const std::vector<double> probs = outcome_distribution(state, 0);
  double marked_prob = 0.0;
  for (std::size_t j : m.marked()) marked_prob += probs[j];
  const std::size_t outcome = rng.sample(probs);
  return SearchResult{outcome, m.contains(outcome), t, marked_prob};
}

namespace {

// theta' = vartheta pi, reflected into [0, pi/2]: an estimate of -theta shows
// up as vartheta close to 1 - theta/pi, and sin^2(pi - theta') = sin^2 theta'.
double fold_theta(double vartheta) {
  double theta = vartheta * kPi;
  if (theta > kPi / 2.0) theta = kPi - theta;
  return theta;
}

CountEstimate post_process(const MarkedSet& m, const PhaseEstimate& estimate) {
  const double theta = fold_theta(estimate.vartheta);
  const double n = static_cast<double>(m.domain_size());
  const double s = std::sin(theta);
  const bool exact_case = m.count() == 0 || m.count() == m.domain_size();
  CountEstimate out;
  out.k_est = s * s * n;
  out.theta_prime = theta;
  out.queries = (1LL << estimate.precision_bits) - 1;
  out.success_bound = exact_case ? 1.0 : kEightOverPiSq;
  return out;
}

}  // namespace

CountEstimate quantum_count(const MarkedSet& m, int p, Rng& rng) {
  const DenseUnitary step = grover_step(m);
  const StateVector psi = StateVector::uniform(HilbertDims::single(m.domain_size()));
  return post_process(m, phase_estimate(step, psi, p, rng));
}

double count_error_bound(std::size_t domain_size, std::size_t k, std::size_t big_p) {
  if (k == 0 || k >= domain_size) throw DomainError("count_error_bound: requires 0 < k < N");
  const double n = static_cast<double>(domain_size);
  const double kd = static_cast<double>(k);
  const double p = static_cast<double>(big_p);
  return 2.0 * kPi * std::sqrt(kd * (n - kd)) / p + kPi * kPi * n / (p * p);
}

double sin_sq_error_bound(double theta, std::size_t big_p) {
  const double p = static_cast<double>(big_p);
  return 2.0 * kPi * std::sin(theta) * std::cos(theta) / p + kPi * kPi / p;
}

std::string CountReport::to_csv() const {
  CsvWriter csv;
  csv.header({"trial", "outcome", "theta_prime", "k_est", "bound", "pass"});
  for (const CountTrial& t : trials) {
    csv.begin_row();
    csv.field(t.trial);
    csv.field(t.outcome);
    csv.field(t.theta_prime);
    csv.field(t.k_est);
    csv.field(t.bound);
    csv.field(t.pass);
    csv.end_row();
  }
  return csv.str();
}

CountReport quantum_count_experiment(const MarkedSet& m, int p, std::size_t trials,
                                     std::uint64_t seed) {
  CountReport report;
  report.domain_size = m.domain_size();
  report.k = m.count();
  report.precision_bits = p;
  report.seed = seed;

  const DenseUnitary step = grover_step(m);
  const StateVector psi = StateVector::uniform(HilbertDims::single(m.domain_size()));
  const PhaseEstimator estimator(step, psi, p);

  const bool exact_case = m.count() == 0 || m.count() == m.domain_size();
  report.bound =
      exact_case ? 0.0 : count_error_bound(m.domain_size(), m.count(), estimator.modulus());

  const Rng base(seed);
  std::size_t successes = 0;
  report.trials.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = base.substream(i);
    const PhaseEstimate estimate = estimator.sample(rng);
    const CountEstimate ce = post_process(m, estimate);
    const double err = std::abs(ce.k_est - static_cast<double>(m.count()));
    const bool pass = exact_case ? err == 0.0 : err <= report.bound;
    successes += pass ? 1 : 0;
    report.trials.push_back(
        {i, estimate.raw_outcome, ce.theta_prime, ce.k_est, report.bound, pass});
  }
  report.success_frequency =
      trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  const double q = exact_case ? 1.0 : kEightOverPiSq;
  const double sigma =
      trials == 0 ? 0.0 : std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
  report.threshold = q - 3.0 * sigma;
  report.pass = report.success_frequency >= report.threshold;
  return report;
}

}  // namespace qcount
