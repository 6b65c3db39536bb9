#include "qcount/phase.hpp"

#include "qcount/errors.hpp"

namespace qcount {

namespace {

HilbertDims composite_dims(std::size_t big_p, const DenseUnitary& u) {
  return HilbertDims::single(big_p).tensor(HilbertDims::single(u.size()));
}

}  // namespace

DenseUnitary controlled_powers(const DenseUnitary& u, int p) {
  if (p < 1) throw DomainError("controlled_powers: p must be >= 1");
  const std::size_t big_p = std::size_t{1} << p;
  const std::size_t n = u.size();
  const std::size_t total = big_p * n;
  std::vector<Complex> entries(total * total, Complex{0.0, 0.0});
  DenseUnitary block = DenseUnitary::identity(u.dims());
  for (std::size_t b = 0; b < big_p; ++b) {
    if (b > 0) block = multiply(u, block);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        entries[(b * n + r) * total + (b * n + c)] = block.at(r, c);
  }
  return DenseUnitary::from_entries_unchecked(composite_dims(big_p, u), std::move(entries));
}

DenseUnitary controlled_powers_circuit(const DenseUnitary& u, int p) {
  if (p < 1) throw DomainError("controlled_powers_circuit: p must be >= 1");
  const std::size_t big_p = std::size_t{1} << p;
  const std::size_t n = u.size();
  const std::size_t total = big_p * n;
  DenseUnitary result = DenseUnitary::identity(composite_dims(big_p, u));
  DenseUnitary power = u;  // U^(2^j)
  for (int j = 0; j < p; ++j) {
    if (j > 0) power = multiply(power, power);
    std::vector<Complex> entries(total * total, Complex{0.0, 0.0});
    for (std::size_t b = 0; b < big_p; ++b) {
      const bool on = (b >> j) & 1U;
      for (std::size_t r = 0; r < n; ++r) {
        if (on) {
          for (std::size_t c = 0; c < n; ++c)
            entries[(b * n + r) * total + (b * n + c)] = power.at(r, c);
        } else {
          entries[(b * n + r) * total + (b * n + r)] = Complex{1.0, 0.0};
        }
      }
    }
    result = multiply(DenseUnitary::from_entries_unchecked(result.dims(), std::move(entries)),
                      result);
  }
  return result;
}

std::vector<double> phase_estimate_distribution(const DenseUnitary& u, const StateVector& psi,
                                                int p, PhaseEstimationOptions options) {
  if (u.size() != psi.size())
    throw DimensionError("phase_estimate_distribution: operator and state dimensions differ");
  const std::size_t big_p = std::size_t{1} << p;
  const HilbertDims reg_dims = HilbertDims::single(big_p).tensor(psi.dims());

  StateVector state = options.use_full_qft_prep
                          ? apply(tensor(qft(p).with_dims(HilbertDims::single(big_p)),
                                         DenseUnitary::identity(psi.dims())),
                                  tensor(StateVector::basis(HilbertDims::single(big_p), 0), psi))
                          : tensor(StateVector::uniform(HilbertDims::single(big_p)), psi);
  state = state.with_dims(reg_dims);

  state = apply(controlled_powers(u, p), state);
  state = apply(tensor(qft_inverse(p).with_dims(HilbertDims::single(big_p)),
                       DenseUnitary::identity(psi.dims())),
                state);
  return outcome_distribution(state, 0);
}

PhaseEstimator::PhaseEstimator(const DenseUnitary& u, const StateVector& psi, int p,
                               PhaseEstimationOptions options)
    : precision_bits_(p), distribution_(phase_estimate_distribution(u, psi, p, options)) {}

PhaseEstimate PhaseEstimator::sample(Rng& rng) const {
  const std::size_t outcome = rng.sample(distribution_);
  return PhaseEstimate{outcome,
                       static_cast<double>(outcome) / static_cast<double>(distribution_.size()),
                       precision_bits_};
}

PhaseEstimate phase_estimate(const DenseUnitary& u, const StateVector& psi, int p, Rng& rng,
                             PhaseEstimationOptions options) {
  return PhaseEstimator(u, psi, p, options).sample(rng);
}

}  // namespace qcount
