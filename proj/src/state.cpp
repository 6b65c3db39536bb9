#include "qcount/state.hpp"

#include <cmath>
#include <string>

#include "qcount/errors.hpp"
#include "qcount/tolerances.hpp"

namespace qcount {

StateVector::StateVector(HilbertDims dims, std::vector<Complex> amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (amps_.size() != dims_.total())
    throw DimensionError("StateVector: amplitude count " + std::to_string(amps_.size()) +
                         " does not match total dimension " + std::to_string(dims_.total()));
}

StateVector StateVector::basis(HilbertDims dims, std::size_t index) {
  if (index >= dims.total()) throw DimensionError("StateVector::basis: index out of range");
  std::vector<Complex> amps(dims.total(), Complex{0.0, 0.0});
  amps[index] = Complex{1.0, 0.0};
  return StateVector(std::move(dims), std::move(amps));
}

StateVector StateVector::uniform(HilbertDims dims) {
  const double amp = 1.0 / std::sqrt(static_cast<double>(dims.total()));
  std::vector<Complex> amps(dims.total(), Complex{amp, 0.0});
  return StateVector(std::move(dims), std::move(amps));
}

StateVector StateVector::unit(HilbertDims dims, std::vector<Complex> amps) {
  StateVector s(std::move(dims), std::move(amps));
  if (!s.is_normalized(tol::unit_norm))
    throw InvariantError("StateVector::unit: vector is not normalized");
  return s;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

bool StateVector::is_normalized(double tolerance) const {
  return std::abs(norm() - 1.0) <= tolerance;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("StateVector::normalized: zero vector");
  return scaled(Complex{1.0 / n, 0.0});
}

StateVector StateVector::scaled(Complex factor) const {
  std::vector<Complex> amps(amps_);
  for (Complex& a : amps) a *= factor;
  return StateVector(dims_, std::move(amps));
}

StateVector StateVector::with_dims(HilbertDims dims) const {
  if (dims.total() != dims_.total())
    throw DimensionError("StateVector::with_dims: total dimension mismatch");
  return StateVector(std::move(dims), amps_);
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (!(a.dims() == b.dims()))
    throw DimensionError("inner: operands live in different spaces");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<Complex> amps(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) amps[i * b.size() + j] = a[i] * b[j];
  return StateVector(a.dims().tensor(b.dims()), std::move(amps));
}

StateVector direct_sum(const StateVector& a, const StateVector& b) {
  std::vector<Complex> amps;
  amps.reserve(a.size() + b.size());
  amps.insert(amps.end(), a.amplitudes().begin(), a.amplitudes().end());
  amps.insert(amps.end(), b.amplitudes().begin(), b.amplitudes().end());
  return StateVector(HilbertDims::single(a.size() + b.size()), std::move(amps));
}

std::vector<double> outcome_distribution(const StateVector& s, std::size_t reg) {
  const HilbertDims& dims = s.dims();
  if (reg >= dims.rank()) throw DimensionError("outcome_distribution: register out of range");
  std::vector<double> probs(dims.factor(reg), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) probs[dims.digit(i, reg)] += std::norm(s[i]);
  return probs;
}

MeasurementOutcome measure_register(const StateVector& s, std::size_t reg, Rng& rng) {
  const std::vector<double> probs = outcome_distribution(s, reg);
  double total = 0.0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > tol::prob_sum)
    throw InvariantError("measure_register: state is not normalized");
  const std::size_t outcome = rng.sample(probs);
  const double p = probs[outcome];
  if (p <= 0.0)
    throw DomainError("measure_register: sampled a zero-probability outcome");
  std::vector<Complex> amps(s.size(), Complex{0.0, 0.0});
  const double scale = 1.0 / std::sqrt(p);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.dims().digit(i, reg) == outcome) amps[i] = s[i] * scale;
  }
  return MeasurementOutcome{outcome, p, StateVector(s.dims(), std::move(amps))};
}

}  // namespace qcount
