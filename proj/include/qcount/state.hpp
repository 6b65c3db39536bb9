#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qcount/hilbert.hpp"
#include "qcount/rng.hpp"

namespace qcount {

using Complex = std::complex<double>;

// Dense complex state vector over a (possibly mixed-radix) composite space.
// Checked factories produce unit vectors; direct_sum deliberately does not
// renormalize because it is used to assemble eigenvector candidates.
class StateVector {
 public:
  StateVector(HilbertDims dims, std::vector<Complex> amps);

  // |index> of the given space.
  static StateVector basis(HilbertDims dims, std::size_t index);
  // Uniform superposition of all basis states.
  static StateVector uniform(HilbertDims dims);
  // Validates unit norm eagerly.
  static StateVector unit(HilbertDims dims, std::vector<Complex> amps);

  const HilbertDims& dims() const { return dims_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  double norm() const;
  bool is_normalized(double tolerance) const;
  StateVector normalized() const;

  StateVector scaled(Complex factor) const;
  // Reinterpret the amplitudes over a different factorization of the same
  // total dimension.
  StateVector with_dims(HilbertDims dims) const;

 private:
  HilbertDims dims_;
  std::vector<Complex> amps_;
};

// <a|b>, conjugate-linear in the first argument.
Complex inner(const StateVector& a, const StateVector& b);

// Kronecker composition; dims are the concatenated factor lists.
StateVector tensor(const StateVector& a, const StateVector& b);

// Concatenated amplitude array over a single factor of dimension
// dim(a) + dim(b).  Not renormalized.
StateVector direct_sum(const StateVector& a, const StateVector& b);

struct MeasurementOutcome {
  std::size_t outcome_index;
  double probability;
  StateVector post_state;
};

// Exact probability vector for projective measurement of one register in the
// computational basis.
std::vector<double> outcome_distribution(const StateVector& s, std::size_t reg);

// Samples an outcome for the given register via inverse CDF over the exact
// distribution and returns the renormalized projected state.
MeasurementOutcome measure_register(const StateVector& s, std::size_t reg, Rng& rng);

}  // namespace qcount
