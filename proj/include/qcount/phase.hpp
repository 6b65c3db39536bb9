#pragma once

#include <vector>

#include "qcount/gates.hpp"
#include "qcount/rng.hpp"

namespace qcount {

// Controlled-powers operator on [2^p] x dims(u): |b>|psi> -> |b> U^b |psi>,
// assembled block-diagonally from successive powers of u.
DenseUnitary controlled_powers(const DenseUnitary& u, int p);

// Same operator built the way the circuit does it: one controlled U^(2^j)
// factor per control bit j (bit 0 least significant), powers by repeated
// squaring.
DenseUnitary controlled_powers_circuit(const DenseUnitary& u, int p);

struct PhaseEstimate {
  std::size_t raw_outcome;  // omega' in [0, P)
  double vartheta;          // omega' / P
  int precision_bits;       // p
};

struct PhaseEstimationOptions {
  // The register preparation on |0...0> is a uniform superposition either
  // way; this switches between the H^p shortcut and the literal QFT_P.
  bool use_full_qft_prep = false;
};

// Exact first-register outcome distribution of the phase-estimation circuit:
// prepare |0>^p (x) psi, uniform-superpose the first register, apply the
// controlled powers of u, apply QFT^-1 (x) I, marginalize register 0.
std::vector<double> phase_estimate_distribution(const DenseUnitary& u, const StateVector& psi,
                                                int p, PhaseEstimationOptions options = {});

// Precomputed distribution for repeated sampling of the same circuit.  Each
// sample is one full run of the procedure (P - 1 oracle applications).
class PhaseEstimator {
 public:
  PhaseEstimator(const DenseUnitary& u, const StateVector& psi, int p,
                 PhaseEstimationOptions options = {});

  const std::vector<double>& distribution() const { return distribution_; }
  int precision_bits() const { return precision_bits_; }
  std::size_t modulus() const { return distribution_.size(); }  // P

  PhaseEstimate sample(Rng& rng) const;

 private:
  int precision_bits_;
  std::vector<double> distribution_;
};

// Single run: sample the first register and return omega'/P.
PhaseEstimate phase_estimate(const DenseUnitary& u, const StateVector& psi, int p, Rng& rng,
                             PhaseEstimationOptions options = {});

}  // namespace qcount
