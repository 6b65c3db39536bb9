#include "qcount/hilbert.hpp"

#include <string>

namespace qcount {

HilbertDims::HilbertDims(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DimensionError("HilbertDims: at least one factor required");
  for (std::size_t f : factors_) {
    if (f < 1) throw DimensionError("HilbertDims: every factor must be >= 1");
  }
  suffix_products_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (i + 1 < factors_.size()) suffix_products_[i] = suffix_products_[i + 1] * factors_[i + 1];
  }
  total_ = suffix_products_[0] * factors_[0];
}

HilbertDims HilbertDims::qubits(std::size_t count) {
  if (count < 1) throw DimensionError("HilbertDims::qubits: count must be >= 1");
  return HilbertDims(std::vector<std::size_t>(count, 2));
}

std::size_t HilbertDims::flat_index(std::span<const std::size_t> digits) const {
  if (digits.size() != factors_.size())
    throw DimensionError("HilbertDims::flat_index: digit tuple has wrong rank");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= factors_[i])
      throw DimensionError("HilbertDims::flat_index: digit " + std::to_string(digits[i]) +
                           " out of range for factor " + std::to_string(factors_[i]));
    flat += digits[i] * suffix_products_[i];
  }
  return flat;
}

std::vector<std::size_t> HilbertDims::digits(std::size_t flat) const {
  if (flat >= total_) throw DimensionError("HilbertDims::digits: index out of range");
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    out[i] = (flat / suffix_products_[i]) % factors_[i];
  }
  return out;
}

std::size_t HilbertDims::digit(std::size_t flat, std::size_t reg) const {
  if (reg >= factors_.size()) throw DimensionError("HilbertDims::digit: register out of range");
  return (flat / suffix_products_[reg]) % factors_[reg];
}

HilbertDims HilbertDims::tensor(const HilbertDims& other) const {
  std::vector<std::size_t> combined = factors_;
  combined.insert(combined.end(), other.factors_.begin(), other.factors_.end());
  return HilbertDims(std::move(combined));
}

}  // namespace qcount
