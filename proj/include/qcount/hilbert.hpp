#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qcount/errors.hpp"

namespace qcount {

// Factorization of a composite Hilbert space into subsystem dimensions.
// Flat indexing is mixed-radix with the most significant factor first, so a
// qubit register |d1 d2 ... dp> has d1 as the high bit.
class HilbertDims {
 public:
  HilbertDims() = default;
  HilbertDims(std::initializer_list<std::size_t> factors)
      : HilbertDims(std::vector<std::size_t>(factors)) {}
  explicit HilbertDims(std::vector<std::size_t> factors);

  static HilbertDims qubits(std::size_t count);
  static HilbertDims single(std::size_t dim) { return HilbertDims({dim}); }

  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t factor(std::size_t i) const { return factors_.at(i); }
  std::size_t rank() const { return factors_.size(); }
  std::size_t total() const { return total_; }

  std::size_t flat_index(std::span<const std::size_t> digits) const;
  std::vector<std::size_t> digits(std::size_t flat) const;

  // Digit of one register without materializing the whole tuple.
  std::size_t digit(std::size_t flat, std::size_t reg) const;

  // Concatenation of factor lists (composite of the two spaces).
  HilbertDims tensor(const HilbertDims& other) const;

  bool operator==(const HilbertDims& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::size_t> factors_;
  std::size_t total_ = 1;
  // suffix_products_[i] = product of factors after position i
  std::vector<std::size_t> suffix_products_;
};

}  // namespace qcount
