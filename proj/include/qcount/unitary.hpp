#pragma once

#include <vector>

#include "qcount/state.hpp"

namespace qcount {

// Dense square complex matrix acting on a composite space.  The checked
// factory validates ||U'U - I||_max; structural builders (identity,
// permutations, products, Kronecker and block compositions of unitaries)
// preserve unitarity by construction and skip the O(n^3) check.
class DenseUnitary {
 public:
  static DenseUnitary identity(HilbertDims dims);
  // Validates unitarity eagerly (tol::unitarity).
  static DenseUnitary from_entries(HilbertDims dims, std::vector<Complex> entries);
  // For matrices unitary by construction.
  static DenseUnitary from_entries_unchecked(HilbertDims dims, std::vector<Complex> entries);
  // column permutation: |j> -> |image[j]>
  static DenseUnitary permutation(HilbertDims dims, const std::vector<std::size_t>& image);
  static DenseUnitary diagonal(HilbertDims dims, const std::vector<Complex>& phases);

  const HilbertDims& dims() const { return dims_; }
  std::size_t size() const { return n_; }
  const Complex& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  Complex& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const std::vector<Complex>& entries() const { return entries_; }

  DenseUnitary dagger() const;
  DenseUnitary with_dims(HilbertDims dims) const;
  double max_unitarity_defect() const;  // ||U'U - I||_max
  bool is_unitary(double tolerance) const { return max_unitarity_defect() <= tolerance; }

  // U^exponent by repeated multiplication.
  DenseUnitary power(std::size_t exponent) const;

 private:
  DenseUnitary(HilbertDims dims, std::vector<Complex> entries);

  HilbertDims dims_;
  std::size_t n_ = 0;
  std::vector<Complex> entries_;  // row-major n_ x n_
};

// U * s; total dimensions must match, the state keeps its register structure.
StateVector apply(const DenseUnitary& u, const StateVector& s);

// Matrix product a * b (apply b first).
DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b);

// Kronecker product; dims are the concatenated factor lists.
DenseUnitary tensor(const DenseUnitary& a, const DenseUnitary& b);

// max_ij |a_ij - b_ij|
double max_abs_diff(const DenseUnitary& a, const DenseUnitary& b);

}  // namespace qcount
