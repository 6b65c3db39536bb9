#include "qcount/unitary.hpp"

#include <cmath>
#include <string>

#include "qcount/errors.hpp"
#include "qcount/tolerances.hpp"

namespace qcount {

DenseUnitary::DenseUnitary(HilbertDims dims, std::vector<Complex> entries)
    : dims_(std::move(dims)), n_(dims_.total()), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_)
    throw DimensionError("DenseUnitary: entry count does not match dims");
}

DenseUnitary DenseUnitary::identity(HilbertDims dims) {
  const std::size_t n = dims.total();
  std::vector<Complex> entries(n * n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = Complex{1.0, 0.0};
  return DenseUnitary(std::move(dims), std::move(entries));
}

DenseUnitary DenseUnitary::from_entries(HilbertDims dims, std::vector<Complex> entries) {
  DenseUnitary u(std::move(dims), std::move(entries));
  const double defect = u.max_unitarity_defect();
  if (defect > tol::unitarity)
    throw InvariantError("DenseUnitary::from_entries: matrix is not unitary (defect " +
                         std::to_string(defect) + ")");
  return u;
}

DenseUnitary DenseUnitary::from_entries_unchecked(HilbertDims dims,
                                                  std::vector<Complex> entries) {
  return DenseUnitary(std::move(dims), std::move(entries));
}

DenseUnitary DenseUnitary::permutation(HilbertDims dims, const std::vector<std::size_t>& image) {
  const std::size_t n = dims.total();
  if (image.size() != n) throw DimensionError("DenseUnitary::permutation: image size mismatch");
  std::vector<Complex> entries(n * n, Complex{0.0, 0.0});
  std::vector<bool> hit(n, false);
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t row = image[col];
    if (row >= n || hit[row])
      throw DomainError("DenseUnitary::permutation: image is not a bijection");
    hit[row] = true;
    entries[row * n + col] = Complex{1.0, 0.0};
  }
  return DenseUnitary(std::move(dims), std::move(entries));
}

DenseUnitary DenseUnitary::diagonal(HilbertDims dims, const std::vector<Complex>& phases) {
  const std::size_t n = dims.total();
  if (phases.size() != n) throw DimensionError("DenseUnitary::diagonal: phase count mismatch");
  std::vector<Complex> entries(n * n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(std::abs(phases[i]) - 1.0) > tol::unitarity)
      throw InvariantError("DenseUnitary::diagonal: entry without unit modulus");
    entries[i * n + i] = phases[i];
  }
  return DenseUnitary(std::move(dims), std::move(entries));
}

DenseUnitary DenseUnitary::dagger() const {
  std::vector<Complex> entries(n_ * n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) entries[c * n_ + r] = std::conj(at(r, c));
  return DenseUnitary(dims_, std::move(entries));
}

DenseUnitary DenseUnitary::with_dims(HilbertDims dims) const {
  if (dims.total() != n_) throw DimensionError("DenseUnitary::with_dims: total mismatch");
  return DenseUnitary(std::move(dims), entries_);
}

double DenseUnitary::max_unitarity_defect() const {
  double defect = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      Complex sum{0.0, 0.0};
      for (std::size_t k = 0; k < n_; ++k) sum += std::conj(at(k, r)) * at(k, c);
      if (r == c) sum -= Complex{1.0, 0.0};
      defect = std::max(defect, std::abs(sum));
    }
  }
  return defect;
}

DenseUnitary DenseUnitary::power(std::size_t exponent) const {
  DenseUnitary result = identity(dims_);
  for (std::size_t i = 0; i < exponent; ++i) result = multiply(*this, result);
  return result;
}

StateVector apply(const DenseUnitary& u, const StateVector& s) {
  if (u.size() != s.size())
    throw DimensionError("apply: operator and state dimensions differ");
  std::vector<Complex> out(s.size(), Complex{0.0, 0.0});
  for (std::size_t r = 0; r < u.size(); ++r) {
    Complex sum{0.0, 0.0};
    for (std::size_t c = 0; c < u.size(); ++c) sum += u.at(r, c) * s[c];
    out[r] = sum;
  }
  return StateVector(s.dims(), std::move(out));
}

DenseUnitary multiply(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.size() != b.size()) throw DimensionError("multiply: dimension mismatch");
  const std::size_t n = a.size();
  std::vector<Complex> entries(n * n, Complex{0.0, 0.0});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a.at(r, k);
      if (ark == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) entries[r * n + c] += ark * b.at(k, c);
    }
  return DenseUnitary::from_entries_unchecked(a.dims(), std::move(entries));
}

DenseUnitary tensor(const DenseUnitary& a, const DenseUnitary& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  std::vector<Complex> entries(n * n, Complex{0.0, 0.0});
  for (std::size_t ra = 0; ra < na; ++ra)
    for (std::size_t ca = 0; ca < na; ++ca) {
      const Complex f = a.at(ra, ca);
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t rb = 0; rb < nb; ++rb)
        for (std::size_t cb = 0; cb < nb; ++cb)
          entries[(ra * nb + rb) * n + (ca * nb + cb)] = f * b.at(rb, cb);
    }
  return DenseUnitary::from_entries_unchecked(a.dims().tensor(b.dims()), std::move(entries));
}

double max_abs_diff(const DenseUnitary& a, const DenseUnitary& b) {
  if (a.size() != b.size()) throw DimensionError("max_abs_diff: dimension mismatch");
  double dev = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    dev = std::max(dev, std::abs(a.entries()[i] - b.entries()[i]));
  return dev;
}

}  // namespace qcount
