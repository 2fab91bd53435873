#include "mcbdqm/dense_matrix.hpp"

#include <algorithm>

#include "mcbdqm/errors.hpp"

namespace mcbdqm {

double DenseMatrix::row_dot(std::size_t r, std::span<const double> x) const noexcept {
  return row_dot(r, x, 0, cols_);
}

double DenseMatrix::row_dot(std::size_t r, std::span<const double> x, std::size_t begin,
                            std::size_t end) const noexcept {
  // four partial sums keep the loop vectorizable without -ffast-math; the
  // partial sum a column lands in depends only on its index
  const std::size_t blocked = cols_ - cols_ % 4;
  const std::size_t block_end = std::max(begin, std::min(blocked, (end + 3) / 4 * 4));
  const double* a = data_.data() + r * cols_ + begin;
  const double* b = x.data() + begin;
  const std::size_t count = block_end - begin;
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t k = 0; k < count; k += 4) {
    s0 += a[k] * b[k];
    s1 += a[k + 1] * b[k + 1];
    s2 += a[k + 2] * b[k + 2];
    s3 += a[k + 3] * b[k + 3];
  }
  const double* row_start = data_.data() + r * cols_;
  for (std::size_t k = std::max(block_end, blocked); k < end; ++k) s0 += row_start[k] * x[k];
  return (s0 + s1) + (s2 + s3);
}

std::pair<std::size_t, std::size_t> DenseMatrix::row_support(std::size_t r) const noexcept {
  const auto values = row(r);
  std::size_t first = 0;
  while (first < cols_ && values[first] == 0.0) ++first;
  if (first == cols_) return {0, 0};
  std::size_t last = cols_;
  while (values[last - 1] == 0.0) --last;
  return {first - first % 4, last};
}

void DenseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != cols_ || y.size() != rows_) {
    throw ArgumentError("matrix-vector product: size mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) y[r] = row_dot(r, x);
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> y(rows_);
  multiply(x, y);
  return y;
}

}  // namespace mcbdqm
