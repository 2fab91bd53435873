#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mcbdqm {

/// Row-major dense matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Dot product of row r with x (x.size() == cols()).
  double row_dot(std::size_t r, std::span<const double> x) const noexcept;

  /// Same sum restricted to columns [begin, end), begin a multiple of 4.
  /// Bit-identical to row_dot when the skipped entries are zero.
  double row_dot(std::size_t r, std::span<const double> x, std::size_t begin,
                 std::size_t end) const noexcept;

  /// Smallest [begin, end) holding every nonzero of row r, begin rounded
  /// down to a multiple of 4. Empty rows give [0, 0).
  std::pair<std::size_t, std::size_t> row_support(std::size_t r) const noexcept;

  /// y = A x. Throws ArgumentError on size mismatch.
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(std::span<const double> x) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace mcbdqm
