#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mcbdqm {

/// Uniformly spaced nodes a = x_1 < ... < x_N = b. Storage is 0-based:
/// node(0) == a, node(size() - 1) == b.
class UniformGrid {
 public:
  static constexpr std::size_t kMinNodes = 5;

  /// Throws ArgumentError unless a < b (both finite) and n >= 5.
  UniformGrid(double a, double b, std::size_t n);

  /// Grid with spacing h; (b - a) / h must be an integer to relative 1e-9.
  static UniformGrid with_spacing(double a, double b, double h);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double h() const noexcept { return h_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  double node(std::size_t i) const { return nodes_[i]; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  /// Location of knot x_k in 1-based knot labels, extended past the ends:
  /// knot(0) = a - h, knot(1) = a, knot(N) = b, knot(N + 1) = b + h.
  double knot(std::ptrdiff_t k) const noexcept;

 private:
  double a_;
  double b_;
  double h_;
  std::vector<double> nodes_;
};

}  // namespace mcbdqm
