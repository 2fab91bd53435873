#include "mcbdqm/grid.hpp"

#include <cmath>
#include <sstream>

#include "mcbdqm/errors.hpp"

namespace mcbdqm {

UniformGrid::UniformGrid(double a, double b, std::size_t n) : a_(a), b_(b), h_(0.0) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw ArgumentError("grid endpoints must be finite with a < b");
  }
  if (n < kMinNodes) {
    throw ArgumentError("grid needs at least 5 nodes, got " + std::to_string(n));
  }
  h_ = (b - a) / static_cast<double>(n - 1);
  nodes_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes_[i] = a + static_cast<double>(i) * h_;
  }
  nodes_.back() = b;
}

UniformGrid UniformGrid::with_spacing(double a, double b, double h) {
  if (!std::isfinite(h) || !(h > 0.0)) {
    throw ArgumentError("grid spacing must be positive and finite");
  }
  const double intervals = (b - a) / h;
  const double rounded = std::round(intervals);
  if (!(rounded >= 1.0) || std::abs(intervals - rounded) > 1e-9 * rounded) {
    std::ostringstream os;
    os << "spacing h = " << h << " does not divide [" << a << ", " << b
       << "] into a whole number of intervals";
    throw ArgumentError(os.str());
  }
  return UniformGrid(a, b, static_cast<std::size_t>(rounded) + 1);
}

double UniformGrid::knot(std::ptrdiff_t k) const noexcept {
  const auto n = static_cast<std::ptrdiff_t>(nodes_.size());
  if (k >= 1 && k <= n) {
    return nodes_[static_cast<std::size_t>(k - 1)];
  }
  return a_ + static_cast<double>(k - 1) * h_;
}

}  // namespace mcbdqm
