#include "mcbdqm/tridiagonal.hpp"

#include "mcbdqm/errors.hpp"

namespace mcbdqm {

void TriDiagMatrix::validate() const {
  if (diag.empty()) {
    throw ArgumentError("tridiagonal matrix is empty");
  }
  if (sub.size() + 1 != diag.size() || sup.size() + 1 != diag.size()) {
    throw ArgumentError("tridiagonal bands must have lengths N - 1, N, N - 1");
  }
}

std::vector<double> TriDiagMatrix::apply(std::span<const double> x) const {
  validate();
  const std::size_t n = size();
  if (x.size() != n) {
    throw ArgumentError("tridiagonal apply: vector length mismatch");
  }
  std::vector<double> y(n);
  for (std::size_t r = 0; r < n; ++r) {
    double acc = diag[r] * x[r];
    if (r > 0) acc += sub[r - 1] * x[r - 1];
    if (r + 1 < n) acc += sup[r] * x[r + 1];
    y[r] = acc;
  }
  return y;
}

ThomasFactorization::ThomasFactorization(const TriDiagMatrix& m) {
  m.validate();
  const std::size_t n = m.size();
  sub_ = m.sub;
  pivot_.resize(n);
  upper_.assign(n > 0 ? n - 1 : 0, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    double p = m.diag[r];
    if (r > 0) p -= m.sub[r - 1] * upper_[r - 1];
    if (p == 0.0) {
      throw SingularMatrixError(r);
    }
    pivot_[r] = p;
    if (r + 1 < n) upper_[r] = m.sup[r] / p;
  }
}

void ThomasFactorization::solve(std::span<const double> rhs, std::span<double> x) const {
  const std::size_t n = size();
  if (rhs.size() != n || x.size() != n) {
    throw ArgumentError("Thomas solve: vector length mismatch");
  }
  // forward sweep: L z = rhs
  double prev = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double z = rhs[r];
    if (r > 0) z -= sub_[r - 1] * prev;
    z /= pivot_[r];
    x[r] = z;
    prev = z;
  }
  // back substitution: U x = z
  for (std::size_t r = n - 1; r-- > 0;) {
    x[r] -= upper_[r] * x[r + 1];
  }
}

std::vector<double> ThomasFactorization::solve(std::span<const double> rhs) const {
  std::vector<double> x(rhs.size());
  solve(rhs, x);
  return x;
}

std::vector<double> thomas_solve(const TriDiagMatrix& m, std::span<const double> rhs) {
  return ThomasFactorization(m).solve(rhs);
}

}  // namespace mcbdqm
