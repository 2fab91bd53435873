#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mcbdqm {

/// Tridiagonal matrix in band storage. Row r reads
/// (sub[r-1], diag[r], sup[r]).
struct TriDiagMatrix {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> sup;

  std::size_t size() const noexcept { return diag.size(); }

  /// Throws ArgumentError unless sub and sup have size() - 1 entries.
  void validate() const;

  /// M * x.
  std::vector<double> apply(std::span<const double> x) const;
};

/// LU factorization without pivoting (Thomas algorithm), reusable for many
/// right-hand sides. Throws SingularMatrixError naming the row with a zero pivot.
class ThomasFactorization {
 public:
  explicit ThomasFactorization(const TriDiagMatrix& m);

  std::size_t size() const noexcept { return pivot_.size(); }

  /// Solves M x = rhs into x (x may alias rhs).
  void solve(std::span<const double> rhs, std::span<double> x) const;
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  std::vector<double> sub_;
  std::vector<double> pivot_;
  std::vector<double> upper_;  // sup[r] / pivot[r]
};

std::vector<double> thomas_solve(const TriDiagMatrix& m, std::span<const double> rhs);

}  // namespace mcbdqm
