#include "mcbdqm/errors.hpp"

#include <sstream>

namespace mcbdqm {

SingularMatrixError::SingularMatrixError(std::size_t row)
    : std::runtime_error("singular tridiagonal matrix: zero pivot at row " +
                         std::to_string(row)),
      row_(row) {}

namespace {
std::string divergence_message(int stage, double time) {
  std::ostringstream os;
  os.precision(17);
  os << "non-finite state produced at stage " << stage << " of the step starting at t = "
     << time;
  return os.str();
}
}  // namespace

DivergenceError::DivergenceError(int stage, double time)
    : std::runtime_error(divergence_message(stage, time)), stage_(stage), time_(time) {}

}  // namespace mcbdqm
