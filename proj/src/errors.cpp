#include "bospec/errors.hpp"

#include <sstream>

namespace bospec {

namespace {
template <class... Args>
std::string concat(const Args&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}
}  // namespace

RealityViolation::RealityViolation(long mode, double defect)
    : Error(concat("Fourier mode ", mode, " violates V_{-k} = conj(V_k) (defect ", defect, ")")),
      mode_(mode),
      defect_(defect) {}

NonHermitianMatrix::NonHermitianMatrix(std::size_t row, std::size_t col, double defect)
    : Error(concat("matrix is not Hermitian at (", row, ", ", col, "), defect ", defect)) {}

EigensolverFailure::EigensolverFailure(std::size_t dim, double norm, int info)
    : Error(concat("Hermitian eigensolver did not converge (dim ", dim, ", norm ", norm,
                   ", info ", info, ")")),
      dim_(dim),
      norm_(norm) {}

SingularMatrix::SingularMatrix(std::size_t column, double pivot, double norm)
    : Error(concat("matrix is numerically singular: pivot ", pivot, " in column ", column,
                   " (norm ", norm, ")")),
      pivot_(pivot) {}

BreakingTimeExceeded::BreakingTimeExceeded(double t, double breaking_time)
    : Error(concat("time ", t, " is beyond the admissible window; estimated breaking time ",
                   breaking_time)),
      breaking_time_(breaking_time) {}

}  // namespace bospec
