#ifndef BENSON_ERRORS_HPP
#define BENSON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace benson {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The halfspace intersection is empty (or a cut removed every generator).
struct EmptyPolyhedron : Error {
  using Error::Error;
};

// A full line was found in a set that must be pointed.
struct LinealityDetected : Error {
  using Error::Error;
};

// An operation that requires a bounded V-rep was given rays.
struct RaysPresent : Error {
  using Error::Error;
};

// Pivoting or iteration limits degenerated below tolerance.
struct NumericalBreakdown : Error {
  using Error::Error;
};

// No feasible point exists inside the box.
struct InstanceInfeasible : Error {
  using Error::Error;
};

// The feasible set has no strictly interior point.
struct NoInteriorPoint : Error {
  using Error::Error;
};

// A cutting loop exceeded its configured cut budget.
struct IterationCap : Error {
  using Error::Error;
};

// The "inner" polytope is not contained in the "outer" one.
struct NotNested : Error {
  using Error::Error;
};

// A matrix that must have full row rank does not.
struct RankDeficient : Error {
  using Error::Error;
};

// Generator parameter out of the range where the construction is valid.
struct EpsTooLarge : Error {
  using Error::Error;
};

// Malformed input file or JSON object.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace benson

#endif
