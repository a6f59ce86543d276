#ifndef FEC_ERRORS_HPP
#define FEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fec {

struct NonPrimitivePolynomial : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegreeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroInverse : std::domain_error {
  using std::domain_error::domain_error;
};
struct InvalidRadius : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPowerOfTwoLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidListSize : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct WrongRowCodeKind : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct LengthNotDivisibleBy4 : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonPositiveVariance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptyRecord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ConfigInvalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NoiseFileUnreadable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace fec

#endif // FEC_ERRORS_HPP
