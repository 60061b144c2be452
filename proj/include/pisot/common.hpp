#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pisot {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/* Thrown when a caller breaks a documented precondition: bad dimensions,
 * malformed input, values outside the advertised domain.  The CLI maps this
 * to exit code 2. */
struct ContractViolation : std::runtime_error {
  explicit ContractViolation(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw ContractViolation(msg);
}

}  // namespace pisot
