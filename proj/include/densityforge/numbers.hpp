#ifndef DENSITYFORGE_NUMBERS_HPP
#define DENSITYFORGE_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace df {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exhaustive enumeration was asked to visit a module larger than the
// configured element bound.
struct SizeBound : std::runtime_error {
  explicit SizeBound(const std::string& what) : std::runtime_error(what) {}
};

// Interpolation produced a non-integer coefficient; the degree bound or the
// point set is wrong.
struct NonIntegralCoefficient : std::runtime_error {
  explicit NonIntegralCoefficient(const std::string& what)
      : std::runtime_error(what) {}
};

// A surplus interpolation point disagrees with the fitted polynomial.
struct ExtraPointMismatch : std::runtime_error {
  explicit ExtraPointMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what)
      : std::runtime_error(what) {}
};

// Denominator vanishes at s = 0 even after full reduction.
struct PoleAtCenter : std::runtime_error {
  explicit PoleAtCenter(const std::string& what) : std::runtime_error(what) {}
};

// The vanishing claimed for the unmatched parity case depends on input the
// library does not model; the call is refused instead.
struct ParityMismatch : std::runtime_error {
  explicit ParityMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace df

#endif
