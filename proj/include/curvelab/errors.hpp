#pragma once

#include <stdexcept>
#include <string>

namespace curvelab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonPrimeCharacteristic : Error {
  explicit NonPrimeCharacteristic(const std::string& m) : Error(m) {}
};
struct FieldTooLarge : Error {
  explicit FieldTooLarge(const std::string& m) : Error(m) {}
};
struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& m) : Error(m) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& m) : Error(m) {}
};
struct NotAnExtension : Error {
  explicit NotAnExtension(const std::string& m) : Error(m) {}
};
struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& m) : Error(m) {}
};
struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& m) : Error(m) {}
};
struct DegreeTooSmall : Error {
  explicit DegreeTooSmall(const std::string& m) : Error(m) {}
};
struct ZeroDivisor : Error {
  explicit ZeroDivisor(const std::string& m) : Error(m) {}
};
struct VariableAbsent : Error {
  explicit VariableAbsent(const std::string& m) : Error(m) {}
};
struct SyntaxError : Error {
  size_t position;
  SyntaxError(const std::string& m, size_t pos) : Error(m), position(pos) {}
};
struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& m) : Error(m) {}
};
struct PthPower : Error {
  explicit PthPower(const std::string& m) : Error(m) {}
};
struct PointNotOnCurve : Error {
  explicit PointNotOnCurve(const std::string& m) : Error(m) {}
};
struct SingularPointError : Error {
  explicit SingularPointError(const std::string& m) : Error(m) {}
};
struct NotSingular : Error {
  explicit NotSingular(const std::string& m) : Error(m) {}
};
struct LineMissesPoint : Error {
  explicit LineMissesPoint(const std::string& m) : Error(m) {}
};
struct ResolutionDepthExceeded : Error {
  explicit ResolutionDepthExceeded(const std::string& m) : Error(m) {}
};
struct NotEnoughPoints : Error {
  explicit NotEnoughPoints(const std::string& m) : Error(m) {}
};
struct GenusUncertain : Error {
  explicit GenusUncertain(const std::string& m) : Error(m) {}
};
struct UnknownExample : Error {
  explicit UnknownExample(const std::string& m) : Error(m) {}
};
struct InternalError : Error {
  explicit InternalError(const std::string& m) : Error(m) {}
};

}  // namespace curvelab
