#ifndef FOLQ_ERROR_HPP
#define FOLQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace folq {

enum class Errc {
  // user / input errors
  FieldMismatch,
  VariableMismatch,
  NotAUnit,
  RDivisibleByP,
  ExponentNotDivisible,
  AllZero,
  NonDivisible,
  ZeroDerivation,
  CenterNotOnExceptional,
  UnsupportedCharacteristic,
  NotPClosed,
  InvalidLambda,
  SyntaxError,
  UnknownVariable,
  BadConfig,
  NotInNormalFormReach,
  BasisConditionsUnattainable,
  // precision errors
  InsufficientPrecision,
  PrecisionTooLow,
  NoRelationFound,
  // field extension needed
  NoRootInField,
  // should never escape
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// Exit-code classes used by the CLI: 1 user error, 2 precision, 3 field
// extension needed, 4 internal.
inline int exit_class(Errc c) {
  switch (c) {
    case Errc::InsufficientPrecision:
    case Errc::PrecisionTooLow:
    case Errc::NoRelationFound:
      return 2;
    case Errc::NoRootInField:
      return 3;
    case Errc::Internal:
      return 4;
    default:
      return 1;
  }
}

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void check(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace folq

#endif
