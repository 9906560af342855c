#ifndef SIGMA_ERROR_HPP
#define SIGMA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sigma {

enum class Err {
  UnitIdeal,
  LevelTooSmall,
  BudgetExceeded,
  NotStabilized,
  LevelNotBuilt,
  AmbientMismatch,
  UnrecognizedGeneratorType,
  Unsupported,
  FactorDegreeExceeded,
  ParseError,
  NotATorus,
  NotCharacterCoefficients,
  NotInvertible,
  BadInput,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::UnitIdeal: return "UnitIdeal";
    case Err::LevelTooSmall: return "LevelTooSmall";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::NotStabilized: return "NotStabilized";
    case Err::LevelNotBuilt: return "LevelNotBuilt";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::UnrecognizedGeneratorType: return "UnrecognizedGeneratorType";
    case Err::Unsupported: return "Unsupported";
    case Err::FactorDegreeExceeded: return "FactorDegreeExceeded";
    case Err::ParseError: return "ParseError";
    case Err::NotATorus: return "NotATorus";
    case Err::NotCharacterCoefficients: return "NotCharacterCoefficients";
    case Err::NotInvertible: return "NotInvertible";
    case Err::BadInput: return "BadInput";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace sigma

#endif
