// This file is part of hassepairs.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HASSEPAIRS_CORE_ERROR_HPP
#define HASSEPAIRS_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hasse {

enum class Err {
    NonPrimeBase,
    Overflow,
    DivisionByZero,
    FieldMismatch,
    ZeroLinearCoefficient,
    FieldTooLarge,
    ZeroPolynomial,
    MalformedDecimal,
    EqualInputs,
    NotHasse,
    NonNegative,
    HasseBoundViolated,
    NotFundamental,
    NotOddPair,
    NotEvenSupersingular,
    SingularModel,
    TargetOutOfHasseWindow,
    MissingFile,
    MalformedLine,
    NonMonic,
    UnknownDegree,
    CharacteristicDegree,
    VertexEscapes,
    EmptySet,
    MixedTypes,
    DegreeSetMismatch,
    UnequalCycles,
    BadDiscriminant,
    BoundTooLarge,
    TableTooSmall,
    InvalidArgument,
    Unsupported,
};

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

  private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
    throw Error(code, what);
}

} // namespace hasse

#endif
