#pragma once

#include <stdexcept>
#include <string>

namespace bprimes {

/// A mathematical hypothesis of an operation was violated (bad prime,
/// integral parameter, ...). The CLI maps these to exit status 1.
class HypothesisError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IntegralParameter : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class InvalidParams : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class PrimeTooSmall : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

class NotCoprime : public HypothesisError {
public:
    using HypothesisError::HypothesisError;
};

/// A computed B-set matched none of the shapes allowed by the subgroup
/// structure of a special prime.
class ShapeMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A computed density contradicts the case pattern expected for p = 2q+1.
class CaseViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two routes to the same quantity disagreed.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bprimes
