#pragma once

#include <stdexcept>

namespace cdg {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A value lies outside the mathematical domain of an operation
// (zero scalar, composite where a prime is required, and so on).
class DomainError : public Error {
public:
  using Error::Error;
};

// A requested element does not exist (e.g. no residue of the given order).
class NoSuchElementError : public Error {
public:
  using Error::Error;
};

class SingularMatrixError : public Error {
public:
  using Error::Error;
};

// Malformed or inconsistent descriptor: unknown generator label,
// dimension mismatch, bad JSON shape.
class DescriptorError : public Error {
public:
  using Error::Error;
};

// A coprimality precondition failed.
class CoprimalityError : public Error {
public:
  using Error::Error;
};

// No module with the requested property exists for the given input.
class NoSuchModuleError : public Error {
public:
  using Error::Error;
};

// An enumeration, class-count, or dimension cap was exceeded.
class CapError : public Error {
public:
  using Error::Error;
};

class NormalityError : public Error {
public:
  using Error::Error;
};

class NonSolvableError : public Error {
public:
  using Error::Error;
};

// Invalid construction parameters or an action that is not a homomorphism.
class ConstructionError : public Error {
public:
  using Error::Error;
};

// An exact-arithmetic procedure stalled (e.g. eigenspace splitting);
// the caller may retry with different method parameters.
class NumericalMethodError : public Error {
public:
  using Error::Error;
};

// Cross-validation found a certificate claim contradicted by brute force.
class CertificationError : public Error {
public:
  using Error::Error;
};

}  // namespace cdg
