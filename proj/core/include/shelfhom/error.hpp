#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace shelfhom {

/// Broad failure class. The CLI maps these onto exit codes 2, 3 and 4.
enum class ErrorCategory { Input, Resource, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorCategory::Input, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorCategory::Resource, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorCategory::Internal, what) {}
};

struct OutOfRange : InputError {
  using InputError::InputError;
};

struct SizeMismatch : InputError {
  using InputError::InputError;
};

struct ParseError : InputError {
  using InputError::InputError;
};

/// First triple (x, y, z) in lexicographic order with (x*y)*z != (x*z)*(y*z).
struct DistributivityViolation : InputError {
  DistributivityViolation(std::size_t x_, std::size_t y_, std::size_t z_, std::size_t lhs_,
                          std::size_t rhs_);
  std::size_t x, y, z, lhs, rhs;
};

/// First (k, l, x, y, z) with (x *k y) *l z != (x *l z) *k (y *l z).
struct MutualDistributivityViolation : InputError {
  MutualDistributivityViolation(std::size_t k_, std::size_t l_, std::size_t x_, std::size_t y_,
                                std::size_t z_);
  std::size_t k, l, x, y, z;
};

struct SpecPreconditionFailed : InputError {
  using InputError::InputError;
};

struct RetractionNotIdentityOnA : InputError {
  using InputError::InputError;
};

struct EmptyList : InputError {
  using InputError::InputError;
};

struct DegreeNegative : InputError {
  using InputError::InputError;
};

struct DegreeOutOfRange : InputError {
  using InputError::InputError;
};

struct NotASpindle : InputError {
  using InputError::InputError;
};

struct DegenerateNotSubcomplex : InputError {
  using InputError::InputError;
};

struct ChainMapViolation : InputError {
  using InputError::InputError;
};

struct PracticalSizeLimit : ResourceError {
  using ResourceError::ResourceError;
};

/// Basis or memory guard tripped before any allocation happened.
struct CapExceeded : ResourceError {
  using ResourceError::ResourceError;
};

struct DDNotZero : InternalError {
  using InternalError::InternalError;
};

}  // namespace shelfhom
