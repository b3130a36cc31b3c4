#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slicelab {

enum class ErrorKind {
  DivisionByZero,
  SingularMatrix,
  DecompositionFails,
  NotInSlice,
  InvalidCoordinate,
  NotInChart,
  NotInOpenLocus,
  SamplingExhausted,
  InvalidArgument,
  InternalError,
};

std::string_view to_string(ErrorKind kind);

/// Base class for every error raised by the library. The kind is the
/// machine-readable tag; what() carries a human-readable detail line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define SLICELAB_DEFINE_ERROR(Name)                                            \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& detail) : Error(ErrorKind::Name, detail) {} \
  };

SLICELAB_DEFINE_ERROR(DivisionByZero)
SLICELAB_DEFINE_ERROR(SingularMatrix)
SLICELAB_DEFINE_ERROR(DecompositionFails)
SLICELAB_DEFINE_ERROR(NotInSlice)
SLICELAB_DEFINE_ERROR(InvalidCoordinate)
SLICELAB_DEFINE_ERROR(NotInChart)
SLICELAB_DEFINE_ERROR(NotInOpenLocus)
SLICELAB_DEFINE_ERROR(SamplingExhausted)
SLICELAB_DEFINE_ERROR(InvalidArgument)
SLICELAB_DEFINE_ERROR(InternalError)

#undef SLICELAB_DEFINE_ERROR

}  // namespace slicelab
