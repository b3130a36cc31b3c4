#include "slicelab/errors.hpp"

namespace slicelab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DecompositionFails: return "DecompositionFails";
    case ErrorKind::NotInSlice: return "NotInSlice";
    case ErrorKind::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorKind::NotInChart: return "NotInChart";
    case ErrorKind::NotInOpenLocus: return "NotInOpenLocus";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace slicelab
