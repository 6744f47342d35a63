#include "ssg/errors.hpp"

namespace ssg {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SourceVertex: return "SourceVertex";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::CocycleViolation: return "CocycleViolation";
    case ErrorKind::VertexConditionViolation: return "VertexConditionViolation";
    case ErrorKind::NotEventuallyPeriodicWithinBound: return "NotEventuallyPeriodicWithinBound";
    case ErrorKind::MixedTriples: return "MixedTriples";
    case ErrorKind::NotGCircuit: return "NotGCircuit";
    case ErrorKind::NotPseudoFree: return "NotPseudoFree";
    case ErrorKind::NotComposableGerms: return "NotComposableGerms";
    case ErrorKind::InvalidKatsuraData: return "InvalidKatsuraData";
    case ErrorKind::UnsupportedBackend: return "UnsupportedBackend";
    case ErrorKind::RelationFailed: return "RelationFailed";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

}  // namespace ssg
