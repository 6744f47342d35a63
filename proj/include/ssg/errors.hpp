#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssg {

enum class ErrorKind {
  SourceVertex,
  DanglingEdge,
  DuplicateId,
  NotComposable,
  InvalidGroup,
  NotAutomorphism,
  NotHomomorphism,
  CocycleViolation,
  VertexConditionViolation,
  NotEventuallyPeriodicWithinBound,
  MixedTriples,
  NotGCircuit,
  NotPseudoFree,
  NotComposableGerms,
  InvalidKatsuraData,
  UnsupportedBackend,
  RelationFailed,
  Parse,
  InvalidArgument,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace ssg
