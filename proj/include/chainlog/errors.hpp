#pragma once

#include <stdexcept>
#include <string>

namespace chainlog {

// Failure codes shared across the library. Construction and evaluation
// throw Error; graph validation collects findings into a ValidationReport
// instead of throwing (see graph.hpp).
enum class Errc {
  DuplicateVertexId,
  DuplicateEdgeId,
  MissingIdentity,
  ForbiddenIdentity,
  DanglingEndpoint,
  IllegalEndpointKinds,
  CycleDetected,
  MultipleBuildEnvironments,
  UnknownVertex,
  WrongVertexKind,
  CategoryMismatch,
  InvalidGraph,
  UnknownRow,
  ConfigError,
  ParseError,
  SchemaError,
};

constexpr const char* errcName(Errc code) {
  switch (code) {
    case Errc::DuplicateVertexId: return "DuplicateVertexId";
    case Errc::DuplicateEdgeId: return "DuplicateEdgeId";
    case Errc::MissingIdentity: return "MissingIdentity";
    case Errc::ForbiddenIdentity: return "ForbiddenIdentity";
    case Errc::DanglingEndpoint: return "DanglingEndpoint";
    case Errc::IllegalEndpointKinds: return "IllegalEndpointKinds";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::MultipleBuildEnvironments: return "MultipleBuildEnvironments";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::WrongVertexKind: return "WrongVertexKind";
    case Errc::CategoryMismatch: return "CategoryMismatch";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::UnknownRow: return "UnknownRow";
    case Errc::ConfigError: return "ConfigError";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errcName(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace chainlog
