#pragma once

#include <stdexcept>
#include <string>

namespace enptkit {

enum class ErrorKind {
    UnknownVertex,
    EqualEndpoints,
    DifferentHostTrees,
    InvalidTree,
    InvalidPath,
    NotUnionable,
    NotATriangle,
    NotBlueEdge,
    NotContractible,
    NotAK4P4,
    Inapplicable,
    WouldEmptyPath,
    PairContractionUndefined,
    IdMismatch,
    NotHamiltonianPair,
    NotOuterplanar,
    PreconditionViolated,
    NoRepresentation,
    WrongSize,
    NoCommonEndpoint,
    EmptyEdgeSet,
    ImproperColoring,
    TooLarge,
    ParseError,
    SchemaError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace enptkit
