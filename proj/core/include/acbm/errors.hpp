#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acbm {

/// Shape or ring mismatch: parameter sets differ, tensor shapes differ,
/// metric singular, and similar structural misuse.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// Text input rejected by a grammar or a file schema. `position` is a byte
/// offset into the offending string; `field` names the document field when
/// the error comes from a spec file.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position, std::string field = {})
        : std::runtime_error(what), position(position), field(std::move(field)) {}

    std::size_t position = 0;
    std::string field;
};

/// An operation refused to run because its class-membership precondition
/// does not hold. `detail` carries the rendered membership report.
struct PreconditionError : std::runtime_error {
    PreconditionError(const std::string& what, std::string detail)
        : std::runtime_error(what), detail(std::move(detail)) {}

    std::string detail;
};

/// A dual-route internal cross-check disagreed. Always a bug, never user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace acbm
