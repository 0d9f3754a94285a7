#pragma once

#include <stdexcept>
#include <string>

namespace stylo {

// Input data violates the documented on-disk schema (bad label, malformed
// line, mixed embedding presence, ...).
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// A saved artifact does not match the pipeline it is being used with
// (schema version, word-list hash, scorer identity, selection hash).
// Raised instead of silently producing wrong-scale predictions.
class ProvenanceError : public std::runtime_error {
public:
    explicit ProvenanceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stylo
