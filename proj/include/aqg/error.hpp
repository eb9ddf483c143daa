#pragma once

#include <stdexcept>
#include <string>

namespace aqg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg) : Error("field mismatch: " + msg) {}
};

struct SingularMap : Error {
    explicit SingularMap(const std::string& msg) : Error("singular map: " + msg) {}
};

struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& msg) : Error("degenerate form: " + msg) {}
};

struct UncoveredEvaluation : Error {
    explicit UncoveredEvaluation(const std::string& msg) : Error("uncovered evaluation: " + msg) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& msg) : Error("schema error: " + msg) {}
};

// Inputs that fail a structural precondition (corrupt Hopf data, invalid pair, ...).
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

}  // namespace aqg
