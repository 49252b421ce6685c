#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cpsmeta {

enum class Severity { Error, Warning };

// 1-based position in a source text; {0,0} means "not tied to a location".
struct SourcePos {
    int line = 0;
    int column = 0;
};

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string path;     // dotted location, e.g. "Component.relations.builtFrom"
    std::string message;
    SourcePos pos{};
};

std::string to_string(const Diagnostic& d);

bool has_errors(const std::vector<Diagnostic>& diags);
std::size_t count_errors(const std::vector<Diagnostic>& diags);

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A schema lookup that failed; callers can tell a missing type from a
// missing relation on a known type.
class SchemaLookupError : public Error {
  public:
    enum class Kind { UnknownEntityType, UnknownRelation };

    SchemaLookupError(Kind kind, std::string message)
        : Error(std::move(message)), kind_(kind) {}

    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

// Violation of a store-level rule (unknown id, duplicate name, bad value, ...).
class ModelError : public Error {
  public:
    using Error::Error;
};

// A document could not be imported or applied; carries the collected findings.
class DocumentError : public Error {
  public:
    DocumentError(std::string message, std::vector<Diagnostic> diags)
        : Error(std::move(message)), diagnostics_(std::move(diags)) {}

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  private:
    std::vector<Diagnostic> diagnostics_;
};

// Query text that failed to parse or validate; position points at the offender.
class QueryError : public Error {
  public:
    QueryError(std::string message, SourcePos pos = {})
        : Error(std::move(message)), pos_(pos) {}

    SourcePos pos() const { return pos_; }

  private:
    SourcePos pos_;
};

}  // namespace cpsmeta
