#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpsmeta/model.hpp"

namespace cpsmeta {

// ------------------------------------------------------------------ documents

// Canonical interchange document: formatVersion, project header, then one
// array per entity collection in metamodel order. Collections are sorted by
// (number, name); relation edges appear on their canonical side only, with
// edge arrays sorted by target. Requires a store with no error findings.
// The projectId overload additionally checks the requested project is the
// one the store holds.
Json export_model(const ModelStore& store);
Json export_model(const ModelStore& store, const std::string& projectId);

// Canonical text form of a document: two-space indent, trailing newline.
std::string document_text(const Json& doc);

struct ImportResult {
    std::optional<ModelStore> store;
    std::vector<Diagnostic> diagnostics;
};

// Rebuilds a store from a document. In strict mode (default) any error-level
// finding throws DocumentError; in lenient mode the store is returned as far
// as it could be built, together with everything found wrong, so callers can
// report on invalid documents.
ImportResult import_model(const Json& doc,
                          std::shared_ptr<const MetamodelSchema> schema,
                          bool lenient = false);

// --------------------------------------------------------------------- deltas

enum class MutationKind { Create, Update, Delete };

std::string to_string(MutationKind k);

struct RelationAdd {
    std::string relation;
    EntityId target;
    Json attributes = Json::object();
};

struct RelationRemove {
    std::string relation;
    EntityId target;
};

struct DeltaOp {
    MutationKind operation = MutationKind::Create;
    std::string typeName;  // Create only
    EntityId id;
    std::optional<std::string> name;    // Create: required; Update: rename
    std::optional<std::string> number;
    Json attributes = Json::object();   // Create: initial; Update: patch, null clears
    std::optional<std::vector<Parameter>> parameters;  // full replacement when present
    std::vector<RelationAdd> addRelations;
    std::vector<RelationRemove> removeRelations;
};

struct ModelDelta {
    std::string projectId;
    std::vector<DeltaOp> ops;

    bool empty() const { return ops.empty(); }
};

class DeltaError : public Error {
  public:
    DeltaError(std::string message, std::optional<std::size_t> opIndex = std::nullopt)
        : Error(std::move(message)), opIndex_(opIndex) {}

    std::optional<std::size_t> opIndex() const { return opIndex_; }

  private:
    std::optional<std::size_t> opIndex_;
};

Json delta_to_json(const ModelDelta& delta);
ModelDelta delta_from_json(const Json& doc);

// Applies the ops in order against a copy; the input store is never touched.
// The first failing op aborts the whole application (DeltaError with index).
// A delta naming the same id under two different operation kinds is rejected
// before anything runs.
ModelStore apply_delta(const ModelStore& store, const ModelDelta& delta);

// Delta that transforms `from` into `to`, keyed by entity id. Emitted in
// canonical order: creates, then updates, then deletes, each sorted; edges
// between created entities ride on the later create op so the list is
// applicable as written.
ModelDelta diff_models(const ModelStore& from, const ModelStore& to);

// Inverse of `delta` relative to `base`: applying delta then its inverse is
// the identity on base, and in the other order the identity on the result.
ModelDelta invert_delta(const ModelDelta& delta, const ModelStore& base);

// Content equality up to entity ids: entities are matched by (type, name) and
// compared on number, attributes, parameters, and logical edges.
bool isomorphic(const ModelStore& a, const ModelStore& b);

}  // namespace cpsmeta
