#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cpsmeta/diagnostics.hpp"
#include "cpsmeta/schema.hpp"

namespace cpsmeta {

using Json = nlohmann::ordered_json;
using EntityId = std::string;

struct Parameter {
    std::string name;
    std::optional<double> objective;
    std::optional<double> threshold;
    std::optional<double> design;
    std::string units;

    bool operator==(const Parameter&) const = default;
};

// One directed view of an association. The attribute object is shared with the
// mirror view on the other endpoint: the pair is one logical edge.
struct Edge {
    EntityId target;
    std::shared_ptr<Json> attributes;
};

struct EntityRecord {
    EntityId id;
    std::string typeName;
    std::string name;
    std::string number;
    Json attributes = Json::object();  // set attributes only
    std::vector<Parameter> parameters;
    // relation name -> outgoing views, both kept in first-use/insertion order
    std::vector<std::pair<std::string, std::vector<Edge>>> adjacency;

    const std::vector<Edge>* edges(std::string_view relation) const;
};

// Typed, attributed, bidirectional property graph over a metamodel schema.
// Mutations validate eagerly: names are unique per type, every edge conforms
// to the declared relation, and the builtFrom hierarchy stays acyclic.
class ModelStore {
  public:
    ModelStore(std::shared_ptr<const MetamodelSchema> schema,
               std::string projectId, std::string projectName);

    ModelStore(ModelStore&&) noexcept = default;
    ModelStore& operator=(ModelStore&&) noexcept = default;
    ModelStore(const ModelStore&) = delete;
    ModelStore& operator=(const ModelStore&) = delete;

    // Deep copy; edge attribute sharing is rebuilt so the copy is independent.
    ModelStore clone() const;

    const MetamodelSchema& schema() const { return *schema_; }
    const std::shared_ptr<const MetamodelSchema>& schemaPtr() const { return schema_; }
    const std::string& projectId() const { return projectId_; }
    const std::string& projectName() const { return projectName_; }

    // Returns the id of the new entity. Pass an explicit id to preserve
    // identity across documents; otherwise a fresh one is issued.
    EntityId createEntity(std::string_view typeName, std::string_view name,
                          std::string_view number, Json attributes = Json::object(),
                          std::vector<Parameter> parameters = {}, EntityId id = {});

    // Applies a patch object; a null value clears the attribute.
    void updateAttributes(const EntityId& id, const Json& patch);
    void rename(const EntityId& id, std::optional<std::string> name,
                std::optional<std::string> number);
    void setParameters(const EntityId& id, std::vector<Parameter> parameters);

    // Creates the association and its mirror view. Idempotent for an existing
    // (source, relation, target) triple: attribute values are merged in.
    void relate(const EntityId& source, std::string_view relation,
                const EntityId& target, Json edgeAttributes = Json::object());

    // Removes the association (both views). Returns false when absent.
    bool unrelate(const EntityId& source, std::string_view relation, const EntityId& target);

    // Removes the entity and every incident association; returns how many
    // logical edges went with it.
    std::size_t deleteEntity(const EntityId& id);

    bool exists(const EntityId& id) const;
    const EntityRecord& entity(const EntityId& id) const;
    std::optional<EntityId> findByName(std::string_view typeName, std::string_view name) const;
    std::vector<EntityId> entitiesOf(std::string_view typeName) const;  // insertion order
    std::vector<EntityId> allEntities() const;                          // insertion order
    std::size_t entityCount() const;
    std::size_t edgeCount() const;  // logical edges

    // Targets of the relation as seen from this entity, insertion order.
    std::vector<EntityId> neighbors(const EntityId& id, std::string_view relation) const;
    const Json* edgeAttributes(const EntityId& source, std::string_view relation,
                               const EntityId& target) const;

    // Full structural check: attribute and edge conformance, mirror-view
    // integrity, builtFrom acyclicity, and modeling completeness rules.
    std::vector<Diagnostic> validate() const;

  private:
    EntityRecord& require(const EntityId& id);
    const EntityRecord& require(const EntityId& id) const;
    EntityId freshId();
    void eraseMirror(EntityRecord& owner, std::string_view relation,
                     const EntityId& target, const Json* attrs);
    bool wouldCreateBuildCycle(const EntityId& parent, const EntityId& child) const;

    std::shared_ptr<const MetamodelSchema> schema_;
    std::string projectId_;
    std::string projectName_;
    std::vector<std::unique_ptr<EntityRecord>> entities_;  // insertion order
    std::map<EntityId, EntityRecord*, std::less<>> byId_;
    std::map<std::pair<std::string, std::string>, EntityId> byTypeAndName_;
    std::uint64_t nextId_ = 1;

    friend struct StoreRawAccess;  // lenient document import
};

// Validates a would-be attribute object against declared fields. Used by the
// store's eager checks and by the document importer's lenient path.
std::vector<Diagnostic> validate_attributes(const MetamodelSchema& schema,
                                            const std::string& ownerPath,
                                            const std::vector<FieldDef>& fields,
                                            const Json& attributes);

}  // namespace cpsmeta
