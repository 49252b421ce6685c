#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpsmeta/diagnostics.hpp"

namespace cpsmeta {

// Reference to a named type, possibly wrapped as list / non-null.
struct TypeRef {
    std::string name;
    bool isList = false;
    bool nonNull = false;      // outer wrapper
    bool elemNonNull = false;  // element wrapper, only meaningful for lists

    std::string toString() const;
    bool operator==(const TypeRef&) const = default;
};

struct ArgumentDef {
    std::string name;
    TypeRef type;
    bool operator==(const ArgumentDef&) const = default;
};

struct FieldDef {
    std::string name;
    TypeRef type;
    std::string description;
    std::vector<ArgumentDef> args;
    SourcePos pos{};
};

struct EnumValueDef {
    std::string name;
    std::string description;
};

// Raw declaration as it appeared in the source text.
struct TypeDecl {
    enum class Kind { Object, Input, Enum };

    Kind kind = Kind::Object;
    std::string name;
    std::string description;
    std::vector<FieldDef> fields;      // Object and Input
    std::vector<EnumValueDef> values;  // Enum
    SourcePos pos{};
};

struct SchemaDocument {
    std::string description;
    // operation name ("query"/"mutation") -> root type name, in source order
    std::vector<std::pair<std::string, std::string>> roots;
    std::vector<TypeDecl> decls;
};

// One directed relation declared on an entity type. Each relation field points
// at a wrapper type whose entity-valued fields are the permitted target kinds
// and whose scalar/enum fields ride along on the association itself.
struct RelationDef {
    std::string name;
    std::string sourceType;
    std::string wrapperType;
    std::string inverseName;  // empty when the declaration carries no annotation
    bool primary = false;     // canonical side of the pair for serialization
    bool wrapperResolved = false;
    std::vector<std::string> targetTypes;                          // sorted
    std::vector<std::pair<std::string, std::string>> targetSlots;  // field -> entity type
    std::vector<FieldDef> edgeAttributes;

    bool allowsTarget(std::string_view typeName) const;
    // Slot field holding targets of the given entity type (empty if none).
    std::string slotFor(std::string_view typeName) const;
};

struct EntityTypeDef {
    std::string name;
    std::string description;
    std::string collectionField;  // e.g. "component"; lower-camel fallback
    std::string idType;
    std::string attrType;
    std::string relType;
    bool parametersAllowed = false;
    std::vector<FieldDef> attributes;   // declaration order
    std::vector<RelationDef> relations; // declaration order

    const RelationDef* relation(std::string_view name) const;
    const FieldDef* attribute(std::string_view name) const;
};

struct EnumDef {
    std::string name;
    std::string description;
    std::vector<std::string> values;

    bool contains(std::string_view v) const;
};

struct InputTypeDef {
    std::string name;
    std::vector<FieldDef> fields;
};

struct RootField {
    std::string name;
    std::vector<ArgumentDef> args;
    TypeRef type;
};

class MetamodelSchema {
  public:
    SchemaDocument document;

    std::map<std::string, EntityTypeDef, std::less<>> entityTypes;
    std::map<std::string, EnumDef, std::less<>> enums;
    std::map<std::string, InputTypeDef, std::less<>> inputTypes;
    std::vector<RootField> rootQueryFields;
    std::vector<RootField> rootMutationFields;

    // Collections of the system model type, in declaration order.
    std::vector<std::pair<std::string, std::string>> modelCollections;  // field -> entity type
    std::string modelTypeName;

    static bool isScalar(std::string_view name);

    const TypeDecl* decl(std::string_view name) const;
    const EntityTypeDef* entityType(std::string_view name) const;
    const EntityTypeDef& requireEntityType(std::string_view name) const;
    const RelationDef& requireRelation(std::string_view typeName, std::string_view relation) const;
    const EnumDef* enumType(std::string_view name) const;
    const RootField* rootQueryField(std::string_view name) const;

    // Entity type owning the given collection field name, or null.
    const EntityTypeDef* entityTypeForCollection(std::string_view field) const;

  private:
    std::map<std::string, std::size_t, std::less<>> declIndex_;
    friend struct SchemaBuilder;
};

struct SchemaParseResult {
    std::shared_ptr<const MetamodelSchema> schema;  // null when parsing failed
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return schema != nullptr && !has_errors(diagnostics); }
};

// Parses the supported definition-language subset: schema/type/input/enum
// declarations, doc strings, comments, non-null and list wrappers, and field
// arguments. Any input yields either a schema or a positioned syntax error.
SchemaParseResult parse_sdl(std::string_view text);

// Canonical text form: schema block first, then enums, object types, and input
// types, each group sorted by name. parse(serialize(s)) reproduces s.
std::string serialize_schema(const MetamodelSchema& schema);

// Referential and structural checks over a parsed schema: unresolved type
// references, malformed identity blocks, relation wrapper problems, and
// inverse pairing asymmetries.
std::vector<Diagnostic> validate_schema(const MetamodelSchema& schema);

// The embedded cyber-physical-system metamodel. Parsed once, validated clean.
const std::shared_ptr<const MetamodelSchema>& builtin_schema();

// Raw text of the embedded metamodel definition.
std::string_view builtin_schema_text();

}  // namespace cpsmeta
