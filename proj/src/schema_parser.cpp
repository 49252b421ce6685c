#include <algorithm>
#include <cctype>

#include "cpsmeta/schema.hpp"
#include "sdl_lexer.hpp"

namespace cpsmeta {

using detail::TokKind;
using detail::Token;

// ----------------------------------------------------------------- TypeRef

std::string TypeRef::toString() const {
    std::string s;
    if (isList) {
        s = "[" + name + (elemNonNull ? "!" : "") + "]";
    } else {
        s = name;
    }
    if (nonNull) s += "!";
    return s;
}

// ------------------------------------------------------------- RelationDef

bool RelationDef::allowsTarget(std::string_view typeName) const {
    return std::find(targetTypes.begin(), targetTypes.end(), typeName) != targetTypes.end();
}

std::string RelationDef::slotFor(std::string_view typeName) const {
    for (const auto& [slot, type] : targetSlots)
        if (type == typeName) return slot;
    return {};
}

// ------------------------------------------------------------ EntityTypeDef

const RelationDef* EntityTypeDef::relation(std::string_view relName) const {
    for (const auto& r : relations)
        if (r.name == relName) return &r;
    return nullptr;
}

const FieldDef* EntityTypeDef::attribute(std::string_view attrName) const {
    for (const auto& f : attributes)
        if (f.name == attrName) return &f;
    return nullptr;
}

bool EnumDef::contains(std::string_view v) const {
    return std::find(values.begin(), values.end(), v) != values.end();
}

// ---------------------------------------------------------- MetamodelSchema

bool MetamodelSchema::isScalar(std::string_view name) {
    return name == "ID" || name == "String" || name == "Int" || name == "Float" ||
           name == "Boolean";
}

const TypeDecl* MetamodelSchema::decl(std::string_view name) const {
    auto it = declIndex_.find(name);
    return it == declIndex_.end() ? nullptr : &document.decls[it->second];
}

const EntityTypeDef* MetamodelSchema::entityType(std::string_view name) const {
    auto it = entityTypes.find(name);
    return it == entityTypes.end() ? nullptr : &it->second;
}

const EntityTypeDef& MetamodelSchema::requireEntityType(std::string_view name) const {
    const EntityTypeDef* def = entityType(name);
    if (!def)
        throw SchemaLookupError(SchemaLookupError::Kind::UnknownEntityType,
                                "unknown entity type '" + std::string(name) + "'");
    return *def;
}

const RelationDef& MetamodelSchema::requireRelation(std::string_view typeName,
                                                    std::string_view relation) const {
    const EntityTypeDef& def = requireEntityType(typeName);
    const RelationDef* rel = def.relation(relation);
    if (!rel)
        throw SchemaLookupError(SchemaLookupError::Kind::UnknownRelation,
                                "type '" + std::string(typeName) + "' declares no relation '" +
                                    std::string(relation) + "'");
    return *rel;
}

const EnumDef* MetamodelSchema::enumType(std::string_view name) const {
    auto it = enums.find(name);
    return it == enums.end() ? nullptr : &it->second;
}

const RootField* MetamodelSchema::rootQueryField(std::string_view name) const {
    for (const auto& f : rootQueryFields)
        if (f.name == name) return &f;
    return nullptr;
}

const EntityTypeDef* MetamodelSchema::entityTypeForCollection(std::string_view field) const {
    for (const auto& [collection, typeName] : modelCollections)
        if (collection == field) return entityType(typeName);
    return nullptr;
}

// ------------------------------------------------------------------- parser

namespace {

// Recursive-descent parser over the token stream. Any failure records one
// positioned diagnostic and unwinds; parse_sdl then reports it with no
// schema, so callers never see a half-parsed document.
class Parser {
  public:
    Parser(std::vector<Token> toks, std::vector<Diagnostic>& diags)
        : toks_(std::move(toks)), diags_(diags) {}

    bool parseDocument(SchemaDocument& doc) {
        bool sawSchema = false;
        while (!peek().is(TokKind::End)) {
            std::string description;
            SourcePos descPos = peek().pos;
            if (peek().isString()) {
                description = take().text;
            }
            const Token& kw = peek();
            if (!kw.is(TokKind::Name)) {
                return fail(kw.pos, "expected a definition keyword");
            }
            if (kw.text == "schema") {
                if (sawSchema) return fail(kw.pos, "duplicate schema definition");
                sawSchema = true;
                doc.description = description;
                if (!parseSchemaDef(doc)) return false;
            } else if (kw.text == "type" || kw.text == "input") {
                TypeDecl decl;
                decl.kind = kw.text == "type" ? TypeDecl::Kind::Object : TypeDecl::Kind::Input;
                decl.description = description;
                if (!parseObjectLike(decl)) return false;
                if (!addDecl(doc, std::move(decl), descPos)) return false;
            } else if (kw.text == "enum") {
                TypeDecl decl;
                decl.kind = TypeDecl::Kind::Enum;
                decl.description = description;
                if (!parseEnum(decl)) return false;
                if (!addDecl(doc, std::move(decl), descPos)) return false;
            } else if (kw.text == "interface" || kw.text == "union" || kw.text == "scalar" ||
                       kw.text == "directive" || kw.text == "extend" || kw.text == "fragment") {
                return fail(kw.pos, "'" + kw.text + "' definitions are not supported");
            } else {
                return fail(kw.pos, "unknown definition keyword '" + kw.text + "'");
            }
        }
        return true;
    }

  private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t k = std::min(i_ + ahead, toks_.size() - 1);
        return toks_[k];
    }
    const Token& take() { return toks_[std::min(i_++, toks_.size() - 1)]; }

    bool fail(SourcePos pos, std::string message) {
        Diagnostic d;
        d.severity = Severity::Error;
        d.message = std::move(message);
        d.pos = pos;
        diags_.push_back(std::move(d));
        return false;
    }

    bool expectPunct(std::string_view p) {
        const Token& t = take();
        if (!t.isPunct(p)) return fail(t.pos, "expected '" + std::string(p) + "'");
        return true;
    }

    bool expectName(std::string& out, const char* what) {
        const Token& t = take();
        if (!t.is(TokKind::Name)) return fail(t.pos, std::string("expected ") + what);
        out = t.text;
        return true;
    }

    bool addDecl(SchemaDocument& doc, TypeDecl decl, SourcePos pos) {
        for (const auto& existing : doc.decls)
            if (existing.name == decl.name)
                return fail(decl.pos.line ? decl.pos : pos,
                            "duplicate type name '" + decl.name + "'");
        doc.decls.push_back(std::move(decl));
        return true;
    }

    bool parseSchemaDef(SchemaDocument& doc) {
        take();  // schema
        if (!expectPunct("{")) return false;
        while (!peek().isPunct("}")) {
            const Token& op = take();
            if (!op.is(TokKind::Name))
                return fail(op.pos, "expected operation name in schema block");
            if (op.text != "query" && op.text != "mutation")
                return fail(op.pos, "unsupported operation '" + op.text + "' in schema block");
            for (const auto& [existing, unused] : doc.roots)
                if (existing == op.text)
                    return fail(op.pos, "duplicate operation '" + op.text + "' in schema block");
            if (!expectPunct(":")) return false;
            std::string rootType;
            if (!expectName(rootType, "a root type name")) return false;
            doc.roots.emplace_back(op.text, rootType);
        }
        take();  // }
        return true;
    }

    bool parseTypeRef(TypeRef& ref) {
        if (peek().isPunct("[")) {
            take();
            ref.isList = true;
            if (peek().isPunct("["))
                return fail(peek().pos, "nested lists are not supported");
            if (!expectName(ref.name, "a type name")) return false;
            if (peek().isPunct("!")) {
                take();
                ref.elemNonNull = true;
            }
            if (!expectPunct("]")) return false;
        } else {
            if (!expectName(ref.name, "a type name")) return false;
        }
        if (peek().isPunct("!")) {
            take();
            ref.nonNull = true;
        }
        return true;
    }

    bool parseArgs(std::vector<ArgumentDef>& args) {
        take();  // (
        while (!peek().isPunct(")")) {
            ArgumentDef arg;
            const Token& nameTok = peek();
            if (!expectName(arg.name, "an argument name")) return false;
            for (const auto& existing : args)
                if (existing.name == arg.name)
                    return fail(nameTok.pos, "duplicate argument '" + arg.name + "'");
            if (!expectPunct(":")) return false;
            if (!parseTypeRef(arg.type)) return false;
            if (peek().isPunct("="))
                return fail(peek().pos, "default values are not supported");
            args.push_back(std::move(arg));
        }
        take();  // )
        return true;
    }

    bool parseObjectLike(TypeDecl& decl) {
        const Token& kw = take();  // type | input
        decl.pos = kw.pos;
        if (!expectName(decl.name, "a type name")) return false;
        if (peek().isName("implements"))
            return fail(peek().pos, "'implements' is not supported");
        if (!expectPunct("{")) return false;
        while (!peek().isPunct("}")) {
            FieldDef field;
            if (peek().isString()) field.description = take().text;
            const Token& nameTok = peek();
            if (!expectName(field.name, "a field name")) return false;
            field.pos = nameTok.pos;
            if (peek().isPunct("(")) {
                if (decl.kind == TypeDecl::Kind::Input)
                    return fail(peek().pos, "input fields cannot take arguments");
                if (!parseArgs(field.args)) return false;
            }
            if (!expectPunct(":")) return false;
            if (!parseTypeRef(field.type)) return false;
            if (peek().isPunct("="))
                return fail(peek().pos, "default values are not supported");
            if (peek().isPunct("@"))
                return fail(peek().pos, "directives are not supported");
            decl.fields.push_back(std::move(field));
        }
        take();  // }
        if (decl.fields.empty())
            return fail(decl.pos, "type '" + decl.name + "' declares no fields");
        return true;
    }

    bool parseEnum(TypeDecl& decl) {
        const Token& kw = take();  // enum
        decl.pos = kw.pos;
        if (!expectName(decl.name, "an enum name")) return false;
        if (!expectPunct("{")) return false;
        while (!peek().isPunct("}")) {
            EnumValueDef value;
            if (peek().isString()) value.description = take().text;
            const Token& nameTok = take();
            if (!nameTok.is(TokKind::Name))
                return fail(nameTok.pos, "expected an enum value name");
            value.name = nameTok.text;
            decl.values.push_back(std::move(value));
        }
        take();  // }
        if (decl.values.empty())
            return fail(decl.pos, "enum '" + decl.name + "' declares no values");
        return true;
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::vector<Diagnostic>& diags_;
};

// --------------------------------------------------------- registry builder

std::string lowerCamel(std::string name) {
    if (!name.empty()) name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    return name;
}

// Pulls the inverse-relation annotation out of a relation field's doc string.
// The convention: the canonical side ends with "(inverse: X)", the mirror
// side with "(inverse of: X)".
void extractInverse(const std::string& description, std::string& inverseName, bool& primary) {
    auto grab = [&](std::string_view marker, bool isPrimary) {
        std::size_t at = description.rfind(marker);
        if (at == std::string::npos) return false;
        std::size_t start = at + marker.size();
        std::size_t end = description.find(')', start);
        if (end == std::string::npos) return false;
        std::string name = description.substr(start, end - start);
        // Trim surrounding spaces.
        while (!name.empty() && name.front() == ' ') name.erase(name.begin());
        while (!name.empty() && name.back() == ' ') name.pop_back();
        if (name.empty()) return false;
        inverseName = std::move(name);
        primary = isPrimary;
        return true;
    };
    if (grab("(inverse of:", false)) return;
    grab("(inverse:", true);
}

}  // namespace

// Derives the working registry (entity types, relations, enums, collections)
// from the raw declarations. Derivation never fails: anything unresolved is
// left flagged for validate_schema to report.
struct SchemaBuilder {
    static std::shared_ptr<const MetamodelSchema> build(SchemaDocument doc) {
        auto schema = std::make_shared<MetamodelSchema>();
        schema->document = std::move(doc);
        const SchemaDocument& d = schema->document;

        for (std::size_t k = 0; k < d.decls.size(); ++k)
            schema->declIndex_.emplace(d.decls[k].name, k);

        for (const TypeDecl& decl : d.decls) {
            if (decl.kind == TypeDecl::Kind::Enum) {
                EnumDef e;
                e.name = decl.name;
                e.description = decl.description;
                for (const auto& v : decl.values) e.values.push_back(v.name);
                schema->enums.emplace(e.name, std::move(e));
            } else if (decl.kind == TypeDecl::Kind::Input) {
                InputTypeDef in;
                in.name = decl.name;
                in.fields = decl.fields;
                schema->inputTypes.emplace(in.name, std::move(in));
            }
        }

        // Root operation types. Without a schema block the conventional names
        // apply when the types exist.
        std::string queryType, mutationType;
        for (const auto& [op, type] : d.roots) {
            if (op == "query") queryType = type;
            if (op == "mutation") mutationType = type;
        }
        if (d.roots.empty()) {
            if (schema->decl("Query")) queryType = "Query";
            if (schema->decl("Mutation")) mutationType = "Mutation";
        }
        auto collectRoots = [&](const std::string& typeName, std::vector<RootField>& out) {
            const TypeDecl* decl = schema->decl(typeName);
            if (!decl || decl->kind != TypeDecl::Kind::Object) return;
            for (const FieldDef& f : decl->fields)
                out.push_back(RootField{f.name, f.args, f.type});
        };
        collectRoots(queryType, schema->rootQueryFields);
        collectRoots(mutationType, schema->rootMutationFields);

        // First pass: which object types are entities? An entity carries
        // identity: U! where U declares exactly id/name/number.
        auto identityShaped = [&](const std::string& typeName) {
            const TypeDecl* u = schema->decl(typeName);
            if (!u || u->kind != TypeDecl::Kind::Object || u->fields.size() != 3) return false;
            auto is = [&](const FieldDef& f, const char* name, const char* type) {
                return f.name == name && !f.type.isList && f.type.nonNull && f.type.name == type;
            };
            return is(u->fields[0], "id", "ID") && is(u->fields[1], "name", "String") &&
                   is(u->fields[2], "number", "String");
        };
        for (const TypeDecl& decl : d.decls) {
            if (decl.kind != TypeDecl::Kind::Object) continue;
            const FieldDef* identity = nullptr;
            for (const FieldDef& f : decl.fields)
                if (f.name == "identity") identity = &f;
            if (!identity || identity->type.isList || !identity->type.nonNull) continue;
            if (!identityShaped(identity->type.name)) continue;

            EntityTypeDef e;
            e.name = decl.name;
            e.description = decl.description;
            e.collectionField = lowerCamel(decl.name);
            e.idType = identity->type.name;
            schema->entityTypes.emplace(e.name, std::move(e));
        }

        // Second pass: attributes, parameters, relations. Needs the entity
        // set complete so wrapper fields can be split into target slots
        // versus edge attributes.
        for (auto& [name, entity] : schema->entityTypes) {
            const TypeDecl& decl = *schema->decl(name);
            for (const FieldDef& f : decl.fields) {
                if (f.name == "attributes" && !f.type.isList) {
                    entity.attrType = f.type.name;
                    if (const TypeDecl* attrs = schema->decl(f.type.name);
                        attrs && attrs->kind == TypeDecl::Kind::Object)
                        entity.attributes = attrs->fields;
                } else if (f.name == "parameters" && f.type.isList &&
                           f.type.name == "Parameter") {
                    entity.parametersAllowed = true;
                } else if (f.name == "relations" && !f.type.isList) {
                    entity.relType = f.type.name;
                }
            }
            if (entity.relType.empty()) continue;
            const TypeDecl* rels = schema->decl(entity.relType);
            if (!rels || rels->kind != TypeDecl::Kind::Object) continue;
            for (const FieldDef& f : rels->fields) {
                RelationDef rel;
                rel.name = f.name;
                rel.sourceType = entity.name;
                rel.wrapperType = f.type.name;
                extractInverse(f.description, rel.inverseName, rel.primary);
                if (const TypeDecl* wrapper = schema->decl(f.type.name);
                    wrapper && wrapper->kind == TypeDecl::Kind::Object) {
                    rel.wrapperResolved = true;
                    for (const FieldDef& wf : wrapper->fields) {
                        if (schema->entityTypes.count(wf.type.name)) {
                            rel.targetSlots.emplace_back(wf.name, wf.type.name);
                            rel.targetTypes.push_back(wf.type.name);
                        } else {
                            rel.edgeAttributes.push_back(wf);
                        }
                    }
                    std::sort(rel.targetTypes.begin(), rel.targetTypes.end());
                }
                entity.relations.push_back(std::move(rel));
            }
        }

        // Model collections: list-of-entity fields of the type returned by
        // the root model query. Absent that root the schema simply has no
        // model collections, which is fine for schema-only tooling.
        const RootField* modelRoot = schema->rootQueryField("cpsSystemModel");
        if (modelRoot && schema->decl(modelRoot->type.name)) {
            schema->modelTypeName = modelRoot->type.name;
            const TypeDecl& model = *schema->decl(modelRoot->type.name);
            for (const FieldDef& f : model.fields) {
                if (f.type.isList && schema->entityTypes.count(f.type.name)) {
                    schema->modelCollections.emplace_back(f.name, f.type.name);
                    schema->entityTypes.at(f.type.name).collectionField = f.name;
                }
            }
        }
        return schema;
    }
};

SchemaParseResult parse_sdl(std::string_view text) {
    SchemaParseResult result;
    std::vector<Token> toks;
    Diagnostic lexDiag;
    if (!detail::tokenize(text, toks, lexDiag)) {
        result.diagnostics.push_back(std::move(lexDiag));
        return result;
    }
    SchemaDocument doc;
    Parser parser(std::move(toks), result.diagnostics);
    if (!parser.parseDocument(doc)) return result;
    result.schema = SchemaBuilder::build(std::move(doc));
    return result;
}

}  // namespace cpsmeta
