#include <algorithm>
#include <cstdio>

#include "cpsmeta/schema.hpp"

namespace cpsmeta {
namespace {

std::string quoteString(const std::string& value) {
    std::string out = "\"";
    for (char c : value) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04X", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    out += "\"";
    return out;
}

std::vector<std::string> splitLines(const std::string& value) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : value) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    lines.push_back(current);
    return lines;
}

// A block string survives the dedent on re-parse only when its shape already
// matches what the dedent produces: flush-left somewhere, no blank edge
// lines, no whitespace-only lines, no carriage returns. Anything else is
// emitted as an ordinary quoted string so the round trip stays exact.
bool blockEncodable(const std::string& value) {
    if (value.find('\n') == std::string::npos) return false;
    if (value.find('\r') != std::string::npos) return false;
    auto lines = splitLines(value);
    bool flushLeft = false;
    for (const std::string& ln : lines) {
        if (ln.empty()) continue;
        std::size_t ws = ln.find_first_not_of(" \t");
        if (ws == std::string::npos) return false;  // whitespace-only line
        if (ws == 0) flushLeft = true;
    }
    return flushLeft && !lines.front().empty() && !lines.back().empty();
}

void emitDescription(std::string& out, const std::string& description,
                     const std::string& indent) {
    if (description.empty()) return;
    if (blockEncodable(description)) {
        out += indent + "\"\"\"\n";
        std::string escaped;
        for (std::size_t k = 0; k < description.size(); ++k) {
            if (description.compare(k, 3, "\"\"\"") == 0) {
                escaped += "\\\"\"\"";
                k += 2;
            } else {
                escaped.push_back(description[k]);
            }
        }
        for (const std::string& ln : splitLines(escaped))
            out += ln.empty() ? "\n" : indent + ln + "\n";
        out += indent + "\"\"\"\n";
    } else {
        out += indent + quoteString(description) + "\n";
    }
}

void emitField(std::string& out, const FieldDef& field) {
    emitDescription(out, field.description, "  ");
    out += "  " + field.name;
    if (!field.args.empty()) {
        out += "(";
        for (std::size_t k = 0; k < field.args.size(); ++k) {
            if (k) out += ", ";
            out += field.args[k].name + ": " + field.args[k].type.toString();
        }
        out += ")";
    }
    out += ": " + field.type.toString() + "\n";
}

void emitDecl(std::string& out, const TypeDecl& decl) {
    emitDescription(out, decl.description, "");
    switch (decl.kind) {
        case TypeDecl::Kind::Object: out += "type "; break;
        case TypeDecl::Kind::Input: out += "input "; break;
        case TypeDecl::Kind::Enum: out += "enum "; break;
    }
    out += decl.name + " {\n";
    if (decl.kind == TypeDecl::Kind::Enum) {
        for (const EnumValueDef& v : decl.values) {
            emitDescription(out, v.description, "  ");
            out += "  " + v.name + "\n";
        }
    } else {
        for (const FieldDef& f : decl.fields) emitField(out, f);
    }
    out += "}\n";
}

}  // namespace

std::string serialize_schema(const MetamodelSchema& schema) {
    const SchemaDocument& doc = schema.document;
    std::string out;

    bool first = true;
    auto separator = [&] {
        if (!first) out += "\n";
        first = false;
    };

    if (!doc.roots.empty()) {
        separator();
        emitDescription(out, doc.description, "");
        out += "schema {\n";
        for (const auto& [op, type] : doc.roots) out += "  " + op + ": " + type + "\n";
        out += "}\n";
    }

    std::vector<const TypeDecl*> order[3];
    for (const TypeDecl& decl : doc.decls) {
        switch (decl.kind) {
            case TypeDecl::Kind::Enum: order[0].push_back(&decl); break;
            case TypeDecl::Kind::Object: order[1].push_back(&decl); break;
            case TypeDecl::Kind::Input: order[2].push_back(&decl); break;
        }
    }
    for (auto& group : order) {
        std::sort(group.begin(), group.end(),
                  [](const TypeDecl* a, const TypeDecl* b) { return a->name < b->name; });
        for (const TypeDecl* decl : group) {
            separator();
            emitDecl(out, *decl);
        }
    }
    return out;
}

}  // namespace cpsmeta
