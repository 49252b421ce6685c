#include "cpsmeta/diagnostics.hpp"

namespace cpsmeta {

std::string to_string(const Diagnostic& d) {
    std::string s = d.severity == Severity::Error ? "error" : "warning";
    if (d.pos.line > 0) {
        s += " at " + std::to_string(d.pos.line) + ":" + std::to_string(d.pos.column);
    }
    if (!d.path.empty()) {
        s += " [" + d.path + "]";
    }
    s += ": " + d.message;
    return s;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

std::size_t count_errors(const std::vector<Diagnostic>& diags) {
    std::size_t n = 0;
    for (const auto& d : diags)
        if (d.severity == Severity::Error) ++n;
    return n;
}

}  // namespace cpsmeta
