#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpsmeta/diagnostics.hpp"

namespace cpsmeta::detail {

// Token stream shared by the schema parser and the query parser. Comments and
// commas are whitespace; strings arrive with escapes already decoded and
// block strings already dedented.

enum class TokKind { Name, Int, Float, String, BlockString, Punct, End };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;  // name, punctuator, decoded string value, or number
    SourcePos pos;

    bool is(TokKind k) const { return kind == k; }
    bool isPunct(std::string_view p) const { return kind == TokKind::Punct && text == p; }
    bool isName(std::string_view n) const { return kind == TokKind::Name && text == n; }
    bool isString() const { return kind == TokKind::String || kind == TokKind::BlockString; }
};

// Tokenizes the whole input, appending an End token on success. On a
// malformed token (unterminated string, bad escape, stray character) returns
// false with a positioned diagnostic and leaves `out` unspecified.
bool tokenize(std::string_view src, std::vector<Token>& out, Diagnostic& error);

}  // namespace cpsmeta::detail
