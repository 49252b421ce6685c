#include "sdl_lexer.hpp"

#include <cctype>

namespace cpsmeta::detail {
namespace {

bool isNameStart(char c) { return c == '_' || std::isalpha(static_cast<unsigned char>(c)); }
bool isNameCont(char c) { return c == '_' || std::isalnum(static_cast<unsigned char>(c)); }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

struct Cursor {
    std::string_view src;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    bool done() const { return i >= src.size(); }
    char peek(std::size_t ahead = 0) const {
        return i + ahead < src.size() ? src[i + ahead] : '\0';
    }
    char take() {
        char c = src[i++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }
    SourcePos pos() const { return {line, column}; }
};

Diagnostic lexError(const Cursor& cur, std::string message) {
    Diagnostic d;
    d.severity = Severity::Error;
    d.message = std::move(message);
    d.pos = cur.pos();
    return d;
}

void skipTrivia(Cursor& cur) {
    while (!cur.done()) {
        char c = cur.peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
            cur.take();
        } else if (c == '#') {
            while (!cur.done() && cur.peek() != '\n') cur.take();
        } else {
            break;
        }
    }
}

// Decodes the four hex digits after \u. Only the BMP escape form; that is all
// the embedded schema and the test corpus ever use.
bool readUnicodeEscape(Cursor& cur, std::string& out) {
    unsigned value = 0;
    for (int k = 0; k < 4; ++k) {
        if (cur.done()) return false;
        char c = cur.take();
        value <<= 4;
        if (c >= '0' && c <= '9') value |= static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') value |= static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') value |= static_cast<unsigned>(c - 'A' + 10);
        else return false;
    }
    // UTF-8 encode.
    if (value < 0x80) {
        out.push_back(static_cast<char>(value));
    } else if (value < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (value >> 6)));
        out.push_back(static_cast<char>(0x80 | (value & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xE0 | (value >> 12)));
        out.push_back(static_cast<char>(0x80 | ((value >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (value & 0x3F)));
    }
    return true;
}

bool lexString(Cursor& cur, Token& tok, Diagnostic& error) {
    tok.pos = cur.pos();
    cur.take();  // opening quote
    tok.kind = TokKind::String;
    tok.text.clear();
    while (true) {
        if (cur.done() || cur.peek() == '\n') {
            error = lexError(cur, "unterminated string");
            return false;
        }
        char c = cur.take();
        if (c == '"') return true;
        if (c != '\\') {
            tok.text.push_back(c);
            continue;
        }
        if (cur.done()) {
            error = lexError(cur, "unterminated string");
            return false;
        }
        char esc = cur.take();
        switch (esc) {
            case '"': tok.text.push_back('"'); break;
            case '\\': tok.text.push_back('\\'); break;
            case '/': tok.text.push_back('/'); break;
            case 'b': tok.text.push_back('\b'); break;
            case 'f': tok.text.push_back('\f'); break;
            case 'n': tok.text.push_back('\n'); break;
            case 'r': tok.text.push_back('\r'); break;
            case 't': tok.text.push_back('\t'); break;
            case 'u':
                if (!readUnicodeEscape(cur, tok.text)) {
                    error = lexError(cur, "invalid \\u escape");
                    return false;
                }
                break;
            default:
                error = lexError(cur, std::string("invalid escape '\\") + esc + "'");
                return false;
        }
    }
}

// Common-indent removal for block strings, following the usual SDL rules:
// the first line keeps its content, every later non-blank line contributes to
// the common indent, and blank lines at both ends are dropped.
std::string dedentBlock(const std::string& raw) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : raw) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    lines.push_back(current);

    std::size_t commonIndent = std::string::npos;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const std::string& ln = lines[k];
        std::size_t indent = ln.find_first_not_of(" \t");
        if (indent == std::string::npos) continue;  // blank line
        commonIndent = std::min(commonIndent, indent);
    }
    if (commonIndent != std::string::npos) {
        for (std::size_t k = 1; k < lines.size(); ++k) {
            if (lines[k].size() >= commonIndent)
                lines[k].erase(0, commonIndent);
            else
                lines[k].clear();
        }
    }

    auto isBlank = [](const std::string& ln) {
        return ln.find_first_not_of(" \t") == std::string::npos;
    };
    std::size_t first = 0, last = lines.size();
    while (first < last && isBlank(lines[first])) ++first;
    while (last > first && isBlank(lines[last - 1])) --last;

    std::string out;
    for (std::size_t k = first; k < last; ++k) {
        if (k > first) out.push_back('\n');
        out += lines[k];
    }
    return out;
}

bool lexBlockString(Cursor& cur, Token& tok, Diagnostic& error) {
    tok.pos = cur.pos();
    cur.take();
    cur.take();
    cur.take();  // opening """
    tok.kind = TokKind::BlockString;
    std::string raw;
    while (true) {
        if (cur.done()) {
            error = lexError(cur, "unterminated block string");
            return false;
        }
        if (cur.peek() == '\\' && cur.peek(1) == '"' && cur.peek(2) == '"' && cur.peek(3) == '"') {
            cur.take();
            raw += "\"\"\"";
            cur.take();
            cur.take();
            cur.take();
            continue;
        }
        if (cur.peek() == '"' && cur.peek(1) == '"' && cur.peek(2) == '"') {
            cur.take();
            cur.take();
            cur.take();
            tok.text = dedentBlock(raw);
            return true;
        }
        raw.push_back(cur.take());
    }
}

bool lexNumber(Cursor& cur, Token& tok, Diagnostic& error) {
    tok.pos = cur.pos();
    tok.kind = TokKind::Int;
    tok.text.clear();
    if (cur.peek() == '-') tok.text.push_back(cur.take());
    if (!isDigit(cur.peek())) {
        error = lexError(cur, "expected digit after '-'");
        return false;
    }
    while (isDigit(cur.peek())) tok.text.push_back(cur.take());
    if (cur.peek() == '.' && isDigit(cur.peek(1))) {
        tok.kind = TokKind::Float;
        tok.text.push_back(cur.take());
        while (isDigit(cur.peek())) tok.text.push_back(cur.take());
    }
    if (cur.peek() == 'e' || cur.peek() == 'E') {
        tok.kind = TokKind::Float;
        tok.text.push_back(cur.take());
        if (cur.peek() == '+' || cur.peek() == '-') tok.text.push_back(cur.take());
        if (!isDigit(cur.peek())) {
            error = lexError(cur, "malformed exponent");
            return false;
        }
        while (isDigit(cur.peek())) tok.text.push_back(cur.take());
    }
    return true;
}

}  // namespace

bool tokenize(std::string_view src, std::vector<Token>& out, Diagnostic& error) {
    static const std::string punct = "!$()[]{}:=@|&";
    Cursor cur{src};
    out.clear();
    while (true) {
        skipTrivia(cur);
        if (cur.done()) break;
        char c = cur.peek();
        Token tok;
        if (c == '"' && cur.peek(1) == '"' && cur.peek(2) == '"') {
            if (!lexBlockString(cur, tok, error)) return false;
        } else if (c == '"') {
            if (!lexString(cur, tok, error)) return false;
        } else if (isNameStart(c)) {
            tok.kind = TokKind::Name;
            tok.pos = cur.pos();
            while (isNameCont(cur.peek())) tok.text.push_back(cur.take());
        } else if (isDigit(c) || c == '-') {
            if (!lexNumber(cur, tok, error)) return false;
        } else if (c == '.' && cur.peek(1) == '.' && cur.peek(2) == '.') {
            tok.kind = TokKind::Punct;
            tok.pos = cur.pos();
            cur.take();
            cur.take();
            cur.take();
            tok.text = "...";
        } else if (punct.find(c) != std::string::npos) {
            tok.kind = TokKind::Punct;
            tok.pos = cur.pos();
            tok.text.assign(1, cur.take());
        } else {
            error = lexError(cur, std::string("unexpected character '") + c + "'");
            return false;
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = TokKind::End;
    end.pos = cur.pos();
    out.push_back(std::move(end));
    return true;
}

}  // namespace cpsmeta::detail
