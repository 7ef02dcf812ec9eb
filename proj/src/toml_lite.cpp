#include "kstab/toml_lite.hpp"

#include <cctype>
#include <string>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

using Json = nlohmann::ordered_json;

class Parser {
  public:
    explicit Parser(std::string_view text) : s_(text) {}

    Json run() {
        Json root = Json::object();
        table_path_.clear();
        while (true) {
            skip_blank();
            if (eof()) break;
            if (peek() == '[')
                parse_table_header(root);
            else
                parse_key_value(navigate(root, table_path_, /*create=*/true));
            expect_line_end();
        }
        return root;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("toml: line " + std::to_string(line_) + ": " + msg);
    }

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void advance() {
        if (s_[i_] == '\n') ++line_;
        ++i_;
    }

    void skip_inline_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) advance();
    }

    void skip_comment() {
        if (!eof() && peek() == '#')
            while (!eof() && peek() != '\n') advance();
    }

    // Whitespace, comments and newlines — between top-level statements and
    // inside arrays.
    void skip_blank() {
        while (!eof()) {
            skip_inline_ws();
            skip_comment();
            if (!eof() && peek() == '\n') {
                advance();
                continue;
            }
            break;
        }
    }

    void expect_line_end() {
        skip_inline_ws();
        skip_comment();
        if (eof()) return;
        if (peek() != '\n') fail("unexpected trailing characters");
        advance();
    }

    static bool is_bare_key_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }

    std::string parse_key_part() {
        skip_inline_ws();
        if (eof()) fail("expected key");
        if (peek() == '"') return parse_basic_string();
        std::string key;
        while (!eof() && is_bare_key_char(peek())) {
            key.push_back(peek());
            advance();
        }
        if (key.empty()) fail("expected key");
        return key;
    }

    std::vector<std::string> parse_dotted_key() {
        std::vector<std::string> parts{parse_key_part()};
        skip_inline_ws();
        while (!eof() && peek() == '.') {
            advance();
            parts.push_back(parse_key_part());
            skip_inline_ws();
        }
        return parts;
    }

    static Json& navigate(Json& root, const std::vector<std::string>& path, bool create) {
        Json* node = &root;
        for (const auto& part : path) {
            if (!node->is_object()) throw ParseError("toml: key path through a non-table");
            if (!node->contains(part)) {
                if (!create) throw ParseError("toml: missing table " + part);
                (*node)[part] = Json::object();
            }
            node = &(*node)[part];
        }
        return *node;
    }

    void parse_table_header(Json& root) {
        advance();  // '['
        if (!eof() && peek() == '[') fail("arrays of tables are not supported");
        table_path_ = parse_dotted_key();
        skip_inline_ws();
        if (eof() || peek() != ']') fail("expected ']' closing table header");
        advance();
        Json& t = navigate(root, table_path_, /*create=*/true);
        if (!t.is_object()) fail("table header clashes with an existing value");
    }

    void parse_key_value(Json& table) {
        const std::vector<std::string> path = parse_dotted_key();
        skip_inline_ws();
        if (eof() || peek() != '=') fail("expected '=' after key");
        advance();
        skip_inline_ws();
        Json* node = &table;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            if (!node->contains(path[k])) (*node)[path[k]] = Json::object();
            node = &(*node)[path[k]];
            if (!node->is_object()) fail("dotted key passes through a non-table");
        }
        if (node->contains(path.back())) fail("duplicate key " + path.back());
        (*node)[path.back()] = parse_value();
    }

    Json parse_value() {
        skip_inline_ws();
        if (eof()) fail("expected value");
        const char c = peek();
        if (c == '"') return parse_basic_string();
        if (c == '[') return parse_array();
        if (c == '{') return parse_inline_table();
        return parse_scalar();
    }

    std::string parse_basic_string() {
        advance();  // '"'
        std::string out;
        while (true) {
            if (eof() || peek() == '\n') fail("unterminated string");
            char c = peek();
            advance();
            if (c == '"') return out;
            if (c == '\\') {
                if (eof()) fail("bad escape");
                const char e = peek();
                advance();
                switch (e) {
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    case 'r': out.push_back('\r'); break;
                    default: fail("unsupported escape sequence");
                }
            } else {
                out.push_back(c);
            }
        }
    }

    Json parse_array() {
        advance();  // '['
        Json arr = Json::array();
        while (true) {
            skip_blank();
            if (eof()) fail("unterminated array");
            if (peek() == ']') {
                advance();
                return arr;
            }
            arr.push_back(parse_value());
            skip_blank();
            if (eof()) fail("unterminated array");
            if (peek() == ',') {
                advance();
                continue;
            }
            if (peek() == ']') {
                advance();
                return arr;
            }
            fail("expected ',' or ']' in array");
        }
    }

    Json parse_inline_table() {
        advance();  // '{'
        Json obj = Json::object();
        skip_inline_ws();
        if (!eof() && peek() == '}') {
            advance();
            return obj;
        }
        while (true) {
            parse_key_value(obj);
            skip_inline_ws();
            if (eof()) fail("unterminated inline table");
            if (peek() == ',') {
                advance();
                skip_inline_ws();
                continue;
            }
            if (peek() == '}') {
                advance();
                return obj;
            }
            fail("expected ',' or '}' in inline table");
        }
    }

    Json parse_scalar() {
        std::string tok;
        while (!eof() && (is_bare_key_char(peek()) || peek() == '+' || peek() == '.')) {
            tok.push_back(peek());
            advance();
        }
        if (tok == "true") return true;
        if (tok == "false") return false;
        if (tok.empty()) fail("expected value");
        if (tok.find('.') != std::string::npos || tok.find('e') != std::string::npos ||
            tok.find('E') != std::string::npos)
            fail("floats are not supported; use rational strings like \"1/2\"");
        std::size_t start = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
        if (start == tok.size()) fail("bad integer");
        for (std::size_t k = start; k < tok.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tok[k]))) fail("bad integer '" + tok + "'");
        try {
            return static_cast<std::int64_t>(std::stoll(tok));
        } catch (const std::out_of_range&) {
            fail("integer out of range '" + tok + "'");
        }
        return 0;  // unreachable; fail() throws
    }

    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1;
    std::vector<std::string> table_path_;
};

}  // namespace

nlohmann::ordered_json toml_to_json(std::string_view text) { return Parser(text).run(); }

}  // namespace kstab
