#include "ccbench/toml_lite.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>

#include "ccbench/error.hpp"
#include "ccbench/io.hpp"

namespace ccbench::toml {

double Value::as_number() const {
    if (is_integer()) return static_cast<double>(as_integer());
    return std::get<double>(data);
}

std::string_view Value::type_name() const noexcept {
    switch (data.index()) {
        case 0: return "string";
        case 1: return "integer";
        case 2: return "float";
        case 3: return "boolean";
        case 4: return "array";
        default: return "table";
    }
}

const Value* find(const Table& table, std::string_view key) {
    auto it = table.find(key);
    return it == table.end() ? nullptr : &it->second;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, std::string_view source) : text_(text), source_(source) {}

    Table run() {
        Table root;
        Table* current = &root;
        while (true) {
            skip_blank_and_comments();
            if (at_end()) break;
            if (peek() == '[') {
                current = header(root);
            } else {
                key_value(*current);
            }
            end_of_line();
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(fmt::format("{}:{}", source_, line_), message);
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
    }

    void skip_spaces() {
        while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
    }

    void skip_comment() {
        if (peek() == '#') {
            while (!at_end() && peek() != '\n') advance();
        }
    }

    void skip_blank_and_comments() {
        while (!at_end()) {
            skip_spaces();
            skip_comment();
            if (peek() == '\n' || peek() == '\r') {
                advance();
            } else {
                break;
            }
        }
    }

    void end_of_line() {
        skip_spaces();
        skip_comment();
        if (peek() == '\r') advance();
        if (at_end()) return;
        if (peek() != '\n') fail(fmt::format("unexpected '{}' after value", peek()));
        advance();
    }

    std::string key() {
        skip_spaces();
        std::string out;
        if (peek() == '"' || peek() == '\'') {
            out = peek() == '"' ? basic_string() : literal_string();
        } else {
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
                out.push_back(peek());
                advance();
            }
            if (out.empty()) fail("expected a key");
        }
        skip_spaces();
        if (peek() == '.') fail(fmt::format("dotted keys are not supported ('{}.')", out));
        return out;
    }

    Table* header(Table& root) {
        advance();  // '['
        const bool array_of_tables = peek() == '[';
        if (array_of_tables) advance();
        const std::string name = key();
        if (peek() != ']') fail("expected ']' to close table header");
        advance();
        if (array_of_tables) {
            if (peek() != ']') fail("expected ']]' to close array-of-tables header");
            advance();
            auto [it, inserted] = root.try_emplace(name, Value{Array{}});
            if (!it->second.is_array()) fail(fmt::format("'{}' is already defined as a {}", name, it->second.type_name()));
            auto& array = std::get<Array>(it->second.data);
            if (!inserted && !array.empty() && !array.front().is_table()) {
                fail(fmt::format("'{}' is a plain array", name));
            }
            array.push_back(Value{Table{}});
            return &std::get<Table>(array.back().data);
        }
        auto [it, inserted] = root.try_emplace(name, Value{Table{}});
        if (!inserted) fail(fmt::format("table '{}' defined twice", name));
        return &std::get<Table>(it->second.data);
    }

    void key_value(Table& table) {
        const std::string name = key();
        if (peek() != '=') fail(fmt::format("expected '=' after key '{}'", name));
        advance();
        skip_spaces();
        Value v = value();
        if (!table.try_emplace(name, std::move(v)).second) fail(fmt::format("duplicate key '{}'", name));
    }

    Value value() {
        const char c = peek();
        if (c == '"') {
            if (text_.substr(pos_, 3) == "\"\"\"") fail("multi-line strings are not supported");
            return Value{basic_string()};
        }
        if (c == '\'') {
            if (text_.substr(pos_, 3) == "'''") fail("multi-line strings are not supported");
            return Value{literal_string()};
        }
        if (c == '[') return array();
        if (c == '{') fail("inline tables are not supported");
        return scalar();
    }

    Value array() {
        advance();  // '['
        Array items;
        while (true) {
            skip_blank_and_comments();
            if (at_end()) fail("unterminated array");
            if (peek() == ']') {
                advance();
                break;
            }
            items.push_back(value());
            skip_blank_and_comments();
            if (peek() == ',') {
                advance();
            } else if (peek() != ']') {
                fail("expected ',' or ']' in array");
            }
        }
        return Value{std::move(items)};
    }

    std::string basic_string() {
        advance();  // opening quote
        std::string out;
        while (true) {
            if (at_end() || peek() == '\n') fail("unterminated string");
            const char c = peek();
            advance();
            if (c == '"') break;
            if (c != '\\') {
                out.push_back(c);
                continue;
            }
            if (at_end()) fail("unterminated escape");
            const char e = peek();
            advance();
            switch (e) {
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                case 'r': out.push_back('\r'); break;
                case 'b': out.push_back('\b'); break;
                case 'f': out.push_back('\f'); break;
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                case 'u': out += unicode_escape(4); break;
                case 'U': out += unicode_escape(8); break;
                default: fail(fmt::format("unknown escape '\\{}'", e));
            }
        }
        return out;
    }

    std::string unicode_escape(int digits) {
        if (pos_ + static_cast<std::size_t>(digits) > text_.size()) fail("truncated unicode escape");
        std::uint32_t cp = 0;
        const auto hex = text_.substr(pos_, static_cast<std::size_t>(digits));
        auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), cp, 16);
        if (ec != std::errc{} || ptr != hex.data() + hex.size()) fail("bad unicode escape");
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("unicode escape is not a scalar value");
        for (int i = 0; i < digits; ++i) advance();
        std::string out;
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
        return out;
    }

    std::string literal_string() {
        advance();
        std::string out;
        while (true) {
            if (at_end() || peek() == '\n') fail("unterminated string");
            const char c = peek();
            advance();
            if (c == '\'') break;
            out.push_back(c);
        }
        return out;
    }

    Value scalar() {
        std::string token;
        while (!at_end() && peek() != ',' && peek() != ']' && peek() != '#' && peek() != '\n' && peek() != '\r' &&
               peek() != ' ' && peek() != '\t') {
            token.push_back(peek());
            advance();
        }
        if (token.empty()) fail("expected a value");
        if (token == "true") return Value{true};
        if (token == "false") return Value{false};

        std::string digits;
        for (char c : token) {
            if (c != '_') digits.push_back(c);
        }
        const char* first = digits.data();
        const char* last = first + digits.size();
        if (*first == '+') ++first;
        const bool looks_float = digits.find_first_of(".eE") != std::string::npos || digits == "inf" ||
                                 digits == "+inf" || digits == "-inf" || digits == "nan";
        if (!looks_float) {
            std::int64_t i = 0;
            auto [ptr, ec] = std::from_chars(first, last, i);
            if (ec == std::errc{} && ptr == last) return Value{i};
            fail(fmt::format("invalid value '{}'", token));
        }
        double d = 0.0;
        auto [ptr, ec] = std::from_chars(first, last, d);
        if (ec == std::errc{} && ptr == last) return Value{d};
        fail(fmt::format("invalid value '{}'", token));
    }

    std::string_view text_;
    std::string_view source_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

}  // namespace

Table parse(std::string_view text, std::string_view source) { return Parser(text, source).run(); }

Table parse_file(const std::filesystem::path& path) {
    if (!std::filesystem::is_regular_file(path)) {
        throw InputError(fmt::format("config file '{}' does not exist", path.string()));
    }
    return parse(read_text_file(path), path.string());
}

}  // namespace ccbench::toml
