#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "idcode/errors.hpp"

namespace idcode::detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

/// Splits a line on blanks; returns nothing for blank lines and `#` comments.
inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
        if (k >= line.size()) break;
        if (line[k] == '#') break;
        const std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
        out.push_back({line.substr(start, k - start), start + 1});
    }
    return out;
}

inline long long parse_integer(const Token& tok, std::size_t line_no) {
    long long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(line_no, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
    return value;
}

/// Reads the stream line by line, handing each non-empty token list to `f(tokens, line_no)`.
template <class F>
void for_each_record(std::istream& in, F&& f) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto toks = tokenize(line);
        if (!toks.empty()) f(toks, line_no);
    }
}

}  // namespace idcode::detail
