// Minimal s-expression reader: symbols and parenthesised lists, `;` comments,
// positions tracked for error reporting.
#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pcp {

struct Sexpr {
    int line = 0;
    int column = 0;
    // Symbols are lower-cased on read; the whole input language is
    // case-insensitive.
    std::variant<std::string, std::vector<Sexpr>> node;

    bool is_symbol() const { return std::holds_alternative<std::string>(node); }
    bool is_list() const { return !is_symbol(); }
    const std::string& symbol() const { return std::get<std::string>(node); }
    const std::vector<Sexpr>& items() const { return std::get<std::vector<Sexpr>>(node); }
};

// All top-level forms in the text. Throws ParseError on unbalanced input.
std::vector<Sexpr> parse_sexprs(std::string_view text);

// Exactly one top-level form.
Sexpr parse_single_sexpr(std::string_view text);

}  // namespace pcp
