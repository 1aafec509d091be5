#include "pcp/sexpr.hpp"

#include <cctype>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

struct Reader {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool eof() const { return pos >= text.size(); }

    char peek() const { return text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }

    void skip_blank() {
        while (!eof()) {
            char c = peek();
            if (c == ';') {
                while (!eof() && peek() != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    static bool symbol_char(char c) {
        return c != '(' && c != ')' && c != ';' && !std::isspace(static_cast<unsigned char>(c));
    }

    Sexpr read_form() {
        skip_blank();
        if (eof()) {
            throw ParseError(line, column, "unexpected end of input, expected '(' or symbol");
        }
        int start_line = line;
        int start_column = column;
        char c = peek();
        if (c == ')') {
            throw ParseError(line, column, "unexpected ')'");
        }
        if (c == '(') {
            advance();
            std::vector<Sexpr> items;
            while (true) {
                skip_blank();
                if (eof()) {
                    throw ParseError(start_line, start_column, "unterminated '('");
                }
                if (peek() == ')') {
                    advance();
                    break;
                }
                items.push_back(read_form());
            }
            return Sexpr{start_line, start_column, std::move(items)};
        }
        std::string sym;
        while (!eof() && symbol_char(peek())) {
            sym += static_cast<char>(std::tolower(static_cast<unsigned char>(advance())));
        }
        return Sexpr{start_line, start_column, std::move(sym)};
    }
};

}  // namespace

std::vector<Sexpr> parse_sexprs(std::string_view text) {
    Reader reader{text};
    std::vector<Sexpr> forms;
    while (true) {
        reader.skip_blank();
        if (reader.eof()) break;
        forms.push_back(reader.read_form());
    }
    return forms;
}

Sexpr parse_single_sexpr(std::string_view text) {
    std::vector<Sexpr> forms = parse_sexprs(text);
    if (forms.empty()) {
        throw ParseError(1, 1, "expected an s-expression");
    }
    if (forms.size() > 1) {
        throw ParseError(forms[1].line, forms[1].column, "expected a single s-expression");
    }
    return std::move(forms.front());
}

}  // namespace pcp
