#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "regex.hpp"

// Concrete syntax:
//   expr   := term ('+' term)*
//   term   := factor factor*
//   factor := base '*'*
//   base   := SYMBOL | '@' | '#' | '(' expr ')'
// '@' is the empty set, '#' is the empty word. No whitespace.

namespace dsmatch {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error("position " + std::to_string(position) + ": " + what), position_(position) {}

    /// Zero-based offset of the offending character (text length for unexpected end).
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Regex parse_all() {
        if (text_.empty()) fail("empty expression");
        Regex r = expr();
        if (pos_ != text_.size()) {
            if (text_[pos_] == ')') fail("unbalanced ')'");
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    static bool starts_base(char c) { return is_symbol_char(c) || c == '@' || c == '#' || c == '('; }

    Regex expr() {
        Regex r = term();
        while (!at_end() && peek() == '+') {
            ++pos_;
            r = Regex::alt(std::move(r), term());
        }
        return r;
    }

    Regex term() {
        Regex r = factor();
        while (!at_end() && starts_base(peek())) r = Regex::concat(std::move(r), factor());
        return r;
    }

    Regex factor() {
        Regex r = base();
        while (!at_end() && peek() == '*') {
            ++pos_;
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex base() {
        if (at_end()) fail("unexpected end of expression");
        const char c = peek();
        if (is_symbol_char(c)) {
            ++pos_;
            return Regex::atom(c);
        }
        switch (c) {
            case '@': ++pos_; return Regex::empty();
            case '#': ++pos_; return Regex::epsilon();
            case '(': {
                const std::size_t open = pos_++;
                Regex r = expr();
                if (at_end()) throw ParseError(open, "unbalanced '('");
                if (peek() != ')') fail(std::string("expected ')' but found '") + peek() + "'");
                ++pos_;
                return r;
            }
            case '*': fail("dangling '*'");
            case '+': fail("missing operand before '+'");
            case ')': fail("unexpected ')'");
            default: fail(std::string("illegal character '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Binding strength: union < concatenation < star < atoms.
inline int precedence(const Regex& r) {
    switch (r.kind()) {
        case Kind::Union: return 0;
        case Kind::Concat: return 1;
        case Kind::Star: return 2;
        default: return 3;
    }
}

inline void render_into(const Regex& r, std::string& out, int min_prec) {
    const bool paren = precedence(r) < min_prec;
    if (paren) out += '(';
    switch (r.kind()) {
        case Kind::Empty: out += '@'; break;
        case Kind::Epsilon: out += '#'; break;
        case Kind::Atom: out += r.symbol(); break;
        case Kind::Union:
            render_into(r.left(), out, 0);
            out += '+';
            render_into(r.right(), out, 1);
            break;
        case Kind::Concat:
            render_into(r.left(), out, 1);
            render_into(r.right(), out, 2);
            break;
        case Kind::Star:
            render_into(r.inner(), out, 2);
            out += '*';
            break;
    }
    if (paren) out += ')';
}

}  // namespace detail

/// Parses the concrete syntax; throws ParseError carrying the failing offset.
inline Regex parse(std::string_view text) { return detail::Parser(text).parse_all(); }

/// Canonical text with minimal parentheses; parse(render(r)) == r.
inline std::string render(const Regex& r) {
    std::string out;
    detail::render_into(r, out, 0);
    return out;
}

}  // namespace dsmatch
