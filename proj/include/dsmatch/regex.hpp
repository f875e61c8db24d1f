#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

/**
 * @file
 * @brief Regex AST over an alphanumeric alphabet, and the degree measure.
 */

namespace dsmatch {

/// True for the characters allowed as alphabet symbols: `[a-zA-Z0-9]`.
constexpr bool is_symbol_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

/// A single alphabet symbol.
class Symbol {
public:
    explicit Symbol(char c) : ch_(c) {
        if (!is_symbol_char(c)) {
            throw std::invalid_argument(std::string("not an alphabet symbol: '") + c + "'");
        }
    }

    constexpr char ch() const noexcept { return ch_; }

    friend constexpr bool operator==(Symbol, Symbol) noexcept = default;

private:
    char ch_;
};

/// Words are plain strings; every character is expected to satisfy is_symbol_char.
using Word = std::string;

constexpr bool is_valid_word(std::string_view w) noexcept {
    for (char c : w) {
        if (!is_symbol_char(c)) return false;
    }
    return true;
}

enum class Kind : std::uint8_t { Empty, Epsilon, Atom, Concat, Union, Star };

struct RegexNode;

/**
 * @brief Immutable regex value.
 *
 * Nodes are reference counted and never mutated after construction, so copies are
 * cheap and values may be shared freely between threads. Equality is structural.
 */
class Regex {
public:
    static Regex empty();
    static Regex epsilon();
    static Regex atom(Symbol s);
    static Regex atom(char c) { return atom(Symbol(c)); }
    static Regex concat(Regex left, Regex right);
    static Regex alt(Regex left, Regex right);
    static Regex star(Regex inner);

    Kind kind() const noexcept;
    bool is(Kind k) const noexcept { return kind() == k; }

    /// Only meaningful for Atom.
    char symbol() const noexcept;
    /// Left operand of Concat/Union.
    const Regex& left() const noexcept;
    /// Right operand of Concat/Union.
    const Regex& right() const noexcept;
    /// Body of Star.
    const Regex& inner() const noexcept;

    /// Structural hash, computed once at construction.
    std::size_t hash() const noexcept;

    bool same_node(const Regex& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Regex& a, const Regex& b) noexcept;

private:
    explicit Regex(std::shared_ptr<const RegexNode> n) : node_(std::move(n)) {}

    std::shared_ptr<const RegexNode> node_;
};

struct RegexNode {
    Kind kind;
    char symbol = 0;
    Regex left;
    Regex right;
    std::size_t hash = 0;
};

namespace detail {

constexpr std::size_t hash_mix(std::size_t seed, std::size_t v) noexcept {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::shared_ptr<const RegexNode> make_node(Kind kind, char symbol, Regex left, Regex right) {
    std::size_t h = hash_mix(static_cast<std::size_t>(kind) + 1, static_cast<unsigned char>(symbol));
    if (kind == Kind::Concat || kind == Kind::Union || kind == Kind::Star) h = hash_mix(h, left.hash());
    if (kind == Kind::Concat || kind == Kind::Union) h = hash_mix(h, right.hash());
    return std::make_shared<const RegexNode>(RegexNode{kind, symbol, std::move(left), std::move(right), h});
}

}  // namespace detail

// Unused children hold a null node; the accessors are only valid for the kinds documented above.

inline Regex Regex::empty() {
    static const Regex r(detail::make_node(Kind::Empty, 0, Regex(nullptr), Regex(nullptr)));
    return r;
}

inline Regex Regex::epsilon() {
    static const Regex r(detail::make_node(Kind::Epsilon, 0, Regex(nullptr), Regex(nullptr)));
    return r;
}

inline Regex Regex::atom(Symbol s) { return Regex(detail::make_node(Kind::Atom, s.ch(), Regex(nullptr), Regex(nullptr))); }

inline Regex Regex::concat(Regex left, Regex right) {
    return Regex(detail::make_node(Kind::Concat, 0, std::move(left), std::move(right)));
}

inline Regex Regex::alt(Regex left, Regex right) {
    return Regex(detail::make_node(Kind::Union, 0, std::move(left), std::move(right)));
}

inline Regex Regex::star(Regex inner) { return Regex(detail::make_node(Kind::Star, 0, std::move(inner), Regex(nullptr))); }

inline Kind Regex::kind() const noexcept { return node_->kind; }
inline std::size_t Regex::hash() const noexcept { return node_->hash; }
inline char Regex::symbol() const noexcept { return node_->symbol; }
inline const Regex& Regex::left() const noexcept { return node_->left; }
inline const Regex& Regex::right() const noexcept { return node_->right; }
inline const Regex& Regex::inner() const noexcept { return node_->left; }

inline bool operator==(const Regex& a, const Regex& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    const RegexNode& x = *a.node_;
    const RegexNode& y = *b.node_;
    if (x.kind != y.kind || x.hash != y.hash) return false;
    switch (x.kind) {
        case Kind::Empty:
        case Kind::Epsilon: return true;
        case Kind::Atom: return x.symbol == y.symbol;
        case Kind::Star: return x.left == y.left;
        case Kind::Concat:
        case Kind::Union: return x.left == y.left && x.right == y.right;
    }
    return false;
}

/// d(∅)=0, d(ε)=d(a)=1, d(r·s)=d(r+s)=d(r)+d(s)+1, d(r*)=d(r)+1.
inline std::size_t degree(const Regex& r) {
    switch (r.kind()) {
        case Kind::Empty: return 0;
        case Kind::Epsilon:
        case Kind::Atom: return 1;
        case Kind::Concat:
        case Kind::Union: return degree(r.left()) + degree(r.right()) + 1;
        case Kind::Star: return degree(r.inner()) + 1;
    }
    return 0;
}

inline std::size_t degree_seq(std::span<const Regex> rs) {
    std::size_t total = 0;
    for (const Regex& r : rs) total += degree(r);
    return total;
}

/// Degree of a word read as a left-nested concatenation of atoms; the empty word reads as ε.
constexpr std::size_t word_degree(std::string_view w) noexcept {
    return w.empty() ? 1 : 2 * w.size() - 1;
}

}  // namespace dsmatch

template <>
struct std::hash<dsmatch::Regex> {
    std::size_t operator()(const dsmatch::Regex& r) const noexcept { return r.hash(); }
};
