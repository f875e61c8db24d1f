#pragma once

#include <string_view>

#include "regex.hpp"

// Brzozowski-derivative membership. Shares nothing with the sequent engine beyond the
// Regex type, so the two can be used to cross-check each other.

namespace dsmatch::oracle {

inline bool nullable(const Regex& r) {
    switch (r.kind()) {
        case Kind::Empty:
        case Kind::Atom: return false;
        case Kind::Epsilon:
        case Kind::Star: return true;
        case Kind::Concat: return nullable(r.left()) && nullable(r.right());
        case Kind::Union: return nullable(r.left()) || nullable(r.right());
    }
    return false;
}

enum class Simplify { yes, no };

namespace detail {

// r+∅ = ∅+r = r
inline Regex mk_alt(Regex a, Regex b, Simplify s) {
    if (s == Simplify::yes) {
        if (a.is(Kind::Empty)) return b;
        if (b.is(Kind::Empty)) return a;
    }
    return Regex::alt(std::move(a), std::move(b));
}

// r·∅ = ∅·r = ∅, r·ε = ε·r = r
inline Regex mk_concat(Regex a, Regex b, Simplify s) {
    if (s == Simplify::yes) {
        if (a.is(Kind::Empty) || b.is(Kind::Empty)) return Regex::empty();
        if (a.is(Kind::Epsilon)) return b;
        if (b.is(Kind::Epsilon)) return a;
    }
    return Regex::concat(std::move(a), std::move(b));
}

}  // namespace detail

/// The regex denoting { v | c·v ∈ L(r) }.
inline Regex derivative(const Regex& r, char c, Simplify s = Simplify::yes) {
    switch (r.kind()) {
        case Kind::Empty:
        case Kind::Epsilon: return Regex::empty();
        case Kind::Atom: return r.symbol() == c ? Regex::epsilon() : Regex::empty();
        case Kind::Concat: {
            Regex head = detail::mk_concat(derivative(r.left(), c, s), r.right(), s);
            Regex tail = nullable(r.left()) ? derivative(r.right(), c, s) : Regex::empty();
            return detail::mk_alt(std::move(head), std::move(tail), s);
        }
        case Kind::Union: return detail::mk_alt(derivative(r.left(), c, s), derivative(r.right(), c, s), s);
        case Kind::Star: return detail::mk_concat(derivative(r.inner(), c, s), r, s);
    }
    return Regex::empty();
}

inline Regex derivative(const Regex& r, Symbol c, Simplify s = Simplify::yes) { return derivative(r, c.ch(), s); }

inline bool oracle_match(Regex r, std::string_view w, Simplify s = Simplify::yes) {
    for (char c : w) {
        r = derivative(r, c, s);
        if (s == Simplify::yes && r.is(Kind::Empty)) return false;
    }
    return nullable(r);
}

}  // namespace dsmatch::oracle
