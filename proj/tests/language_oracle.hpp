#pragma once

// Test-only ground truth: the language of a regex, truncated to words of length <= L,
// computed by direct set construction. Independent of both the sequent engine and
// the derivative oracle.

#include <cstddef>
#include <set>
#include <string>

#include <dsmatch/regex.hpp>

namespace dsmatch::sets {

using Language = std::set<std::string>;

inline Language concat_upto(const Language& a, const Language& b, std::size_t max_len) {
    Language out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (x.size() + y.size() <= max_len) out.insert(x + y);
        }
    }
    return out;
}

inline Language language_upto(const Regex& r, std::size_t max_len) {
    switch (r.kind()) {
        case Kind::Empty: return {};
        case Kind::Epsilon: return {""};
        case Kind::Atom: return max_len >= 1 ? Language{std::string(1, r.symbol())} : Language{};
        case Kind::Union: {
            Language out = language_upto(r.left(), max_len);
            out.merge(language_upto(r.right(), max_len));
            return out;
        }
        case Kind::Concat: return concat_upto(language_upto(r.left(), max_len), language_upto(r.right(), max_len), max_len);
        case Kind::Star: {
            const Language body = language_upto(r.inner(), max_len);
            Language acc{""};
            for (;;) {
                Language next = acc;
                next.merge(concat_upto(acc, body, max_len));
                if (next.size() == acc.size()) return acc;
                acc = std::move(next);
            }
        }
    }
    return {};
}

}  // namespace dsmatch::sets
