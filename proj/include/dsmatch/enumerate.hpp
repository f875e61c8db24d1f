#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regex.hpp"
#include "syntax.hpp"

// Regex and word generators: exhaustive enumeration for grids and seeded random
// generation for property tests.

namespace dsmatch {

/// Every regex over `alphabet` of degree <= max_degree, ordered by degree and then by rendered text.
inline std::vector<Regex> enumerate_regexes(std::string_view alphabet, std::size_t max_degree) {
    std::vector<std::vector<Regex>> by_degree(max_degree + 1);
    by_degree[0].push_back(Regex::empty());
    if (max_degree >= 1) {
        by_degree[1].push_back(Regex::epsilon());
        for (char c : alphabet) by_degree[1].push_back(Regex::atom(c));
    }
    for (std::size_t d = 2; d <= max_degree; ++d) {
        auto& out = by_degree[d];
        for (const Regex& r : by_degree[d - 1]) out.push_back(Regex::star(r));
        for (std::size_t i = 0; i <= d - 1; ++i) {
            for (const Regex& l : by_degree[i]) {
                for (const Regex& r : by_degree[d - 1 - i]) {
                    out.push_back(Regex::concat(l, r));
                    out.push_back(Regex::alt(l, r));
                }
            }
        }
    }

    std::vector<Regex> all;
    for (auto& level : by_degree) {
        std::vector<std::pair<std::string, Regex>> keyed;
        keyed.reserve(level.size());
        for (Regex& r : level) keyed.emplace_back(render(r), std::move(r));
        std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [text, r] : keyed) all.push_back(std::move(r));
    }
    return all;
}

/// Every word over `alphabet` of length <= max_len, shortest first, then in alphabet order.
inline std::vector<Word> enumerate_words(std::string_view alphabet, std::size_t max_len) {
    std::vector<Word> words{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = words.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (char c : alphabet) words.push_back(words[i] + c);
        }
        level_begin = level_end;
    }
    return words;
}

/**
 * Random regex of degree <= max_degree. ∅ is generated only occasionally so that most
 * samples have a nonempty language.
 */
template <typename Rng>
Regex random_regex(Rng& rng, std::string_view alphabet, std::size_t max_degree) {
    auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

    auto build = [&](auto&& self, std::size_t d) -> Regex {
        if (d == 0) return Regex::empty();
        if (d == 1) {
            const std::size_t pick = uniform(0, alphabet.size());
            return pick == 0 ? Regex::epsilon() : Regex::atom(alphabet[pick - 1]);
        }
        const std::size_t shape = uniform(0, 5);
        if (shape == 0 || d == 2) {
            if (d == 2 && uniform(0, 9) == 0) return Regex::concat(Regex::empty(), self(self, 1));
            return Regex::star(self(self, d - 1));
        }
        const bool allow_empty_side = uniform(0, 9) == 0;
        const std::size_t left = allow_empty_side ? uniform(0, d - 1) : uniform(1, d - 2);
        Regex l = self(self, left);
        Regex r = self(self, d - 1 - left);
        return shape <= 3 ? Regex::concat(std::move(l), std::move(r)) : Regex::alt(std::move(l), std::move(r));
    };
    return build(build, uniform(0, max_degree));
}

template <typename Rng>
Word random_word(Rng& rng, std::string_view alphabet, std::size_t max_len) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
        w += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    }
    return w;
}

namespace detail {

inline bool language_nonempty(const Regex& r) {
    switch (r.kind()) {
        case Kind::Empty: return false;
        case Kind::Concat: return language_nonempty(r.left()) && language_nonempty(r.right());
        case Kind::Union: return language_nonempty(r.left()) || language_nonempty(r.right());
        default: return true;
    }
}

template <typename Rng>
bool sample_into(Rng& rng, const Regex& r, Word& out, std::size_t max_len) {
    if (out.size() > max_len) return false;
    switch (r.kind()) {
        case Kind::Empty: return false;
        case Kind::Epsilon: return true;
        case Kind::Atom: out += r.symbol(); return out.size() <= max_len;
        case Kind::Concat: return sample_into(rng, r.left(), out, max_len) && sample_into(rng, r.right(), out, max_len);
        case Kind::Union: {
            const bool l = language_nonempty(r.left());
            const bool rr = language_nonempty(r.right());
            bool take_left = l && (!rr || std::bernoulli_distribution(0.5)(rng));
            return sample_into(rng, take_left ? r.left() : r.right(), out, max_len);
        }
        case Kind::Star: {
            if (!language_nonempty(r.inner())) return true;
            const std::size_t reps = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
            for (std::size_t i = 0; i < reps; ++i) {
                if (!sample_into(rng, r.inner(), out, max_len)) return false;
            }
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// A random member of L(r) of length <= max_len, or nullopt if the attempts run out.
template <typename Rng>
std::optional<Word> sample_member(Rng& rng, const Regex& r, std::size_t max_len, int attempts = 32) {
    if (!detail::language_nonempty(r)) return std::nullopt;
    for (int i = 0; i < attempts; ++i) {
        Word w;
        if (detail::sample_into(rng, r, w, max_len)) return w;
    }
    return std::nullopt;
}

}  // namespace dsmatch
