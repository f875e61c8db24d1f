#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regex.hpp"
#include "syntax.hpp"

/**
 * @file
 * @brief Sequents `r1, ..., rn ⊢ w`, derivation trees, and the rule checker.
 *
 * The calculus has two axioms and eight left/right rules:
 *
 *     Axiom1   a ⊢ a                 Axiom2   ⊢ ε
 *     DotL     ρ,Ψ,Δ ⊢ w    / ρ·Ψ,Δ ⊢ w
 *     DotR     Δ1 ⊢ w1, Δ2 ⊢ w2 / Δ1,Δ2 ⊢ w1w2
 *     EpsL     Δ ⊢ w        / ε,Δ ⊢ w
 *     WL       Δ ⊢ w        / ρ*,Δ ⊢ w
 *     DL       ρ,Δ ⊢ w      / ρ*,Δ ⊢ w
 *     CL       ρ*,ρ*,Δ ⊢ w  / ρ*,Δ ⊢ w
 *     PlusL1   ρ,Δ ⊢ w      / ρ+Ψ,Δ ⊢ w
 *     PlusL2   Ψ,Δ ⊢ w      / ρ+Ψ,Δ ⊢ w
 *
 * Left rules carry the antecedent index they act on; acting at index i leaves the
 * prefix before i untouched. DotR carries its split point (antecedent index, word index).
 */

namespace dsmatch {

struct Sequent {
    std::vector<Regex> antecedent;
    Word consequent;

    friend bool operator==(const Sequent&, const Sequent&) = default;
};

inline std::string render(const Sequent& s) {
    std::string out;
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
        if (i) out += ", ";
        out += render(s.antecedent[i]);
    }
    out += out.empty() ? "⊢ " : " ⊢ ";
    out += s.consequent.empty() ? std::string("ε") : s.consequent;
    return out;
}

enum class Rule { Axiom1, Axiom2, DotL, DotR, EpsL, CL, WL, DL, PlusL1, PlusL2 };

inline constexpr std::array<Rule, 10> all_rules = {Rule::Axiom1, Rule::Axiom2, Rule::DotL, Rule::DotR, Rule::EpsL,
                                                   Rule::CL,     Rule::WL,     Rule::DL,   Rule::PlusL1, Rule::PlusL2};

constexpr std::string_view rule_name(Rule r) noexcept {
    switch (r) {
        case Rule::Axiom1: return "Axiom1";
        case Rule::Axiom2: return "Axiom2";
        case Rule::DotL: return "DotL";
        case Rule::DotR: return "DotR";
        case Rule::EpsL: return "EpsL";
        case Rule::CL: return "CL";
        case Rule::WL: return "WL";
        case Rule::DL: return "DL";
        case Rule::PlusL1: return "PlusL1";
        case Rule::PlusL2: return "PlusL2";
    }
    return "?";
}

inline std::optional<Rule> rule_from_name(std::string_view name) noexcept {
    for (Rule r : all_rules) {
        if (rule_name(r) == name) return r;
    }
    return std::nullopt;
}

constexpr bool is_axiom(Rule r) noexcept { return r == Rule::Axiom1 || r == Rule::Axiom2; }

constexpr std::size_t premise_count(Rule r) noexcept {
    if (is_axiom(r)) return 0;
    return r == Rule::DotR ? 2 : 1;
}

/// DotR split point: the left premise takes antecedent[0, antecedent) and consequent[0, word).
struct Split {
    std::size_t antecedent = 0;
    std::size_t word = 0;

    friend bool operator==(const Split&, const Split&) = default;
};

/// monostate for axioms, an antecedent index for left rules, a Split for DotR.
using Position = std::variant<std::monostate, std::size_t, Split>;

struct Derivation {
    Rule rule = Rule::Axiom2;
    Sequent conclusion;
    Position position;
    std::vector<Derivation> premises;

    friend bool operator==(const Derivation&, const Derivation&) = default;
};

inline const Sequent& conclusion_of(const Derivation& d) noexcept { return d.conclusion; }

/// Verdict of the checker; `message` explains a rejection.
struct CheckResult {
    bool ok = true;
    std::string message;

    explicit operator bool() const noexcept { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string msg) { return {false, std::move(msg)}; }
};

namespace detail {

// The antecedent of `premise` must equal `conclusion` with the item at `i` replaced by
// `replacement` (which may be empty or hold several items).
inline bool replaces_at(const std::vector<Regex>& conclusion, std::size_t i, std::span<const Regex> replacement,
                        const std::vector<Regex>& premise) {
    if (premise.size() + 1 != conclusion.size() + replacement.size()) return false;
    for (std::size_t k = 0; k < i; ++k) {
        if (!(premise[k] == conclusion[k])) return false;
    }
    for (std::size_t k = 0; k < replacement.size(); ++k) {
        if (!(premise[i + k] == replacement[k])) return false;
    }
    for (std::size_t k = i + 1; k < conclusion.size(); ++k) {
        if (!(premise[k - 1 + replacement.size()] == conclusion[k])) return false;
    }
    return true;
}

inline CheckResult check_left_rule(const Derivation& node, std::size_t i) {
    const auto& ante = node.conclusion.antecedent;
    if (i >= ante.size()) return CheckResult::fail("position " + std::to_string(i) + " outside antecedent");
    const Sequent& prem = node.premises[0].conclusion;
    if (prem.consequent != node.conclusion.consequent) return CheckResult::fail("left rule changed the consequent");

    const Regex& focus = ante[i];
    auto expect = [&](std::span<const Regex> replacement) {
        return replaces_at(ante, i, replacement, prem.antecedent)
                   ? CheckResult::pass()
                   : CheckResult::fail("premise antecedent does not match the rule instance");
    };
    auto require = [&](Kind k, const char* what) -> std::optional<CheckResult> {
        if (focus.is(k)) return std::nullopt;
        return CheckResult::fail(std::string(rule_name(node.rule)) + " needs " + what + " at position " +
                                 std::to_string(i) + ", found " + render(focus));
    };

    switch (node.rule) {
        case Rule::DotL: {
            if (auto bad = require(Kind::Concat, "a concatenation")) return *bad;
            const std::array<Regex, 2> parts{focus.left(), focus.right()};
            return expect(parts);
        }
        case Rule::EpsL: {
            if (auto bad = require(Kind::Epsilon, "ε")) return *bad;
            return expect({});
        }
        case Rule::WL: {
            if (auto bad = require(Kind::Star, "a star")) return *bad;
            return expect({});
        }
        case Rule::DL: {
            if (auto bad = require(Kind::Star, "a star")) return *bad;
            const std::array<Regex, 1> body{focus.inner()};
            return expect(body);
        }
        case Rule::CL: {
            if (auto bad = require(Kind::Star, "a star")) return *bad;
            const std::array<Regex, 2> copies{focus, focus};
            return expect(copies);
        }
        case Rule::PlusL1: {
            if (auto bad = require(Kind::Union, "a union")) return *bad;
            const std::array<Regex, 1> side{focus.left()};
            return expect(side);
        }
        case Rule::PlusL2: {
            if (auto bad = require(Kind::Union, "a union")) return *bad;
            const std::array<Regex, 1> side{focus.right()};
            return expect(side);
        }
        default: return CheckResult::fail("not a left rule");
    }
}

}  // namespace detail

/// Checks that `node`'s conclusion follows from its premises' conclusions by exactly its rule at its position.
inline CheckResult check_step(const Derivation& node) {
    const Sequent& c = node.conclusion;
    const std::string name(rule_name(node.rule));
    if (node.premises.size() != premise_count(node.rule)) {
        return CheckResult::fail(name + " expects " + std::to_string(premise_count(node.rule)) + " premise(s), got " +
                                 std::to_string(node.premises.size()));
    }

    switch (node.rule) {
        case Rule::Axiom1:
            if (!std::holds_alternative<std::monostate>(node.position)) return CheckResult::fail("axiom with a position");
            if (c.antecedent.size() == 1 && c.antecedent[0].is(Kind::Atom) && c.consequent.size() == 1 &&
                c.consequent[0] == c.antecedent[0].symbol()) {
                return CheckResult::pass();
            }
            return CheckResult::fail("Axiom1 concludes only a ⊢ a, not " + render(c));
        case Rule::Axiom2:
            if (!std::holds_alternative<std::monostate>(node.position)) return CheckResult::fail("axiom with a position");
            if (c.antecedent.empty() && c.consequent.empty()) return CheckResult::pass();
            return CheckResult::fail("Axiom2 concludes only ⊢ ε, not " + render(c));
        case Rule::DotR: {
            const Split* split = std::get_if<Split>(&node.position);
            if (!split) return CheckResult::fail("DotR needs a split position");
            if (split->antecedent > c.antecedent.size() || split->word > c.consequent.size()) {
                return CheckResult::fail("DotR split outside the conclusion");
            }
            const Sequent& lhs = node.premises[0].conclusion;
            const Sequent& rhs = node.premises[1].conclusion;
            const auto mid = c.antecedent.begin() + static_cast<std::ptrdiff_t>(split->antecedent);
            const bool ok = lhs.antecedent == std::vector<Regex>(c.antecedent.begin(), mid) &&
                            rhs.antecedent == std::vector<Regex>(mid, c.antecedent.end()) &&
                            lhs.consequent == c.consequent.substr(0, split->word) &&
                            rhs.consequent == c.consequent.substr(split->word);
            return ok ? CheckResult::pass() : CheckResult::fail("DotR premises do not split the conclusion at the stated point");
        }
        default: {
            const std::size_t* index = std::get_if<std::size_t>(&node.position);
            if (!index) return CheckResult::fail(name + " needs an antecedent index");
            return detail::check_left_rule(node, *index);
        }
    }
}

/// Checks every node; on failure the message is prefixed with the path to the offending node
/// (`root`, then `/k` for the k-th premise).
inline CheckResult check_derivation(const Derivation& root) {
    struct Frame {
        const Derivation* node;
        std::string path;
    };
    std::vector<Frame> stack{{&root, "root"}};
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (CheckResult r = check_step(*f.node); !r) return CheckResult::fail(f.path + ": " + r.message);
        for (std::size_t k = f.node->premises.size(); k-- > 0;) {
            stack.push_back({&f.node->premises[k], f.path + "/" + std::to_string(k)});
        }
    }
    return CheckResult::pass();
}

/// Counts nodes using `rule` anywhere in the tree.
inline std::size_t count_rule(const Derivation& d, Rule rule) {
    std::size_t n = d.rule == rule ? 1 : 0;
    for (const Derivation& p : d.premises) n += count_rule(p, rule);
    return n;
}

inline std::size_t node_count(const Derivation& d) {
    std::size_t n = 1;
    for (const Derivation& p : d.premises) n += node_count(p);
    return n;
}

}  // namespace dsmatch
