#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "derivation.hpp"
#include "regex.hpp"

/**
 * @file
 * @brief Bottom-up proof search for sequents `r1, ..., rn ⊢ w`.
 *
 * Both strategies apply left rules at the head of the antecedent only.
 *
 * - search_lazy never guesses a DotR split. The head regex consumes a prefix of the
 *   remaining input and hands the rest to the tail of the antecedent; splits are
 *   recovered afterwards when the certificate is assembled.
 * - search_naive enumerates every applicable rule instance, including every
 *   (antecedent, word) split for DotR, under an antecedent-length cap.
 */

namespace dsmatch {

enum class Verdict { derivable, not_derivable, budget_exhausted };

struct MatchOutcome {
    Verdict verdict = Verdict::not_derivable;
    /// Present iff verdict == derivable.
    std::optional<Derivation> certificate;

    bool derivable() const noexcept { return verdict == Verdict::derivable; }
};

struct SearchBudget {
    std::size_t max_antecedent_len = 2;
    std::size_t max_nodes = 10'000'000;

    /// Smallest cap under which the naive search is complete for this query.
    static constexpr std::size_t completeness_cap(std::size_t antecedent_len, std::size_t word_len) noexcept {
        return std::max<std::size_t>(antecedent_len + word_len, 2);
    }

    static SearchBudget complete_for(std::size_t antecedent_len, std::size_t word_len) {
        return SearchBudget{completeness_cap(antecedent_len, word_len)};
    }
};

namespace detail {

inline Derivation leaf(Rule rule, Sequent conclusion) { return Derivation{rule, std::move(conclusion), {}, {}}; }

inline Derivation step(Rule rule, Sequent conclusion, Position pos, std::vector<Derivation> premises) {
    return Derivation{rule, std::move(conclusion), pos, std::move(premises)};
}

inline Derivation unary(Rule rule, Sequent conclusion, Derivation premise) {
    std::vector<Derivation> ps;
    ps.push_back(std::move(premise));
    return step(rule, std::move(conclusion), std::size_t{0}, std::move(ps));
}

/**
 * Consumption-based search. The pending antecedent is kept as a stack (head at the
 * back). A star unfolded by CL+DL pushes a guard recording the input position; the
 * guard fails unless the fresh copy consumed at least one character, which rules out
 * the empty iterations that would otherwise loop.
 */
class LazySearch {
public:
    explicit LazySearch(std::string_view word) : word_(word) {}

    std::optional<Derivation> run(std::span<const Regex> antecedent) {
        stack_.clear();
        for (auto it = antecedent.rbegin(); it != antecedent.rend(); ++it) stack_.push_back(Goal{*it});
        return solve(0);
    }

private:
    static constexpr std::size_t no_guard = std::numeric_limits<std::size_t>::max();

    struct Goal {
        Regex regex;
        std::size_t guard = no_guard;  // not no_guard: a guard entry, regex unused
    };

    // Conclusion for the node acting on `head` with the current stack below it.
    Sequent sequent_with(std::initializer_list<Regex> heads, std::size_t pos) const {
        Sequent s;
        s.antecedent.assign(heads.begin(), heads.end());
        for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
            if (it->guard == no_guard) s.antecedent.push_back(it->regex);
        }
        s.consequent = std::string(word_.substr(pos));
        return s;
    }

    std::optional<Derivation> solve(std::size_t pos) {
        if (stack_.empty()) {
            if (pos != word_.size()) return std::nullopt;
            return leaf(Rule::Axiom2, Sequent{});
        }
        Goal top = std::move(stack_.back());
        stack_.pop_back();
        std::optional<Derivation> result;
        if (top.guard != no_guard) {
            if (pos > top.guard) result = solve(pos);
        } else {
            result = expand(top.regex, pos);
        }
        stack_.push_back(std::move(top));
        return result;
    }

    std::optional<Derivation> with_pushed(std::initializer_list<Goal> goals, std::size_t pos) {
        // goals are listed head-first
        for (auto it = std::rbegin(goals); it != std::rend(goals); ++it) stack_.push_back(*it);
        auto result = solve(pos);
        stack_.erase(stack_.end() - static_cast<std::ptrdiff_t>(goals.size()), stack_.end());
        return result;
    }

    std::optional<Derivation> expand(const Regex& r, std::size_t pos) {
        switch (r.kind()) {
            case Kind::Empty: return std::nullopt;

            case Kind::Epsilon: {
                auto p = solve(pos);
                if (!p) return std::nullopt;
                return unary(Rule::EpsL, sequent_with({r}, pos), std::move(*p));
            }

            case Kind::Atom: {
                if (pos >= word_.size() || word_[pos] != r.symbol()) return std::nullopt;
                auto p = solve(pos + 1);
                if (!p) return std::nullopt;
                Derivation ax = leaf(Rule::Axiom1, Sequent{{r}, std::string(1, r.symbol())});
                if (p->rule == Rule::Axiom2) return ax;
                std::vector<Derivation> ps;
                ps.push_back(std::move(ax));
                ps.push_back(std::move(*p));
                return step(Rule::DotR, sequent_with({r}, pos), Split{1, 1}, std::move(ps));
            }

            case Kind::Concat: {
                auto p = with_pushed({Goal{r.left()}, Goal{r.right()}}, pos);
                if (!p) return std::nullopt;
                return unary(Rule::DotL, sequent_with({r}, pos), std::move(*p));
            }

            case Kind::Union: {
                if (auto p = with_pushed({Goal{r.left()}}, pos)) {
                    return unary(Rule::PlusL1, sequent_with({r}, pos), std::move(*p));
                }
                if (auto p = with_pushed({Goal{r.right()}}, pos)) {
                    return unary(Rule::PlusL2, sequent_with({r}, pos), std::move(*p));
                }
                return std::nullopt;
            }

            case Kind::Star: {
                // discard it
                if (auto p = solve(pos)) return unary(Rule::WL, sequent_with({r}, pos), std::move(*p));
                // use it once
                if (auto p = with_pushed({Goal{r.inner()}}, pos)) {
                    return unary(Rule::DL, sequent_with({r}, pos), std::move(*p));
                }
                // use it at least twice: CL, then DL on the first copy, which must consume input
                if (auto p = with_pushed({Goal{r.inner()}, Goal{Regex::empty(), pos}, Goal{r}}, pos)) {
                    Derivation dl = unary(Rule::DL, sequent_with({r, r}, pos), std::move(*p));
                    return unary(Rule::CL, sequent_with({r}, pos), std::move(dl));
                }
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    std::string_view word_;
    std::vector<Goal> stack_;
};

/**
 * Rule-faithful decision by saturation.
 *
 * Starting from the goal, every applicable rule instance is enumerated (left rules at
 * the head, DotR at every proper antecedent split and every word split), interning each
 * premise sequent it mentions. Derivability then propagates upward from the axioms:
 * an instance fires once all its premises are proved. The cap bounds antecedent length,
 * so the explored space is finite and the derivable set found is exactly the least
 * fixed point of the rules over it. Exploration stops as soon as the goal is proved.
 *
 * Regex subterms are interned to small ids and words are kept as ranges of the query
 * word, so a sequent is identified by a short byte string: begin, end, then the term ids.
 */
class NaiveSearch {
public:
    explicit NaiveSearch(SearchBudget budget) : budget_(budget) {}

    std::optional<Derivation> run(std::span<const Regex> antecedent, std::string_view word) {
        if (word.size() >= std::numeric_limits<Unit>::max()) throw std::length_error("word too long");
        word_ = word;
        terms_.clear();
        regex_of_.clear();
        nodes_.clear();
        instances_.clear();
        index_.clear();
        exhausted_ = false;

        Key key = range_key(0, static_cast<Unit>(word.size()));
        for (const Regex& r : antecedent) key.push_back(intern_term(r));
        const NodeId goal = intern_node(std::move(key));
        for (NodeId next = 0; next < nodes_.size() && !nodes_[goal].proved && !exhausted_; ++next) expand(next);
        if (!nodes_[goal].proved) return std::nullopt;
        return build(goal);
    }

    bool exhausted() const noexcept { return exhausted_; }
    std::size_t nodes() const noexcept { return nodes_.size(); }

private:
    using Unit = char16_t;
    using Key = std::basic_string<Unit>;
    using NodeId = std::uint32_t;
    static constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();

    struct Term {
        Kind kind;
        char symbol;
        Unit left;   // Concat/Union left, Star body
        Unit right;  // Concat/Union right
    };

    struct Node {
        const Key* key;  // [begin, end, term ids...], owned by index_
        bool proved = false;
        std::uint32_t justification = none;
        std::uint32_t first_watch = none;  // watcher list: instance * 2 + premise slot
    };

    struct Instance {
        NodeId conclusion;
        Rule rule;
        Position position;
        std::array<NodeId, 2> premises{none, none};
        std::array<std::uint32_t, 2> next_watch{none, none};
        std::uint8_t count = 0;
        std::uint8_t remaining = 0;
    };

    static Key range_key(Unit begin, Unit end) { return Key{begin, end}; }

    Unit intern_term(const Regex& r) {
        for (std::size_t i = 0; i < regex_of_.size(); ++i) {
            if (regex_of_[i] == r) return static_cast<Unit>(i);
        }
        Unit left = 0, right = 0;
        if (r.is(Kind::Concat) || r.is(Kind::Union)) {
            left = intern_term(r.left());
            right = intern_term(r.right());
        } else if (r.is(Kind::Star)) {
            left = intern_term(r.inner());
        }
        if (regex_of_.size() >= std::numeric_limits<Unit>::max()) throw std::length_error("regex too large");
        regex_of_.push_back(r);
        terms_.push_back(Term{r.kind(), r.is(Kind::Atom) ? r.symbol() : '\0', left, right});
        return static_cast<Unit>(regex_of_.size() - 1);
    }

    NodeId intern_node(Key key) {
        auto [it, inserted] = index_.try_emplace(std::move(key), static_cast<NodeId>(nodes_.size()));
        if (!inserted) return it->second;
        if (nodes_.size() >= budget_.max_nodes) exhausted_ = true;
        nodes_.push_back(Node{&it->first});
        return it->second;
    }

    void add_instance(NodeId conclusion, Rule rule, Position position, std::initializer_list<NodeId> premises) {
        const auto id = static_cast<std::uint32_t>(instances_.size());
        Instance inst{conclusion, rule, position};
        for (NodeId p : premises) {
            const std::uint8_t slot = inst.count++;
            inst.premises[slot] = p;
            if (!nodes_[p].proved) {
                ++inst.remaining;
                inst.next_watch[slot] = nodes_[p].first_watch;
                nodes_[p].first_watch = id * 2 + slot;
            }
        }
        instances_.push_back(inst);
        if (inst.remaining == 0) fire(id);
    }

    void fire(std::uint32_t first) {
        ready_.assign(1, first);
        while (!ready_.empty()) {
            const std::uint32_t id = ready_.back();
            ready_.pop_back();
            Node& c = nodes_[instances_[id].conclusion];
            if (c.proved) continue;
            c.proved = true;
            c.justification = id;
            for (std::uint32_t w = c.first_watch; w != none;) {
                Instance& waiting = instances_[w / 2];
                if (--waiting.remaining == 0) ready_.push_back(w / 2);
                w = waiting.next_watch[w % 2];
            }
            c.first_watch = none;
        }
    }

    void left_rule(NodeId id, Rule rule, std::initializer_list<Unit> head) {
        const Key& key = *nodes_[id].key;
        const std::size_t n = key.size() - 2;
        if (n - 1 + head.size() > budget_.max_antecedent_len) return;
        Key premise = key.substr(0, 2);
        premise.append(head.begin(), head.end());
        premise.append(key, 3);
        add_instance(id, rule, std::size_t{0}, {intern_node(std::move(premise))});
    }

    void expand(NodeId id) {
        const Key key = *nodes_[id].key;
        const std::size_t n = key.size() - 2;
        const Unit begin = key[0], end = key[1];
        const std::size_t m = end - begin;

        if (n == 0) {
            if (m == 0) add_instance(id, Rule::Axiom2, {}, {});
            return;  // an empty antecedent only derives ε
        }
        const Unit self = key[2];
        const Term head = terms_[self];
        if (n == 1 && head.kind == Kind::Atom && m == 1 && word_[begin] == head.symbol) {
            add_instance(id, Rule::Axiom1, {}, {});
        }
        // no rule removes ∅
        for (std::size_t i = 2; i < key.size(); ++i) {
            if (terms_[key[i]].kind == Kind::Empty) return;
        }

        switch (head.kind) {
            case Kind::Epsilon: left_rule(id, Rule::EpsL, {}); break;
            case Kind::Concat: left_rule(id, Rule::DotL, {head.left, head.right}); break;
            case Kind::Union:
                left_rule(id, Rule::PlusL1, {head.left});
                left_rule(id, Rule::PlusL2, {head.right});
                break;
            case Kind::Star:
                left_rule(id, Rule::WL, {});
                left_rule(id, Rule::DL, {head.left});
                left_rule(id, Rule::CL, {self, self});
                break;
            default: break;
        }

        // DotR. A split with an empty antecedent side either reproduces the conclusion or
        // hands a nonempty word to an empty antecedent, so only proper antecedent splits
        // can contribute.
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t j = 0; j <= m; ++j) {
                const auto mid = static_cast<Unit>(begin + j);
                Key lhs = range_key(begin, mid);
                lhs.append(key, 2, k);
                Key rhs = range_key(mid, end);
                rhs.append(key, 2 + k);
                const NodeId l = intern_node(std::move(lhs));
                const NodeId r = intern_node(std::move(rhs));
                add_instance(id, Rule::DotR, Split{k, j}, {l, r});
            }
        }
    }

    Sequent sequent_of(NodeId id) const {
        const Key& key = *nodes_[id].key;
        Sequent s;
        s.antecedent.reserve(key.size() - 2);
        for (std::size_t i = 2; i < key.size(); ++i) s.antecedent.push_back(regex_of_[key[i]]);
        s.consequent = std::string(word_.substr(key[0], key[1] - key[0]));
        return s;
    }

    Derivation build(NodeId id) const {
        const Instance& inst = instances_[nodes_[id].justification];
        Derivation d{inst.rule, sequent_of(id), inst.position, {}};
        for (std::uint8_t i = 0; i < inst.count; ++i) d.premises.push_back(build(inst.premises[i]));
        return d;
    }

    SearchBudget budget_;
    std::string_view word_;
    std::vector<Term> terms_;
    std::vector<Regex> regex_of_;
    std::vector<Node> nodes_;
    std::vector<Instance> instances_;
    std::unordered_map<Key, NodeId> index_;
    std::vector<std::uint32_t> ready_;
    bool exhausted_ = false;
};

}  // namespace detail

/// Decides derivability of `antecedent ⊢ w` by consumption-based search. Always terminates.
inline MatchOutcome search_lazy(std::span<const Regex> antecedent, std::string_view w) {
    detail::LazySearch search(w);
    auto proof = search.run(antecedent);
    if (!proof) return {};
    return {Verdict::derivable, std::move(proof)};
}

/**
 * Exhaustive rule-faithful search bounded by `budget`. Complete whenever
 * budget.max_antecedent_len >= SearchBudget::completeness_cap(antecedent.size(), w.size());
 * returns budget_exhausted if max_nodes trips first.
 */
inline MatchOutcome search_naive(std::span<const Regex> antecedent, std::string_view w, SearchBudget budget) {
    if (budget.max_antecedent_len < antecedent.size()) {
        throw std::invalid_argument("antecedent cap below the initial antecedent length");
    }
    detail::NaiveSearch search(budget);
    auto proof = search.run(antecedent, w);
    if (proof) return {Verdict::derivable, std::move(proof)};
    return {search.exhausted() ? Verdict::budget_exhausted : Verdict::not_derivable, std::nullopt};
}

inline MatchOutcome search_naive(std::span<const Regex> antecedent, std::string_view w) {
    return search_naive(antecedent, w, SearchBudget::complete_for(antecedent.size(), w.size()));
}

/// Is `w` in L(r)?
inline MatchOutcome decide(const Regex& r, std::string_view w) { return search_lazy(std::span<const Regex>(&r, 1), w); }

}  // namespace dsmatch
