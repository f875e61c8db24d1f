#pragma once

#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <dsmatch/compare.hpp>
#include <dsmatch/derivation.hpp>
#include <dsmatch/proof_io.hpp>
#include <dsmatch/search.hpp>
#include <dsmatch/syntax.hpp>

// Subcommand bodies for the dsmatch executable. Each returns the process exit status.

namespace dsmatch::cli {

enum ExitStatus : int {
    exit_ok = 0,        // derivable / proof valid / no disagreement
    exit_negative = 1,  // not derivable / proof invalid / disagreement found
    exit_usage = 2,     // usage or parse error
    exit_exhausted = 3  // naive budget ran out
};

enum class Engine { lazy, naive };
enum class ProofFormat { json, tree };

struct EngineOptions {
    Engine engine = Engine::lazy;
    /// Naive antecedent cap; defaults to the completeness cap for the query.
    std::optional<std::size_t> cap;
    std::size_t max_nodes = 10'000'000;
};

namespace detail {

struct Query {
    Regex regex;
    Word word;
};

inline std::optional<Query> read_query(const std::string& regex_text, const std::string& word, std::ostream& err) {
    try {
        Regex r = parse(regex_text);
        if (!is_valid_word(word)) {
            err << "error: word \"" << word << "\" contains characters outside [a-zA-Z0-9]\n";
            return std::nullopt;
        }
        return Query{std::move(r), word};
    } catch (const ParseError& e) {
        err << "error: cannot parse regex \"" << regex_text << "\" at " << e.what() << "\n";
        return std::nullopt;
    }
}

inline bool valid_engine(const EngineOptions& opt, std::ostream& err) {
    if (opt.cap && *opt.cap < 1) {
        err << "error: --cap must be at least 1\n";
        return false;
    }
    return true;
}

inline MatchOutcome run_engine(const Query& q, const EngineOptions& opt) {
    const std::span<const Regex> ante(&q.regex, 1);
    if (opt.engine == Engine::lazy) return search_lazy(ante, q.word);
    SearchBudget budget = SearchBudget::complete_for(1, q.word.size());
    if (opt.cap) budget.max_antecedent_len = *opt.cap;
    budget.max_nodes = opt.max_nodes;
    return search_naive(ante, q.word, budget);
}

}  // namespace detail

inline int cmd_match(const std::string& regex_text, const std::string& word, const EngineOptions& opt,
                     std::ostream& out, std::ostream& err) {
    auto q = detail::read_query(regex_text, word, err);
    if (!q || !detail::valid_engine(opt, err)) return exit_usage;
    const MatchOutcome m = detail::run_engine(*q, opt);
    switch (m.verdict) {
        case Verdict::derivable: out << "MATCH\n"; return exit_ok;
        case Verdict::not_derivable: out << "NO MATCH\n"; return exit_negative;
        case Verdict::budget_exhausted: out << "BUDGET EXHAUSTED\n"; return exit_exhausted;
    }
    return exit_negative;
}

inline int cmd_prove(const std::string& regex_text, const std::string& word, ProofFormat format,
                     const EngineOptions& opt, std::ostream& out, std::ostream& err) {
    auto q = detail::read_query(regex_text, word, err);
    if (!q || !detail::valid_engine(opt, err)) return exit_usage;
    const MatchOutcome m = detail::run_engine(*q, opt);
    if (m.verdict == Verdict::budget_exhausted) {
        err << "search budget exhausted\n";
        return exit_exhausted;
    }
    if (!m.derivable()) return exit_negative;
    if (format == ProofFormat::json) {
        out << to_json(*m.certificate).dump(2) << "\n";
    } else {
        out << render_tree(*m.certificate);
    }
    return exit_ok;
}

/// Validates a proof document given as text.
inline int check_text(const std::string& text, std::ostream& out, std::ostream& err) {
    Derivation d;
    try {
        d = parse_proof(text);
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (CheckResult r = check_derivation(d); !r) {
        out << "INVALID " << r.message << "\n";
        return exit_negative;
    }
    out << "VALID " << render(conclusion_of(d)) << "\n";
    return exit_ok;
}

/// `path` of "-" reads standard input.
inline int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            err << "error: cannot open " << path << "\n";
            return exit_usage;
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return check_text(text, out, err);
}

inline int cmd_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.alphabet.empty() || !is_valid_word(opt.alphabet)) {
        err << "error: --alphabet must be a nonempty string of [a-zA-Z0-9]\n";
        return exit_usage;
    }
    const CompareReport report = run_compare(opt);
    out << format_report(report);
    return report.clean() ? exit_ok : exit_negative;
}

}  // namespace dsmatch::cli
