#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "enumerate.hpp"
#include "oracle.hpp"
#include "search.hpp"
#include "syntax.hpp"

// Differential harness: lazy search vs. naive search vs. derivative oracle over a grid
// of regexes and words.

namespace dsmatch {

struct CompareOptions {
    std::string alphabet = "ab";
    std::size_t max_degree = 6;
    std::size_t max_len = 4;
    std::uint64_t seed = 0;
    /// When set, draw this many seeded random regexes instead of enumerating.
    std::optional<std::size_t> random;
    std::size_t max_nodes = 10'000'000;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct Disagreement {
    Regex regex;
    Word word;
    bool lazy = false;
    Verdict naive = Verdict::not_derivable;
    bool oracle = false;
};

struct CompareReport {
    std::size_t regexes = 0;
    std::size_t words = 0;
    std::size_t cases = 0;
    std::vector<Disagreement> disagreements;

    bool clean() const noexcept { return disagreements.empty(); }
};

inline std::vector<Regex> compare_regexes(const CompareOptions& opt) {
    if (!opt.random) return enumerate_regexes(opt.alphabet, opt.max_degree);
    std::mt19937_64 rng(opt.seed);
    std::vector<Regex> out;
    out.reserve(*opt.random);
    for (std::size_t i = 0; i < *opt.random; ++i) out.push_back(random_regex(rng, opt.alphabet, opt.max_degree));
    return out;
}

inline CompareReport run_compare(const CompareOptions& opt) {
    const std::vector<Regex> regexes = compare_regexes(opt);
    const std::vector<Word> words = enumerate_words(opt.alphabet, opt.max_len);

    // Per-regex results, assembled in enumeration order afterwards.
    std::vector<std::vector<Disagreement>> found(regexes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < regexes.size(); i = next++) {
            const Regex& r = regexes[i];
            const std::span<const Regex> ante(&r, 1);
            for (const Word& w : words) {
                const bool lazy = search_lazy(ante, w).derivable();
                SearchBudget budget = SearchBudget::complete_for(1, w.size());
                budget.max_nodes = opt.max_nodes;
                const Verdict naive = search_naive(ante, w, budget).verdict;
                const bool oracle = oracle::oracle_match(r, w);
                const bool naive_agrees = naive != Verdict::budget_exhausted && (naive == Verdict::derivable) == oracle;
                if (lazy != oracle || !naive_agrees) found[i].push_back({r, w, lazy, naive, oracle});
            }
        }
    };

    unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }

    CompareReport report;
    report.regexes = regexes.size();
    report.words = words.size();
    report.cases = regexes.size() * words.size();
    for (auto& list : found) {
        for (auto& d : list) report.disagreements.push_back(std::move(d));
    }
    return report;
}

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::derivable: return "match";
        case Verdict::not_derivable: return "no-match";
        case Verdict::budget_exhausted: return "exhausted";
    }
    return "?";
}

inline std::string format_report(const CompareReport& report) {
    std::ostringstream out;
    out << "regexes: " << report.regexes << "\n";
    out << "words: " << report.words << "\n";
    out << "cases: " << report.cases << "\n";
    for (const Disagreement& d : report.disagreements) {
        out << "DISAGREE regex=" << render(d.regex) << " word=\"" << d.word << "\""
            << " lazy=" << (d.lazy ? "match" : "no-match") << " naive=" << verdict_name(d.naive)
            << " oracle=" << (d.oracle ? "match" : "no-match") << "\n";
    }
    out << "disagreements: " << report.disagreements.size() << "\n";
    return out.str();
}

}  // namespace dsmatch
