#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace dsmatch;

int main(int argc, char** argv) {
    CLI::App app{"Regex membership by sequent proof search"};
    app.require_subcommand(1);

    const std::map<std::string, cli::Engine> engines{{"lazy", cli::Engine::lazy}, {"naive", cli::Engine::naive}};
    const std::map<std::string, cli::ProofFormat> formats{{"json", cli::ProofFormat::json},
                                                          {"tree", cli::ProofFormat::tree}};

    std::string regex_text;
    std::string word;
    cli::EngineOptions engine;
    std::size_t cap = 0;
    std::vector<CLI::Option*> cap_opts;

    auto add_engine_flags = [&](CLI::App* cmd) {
        cmd->add_option("--engine", engine.engine, "lazy or naive")->transform(CLI::CheckedTransformer(engines));
        cap_opts.push_back(cmd->add_option("--cap", cap, "naive search: maximum antecedent length"));
        cmd->add_option("--max-nodes", engine.max_nodes, "naive search: node budget");
    };

    auto* match = app.add_subcommand("match", "decide whether WORD is in L(REGEX)");
    match->add_option("regex", regex_text, "regex text")->required();
    match->add_option("word", word, "word (\"\" for the empty word)")->required();
    add_engine_flags(match);

    cli::ProofFormat format = cli::ProofFormat::json;
    auto* prove = app.add_subcommand("prove", "emit a derivation of REGEX ⊢ WORD");
    prove->add_option("regex", regex_text, "regex text")->required();
    prove->add_option("word", word, "word (\"\" for the empty word)")->required();
    prove->add_option("--format", format, "json or tree")->transform(CLI::CheckedTransformer(formats));
    add_engine_flags(prove);

    std::string proof_path;
    auto* check = app.add_subcommand("check", "validate a derivation in JSON form");
    check->add_option("proof", proof_path, "proof file, or - for standard input")->required();

    CompareOptions compare_opt;
    std::size_t random_count = 0;
    auto* compare = app.add_subcommand("compare", "cross-check both search strategies against the derivative oracle");
    compare->add_option("--alphabet", compare_opt.alphabet, "alphabet symbols")->capture_default_str();
    compare->add_option("--max-degree", compare_opt.max_degree, "maximum regex degree")->capture_default_str();
    compare->add_option("--max-len", compare_opt.max_len, "maximum word length")->capture_default_str();
    compare->add_option("--seed", compare_opt.seed, "seed for --random")->capture_default_str();
    auto* random_opt = compare->add_option("--random", random_count, "test N seeded random regexes instead of all");
    compare->add_option("--threads", compare_opt.threads, "worker threads (0: all cores)");
    compare->add_option("--max-nodes", compare_opt.max_nodes, "naive search node budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_usage;
    }

    for (auto* opt : cap_opts) {
        if (opt->count() > 0) engine.cap = cap;
    }
    if (*match) return cli::cmd_match(regex_text, word, engine, std::cout, std::cerr);
    if (*prove) return cli::cmd_prove(regex_text, word, format, engine, std::cout, std::cerr);
    if (*check) return cli::cmd_check(proof_path, std::cout, std::cerr);
    if (random_opt->count() > 0) compare_opt.random = random_count;
    return cli::cmd_compare(compare_opt, std::cout, std::cerr);
}
