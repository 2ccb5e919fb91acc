#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "immkit/errors.hpp"
#include "immkit/harness.hpp"

namespace {

immkit::Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return immkit::Json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace immkit;
    CLI::App app{"Exact immanant and trace toolkit"};
    app.require_subcommand(1);
    bool csv = false;
    int threads = 1;
    app.add_flag("--csv", csv, "Print a CSV table instead of JSON");
    app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

    std::string trace, matrix_file;
    auto* compute_cmd = app.add_subcommand("compute", "Evaluate a trace immanant on a matrix");
    compute_cmd->add_option("--trace", trace, "family:partition, e.g. chi:3,1")->required();
    compute_cmd->add_option("--matrix", matrix_file, "JSON matrix file")->required()->check(CLI::ExistingFile);

    HookChainOptions chain;
    std::string source = "network";
    bool summary_only = false;
    auto* chain_cmd = app.add_subcommand("verify-hook-chain", "Check hook immanant chains");
    chain_cmd->add_option("--n", chain.n)->check(CLI::Range(1, 9));
    chain_cmd->add_option("--depth", chain.depth)->check(CLI::NonNegativeNumber);
    chain_cmd->add_option("--trials", chain.trials, "Trials; 0 with --source poset means every unit interval order")
        ->check(CLI::NonNegativeNumber);
    chain_cmd->add_option("--seed", chain.seed);
    chain_cmd->add_option("--source", source)->check(CLI::IsMember({"network", "poset", "file"}));
    chain_cmd->add_option("--matrix", matrix_file, "JSON matrix file for --source file")->check(CLI::ExistingFile);
    chain_cmd->add_option("--family-cap", chain.family_cap, "Skip the family count above this many path families");
    chain_cmd->add_flag("--summary", summary_only, "Omit per-trial records");

    LemmaOptions lemma;
    auto* lemma_cmd = app.add_subcommand("verify-lemma", "Hook difference identity and the injection");
    lemma_cmd->add_option("--max-n", lemma.exhaustive_max_n, "Exhaustive up to this size")->check(CLI::Range(0, 6));
    lemma_cmd->add_option("--random", lemma.random_count, "Number of random posets")->check(CLI::NonNegativeNumber);
    lemma_cmd->add_option("--random-min-n", lemma.random_min_n)->check(CLI::Range(1, 8));
    lemma_cmd->add_option("--random-max-n", lemma.random_max_n)->check(CLI::Range(1, 8));
    lemma_cmd->add_option("--seed", lemma.seed);

    int bijection_n = 6;
    auto* bijection_cmd = app.add_subcommand("verify-bijection", "Unit interval orders and 312-avoiding permutations");
    bijection_cmd->add_option("--max-n", bijection_n)->check(CLI::Range(1, 9));

    int hikita_n = 6;
    auto* hikita_cmd = app.add_subcommand("verify-hikita", "Monomial trace nonnegativity");
    hikita_cmd->add_option("--max-n", hikita_n)->check(CLI::Range(1, 6));

    PateOptions pate;
    auto* pate_cmd = app.add_subcommand("explore-pate", "Compare chi^lambda with its Pate successor");
    pate_cmd->add_option("--n", pate.n)->check(CLI::Range(1, 9));
    pate_cmd->add_option("--depth", pate.depth)->check(CLI::NonNegativeNumber);
    pate_cmd->add_option("--trials", pate.trials)->check(CLI::NonNegativeNumber);
    pate_cmd->add_option("--seed", pate.seed);
    pate_cmd->add_option("--max-examples", pate.max_examples);

    SuiteOptions suite;
    std::string level = "quick";
    auto* suite_cmd = app.add_subcommand("suite", "Run every property check");
    suite_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
    suite_cmd->add_option("--seed", suite.seed);
    suite_cmd->add_flag("--inject-fault", suite.inject_fault, "Corrupt a character table copy (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        Report report;
        if (*compute_cmd) {
            report = compute(trace, matrix_from_json(read_json(matrix_file)));
        } else if (*chain_cmd) {
            chain.threads = threads;
            chain.include_trials = !summary_only;
            chain.source = source == "poset" ? MatrixSource::poset
                           : source == "file" ? MatrixSource::file
                                              : MatrixSource::network;
            if (chain.source == MatrixSource::file) {
                if (matrix_file.empty()) throw std::invalid_argument("--source file needs --matrix");
                chain.matrix = matrix_from_json(read_json(matrix_file));
                chain.n = chain.matrix->size();
            }
            report = verify_hook_chain(chain);
        } else if (*lemma_cmd) {
            report = verify_lemma(lemma);
        } else if (*bijection_cmd) {
            report = verify_bijection(bijection_n);
        } else if (*hikita_cmd) {
            report = verify_hikita(hikita_n);
        } else if (*pate_cmd) {
            pate.threads = threads;
            report = explore_pate(pate);
        } else if (*suite_cmd) {
            suite.threads = threads;
            suite.level = level == "full" ? SuiteLevel::full : SuiteLevel::quick;
            report = run_suite(suite);
        }
        if (csv)
            std::cout << report_csv(report.json);
        else
            std::cout << report.json.dump(2) << '\n';
        return report.passed ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << '\n';
        return 2;
    }
}
