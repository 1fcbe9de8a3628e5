// Command-line surface for the clique-reduction laboratory.
//
// Exit codes: 0 ok, 1 input error, 2 token-budget refusal, 3 campaign
// disagreement, 64 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cliquelab/cnf.hpp"
#include "cliquelab/grammar.hpp"
#include "cliquelab/harness.hpp"
#include "cliquelab/recognition.hpp"
#include "cliquelab/util.hpp"

using namespace cliquelab;

namespace {

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

DyckPadding padding_from_flags(const std::string& schedule, int64_t base, int n) {
    if (schedule == "paper-exact") return DyckPadding::paper_exact();
    if (schedule != "scaled") throw parse_error("unknown padding schedule: " + schedule);
    return base > 0 ? DyckPadding::scaled(base) : DyckPadding::scaled_default(n);
}

int cmd_reduce(const std::string& problem, const std::string& graph_path, int k,
               const std::string& out_path, const std::string& schedule, int64_t base,
               int64_t budget) {
    Graph g = load_graph(graph_path);
    if (problem == "cfg") {
        TokenSeq w = build_cfg_string(g, k);
        if (int64_t(w.size()) > budget)
            throw budget_error("cfg string needs " + std::to_string(w.size()) + " tokens",
                               std::to_string(w.size()));
        write_file(out_path, token_text(w));
        Thresholds th;
        th.n_cliques = int64_t(enumerate_k_cliques(g, k).size());
        write_file(out_path + ".meta.json",
                   reduction_metadata("cfg", g, k, th, w.size(), "clique-grammar"));
    } else if (problem == "rna") {
        RnaInstance inst = build_rna_instance(g, k);
        if (int64_t(inst.seq.size()) > budget)
            throw budget_error("rna sequence needs " + std::to_string(inst.seq.size()) + " tokens",
                               std::to_string(inst.seq.size()));
        write_file(out_path, token_text(inst.seq));
        write_file(out_path + ".weights", weight_table_text(*inst.seq.vocab, inst.alphabet));
        std::string sched = "weights(w$=" + std::to_string(inst.params.w_dollar) +
                            ",l1=" + std::to_string(inst.params.l1) +
                            ",l2=" + std::to_string(inst.params.l2) +
                            ",l3=" + std::to_string(inst.params.l3) + ")";
        write_file(out_path + ".meta.json",
                   reduction_metadata("rna", g, k, inst.thresholds, inst.seq.size(), sched));
    } else if (problem == "dyck") {
        DyckPadding padding = padding_from_flags(schedule, base, g.n);
        DyckInstance inst = build_dyck_instance(g, k, padding, budget);
        write_file(out_path, token_text(inst.seq));
        write_file(out_path + ".meta.json",
                   reduction_metadata("dyck", g, k, inst.thresholds, inst.seq.size(),
                                      padding.describe(g.n, k)));
    } else {
        throw parse_error("unknown problem: " + problem);
    }
    return 0;
}

int cmd_solve(const std::string& problem, const std::string& input_path,
              const std::string& grammar_path, const std::string& weights_path,
              const std::string& recognizer, int64_t budget) {
    std::string text = read_file(input_path);
    TokenSeq seq = parse_token_text(text);
    if (int64_t(seq.size()) > budget)
        throw budget_error("input has " + std::to_string(seq.size()) + " tokens",
                           std::to_string(seq.size()));
    if (problem == "cfg") {
        CnfGrammar cnf = grammar_path.empty()
                             ? to_cnf(clique_grammar())
                             : to_cnf(Grammar::parse(read_file(grammar_path)));
        bool member;
        if (recognizer == "cyk")
            member = cyk(cnf, seq);
        else if (recognizer == "valiant-naive")
            member = valiant_recognize(cnf, seq, bmm_naive);
        else if (recognizer == "valiant-packed")
            member = valiant_recognize(cnf, seq, bmm_packed);
        else
            throw parse_error("unknown recognizer: " + recognizer);
        std::cout << "member=" << (member ? "true" : "false") << "\n";
    } else if (problem == "rna") {
        MatchedAlphabet alpha;
        if (weights_path.empty())
            alpha = MatchedAlphabet::prime_convention(*seq.vocab);
        else
            alpha = parse_weight_table(read_file(weights_path), *seq.vocab);
        std::cout << "score=" << wrna_fold(seq, alpha).score << "\n";
    } else if (problem == "dyck") {
        BracketAlphabet alpha = BracketAlphabet::standard(*seq.vocab);
        std::cout << "score=" << dyck_distance(seq, alpha) << "\n";
    } else {
        throw parse_error("unknown problem: " + problem);
    }
    return 0;
}

int cmd_verify(int nmax, int k, int trials, uint64_t seed, int workers, double p,
               const std::string& out_path, int64_t dyck_base, const std::string& recognizer) {
    CampaignSpec spec;
    for (int n = 3; n <= nmax; ++n) spec.sizes.push_back(n);
    spec.k = k;
    spec.trials = trials;
    spec.seed = seed;
    spec.workers = workers;
    spec.edge_prob = p;
    spec.dyck_base = dyck_base;
    if (recognizer == "cyk")
        spec.recognizer = Recognizer::cyk;
    else if (recognizer == "valiant-naive")
        spec.recognizer = Recognizer::valiant_naive;
    else if (recognizer == "valiant-packed")
        spec.recognizer = Recognizer::valiant_packed;
    else
        throw parse_error("unknown recognizer: " + recognizer);
    CampaignReport report = run_campaign(spec);
    if (!out_path.empty()) write_file(out_path, report.to_json());
    std::cout << "instances=" << report.instances << " records=" << report.records.size()
              << " disagreements=" << report.disagreements
              << " agreement=" << report.agreement_rate << "\n";
    return report.disagreements == 0 ? 0 : 3;
}

int cmd_bench(const std::string& sizes_csv, int k, int repeats, const std::string& out_path) {
    BenchSpec spec;
    spec.sizes.clear();
    spec.k = k;
    spec.repeats = repeats;
    std::string cur;
    for (char c : sizes_csv + ",") {
        if (c == ',') {
            if (!cur.empty()) spec.sizes.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (spec.sizes.empty()) throw parse_error("bench needs at least one size");
    BenchReport rep = run_bench(spec);
    std::cout << rep.to_text();
    std::cout << "cyk loglog slope: " << rep.loglog_slope("cyk") << "\n";
    if (!out_path.empty()) write_file(out_path, rep.to_json());
    return 0;
}

int cmd_grammar(bool cnf, const std::string& out_path) {
    std::string text = cnf ? to_cnf(clique_grammar()).to_text() : clique_grammar().to_text();
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-clique hardness reduction laboratory"};
    app.require_subcommand(1);

    std::string problem, graph_path, out_path, input_path, grammar_path, weights_path;
    std::string schedule = "scaled", recognizer = "cyk", sizes_csv = "3,4,5";
    int k = 1, nmax = 4, trials = 50, workers = 2, repeats = 5;
    uint64_t seed = 1;
    double p = 0.5;
    int64_t base = 0, budget = kDefaultTokenBudget;

    auto* reduce = app.add_subcommand("reduce", "build a reduction string from a graph");
    reduce->add_option("problem", problem, "cfg|rna|dyck")->required();
    reduce->add_option("--graph", graph_path, "graph file")->required();
    reduce->add_option("--k", k, "clique parameter k");
    reduce->add_option("-o,--out", out_path, "output token file")->required();
    reduce->add_option("--padding", schedule, "dyck padding: scaled|paper-exact");
    reduce->add_option("--base", base, "scaled padding base (default 4n)");
    reduce->add_option("--budget", budget, "token budget");

    auto* solve = app.add_subcommand("solve", "run a solver on a token file");
    solve->add_option("problem", problem, "cfg|rna|dyck")->required();
    solve->add_option("input", input_path, "token file")->required();
    solve->add_option("--grammar", grammar_path, "grammar file (cfg; default clique grammar)");
    solve->add_option("--weights", weights_path, "weight table (rna)");
    solve->add_option("--recognizer", recognizer, "cyk|valiant-naive|valiant-packed");
    solve->add_option("--budget", budget, "token budget");

    auto* verify = app.add_subcommand("verify", "campaign: deciders vs brute-force oracle");
    verify->add_option("--nmax", nmax, "largest n (exhaustive through 4, seeded beyond)");
    verify->add_option("--k", k, "clique parameter k");
    verify->add_option("--trials", trials, "seeded graphs per size above 4");
    verify->add_option("--seed", seed, "campaign seed");
    verify->add_option("--workers", workers, "worker threads");
    verify->add_option("--p", p, "edge probability for seeded graphs");
    verify->add_option("--dyck-base", base, "dyck scaled padding base");
    verify->add_option("--recognizer", recognizer, "cfg recognizer");
    verify->add_option("-o,--out", out_path, "report file");

    auto* bench = app.add_subcommand("bench", "timing table over reduction strings");
    bench->add_option("--sizes", sizes_csv, "comma-separated n values");
    bench->add_option("--k", k, "clique parameter k");
    bench->add_option("--repeats", repeats, "runs per size (median)");
    bench->add_option("-o,--out", out_path, "json output");

    auto* grammar = app.add_subcommand("grammar", "grammar utilities");
    auto* gexport = grammar->add_subcommand("export", "emit the clique grammar");
    bool want_cnf = false;
    gexport->add_flag("--cnf", want_cnf, "emit the normalized form");
    gexport->add_option("-o,--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::cerr << "usage error; see --help\n";
        return 64;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(problem, graph_path, k, out_path, schedule, base, budget);
        if (solve->parsed())
            return cmd_solve(problem, input_path, grammar_path, weights_path, recognizer, budget);
        if (verify->parsed())
            return cmd_verify(nmax, k, trials, seed, workers, p, out_path, base, recognizer);
        if (bench->parsed()) return cmd_bench(sizes_csv, k, repeats, out_path);
        if (grammar->parsed()) return cmd_grammar(want_cnf, out_path);
    } catch (const budget_error& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
