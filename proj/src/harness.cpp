#include "cliquelab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <mutex>

#include <json.hpp>

#include "cliquelab/cnf.hpp"
#include "cliquelab/grammar.hpp"
#include "cliquelab/recognition.hpp"
#include "cliquelab/util.hpp"

namespace cliquelab {

const char* recognizer_name(Recognizer r) {
    switch (r) {
        case Recognizer::cyk: return "cyk";
        case Recognizer::valiant_naive: return "valiant_naive";
        case Recognizer::valiant_packed: return "valiant_packed";
    }
    return "?";
}

namespace {

const CnfGrammar& cached_clique_cnf() {
    static const CnfGrammar cnf = to_cnf(clique_grammar());
    return cnf;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

bool decide_via_cfg(const Graph& g, int k, Recognizer recognizer) {
    auto cliques = enumerate_k_cliques(g, k);
    if (cliques.empty()) return false;
    TokenSeq w = build_cfg_string(g, k);
    const CnfGrammar& cnf = cached_clique_cnf();
    switch (recognizer) {
        case Recognizer::cyk: return cyk(cnf, w);
        case Recognizer::valiant_naive: return valiant_recognize(cnf, w, bmm_naive);
        case Recognizer::valiant_packed: return valiant_recognize(cnf, w, bmm_packed);
    }
    return false;
}

bool decide_via_rna(const Graph& g, int k) {
    if (enumerate_k_cliques(g, k).empty()) return false;
    RnaInstance inst = build_rna_instance(g, k);
    return wrna_fold(inst.seq, inst.alphabet).score == inst.thresholds.ec;
}

bool decide_via_dyck(const Graph& g, int k, const DyckPadding& padding, int64_t token_budget) {
    if (enumerate_k_cliques(g, k).empty()) return false;
    DyckInstance inst = build_dyck_instance(g, k, padding, token_budget);
    return dyck_distance(inst.seq, inst.alphabet) == inst.thresholds.ec;
}

bool calibrate_dyck(int n, int k, const DyckPadding& padding, std::string* diagnostics) {
    auto fail = [&](const std::string& msg) {
        if (diagnostics) *diagnostics = msg;
        return false;
    };
    // Smallest graphs with and without a 3k-clique at this n: a planted
    // 3k-clique plus isolated nodes, and the empty-but-for-one-edge graph.
    if (n < 3 * k) return fail("calibration: n < 3k");
    std::vector<std::pair<int, int>> clique_edges;
    for (int u = 1; u <= 3 * k; ++u)
        for (int v = u + 1; v <= 3 * k; ++v) clique_edges.emplace_back(u, v);
    Graph with = Graph::from_edges(n, clique_edges);
    Graph without = Graph::from_edges(n, {{1, 2}});

    DyckInstance iw = build_dyck_instance(with, k, padding);
    int64_t sw = dyck_distance(iw.seq, iw.alphabet);
    if (sw != iw.thresholds.ec)
        return fail("calibration: clique instance scored " + std::to_string(sw) +
                    ", expected E_C=" + std::to_string(iw.thresholds.ec));
    if (!enumerate_k_cliques(without, k).empty()) {
        DyckInstance io = build_dyck_instance(without, k, padding);
        int64_t so = dyck_distance(io.seq, io.alphabet);
        if (so <= io.thresholds.ec)
            return fail("calibration: cliqueless instance scored " + std::to_string(so) +
                        " <= E_C=" + std::to_string(io.thresholds.ec));
    }
    if (diagnostics) *diagnostics = "ok";
    return true;
}

namespace {

struct Instance {
    Graph g;
    int k;
};

void run_instance(const Instance& inst, const CampaignSpec& spec, const DyckPadding& padding,
                  std::vector<CampaignRecord>& out, std::mutex& mu) {
    bool oracle = has_3k_clique(inst.g, inst.k);
    auto push = [&](const char* method, bool decision, int64_t score, int64_t threshold,
                    double ms) {
        CampaignRecord r;
        r.graph_digest = inst.g.digest();
        r.n = inst.g.n;
        r.k = inst.k;
        r.method = method;
        r.decision = decision;
        r.oracle = oracle;
        r.score = score;
        r.threshold = threshold;
        r.wall_ms = ms;
        std::lock_guard<std::mutex> lock(mu);
        out.push_back(std::move(r));
    };
    bool empty = enumerate_k_cliques(inst.g, inst.k).empty();
    if (spec.run_cfg) {
        double t0 = now_ms();
        bool d = decide_via_cfg(inst.g, inst.k, spec.recognizer);
        push("cfg", d, -1, -1, now_ms() - t0);
    }
    if (spec.run_rna) {
        double t0 = now_ms();
        if (empty) {
            push("rna", false, -1, -1, now_ms() - t0);
        } else {
            RnaInstance ri = build_rna_instance(inst.g, inst.k);
            int64_t score = wrna_fold(ri.seq, ri.alphabet).score;
            push("rna", score == ri.thresholds.ec, score, ri.thresholds.ec, now_ms() - t0);
        }
    }
    if (spec.run_dyck) {
        double t0 = now_ms();
        if (empty) {
            push("dyck", false, -1, -1, now_ms() - t0);
        } else {
            DyckInstance di = build_dyck_instance(inst.g, inst.k, padding);
            int64_t score = dyck_distance(di.seq, di.alphabet);
            push("dyck", score == di.thresholds.ec, score, di.thresholds.ec, now_ms() - t0);
        }
    }
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec) {
    std::vector<Instance> instances;
    SplitMix64 seeder(spec.seed);
    for (int n : spec.sizes) {
        if (n <= 4) {
            // exhaustive over all edge subsets
            std::vector<std::pair<int, int>> all;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
            for (uint64_t mask = 0; mask < (uint64_t(1) << all.size()); ++mask) {
                std::vector<std::pair<int, int>> edges;
                for (size_t b = 0; b < all.size(); ++b)
                    if (mask >> b & 1) edges.push_back(all[b]);
                instances.push_back(Instance{Graph::from_edges(n, std::move(edges)), spec.k});
            }
        } else {
            for (int t = 0; t < spec.trials; ++t)
                instances.push_back(
                    Instance{gen_random_gnp(n, spec.edge_prob, seeder.next()), spec.k});
        }
    }

    DyckPadding padding = spec.dyck_base > 0 ? DyckPadding::scaled(spec.dyck_base)
                                             : DyckPadding::scaled_default(
                                                   *std::max_element(spec.sizes.begin(),
                                                                     spec.sizes.end()));
    if (spec.run_dyck) {
        for (int n : spec.sizes) {
            std::string diag;
            if (!calibrate_dyck(n, spec.k, padding, &diag))
                throw domain_error("dyck calibration failed for n=" + std::to_string(n) +
                                   ", k=" + std::to_string(spec.k) + ": " + diag);
        }
    }

    CampaignReport report;
    std::mutex mu;
    int workers = std::max(1, spec.workers);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            run_instance(instances[i], spec, padding, report.records, mu);
        }
    };
    std::vector<std::future<void>> futs;
    for (int w = 0; w < workers; ++w) futs.push_back(std::async(std::launch::async, worker));
    for (auto& f : futs) f.get();

    std::sort(report.records.begin(), report.records.end(),
              [](const CampaignRecord& a, const CampaignRecord& b) {
                  return std::tie(a.graph_digest, a.method) < std::tie(b.graph_digest, b.method);
              });
    report.instances = int64_t(instances.size());
    for (const auto& r : report.records)
        if (r.decision != r.oracle) ++report.disagreements;
    report.agreement_rate =
        report.records.empty()
            ? 1.0
            : 1.0 - double(report.disagreements) / double(report.records.size());
    return report;
}

std::string CampaignReport::to_json() const {
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json rec;
        rec["graph_digest"] = r.graph_digest;
        rec["n"] = r.n;
        rec["k"] = r.k;
        rec["method"] = r.method;
        rec["decision"] = r.decision;
        rec["oracle"] = r.oracle;
        rec["score"] = r.score;
        rec["threshold"] = r.threshold;
        rec["wall_ms"] = r.wall_ms;
        j["records"].push_back(std::move(rec));
    }
    j["aggregate"]["instances"] = instances;
    j["aggregate"]["disagreements"] = disagreements;
    j["aggregate"]["agreement_rate"] = agreement_rate;
    return j.dump(2) + "\n";
}

CampaignReport CampaignReport::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CampaignReport rep;
    for (const auto& rec : j.at("records")) {
        CampaignRecord r;
        r.graph_digest = rec.at("graph_digest").get<std::string>();
        r.n = rec.at("n").get<int>();
        r.k = rec.at("k").get<int>();
        r.method = rec.at("method").get<std::string>();
        r.decision = rec.at("decision").get<bool>();
        r.oracle = rec.at("oracle").get<bool>();
        r.score = rec.at("score").get<int64_t>();
        r.threshold = rec.at("threshold").get<int64_t>();
        r.wall_ms = rec.at("wall_ms").get<double>();
        rep.records.push_back(std::move(r));
    }
    rep.instances = j.at("aggregate").at("instances").get<int64_t>();
    rep.disagreements = j.at("aggregate").at("disagreements").get<int64_t>();
    rep.agreement_rate = j.at("aggregate").at("agreement_rate").get<double>();
    return rep;
}

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs.empty() ? 0.0 : xs[xs.size() / 2];
}

}  // namespace

BenchReport run_bench(const BenchSpec& spec) {
    BenchReport rep;
    const CnfGrammar& cnf = cached_clique_cnf();
    for (int n : spec.sizes) {
        Graph g = complete_graph(n);
        TokenSeq w = build_cfg_string(g, spec.k);
        std::vector<double> cyk_times, val_times;
        for (int r = 0; r < spec.repeats; ++r) {
            double t0 = now_ms();
            volatile bool ok = cyk(cnf, w);
            (void)ok;
            cyk_times.push_back(now_ms() - t0);
            if (spec.include_valiant) {
                t0 = now_ms();
                volatile bool ok2 = valiant_recognize(cnf, w, bmm_packed);
                (void)ok2;
                val_times.push_back(now_ms() - t0);
            }
        }
        rep.rows.push_back(BenchRow{"cyk", n, w.size(), median(cyk_times)});
        if (spec.include_valiant)
            rep.rows.push_back(BenchRow{"valiant_packed", n, w.size(), median(val_times)});
    }
    return rep;
}

double BenchReport::loglog_slope(const std::string& method) const {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows)
        if (r.method == method && r.median_ms > 0 && r.tokens > 1)
            pts.emplace_back(std::log(double(r.tokens)), std::log(r.median_ms));
    if (pts.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = double(pts.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double BenchReport::median_ms(const std::string& method, int n) const {
    for (const auto& r : rows)
        if (r.method == method && r.n == n) return r.median_ms;
    return 0.0;
}

std::string BenchReport::to_text() const {
    std::string out = "method\tn\ttokens\tmedian_ms\n";
    for (const auto& r : rows)
        out += r.method + "\t" + std::to_string(r.n) + "\t" + std::to_string(r.tokens) + "\t" +
               std::to_string(r.median_ms) + "\n";
    return out;
}

std::string BenchReport::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["method"] = r.method;
        row["n"] = r.n;
        row["tokens"] = r.tokens;
        row["median_ms"] = r.median_ms;
        j.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

}  // namespace cliquelab
