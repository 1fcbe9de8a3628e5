#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliquelab/graph.hpp"
#include "cliquelab/reductions.hpp"

namespace cliquelab {

enum class Recognizer { cyk, valiant_naive, valiant_packed };
const char* recognizer_name(Recognizer r);

// End-to-end 3k-clique deciders through each reduction. All short-circuit to
// false when the graph has no k-clique at all.
bool decide_via_cfg(const Graph& g, int k, Recognizer recognizer = Recognizer::cyk);
bool decide_via_rna(const Graph& g, int k);
bool decide_via_dyck(const Graph& g, int k, const DyckPadding& padding,
                     int64_t token_budget = kDefaultTokenBudget);

// Pre-campaign validation of a Dyck (n, k, b) triple: on the two smallest
// usable graphs with and without a 3k-clique, the computed E_C must match
// the solver exactly on the clique side and strictly separate on the other.
// Returns false (with diagnostics) when the scaled thresholds cannot be
// trusted.
bool calibrate_dyck(int n, int k, const DyckPadding& padding, std::string* diagnostics = nullptr);

struct CampaignSpec {
    std::vector<int> sizes;            // exhaustive for n <= 4, seeded beyond
    int k = 1;
    int trials = 50;                   // per seeded size
    double edge_prob = 0.5;
    uint64_t seed = 1;
    int workers = 2;
    bool run_cfg = true, run_rna = true, run_dyck = true;
    Recognizer recognizer = Recognizer::cyk;
    int64_t dyck_base = 0;             // 0 = 4n default
};

struct CampaignRecord {
    std::string graph_digest;
    int n = 0, k = 0;
    std::string method;
    bool decision = false;
    bool oracle = false;
    int64_t score = -1;      // rna/dyck solver score, -1 for cfg
    int64_t threshold = -1;  // E_C, -1 for cfg
    double wall_ms = 0.0;
};

struct CampaignReport {
    std::vector<CampaignRecord> records;  // sorted by (digest, method)
    int64_t instances = 0;
    int64_t disagreements = 0;
    double agreement_rate = 1.0;

    std::string to_json() const;
    static CampaignReport from_json(const std::string& text);
};

CampaignReport run_campaign(const CampaignSpec& spec);

struct BenchSpec {
    std::vector<int> sizes = {3, 4, 5, 6};
    int k = 1;
    int repeats = 5;
    bool include_valiant = true;
};

struct BenchRow {
    std::string method;
    int n = 0;
    size_t tokens = 0;
    double median_ms = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    // Least-squares slope of log(time) vs log(tokens) for one method.
    double loglog_slope(const std::string& method) const;
    double median_ms(const std::string& method, int n) const;
    std::string to_text() const;
    std::string to_json() const;
};

BenchReport run_bench(const BenchSpec& spec);

}  // namespace cliquelab
