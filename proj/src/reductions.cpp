#include "cliquelab/reductions.hpp"

#include <algorithm>

#include <json.hpp>

#include "cliquelab/util.hpp"

namespace cliquelab {

using u128 = unsigned __int128;

const char* mark_suffix(TypeMark m) {
    switch (m) {
        case TypeMark::ab: return "_ab";
        case TypeMark::ag: return "_ag";
        case TypeMark::bg: return "_bg";
    }
    return "";
}

namespace {

bool has_mark(const std::string& base) {
    for (const char* suf : {"_ab", "_ag", "_bg"})
        if (base.size() > 3 && base.compare(base.size() - 3, 3, suf) == 0) return true;
    return false;
}

std::string marked_name(const std::string& name, TypeMark m) {
    bool primed = !name.empty() && name.back() == '\'';
    std::string base = primed ? name.substr(0, name.size() - 1) : name;
    if (has_mark(base)) throw domain_error("letter '" + name + "' is already marked");
    return base + mark_suffix(m) + (primed ? "'" : "");
}

std::string primed_name(const std::string& name) {
    if (!name.empty() && name.back() == '\'') return name.substr(0, name.size() - 1);
    return name + "'";
}

}  // namespace

TokenSeq mark(const TokenSeq& s, TypeMark m) {
    TokenSeq out{s.vocab, {}};
    out.ids.reserve(s.size());
    for (size_t p = 0; p < s.size(); ++p) out.push(marked_name(s.name_at(p), m));
    return out;
}

TokenSeq prime(const TokenSeq& s) {
    TokenSeq out{s.vocab, {}};
    out.ids.reserve(s.size());
    for (size_t p = 0; p < s.size(); ++p) out.push(primed_name(s.name_at(p)));
    return out;
}

TokenSeq reverse(const TokenSeq& s) {
    TokenSeq out = s;
    std::reverse(out.ids.begin(), out.ids.end());
    return out;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out += char('0' + int(v % 10));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

constexpr u128 kU128Cap = ~u128(0) >> 1;

u128 sat_mul(u128 a, u128 b) {
    if (a != 0 && b > kU128Cap / a) return kU128Cap;
    return a * b;
}

u128 sat_add(u128 a, u128 b) {
    u128 s = a + b;
    return s < a ? kU128Cap : s;
}

u128 sat_pow(u128 base, int exp) {
    u128 r = 1;
    for (int i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

}  // namespace

RnaParams RnaParams::make(int n, int k) {
    if (n < 1 || k < 1) throw domain_error("RnaParams needs n >= 1, k >= 1");
    RnaParams p;
    p.n = n;
    p.k = k;
    int64_t log_n = ceil_log2(n);
    p.w_dollar = 10 * std::max<int64_t>(log_n, 1);
    p.l1 = 10 * int64_t(k) * k * n * std::max<int64_t>(log_n, 1);
    p.l2 = 10 * int64_t(k) * k * p.l1;
    p.l3 = 10 * p.l2;
    return p;
}

DyckPadding DyckPadding::scaled(int64_t b) {
    if (b < 2) throw domain_error("scaled padding base must be at least 2");
    DyckPadding p;
    p.schedule = Schedule::scaled;
    p.base = b;
    return p;
}

DyckPadding DyckPadding::paper_exact() {
    DyckPadding p;
    p.schedule = Schedule::paper_exact;
    return p;
}

std::array<u128, 6> DyckPadding::lengths(int n, int k) const {
    std::array<u128, 6> l{};
    if (schedule == Schedule::paper_exact) {
        u128 base = sat_mul(1000, sat_mul(u128(n), u128(n)));
        for (int i = 0; i < 6; ++i) l[size_t(i)] = sat_pow(base, i + 1);
    } else {
        // Each level dominates what sits beneath it, with just enough slack
        // that the intended alignment is optimal:
        //   l1 covers every list position, so all $' match regardless of
        //      which entry the node word folds into;
        //   l2 exceeds the per-pair score E2, protecting gadget boundaries;
        //   l3 exceeds l2+E2, protecting the mark structure;
        //   l4 exceeds the gain W of folding one extra CNG/CLG window, so
        //      spending an a/b/c run to open a second triple never pays;
        //   l5 exceeds 2*l4 so flank matches beat sacrificing them.
        auto even = [](int64_t v) { return v + (v & 1); };
        int64_t L = 2 * ceil_log2(int64_t(n) + 1);
        int64_t l0 = 2;
        int64_t l1 = even(std::max<int64_t>(base, (2 * n - 1) * l0 + 2));
        int64_t e1 = (int64_t(n) - 1) * L / 2 + (l1 - n * l0);
        int64_t e2 = int64_t(k) * k * e1;
        int64_t l2 = even(std::max(l1 + 2, e2 + 4));
        int64_t cng = int64_t(k) * k * (2 * l2 + 2 * l1 + L);
        int64_t clg = int64_t(k) * k * (2 * l2 + int64_t(n) * (2 * l0 + L));
        int64_t l3 = even(l2 + e2);
        int64_t window = 2 * l3 + (cng + clg) / 2 - e2;
        int64_t l4 = even(window + 4);
        int64_t l5 = even(2 * l4 + 4);
        l = {u128(l0), u128(l1), u128(l2), u128(l3), u128(l4), u128(l5)};
    }
    for (int i = 1; i < 6; ++i)
        if (l[size_t(i)] <= l[size_t(i - 1)])
            throw domain_error("padding schedule is not strictly increasing");
    return l;
}

std::string DyckPadding::describe(int n, int k) const {
    std::string head = schedule == Schedule::paper_exact
                           ? "paper_exact(l_i=(1000*" + std::to_string(n) + "^2)^(i+1)"
                           : "scaled(b=" + std::to_string(base);
    auto l = lengths(n, k);
    head += "; l=";
    for (int i = 0; i < 6; ++i) head += (i ? "," : "") + u128_to_string(l[size_t(i)]);
    return head + ")";
}

// ---- Section 2: CFG string --------------------------------------------------

namespace {

void append_bits(TokenSeq& seq, const std::string& bits, int32_t zero, int32_t one) {
    for (char c : bits) seq.ids.push_back(c == '1' ? one : zero);
}

}  // namespace

TokenSeq build_cfg_string(const Graph& g, int k) {
    if (k < 1) throw domain_error("k must be positive");
    auto cliques = enumerate_k_cliques(g, k);
    auto vocab = std::make_shared<Vocab>();
    const int32_t zero = vocab->intern("0"), one = vocab->intern("1");
    const int32_t dollar = vocab->intern("$"), hash = vocab->intern("#");
    TokenSeq seq{vocab, {}};

    auto node_gadget = [&](TokenSeq& out, int v) {
        out.ids.push_back(hash);
        append_bits(out, encode_node(v, g.n), zero, one);
        out.ids.push_back(hash);
    };
    auto list_gadget = [&](TokenSeq& out, int v) {
        out.ids.push_back(hash);
        for (int u : g.neighbors(v)) {
            out.ids.push_back(dollar);
            std::string bits = encode_node(u, g.n);
            std::reverse(bits.begin(), bits.end());
            append_bits(out, bits, zero, one);
            out.ids.push_back(dollar);
        }
        out.ids.push_back(hash);
    };
    auto clique_nodes = [&](TokenSeq& out, const Clique& t) {
        for (int v : t)
            for (int rep = 0; rep < k; ++rep) node_gadget(out, v);
    };
    auto clique_lists = [&](TokenSeq& out, const Clique& t) {
        for (int rep = 0; rep < k; ++rep)
            for (int v : t) list_gadget(out, v);
    };

    for (const char* letter : {"a", "b", "c"}) {
        int32_t start = vocab->intern(std::string(letter) + "_start");
        int32_t mid = vocab->intern(std::string(letter) + "_mid");
        int32_t end = vocab->intern(std::string(letter) + "_end");
        bool first_nodes = letter[0] == 'a';
        bool second_nodes = letter[0] != 'c';
        for (const Clique& t : cliques) {
            seq.ids.push_back(start);
            first_nodes ? clique_nodes(seq, t) : clique_lists(seq, t);
            seq.ids.push_back(mid);
            second_nodes ? clique_nodes(seq, t) : clique_lists(seq, t);
            seq.ids.push_back(end);
        }
    }
    return seq;
}

// ---- Shared gadget assembly for the folding and Dyck reductions -------------

namespace {

// Marked-letter helper: interns "<base><suffix>" and "<base><suffix>'".
struct MarkSet {
    int32_t zero, one, dollar, hash, g;
    int32_t zero_p, one_p, dollar_p, hash_p, g_p;

    MarkSet(Vocab& v, TypeMark m) {
        const std::string suf = mark_suffix(m);
        auto both = [&](const char* base, int32_t& plain, int32_t& primed) {
            plain = v.intern(base + suf);
            primed = v.intern(base + suf + "'");
        };
        both("0", zero, zero_p);
        both("1", one, one_p);
        both("$", dollar, dollar_p);
        both("#", hash, hash_p);
        both("g", g, g_p);
    }

    int32_t bit(char c, bool primed) const {
        return primed ? (c == '1' ? one_p : zero_p) : (c == '1' ? one : zero);
    }
};

}  // namespace

// ---- Section 3: weighted RNA instance ---------------------------------------

namespace {

// Appends [NG(u)]_m = $^2n ubar $^2n, marked.
void rna_node_gadget(TokenSeq& out, const Graph& g, int u, const MarkSet& ms) {
    out.append_run(ms.dollar, size_t(2 * g.n));
    for (char c : encode_node(u, g.n)) out.ids.push_back(ms.bit(c, false));
    out.append_run(ms.dollar, size_t(2 * g.n));
}

// Appends [p(LG(v))^R]_m. LG(v) lists ($ ubar $) for neighbors then ($ $)
// fillers; priming and reversal are applied on the fly.
void rna_list_gadget_rev(TokenSeq& out, const Graph& g, int v, const MarkSet& ms) {
    std::vector<int> nbr = g.neighbors(v);
    int fillers = g.n - int(nbr.size());
    for (int i = 0; i < fillers; ++i) {
        out.ids.push_back(ms.dollar_p);
        out.ids.push_back(ms.dollar_p);
    }
    for (auto it = nbr.rbegin(); it != nbr.rend(); ++it) {
        out.ids.push_back(ms.dollar_p);
        std::string bits = encode_node(*it, g.n);
        std::reverse(bits.begin(), bits.end());
        for (char c : bits) out.ids.push_back(ms.bit(c, true));
        out.ids.push_back(ms.dollar_p);
    }
}

void rna_cng(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms) {
    for (int v : t)
        for (int rep = 0; rep < k; ++rep) {
            out.ids.push_back(ms.hash);
            rna_node_gadget(out, g, v, ms);
            out.ids.push_back(ms.hash);
        }
}

void rna_clg_rev(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms) {
    // p(CLG(t))^R: k copies of the reversed per-node blocks, nodes descending
    for (int rep = 0; rep < k; ++rep)
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            out.ids.push_back(ms.hash_p);
            rna_list_gadget_rev(out, g, *it, ms);
            out.ids.push_back(ms.hash_p);
        }
}

void rna_open_half(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms) {
    out.ids.push_back(ms.g);
    rna_cng(out, g, k, t, ms);
    out.ids.push_back(ms.g);
}

void rna_close_half(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms) {
    out.ids.push_back(ms.g_p);
    rna_clg_rev(out, g, k, t, ms);
    out.ids.push_back(ms.g_p);
}

struct RnaGadgetCtx {
    MarkSet ab, ag, bg;
    RnaGadgetCtx(Vocab& v)
        : ab(v, TypeMark::ab), ag(v, TypeMark::ag), bg(v, TypeMark::bg) {}
};

// CG_alpha = [g CNG g]_ag [g' p(CLG)^R g']_ab, and cyclic relabelings.
void rna_cg(TokenSeq& out, const Graph& g, int k, const Clique& t, char type,
            const RnaGadgetCtx& ctx) {
    switch (type) {
        case 'a':
            rna_open_half(out, g, k, t, ctx.ag);
            rna_close_half(out, g, k, t, ctx.ab);
            break;
        case 'b':
            rna_open_half(out, g, k, t, ctx.ab);
            rna_close_half(out, g, k, t, ctx.bg);
            break;
        default:
            rna_open_half(out, g, k, t, ctx.bg);
            rna_close_half(out, g, k, t, ctx.ag);
            break;
    }
}

int64_t rna_gadget_weight(const Graph& g, int k, const Clique& t, const RnaParams& p) {
    int64_t L = encoding_width(g.n);
    int64_t list_bits = 0;
    for (int v : t) list_bits += int64_t(g.degree(v)) * L;
    int64_t cng = int64_t(k) * k * (2 * p.l1 + 4 * g.n * p.w_dollar + L);
    int64_t clg = int64_t(k) * k * (2 * p.l1 + 2 * g.n * p.w_dollar) + int64_t(k) * list_bits;
    return 4 * p.l2 + cng + clg;
}

}  // namespace

MatchedAlphabet rna_alphabet(Vocab& vocab, const RnaParams& p) {
    // the full 18-letter alphabet exists regardless of which letters a
    // particular sequence uses
    std::vector<std::pair<std::string, int64_t>> weights;
    for (TypeMark m : {TypeMark::ab, TypeMark::ag, TypeMark::bg}) {
        const std::string suf = mark_suffix(m);
        vocab.intern("0" + suf);
        vocab.intern("1" + suf);
        weights.emplace_back("$" + suf, p.w_dollar);
        weights.emplace_back("#" + suf, p.l1);
        weights.emplace_back("g" + suf, p.l2);
    }
    for (const char* greek : {"alpha", "beta", "gamma"}) weights.emplace_back(greek, p.l3);
    for (const auto& [name, w] : weights) vocab.intern(name);
    return MatchedAlphabet::prime_convention(vocab, weights);
}

Thresholds rna_thresholds(const Graph& g, int k) {
    RnaParams p = RnaParams::make(g.n, k);
    Thresholds th;
    th.n_cliques = int64_t(enumerate_k_cliques(g, k).size());
    if (th.n_cliques == 0) return th;
    int64_t L = encoding_width(g.n);
    th.e1 = 2 * g.n * p.w_dollar + L;
    th.e2 = 2 * int64_t(k) * k * p.l1 + int64_t(k) * k * th.e1;
    th.e3 = 6 * p.l2 + 3 * th.e2;
    th.ec = 6 * th.n_cliques * p.l3 + th.e3;
    return th;
}

RnaInstance build_rna_instance(const Graph& g, int k) {
    if (k < 1) throw domain_error("k must be positive");
    RnaParams p = RnaParams::make(g.n, k);
    auto cliques = enumerate_k_cliques(g, k);
    auto vocab = std::make_shared<Vocab>();
    RnaGadgetCtx ctx(*vocab);

    // scale separation: a selector letter must outweigh any whole gadget
    for (const Clique& t : cliques) {
        int64_t w = rna_gadget_weight(g, k, t, p);
        if (w > p.l3)
            throw domain_error("rna scale separation violated: gadget weight " +
                               std::to_string(w) + " exceeds l3 " + std::to_string(p.l3));
    }

    TokenSeq seq{vocab, {}};
    u128 flank = sat_mul(2, sat_pow(u128(g.n), k));
    if (flank > u128(1) << 40) throw domain_error("rna flank length overflows sane limits");
    size_t flank_len = size_t(flank);
    const char types[3] = {'a', 'b', 'c'};
    const char* greeks[3] = {"alpha", "beta", "gamma"};
    for (int ti = 0; ti < 3; ++ti) {
        int32_t greek = vocab->intern(greeks[ti]);
        int32_t greek_p = vocab->intern(std::string(greeks[ti]) + "'");
        seq.append_run(greek, flank_len);
        for (const Clique& t : cliques) {
            seq.ids.push_back(greek_p);
            rna_cg(seq, g, k, t, types[ti], ctx);
            seq.ids.push_back(greek_p);
        }
        seq.append_run(greek, flank_len);
    }

    RnaInstance inst{std::move(seq), rna_alphabet(*vocab, p), p, rna_thresholds(g, k)};
    Thresholds& th = inst.thresholds;
    if (th.n_cliques > 0 && th.e3 >= p.l3)
        throw domain_error("rna scale separation violated: E3 >= l3");
    return inst;
}

TokenSeq rna_neighbor_probe(const Graph& g, int u, int v, TypeMark m, VocabPtr vocab) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    MarkSet ms(*vocab, m);
    TokenSeq seq{vocab, {}};
    rna_node_gadget(seq, g, u, ms);
    rna_list_gadget_rev(seq, g, v, ms);
    return seq;
}

TokenSeq rna_biclique_probe(const Graph& g, int k, const Clique& t1, const Clique& t2, TypeMark m,
                            VocabPtr vocab) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    MarkSet ms(*vocab, m);
    TokenSeq seq{vocab, {}};
    rna_cng(seq, g, k, t1, ms);
    rna_clg_rev(seq, g, k, t2, ms);
    return seq;
}

TokenSeq rna_triple_probe(const Graph& g, int k, const Clique& ta, const Clique& tb,
                          const Clique& tc, VocabPtr vocab) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    RnaGadgetCtx ctx(*vocab);
    TokenSeq seq{vocab, {}};
    rna_cg(seq, g, k, ta, 'a', ctx);
    rna_cg(seq, g, k, tb, 'b', ctx);
    rna_cg(seq, g, k, tc, 'c', ctx);
    return seq;
}

// ---- Section 4: Dyck instance -----------------------------------------------

namespace {

struct DyckLens {
    int64_t l0, l1, l2, l3, l4, l5;
};

DyckLens dyck_lens_checked(const Graph& g, int k, const DyckPadding& padding) {
    auto l = padding.lengths(g.n, k);
    if (l[5] > u128(int64_t(1) << 60)) throw domain_error("padding lengths overflow");
    return DyckLens{int64_t(l[0]), int64_t(l[1]), int64_t(l[2]),
                    int64_t(l[3]), int64_t(l[4]), int64_t(l[5])};
}

void dyck_node_gadget(TokenSeq& out, const Graph& g, int v, const MarkSet& ms,
                      const DyckLens& l) {
    out.append_run(ms.dollar, size_t(l.l1));
    for (char c : encode_node(v, g.n)) out.ids.push_back(ms.bit(c, false));
    out.append_run(ms.dollar, size_t(l.l1));
}

// p(LG(u))^R with the all-zeros filler word for non-neighbors.
void dyck_list_gadget_rev(TokenSeq& out, const Graph& g, int u, const MarkSet& ms,
                          const DyckLens& l) {
    int L = encoding_width(g.n);
    std::vector<int> nbr = g.neighbors(u);
    int fillers = g.n - int(nbr.size());
    auto block = [&](const std::string& bits) {
        out.append_run(ms.dollar_p, size_t(l.l0));
        std::string rev = bits;
        std::reverse(rev.begin(), rev.end());
        for (char c : rev) out.ids.push_back(ms.bit(c, true));
        out.append_run(ms.dollar_p, size_t(l.l0));
    };
    for (int i = 0; i < fillers; ++i) block(std::string(size_t(L), '0'));
    for (auto it = nbr.rbegin(); it != nbr.rend(); ++it) block(encode_node(*it, g.n));
}

void dyck_cng(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms,
              const DyckLens& l) {
    for (int v : t)
        for (int rep = 0; rep < k; ++rep) {
            out.append_run(ms.hash, size_t(l.l2));
            dyck_node_gadget(out, g, v, ms, l);
            out.append_run(ms.hash, size_t(l.l2));
        }
}

void dyck_clg_rev(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms,
                  const DyckLens& l) {
    for (int rep = 0; rep < k; ++rep)
        for (auto it = t.rbegin(); it != t.rend(); ++it) {
            out.append_run(ms.hash_p, size_t(l.l2));
            dyck_list_gadget_rev(out, g, *it, ms, l);
            out.append_run(ms.hash_p, size_t(l.l2));
        }
}

void dyck_open_half(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms,
                    const DyckLens& l) {
    out.append_run(ms.g, size_t(l.l3));
    dyck_cng(out, g, k, t, ms, l);
    out.append_run(ms.g, size_t(l.l3));
}

void dyck_close_half(TokenSeq& out, const Graph& g, int k, const Clique& t, const MarkSet& ms,
                     const DyckLens& l) {
    out.append_run(ms.g_p, size_t(l.l3));
    dyck_clg_rev(out, g, k, t, ms, l);
    out.append_run(ms.g_p, size_t(l.l3));
}

struct DyckGadgetCtx {
    MarkSet ab, ag, bg;
    int32_t a, b, c, a_p, b_p, c_p;
    int32_t x[3], x_p[3], y[3], y_p[3];  // per type alpha/beta/gamma

    DyckGadgetCtx(Vocab& v)
        : ab(v, TypeMark::ab), ag(v, TypeMark::ag), bg(v, TypeMark::bg) {
        a = v.intern("a");
        a_p = v.intern("a'");
        b = v.intern("b");
        b_p = v.intern("b'");
        c = v.intern("c");
        c_p = v.intern("c'");
        const char* t[3] = {"a", "b", "g"};
        for (int i = 0; i < 3; ++i) {
            x[i] = v.intern("x_" + std::string(t[i]));
            x_p[i] = v.intern("x_" + std::string(t[i]) + "'");
            y[i] = v.intern("y_" + std::string(t[i]));
            y_p[i] = v.intern("y_" + std::string(t[i]) + "'");
        }
    }
};

// CG_alpha(t) = a^l4 (x_a')^l5 [g^l3 CNG g^l3]_ag [g^l3 CNG g^l3]_ab y_a^l5 (a')^l4
// CG_beta(t)  = b^l4 (x_b')^l5 [(g')^l3 p(CLG)^R (g')^l3]_ab [g^l3 CNG g^l3]_bg y_b^l5 (b')^l4
// CG_gamma(t) = c^l4 (x_g')^l5 [(g')^l3 p(CLG)^R (g')^l3]_bg [(g')^l3 p(CLG)^R (g')^l3]_ag y_g^l5 (c')^l4
void dyck_cg(TokenSeq& out, const Graph& g, int k, const Clique& t, int type,
             const DyckGadgetCtx& ctx, const DyckLens& l) {
    int32_t letter = type == 0 ? ctx.a : type == 1 ? ctx.b : ctx.c;
    int32_t letter_p = type == 0 ? ctx.a_p : type == 1 ? ctx.b_p : ctx.c_p;
    out.append_run(letter, size_t(l.l4));
    out.append_run(ctx.x_p[type], size_t(l.l5));
    switch (type) {
        case 0:
            dyck_open_half(out, g, k, t, ctx.ag, l);
            dyck_open_half(out, g, k, t, ctx.ab, l);
            break;
        case 1:
            dyck_close_half(out, g, k, t, ctx.ab, l);
            dyck_open_half(out, g, k, t, ctx.bg, l);
            break;
        default:
            dyck_close_half(out, g, k, t, ctx.bg, l);
            dyck_close_half(out, g, k, t, ctx.ag, l);
            break;
    }
    out.append_run(ctx.y[type], size_t(l.l5));
    out.append_run(letter_p, size_t(l.l4));
}

u128 dyck_total_length(const Graph& g, int k, const std::array<u128, 6>& l, u128 n_cliques) {
    int L = encoding_width(g.n);
    u128 ng = sat_add(sat_mul(2, l[1]), u128(L));
    u128 lg = sat_mul(u128(g.n), sat_add(sat_mul(2, l[0]), u128(L)));
    u128 k2 = sat_mul(u128(k), u128(k));
    u128 cng = sat_mul(k2, sat_add(sat_mul(2, l[2]), ng));
    u128 clg = sat_mul(k2, sat_add(sat_mul(2, l[2]), lg));
    u128 half_wrap = sat_mul(2, l[3]);
    u128 flanks = sat_add(sat_mul(2, l[4]), sat_mul(2, l[5]));
    u128 cg_a = sat_add(flanks, sat_add(sat_add(half_wrap, cng), sat_add(half_wrap, cng)));
    u128 cg_b = sat_add(flanks, sat_add(sat_add(half_wrap, clg), sat_add(half_wrap, cng)));
    u128 cg_c = sat_add(flanks, sat_add(sat_add(half_wrap, clg), sat_add(half_wrap, clg)));
    u128 total = sat_mul(6, l[5]);
    total = sat_add(total, sat_mul(n_cliques, sat_add(cg_a, sat_add(cg_b, cg_c))));
    return total;
}

}  // namespace

BracketAlphabet dyck_alphabet(const Vocab& vocab) { return BracketAlphabet::standard(vocab); }

Thresholds dyck_thresholds(const Graph& g, int k, const DyckPadding& padding) {
    Thresholds th;
    th.n_cliques = int64_t(enumerate_k_cliques(g, k).size());
    if (th.n_cliques == 0) return th;
    DyckLens l = dyck_lens_checked(g, k, padding);
    int64_t L = encoding_width(g.n);
    int64_t dollar_gap = 2 * l.l1 - 2 * int64_t(g.n) * l.l0;
    if (dollar_gap < 0) dollar_gap = -dollar_gap;
    th.e1 = ((int64_t(g.n) - 1) * L + dollar_gap) / 2;
    th.e2 = int64_t(k) * k * th.e1;
    th.e3 = 3 * (l.l4 + th.e2);
    int64_t cng = int64_t(k) * k * (2 * l.l2 + 2 * l.l1 + L);
    int64_t clg = int64_t(k) * k * (2 * l.l2 + int64_t(g.n) * (2 * l.l0 + L));
    th.el = (2 * l.l5 + 4 * l.l3 + cng + clg) / 2;
    th.ec = (3 * th.n_cliques - 3) * th.el + th.e3;
    return th;
}

DyckInstance build_dyck_instance(const Graph& g, int k, const DyckPadding& padding,
                                 int64_t token_budget) {
    if (k < 1) throw domain_error("k must be positive");
    auto cliques = enumerate_k_cliques(g, k);
    auto full = padding.lengths(g.n, k);
    u128 total = dyck_total_length(g, k, full, u128(cliques.size()));
    if (total > u128(token_budget))
        throw budget_error("dyck instance would need " + u128_to_string(total) +
                               " tokens (budget " + std::to_string(token_budget) + ")",
                           u128_to_string(total));

    DyckLens l = dyck_lens_checked(g, k, padding);
    if (l.l1 < int64_t(g.n) * l.l0)
        throw domain_error("dyck schedule too tight: l1 < n*l0");
    auto vocab = std::make_shared<Vocab>();
    DyckGadgetCtx ctx(*vocab);
    TokenSeq seq{vocab, {}};
    for (int type = 0; type < 3; ++type) {
        seq.append_run(ctx.x[type], size_t(l.l5));
        for (const Clique& t : cliques) dyck_cg(seq, g, k, t, type, ctx, l);
        seq.append_run(ctx.y_p[type], size_t(l.l5));
    }
    if (u128(seq.size()) != total)
        throw domain_error("internal: dyck length accounting mismatch");

    DyckInstance inst{std::move(seq), dyck_alphabet(*vocab), padding,
                      dyck_thresholds(g, k, padding)};
    return inst;
}

TokenSeq dyck_neighbor_probe(const Graph& g, int v, int u, TypeMark m, const DyckPadding& padding,
                             VocabPtr vocab) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    DyckLens l = dyck_lens_checked(g, 1, padding);  // node/list gadgets only use l0, l1
    MarkSet ms(*vocab, m);
    TokenSeq seq{vocab, {}};
    dyck_node_gadget(seq, g, v, ms, l);
    dyck_list_gadget_rev(seq, g, u, ms, l);
    return seq;
}

TokenSeq dyck_biclique_probe(const Graph& g, int k, const Clique& t1, const Clique& t2, TypeMark m,
                             const DyckPadding& padding, VocabPtr vocab) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    DyckLens l = dyck_lens_checked(g, k, padding);
    MarkSet ms(*vocab, m);
    TokenSeq seq{vocab, {}};
    dyck_cng(seq, g, k, t1, ms, l);
    dyck_clg_rev(seq, g, k, t2, ms, l);
    return seq;
}

TokenSeq dyck_triple_probe(const Graph& g, int k, const Clique& ta, const Clique& tb,
                           const Clique& tc, const DyckPadding& padding, VocabPtr vocab) {
    if (!vocab) vocab = std::make_shared<Vocab>();
    DyckLens l = dyck_lens_checked(g, k, padding);
    DyckGadgetCtx ctx(*vocab);
    TokenSeq seq{vocab, {}};
    const Clique* ts[3] = {&ta, &tb, &tc};
    for (int type = 0; type < 3; ++type) {
        seq.append_run(ctx.x[type], size_t(l.l5));
        dyck_cg(seq, g, k, *ts[type], type, ctx, l);
        seq.append_run(ctx.y_p[type], size_t(l.l5));
    }
    return seq;
}

std::string reduction_metadata(const std::string& problem, const Graph& g, int k,
                               const Thresholds& th, size_t token_count,
                               const std::string& schedule_desc) {
    nlohmann::json j;
    j["problem"] = problem;
    j["builder_version"] = kBuilderVersion;
    j["graph_digest"] = g.digest();
    j["n"] = g.n;
    j["k"] = k;
    j["n_cliques"] = th.n_cliques;
    j["schedule"] = schedule_desc;
    j["token_count"] = token_count;
    if (problem != "cfg") {
        j["E1"] = th.e1;
        j["E2"] = th.e2;
        j["E3"] = th.e3;
        if (problem == "dyck") j["El"] = th.el;
        j["EC"] = th.ec;
    }
    return j.dump(2) + "\n";
}

}  // namespace cliquelab
