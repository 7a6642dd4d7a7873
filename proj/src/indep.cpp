#include "clawkit/indep.hpp"

#include "clawkit/patterns.hpp"

namespace clawkit {

namespace {

struct MisSearch {
    const Graph& g;
    Bits best_set;
    int best = -1;

    MisSearch(const Graph& g_) : g(g_), best_set(g_.n) {}

    void rec(Bits cand, Bits cur, int cur_size) {
        int remaining = cand.count();
        if (cur_size + remaining <= best) return;  // bound
        int v = cand.next(0);
        if (v < 0) {
            if (cur_size > best) {
                best = cur_size;
                best_set = cur;
            }
            return;
        }
        // branch on a vertex of maximum degree within the candidate set
        int bd = -1;
        for (int u = cand.next(0); u >= 0; u = cand.next(u + 1)) {
            int d = (g.adj[u] & cand).count();
            if (d > bd) {
                bd = d;
                v = u;
            }
        }
        // include v
        Bits with = cand;
        with.and_not(g.adj[v]);
        with.reset(v);
        Bits cur2 = cur;
        cur2.set(v);
        rec(with, cur2, cur_size + 1);
        // exclude v
        cand.reset(v);
        rec(cand, cur, cur_size);
    }
};

void assert_witness(const Graph& g, const AlphaResult& r, const char* who) {
    if ((int)r.witness.size() != r.alpha)
        throw std::logic_error(std::string(who) + ": witness size != alpha");
    for (size_t i = 0; i < r.witness.size(); ++i)
        for (size_t j = i + 1; j < r.witness.size(); ++j)
            if (g.has_edge(r.witness[i], r.witness[j]))
                throw std::logic_error(std::string(who) + ": witness not independent");
}

}  // namespace

AlphaResult alpha_bruteforce(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("alpha_bruteforce: empty graph");
    MisSearch s(g);
    Bits all(g.n);
    for (int v = 0; v < g.n; ++v) all.set(v);
    s.rec(all, Bits(g.n), 0);
    AlphaResult r{s.best, s.best_set.to_vector(), "bruteforce"};
    assert_witness(g, r, "alpha_bruteforce");
    return r;
}

namespace {

AlphaResult alpha_fat_on(const FatDescription& d, const std::vector<std::vector<int>>* cliques) {
    int nb = (int)d.clique_sizes.size();
    std::vector<int> off(nb + 1, 0);
    for (int i = 0; i < nb; ++i) off[i + 1] = off[i] + d.clique_sizes[i];
    auto pick = [&](int block) { return cliques ? (*cliques)[block][0] : off[block]; };

    AlphaResult r;
    r.method = "fat_formula";
    if (d.kind == FatDescription::Kind::path) {
        int l = nb;
        r.alpha = (l + 1) / 2;
        for (int i = 0; i < l; i += 2) r.witness.push_back(pick(i));
    } else {
        int c = nb;  // fat (c-1)-cycle on c cliques
        r.alpha = c / 2;
        for (int k = 0; k < c / 2; ++k) r.witness.push_back(pick(2 * k));
    }
    return r;
}

}  // namespace

AlphaResult alpha_fat(const FatDescription& d) {
    if (d.clique_sizes.empty()) throw std::invalid_argument("alpha_fat: no cliques");
    if (d.kind == FatDescription::Kind::cycle && d.clique_sizes.size() < 3)
        throw std::invalid_argument("alpha_fat: fat cycle needs >= 3 cliques");
    AlphaResult r = alpha_fat_on(d, nullptr);
    assert_witness(build_fat(d), r, "alpha_fat");
    return r;
}

AlphaResult alpha_B11free(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("alpha_B11free: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("alpha_B11free: graph not connected");
    static const std::vector<PatternSpec> family{PatternSpec::claw(), PatternSpec::B(1, 1)};
    if (!is_free(g, family))
        throw std::invalid_argument("alpha_B11free: graph is not {K1,3, B(1,1)}-free");

    if (find_induced(g, make_pattern(PatternSpec::path(5)))) {
        auto fs = fat_structure_of(g);
        if (!fs || fs->desc.parameter() < 5)
            throw std::logic_error(
                "alpha_B11free: {K1,3, B(1,1)}-free graph with induced P5 failed fat recognition");
        AlphaResult r = alpha_fat_on(fs->desc, &fs->cliques);
        r.method = "dispatcher";
        assert_witness(g, r, "alpha_B11free");
        return r;
    }
    AlphaResult r = alpha_bruteforce(g);
    r.method = "dispatcher";
    assert_witness(g, r, "alpha_B11free");
    return r;
}

}  // namespace clawkit
