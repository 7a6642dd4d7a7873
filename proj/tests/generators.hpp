#pragma once
// Deterministic randomized instance generators for the family-soundness and
// Halin-pipeline checks. All draw from a caller-owned mt19937 so runs are
// reproducible from a single seed.

#include <random>
#include <stdexcept>
#include <vector>

#include "clawkit/structures.hpp"

namespace clawkit::test {

inline int rand_int(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// generalized comb with total order <= max_order (m >= 3)
inline CombDescription random_comb(std::mt19937& rng, int max_order,
                                   bool pointed = false) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        CombDescription d;
        int m = rand_int(rng, 3, 4);
        std::vector<int> rsizes(m), lsizes(m);
        int base = 0, total = 0;
        for (int i = 0; i < m; ++i) {
            rsizes[i] = rand_int(rng, 1, 2);
            lsizes[i] = pointed ? 1 : rand_int(rng, 1, 2);
            base += rsizes[i];
            total += lsizes[i];
        }
        base += rand_int(rng, 0, 2);  // uncovered base vertices
        total += base;
        if (total > max_order) continue;
        d.base_size = base;
        int at = 0;
        for (int i = 0; i < m; ++i) {
            std::vector<int> block(rsizes[i]);
            for (int k = 0; k < rsizes[i]; ++k) block[k] = at + k;
            at += rsizes[i];
            d.roots.push_back(block);
        }
        d.leaf_sizes = lsizes;
        return d;
    }
    throw std::logic_error("random_comb: could not satisfy max_order");
}

// member of H_0..H_8 with total order <= max_order
inline HExpansion random_h_member(std::mt19937& rng, int max_order) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        HExpansion e;
        e.index = rand_int(rng, 0, 8);
        if (e.index == 0) {
            e.comb = random_comb(rng, max_order, true);
        } else if (e.index <= 5) {
            int k = (int)h_expandable(e.index).size();
            e.clique_sizes.assign(k, 1);
            for (int i = 0; i < k; ++i) e.clique_sizes[i] = rand_int(rng, 1, 3);
        }
        if (e.order() <= max_order) return e;
    }
    throw std::logic_error("random_h_member: could not satisfy max_order");
}

// fat path/cycle with parameter in [min_param, max_param], sizes in [1, max_size]
inline FatDescription random_fat(std::mt19937& rng, int min_param, int max_param,
                                 int max_size) {
    FatDescription d;
    d.kind = rand_int(rng, 0, 1) ? FatDescription::Kind::path
                                 : FatDescription::Kind::cycle;
    int param = rand_int(rng, min_param, max_param);
    int blocks = d.kind == FatDescription::Kind::path ? param : param + 1;
    d.clique_sizes.resize(blocks);
    for (int& s : d.clique_sizes) s = rand_int(rng, 1, max_size);
    return d;
}

// fat structure that is 3-connected: path interiors >= 3 with fat ends,
// cycle with at most two singleton cliques, consecutive
inline FatDescription random_fat_3connected(std::mt19937& rng, int min_param,
                                            int max_param, int max_size) {
    FatDescription d;
    d.kind = rand_int(rng, 0, 1) ? FatDescription::Kind::path
                                 : FatDescription::Kind::cycle;
    int param = rand_int(rng, min_param, max_param);
    if (d.kind == FatDescription::Kind::path) {
        d.clique_sizes.resize(param);
        for (int i = 0; i < param; ++i)
            d.clique_sizes[i] = (i == 0 || i == param - 1)
                                    ? rand_int(rng, 1, max_size)
                                    : rand_int(rng, 3, std::max(3, max_size));
    } else {
        int blocks = param + 1;
        d.clique_sizes.resize(blocks);
        for (int& s : d.clique_sizes) s = rand_int(rng, 2, max_size);
        int singles = rand_int(rng, 0, 2);
        if (singles >= 1) d.clique_sizes[0] = 1;
        if (singles == 2) d.clique_sizes[1] = 1;
    }
    return d;
}

}  // namespace clawkit::test
