#pragma once

#include <random>
#include <vector>

#include "strat/strat_set.hpp"

namespace strat::testing {

/// All labeled posets on element ids e0..e{n-1}, by brute force over strict
/// relation sets (transitive, antisymmetric). Usable up to n = 4 cheaply.
inline std::vector<PosetPtr> all_posets(int n) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) all_pairs.emplace_back(a, b);
    std::vector<PosetPtr> out;
    const int m = static_cast<int>(all_pairs.size());
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::vector<std::vector<bool>> r(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
        for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
        for (int t = 0; t < m; ++t)
            if (mask & (1L << t))
                r[static_cast<std::size_t>(all_pairs[static_cast<std::size_t>(t)].first)]
                 [static_cast<std::size_t>(all_pairs[static_cast<std::size_t>(t)].second)] = true;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) {
                if (a != b && r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                    r[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                    ok = false;
                if (!r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
                for (int c = 0; c < n && ok; ++c)
                    if (r[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                        !r[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
                        ok = false;
            }
        if (!ok) continue;
        std::vector<std::pair<int, int>> rel;
        for (int t = 0; t < m; ++t)
            if (mask & (1L << t)) rel.push_back(all_pairs[static_cast<std::size_t>(t)]);
        out.push_back(std::make_shared<Poset>(ids, rel));
    }
    return out;
}

/// Random posets on n elements (transitive closures of random digraph picks
/// that stay antisymmetric), deduplicated is not attempted.
inline std::vector<PosetPtr> random_posets(int n, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
    std::vector<PosetPtr> out;
    while (static_cast<int>(out.size()) < count) {
        // random relations a < b only for a < b in a random permutation order
        // keeps antisymmetry automatically
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> rel;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0)
                    rel.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
        out.push_back(std::make_shared<Poset>(ids, rel));
    }
    return out;
}

/// Chain poset with ids p, q, r, ... for readable flags in tests.
inline PosetPtr named_chain(const std::vector<std::string>& ids) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < static_cast<int>(ids.size()); ++i) rel.emplace_back(i, i + 1);
    return std::make_shared<Poset>(ids, rel);
}

inline Flag flag_of(const PosetPtr& p, std::vector<int> entries) { return Flag{p, std::move(entries)}; }

}  // namespace strat::testing
