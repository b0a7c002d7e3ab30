#pragma once

#include "strat/levelwise.hpp"
#include "strat/subdivision.hpp"

namespace strat {

/// A levelwise simplicial set whose level-k elements are simplicial maps
/// Dom_k -> X for a cosimplicial-style family of domains; keeps the elements
/// so callers can inspect them. All mapping-space style objects (Map(A,X),
/// Ex X, homotopy links, exponentials) are assembled through this.
struct MapFamilyLevelwise {
    LevelwiseSimplicialSet lv;
    std::vector<std::vector<SimplicialMap>> elements;  // per level, enumeration order
    std::vector<std::map<std::vector<SimplexRef>, int>> index;
    std::vector<std::shared_ptr<Product>> domains;  // mapping spaces: A x Delta^k
    int index_of(int level, const SimplicialMap& m) const;
};

/// Map(A, X): level k = simplicial maps A x Delta^k -> X, with faces and
/// degeneracies by precomposition.
MapFamilyLevelwise mapping_space(const SSetPtr& a, const SSetPtr& x, int levels,
                                 const std::vector<std::vector<int>>* vertex_candidates = nullptr);

/// Cached product A x Delta^k (the domains of all mapping-space levels).
std::shared_ptr<Product> cylinder_product(const SSetPtr& a, int k);

/// Truncated Kan Ex: level n = maps sd Delta^n -> X. `unit_at` computes the
/// image of an X-simplex under the natural inclusion X -> Ex X (precompose
/// with the last vertex map).
struct ExTruncated {
    MapFamilyLevelwise fam;
    int unit_at(const SSetPtr& x, const SimplexRef& s) const;
};
ExTruncated ex_truncated(const SSetPtr& x, int levels);

/// Enumerate maps from a finitely generated simplicial set into a levelwise
/// one (per-generator element assignments), in deterministic order.
std::vector<std::vector<int>> enumerate_maps_into_levelwise(
    const SSetPtr& a, const LevelwiseSimplicialSet& w,
    const std::vector<std::vector<int>>* vertex_candidates = nullptr);

/// One further Ex applied to a levelwise simplicial set (for Ex^k, k >= 2):
/// level n = maps sd Delta^n -> W.
LevelwiseSimplicialSet ex_of_levelwise(const LevelwiseSimplicialSet& w, int levels);

/// Ex^k of a finitely generated simplicial set, truncated at `levels`.
LevelwiseSimplicialSet ex_iterated(const SSetPtr& x, int k, int levels);

}  // namespace strat
