#pragma once

#include "strat/colimits.hpp"
#include "strat/simplicial_set.hpp"

namespace strat {

/// Barycentric subdivision of the standard simplex: the nerve of the poset
/// of non-empty subsets of [n]. Generators are strictly increasing chains of
/// subsets; chains are encoded as bitmask vectors.
struct SdSimplex {
    SSetPtr complex;
    std::vector<std::vector<int>> chain_of_gen;  // generator -> chain of masks
    int gen_of_chain(const std::vector<int>& chain) const;
    /// Last vertex map sd Delta^n -> Delta^n (maxima of the chain).
    MonotoneMap maxima(int gen) const;

    std::vector<std::pair<std::vector<int>, int>> index;  // sorted chain -> gen
    int n = 0;
};
const SdSimplex& sd_simplex(int n);  // cached

/// sd of a monotone map [m] -> [n], as a simplicial map of subdivisions.
SimplicialMap sd_of_monotone(const MonotoneMap& alpha);

/// Barycentric subdivision of a finitely generated simplicial set, glued from
/// subdivided generators along subdivided faces by iterated pushout, with the
/// last vertex map.
struct Subdivision {
    SSetPtr complex;
    std::unique_ptr<SimplicialMap> last_vertex;  // sd X -> X
};
Subdivision subdivision(const SSetPtr& x);

}  // namespace strat
