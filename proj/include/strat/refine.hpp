#pragma once

#include "strat/strat_set.hpp"

namespace strat {

/// The refined poset rP(X): path components of non-empty strata, ordered by
/// zigzag reachability in which only within-stratum edges may point
/// backwards.
struct RefinedPosetResult {
    PosetPtr poset;
    std::vector<int> component_of;  // vertex generator -> element of rP
    PosetMap stratum_of;            // rP(X) -> P, monotone
};

RefinedPosetResult refined_poset(const StratSet& x);

/// Core computation on raw vertex/edge/label data; shared with the levelwise
/// path (stratified Ex cross checks, link-based recomputation).
RefinedPosetResult refined_poset_core(int vertex_count,
                                      const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<int>& vertex_labels, const PosetPtr& p,
                                      const std::vector<std::string>& vertex_names);

/// Refinement X^red (same space over rP(X)) and the counit X^red -> X.
struct Refinement {
    StratSet refined;
    StratMap counit;  // identity on the space, stratum_of on posets
};
Refinement refinement(const StratSet& x);

bool is_refined(const StratSet& x);

/// rP of a stratified levelwise object (levels 0 and 1 suffice).
RefinedPosetResult refined_poset_levelwise(const StratLevelwise& x);

/// Stratified Ex: the pullback of Ex(uX) -> Ex(N P) <- N P, truncated.
/// Level n keeps the maps sd Delta^n -> uX whose vertex labels factor
/// through the last vertex map as a flag of P.
StratLevelwise stratified_ex(const StratSet& x, int levels);

}  // namespace strat
