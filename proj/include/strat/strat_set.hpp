#pragma once

#include "strat/colimits.hpp"
#include "strat/levelwise.hpp"
#include "strat/simplicial_set.hpp"
#include "strat/standard.hpp"

namespace strat {

/// A stratified simplicial set: a space with a monotone vertex labeling into
/// a poset. The labeling determines the unique simplicial map to the nerve,
/// because nerves of posets are vertex-determined.
struct StratSet {
    SSetPtr space;
    PosetPtr poset;
    std::vector<int> labels;  // per generator id; -1 above dimension 0

    int label_of(int vertex_gen) const { return labels[static_cast<std::size_t>(vertex_gen)]; }
    /// Vertex labels of a simplex, as a flag of the poset.
    Flag flag_of(const SimplexRef& s) const;
    /// Monotonicity along every non-degenerate edge; throws naming the
    /// offending edge.
    void validate() const;
    /// The set of labels realized by at least one vertex.
    std::vector<int> occupied_strata() const;
};

StratSet strat_from_labels(SSetPtr space, PosetPtr poset, std::vector<int> labels);
StratSet empty_strat(PosetPtr poset);
/// K over the one-point poset.
StratSet trivially_stratified(SSetPtr space);
/// The nerve of a poset stratified by the identity.
StratSet nerve_identity_strat(const PosetPtr& p);

/// A stratified simplicial map.
struct StratMap {
    StratSet source;
    StratSet target;
    SimplicialMap space_map;
    PosetMap poset_map;

    void validate() const;  // square commutes on vertices
};

StratMap strat_identity(const StratSet& x);
StratMap compose_strat(const StratMap& g, const StratMap& f);

/// Stratified levelwise object (exponentials, Ex, path spaces).
struct StratLevelwise {
    LevelwiseSimplicialSet space;
    PosetPtr poset;
    std::vector<int> labels;  // per level-0 element
};

/// The stratified simplex Delta^J, its boundary and horns.
StratSet strat_simplex(const Flag& j);
StratSet strat_boundary(const Flag& j);
StratSet strat_horn(const Flag& j, int k);
/// The inclusions (boundary/horn into the simplex), identity on the poset.
StratMap strat_boundary_inclusion(const Flag& j);
StratMap strat_horn_inclusion(const Flag& j, int k);

/// lstr variants over the chain [n] with identity labels.
StratSet lstr_simplex(int n);
StratSet lstr_boundary(int n);
StratSet lstr_horn(int n, int k);

struct HornClass {
    bool admissible;
    bool inner;
};
HornClass classify_horn(const Flag& j, int k);

/// Left adjoint to the forgetful functor: X over its posetification.
StratSet lstr(const SSetPtr& x);

/// f^* : pullback along a poset map (strata, subposet restriction); returns
/// the stratified set over f's source together with the projection to x.
struct BaseChange {
    StratSet strat;
    StratMap projection;
};
BaseChange base_change(const PosetMap& f, const StratSet& x);
/// f_! : relabel through f, same space.
StratSet pushforward(const PosetMap& f, const StratSet& x);
/// The stratum over a single element.
SSetPtr stratum(const StratSet& x, int p);

/// X tensor K: space uX x K, labels through the first projection.
StratSet tensor(const StratSet& x, const SSetPtr& k);

/// Product in sStrat: componentwise on spaces and posets.
struct StratProduct {
    StratSet strat;
    std::shared_ptr<Product> space;
    StratMap pr1, pr2;
    /// Poset element index of a pair (order of product_poset).
    int pair_elem(int a, int b) const;
};
StratProduct strat_product(const StratSet& x, const StratSet& y);
/// f x g between given stratified products.
StratMap strat_product_of_maps(const StratProduct& src, const StratProduct& dst, const StratMap& f,
                               const StratMap& g);

/// Pushout in sStrat, componentwise, with legs.
struct StratPushout {
    StratSet strat;
    StratMap leg_x, leg_y;
    std::shared_ptr<Pushout> space;
    /// Unique map out of the pushout restricting to p and q on the legs.
    StratMap induced(const StratMap& p, const StratMap& q) const;
};
StratPushout strat_pushout(const StratMap& f, const StratMap& g);

/// The spine of Delta^J (union of the consecutive edges) with its inclusion.
struct Spine {
    StratSet strat;
    StratMap inclusion;  // into strat_simplex(j)
};
Spine spine(const Flag& j);

/// All stratified maps a -> x (pairs of space and poset maps).
std::vector<StratMap> enumerate_strat_maps(const StratSet& a, const StratSet& x);
/// Stratified maps over a fixed poset map.
std::vector<StratMap> enumerate_strat_maps_over(const StratSet& a, const StratSet& x,
                                                const PosetMap& g);

/// Existence of a label-compatible isomorphism over some isomorphism of
/// posets.
bool is_strat_isomorphic(const StratSet& a, const StratSet& b);

/// Vertex candidate table for space-map enumeration under a poset map.
std::vector<std::vector<int>> label_candidates(const StratSet& a, const StratSet& x,
                                               const PosetMap& g);

}  // namespace strat
