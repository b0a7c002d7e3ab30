#pragma once

#include "strat/join.hpp"
#include "strat/links.hpp"
#include "strat/mapping.hpp"
#include "strat/refine.hpp"

namespace strat {

/// A commuting lifting square.
struct LiftingProblem {
    const StratMap* left;   // i : A -> B
    const StratMap* right;  // f : X -> Y
    StratMap top;           // A -> X
    StratMap bottom;        // B -> Y
};

/// Named generating families, instantiated to concrete stratified maps up to
/// a dimension bound:
///   cof_D_global       boundary inclusions over the chains [n], plus the
///                      two empty-space poset detectors
///   acof_D_global      admissible horn inclusions over the target poset
///   inner_horns        inner horn inclusions over the target poset
///   boundaries_refined lstr boundary inclusions plus the boundary of the
///                      trivially stratified interval
struct GeneratorSet {
    std::string name;
    std::vector<StratMap> members;
};
GeneratorSet make_generator_set(const std::string& name, const PosetPtr& target_poset, int dim_max);

/// Monomorphism test (structures D, C) with the refinement-square pushout
/// condition on posets for DR, CR.
struct CofibrationCheck {
    bool is_cofibration;
    std::string reason;  // offending simplex / failing square when false
};
CofibrationCheck is_cofibration(const StratMap& f, const std::string& structure);

/// Exhaustive search over lifting squares against a generator family.
/// FAIL carries an unsolvable square.
ProbeVerdict rlp_probe(const StratMap& f, const GeneratorSet& generators, int dim_max);

/// Fibrancy of X against admissible (or admissible and inner) horns:
/// rlp_probe of X -> (nerve of its poset, identity labels).
ProbeVerdict fibrancy_probe(const StratSet& x, int dim_max, bool include_inner);

/// Refined-structure acyclic fibration check: exact isomorphism on refined
/// posets plus boundary lifting up to the bound.
struct AcyclicFibrationCheck {
    bool rp_isomorphism;
    ProbeVerdict boundary_rlp;
    bool pass() const { return rp_isomorphism && boundary_rlp.pass; }
};
AcyclicFibrationCheck acyclic_fibration_check(const StratMap& f, int dim_max);

/// The exponential Y^X over exponential_poset(P_Y, P_X): level k = pairs of
/// a chain g_0 <= ... <= g_k of monotone maps P_X -> P_Y and a simplicial map
/// uX x Delta^k -> uY whose vertex labels follow the chain.
class StratExponential {
public:
    StratExponential(const StratSet& y, const StratSet& x, int levels);

    const StratLevelwise& levelwise() const { return lv_; }
    const ExponentialPoset& poset() const { return q_; }
    int level_size(int k) const { return lv_.space.level_size(k); }

    struct Element {
        std::vector<int> chain;  // flag in the exponential poset
        SimplicialMap map;       // uX x Delta^k -> uY
    };
    const Element& element(int level, int e) const {
        return elements_[static_cast<std::size_t>(level)][static_cast<std::size_t>(e)];
    }
    int index_of(int level, const std::vector<int>& chain, const SimplicialMap& m) const;

    /// The adjoint of F : Z x X -> Y (computed through the given product),
    /// as a poset map P_Z -> Q plus per-generator element assignments.
    struct Adjoint {
        PosetMap poset_map;
        std::vector<int> assignment;  // per generator of uZ
    };
    Adjoint adjoint(const StratProduct& zx, const StratMap& f) const;

private:
    StratSet y_, x_;
    ExponentialPoset q_;
    StratLevelwise lv_;
    std::vector<std::vector<Element>> elements_;
    std::vector<std::map<std::pair<std::vector<int>, std::vector<SimplexRef>>, int>> index_;
};

/// Stratified maps from a finitely generated stratified set into a
/// stratified levelwise object.
struct MapIntoLevelwise {
    PosetMap poset_map;
    std::vector<int> assignment;
};
std::vector<MapIntoLevelwise> enumerate_strat_maps_into(const StratSet& z,
                                                        const StratLevelwise& w);

/// Path space of paths starting in the subcomplex A (given by generator ids
/// of uX, closed under faces): the pullback of ev_0 : X^{Delta^{[1]}} -> X
/// along A. Level 0 is in bijection with the 1-simplices of X whose first
/// face lies in A.
StratLevelwise path_space(const StratSet& x, const std::vector<int>& subcomplex_gens, int levels);

/// The pushout-product (i x 1) cup (1 x j) : A x B' u_{A x A'} B x A' -> B x B'.
StratMap pushout_product(const StratMap& i, const StratMap& j);

/// One-sided layeredness probe: every non-forced endomorphism edge must have
/// a 2-simplex witnessing a left and a right inverse.
struct LayeredVerdict {
    bool witnessed;
    std::string edge;  // offending edge generator when not witnessed
};
LayeredVerdict layered_probe(const SSetPtr& x, int dim_bound);

}  // namespace strat
