#pragma once

#include <map>
#include <optional>

#include "strat/mapping.hpp"
#include "strat/refine.hpp"
#include "strat/strat_set.hpp"

namespace strat {

/// Verdict of a bounded probe. FAIL is sound (carries a witness); PASS only
/// says no difference was found within the bounds.
struct ProbeVerdict {
    bool pass;
    int depth;
    std::string witness;  // empty iff pass
    std::map<std::string, std::string> details;

    std::string status() const { return pass ? "PASS_UP_TO_DEPTH" : "FAIL"; }
};

/// The I-th homotopy link: level k = stratum-preserving maps
/// Delta^I (x) Delta^k -> X over the identity of the poset.
MapFamilyLevelwise hol(const StratSet& x, const Flag& i, int levels);

/// The geometric link, computed as the left Kan extension of
/// J -> prod_{p in I} Delta^{J_p} over the category of simplices of X.
class GeometricLink {
public:
    GeometricLink(const StratSet& x, const Flag& i);

    const SSetPtr& complex() const { return complex_; }
    const Flag& flag() const { return i_; }

    /// Representative (level-in-X, simplex index, block tuple) of a class.
    struct Cell {
        int n;
        int x;
        std::vector<MonotoneMap> tuple;
    };
    /// Class of a raw cell at link level r.
    int class_of(int r, const Cell& c) const;
    const Cell& rep_of_class(int r, int cls) const;
    int class_count(int r) const;
    const SimplexRef& ref_of_class(int r, int cls) const;
    /// The class whose extracted normal form is the given generator.
    int class_of_generator(int gen) const { return class_of_gen_[static_cast<std::size_t>(gen)]; }
    int level_bound() const { return static_cast<int>(reps_.size()) - 1; }
    const LevelIndex& simplex_index() const { return *xindex_; }

private:
    Flag i_;
    SSetPtr complex_;
    std::unique_ptr<LevelIndex> xindex_;
    // per level: map (n, x, flattened tuple) -> class, class -> rep, class -> ref
    std::vector<std::map<std::tuple<int, int, std::vector<std::vector<int>>>, int>> lookup_;
    std::vector<std::vector<Cell>> reps_;
    std::vector<std::vector<SimplexRef>> refs_;
    std::vector<int> class_of_gen_;
};

SSetPtr link_geo(const StratSet& x, const Flag& i);

/// The comparison map Link_I(X) -> Hol_I(X): per link level, the index of the
/// corresponding homotopy-link element. `bijective_up_to` reports the first
/// level <= bound where the map fails to be a bijection, if any.
struct LinkToHol {
    GeometricLink link;
    MapFamilyLevelwise hol;
    std::vector<std::vector<int>> map;  // link class -> hol element, per level
    std::optional<int> first_non_bijective_level() const;
};
LinkToHol link_to_hol(const StratSet& x, const Flag& i, int levels);

/// The n-th extended homotopy link, decomposed by flags: for every flag of
/// length n, the levelwise set of stratum-preserving maps
/// Delta^J (x) Delta^k -> X.
struct ExtHolComponent {
    Flag flag;
    MapFamilyLevelwise fam;
};
std::vector<ExtHolComponent> ext_hol(const StratSet& x, int length, int levels);

/// Bounded necessary-condition probe for diagrammatic equivalence: compares
/// pi_0 and F_2 Betti numbers b_0..b_depth of matched extended homotopy links
/// for flag lengths <= flag_len. FAIL is a genuine non-equivalence.
ProbeVerdict diag_equiv_probe(const StratMap& f, int depth, int flag_len, int levels);

/// Recomputation of the refined poset from pi_0 of the extended links of
/// lengths 0 and 1; cross-check for refined_poset.
RefinedPosetResult refined_poset_from_links(const StratSet& x, int levels);

/// Exhaustive search for stratified homotopy-equivalence data (an inverse
/// and two one-step stratified homotopies); only attempted on inputs with at
/// most `max_generators` generators. A positive answer certifies equivalence.
std::optional<std::string> certify_equivalence(const StratMap& f, int max_generators = 6);

}  // namespace strat
