#pragma once

#include <functional>
#include <string>
#include <vector>

#include "strat/simplicial_set.hpp"

namespace strat {

/// A level-oracle simplicial set: finite enumerated levels 0..level_bound
/// with materialized face/degeneracy tables. Infinite-dimensional objects
/// (mapping spaces, Ex, exponentials) are only ever seen through this.
class LevelwiseSimplicialSet {
public:
    LevelwiseSimplicialSet() = default;
    LevelwiseSimplicialSet(std::vector<int> level_sizes,
                           std::function<int(int, int, int)> face,
                           std::function<int(int, int, int)> degeneracy);

    int level_bound() const { return static_cast<int>(sizes_.size()) - 1; }
    int level_size(int n) const {
        return n >= 0 && n <= level_bound() ? sizes_[static_cast<std::size_t>(n)] : 0;
    }
    int face(int n, int i, int x) const { return face_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]; }
    int degeneracy(int n, int i, int x) const { return deg_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]; }

    /// x = s_i(d_{i+1} x) for some i; the standard degeneracy criterion.
    bool is_degenerate(int n, int x) const;

    /// Checks the simplicial identities on all computed levels; throws on
    /// failure naming the identity.
    void validate() const;

    /// Pull an arbitrary operator through the tables (factored into
    /// cofaces/codegeneracies).
    int act(int n, const MonotoneMap& alpha, int x) const;

private:
    std::vector<int> sizes_;
    // face_[n][i][x] at level n>=1; deg_[n][i][x] at level n (result n+1).
    std::vector<std::vector<std::vector<int>>> face_;
    std::vector<std::vector<std::vector<int>>> deg_;
};

/// View of a finitely generated simplicial set as a levelwise one.
LevelwiseSimplicialSet levelwise_of(const SSetPtr& x, int bound);

/// Extraction of the finitely generated simplicial set underlying a finite
/// levelwise presentation whose non-degenerate simplices all live in levels
/// <= bound. Returns the complex plus the correspondence in both directions.
struct ExtractedComplex {
    SSetPtr complex;
    // (level, element) -> SimplexRef of the complex
    std::vector<std::vector<SimplexRef>> ref_of;
    // generator id -> (level, element) of the witnessing non-degenerate cell
    std::vector<std::pair<int, int>> cell_of_gen;
};
ExtractedComplex extract_complex(const LevelwiseSimplicialSet& lv,
                                 const std::function<std::string(int, int)>* namer = nullptr);

/// Path components of the 1-truncation. Representative = least element index
/// at level 0; `component[v]` is the component index of vertex v.
struct Pi0 {
    int count = 0;
    std::vector<int> component;  // per level-0 element
};
Pi0 pi0_levelwise(const LevelwiseSimplicialSet& lv);
Pi0 pi0_of(const SimplicialSet& x);

/// Betti numbers b_0..b_max_degree of the normalized chain complex over F_p.
/// Requires levels 0..max_degree+1. Degenerate faces are dropped; for p = 2
/// signs are irrelevant, otherwise alternating signs are used.
std::vector<int> betti_levelwise(const LevelwiseSimplicialSet& lv, int max_degree, int p = 2);
std::vector<int> betti_of(const SSetPtr& x, int max_degree, int p = 2);

/// Betti numbers of a single path component (elements whose vertices lie in
/// the given pi0 class).
std::vector<int> betti_of_component(const LevelwiseSimplicialSet& lv, const Pi0& pi0,
                                    int component, int max_degree, int p = 2);

}  // namespace strat
