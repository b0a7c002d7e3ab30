#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "strat/monotone.hpp"
#include "strat/poset.hpp"

namespace strat {

/// A simplex in Eilenberg-Zilber normal form: a surjective degeneracy
/// operator applied to a non-degenerate generator. The pair is unique, which
/// makes equality of simplices decidable by comparison.
struct SimplexRef {
    MonotoneMap deg;  // surjection [level] ->> [dim of generator]
    int gen;

    int level() const { return deg.source_dim(); }
    bool is_degenerate() const { return !deg.is_identity(); }

    static SimplexRef nondeg(int gen_id, int dim) {
        return SimplexRef{MonotoneMap::identity(dim), gen_id};
    }

    bool operator==(const SimplexRef& o) const { return gen == o.gen && deg == o.deg; }
    bool operator!=(const SimplexRef& o) const { return !(*this == o); }
    bool operator<(const SimplexRef& o) const {
        if (gen != o.gen) return gen < o.gen;
        return deg < o.deg;
    }
};

struct SimplexRefHash {
    std::size_t operator()(const SimplexRef& r) const {
        return MonotoneMapHash()(r.deg) * 31u + static_cast<std::size_t>(r.gen);
    }
};

/// A finitely generated simplicial set: non-degenerate generators with face
/// assignments in normal form. Degenerate simplices are never stored; the
/// presheaf action is evaluated through `act`.
class SimplicialSet {
public:
    struct Generator {
        int dim;
        std::string name;
        std::vector<SimplexRef> faces;  // d_0..d_dim, each at level dim-1
    };

    SimplicialSet() = default;

    int generator_count() const { return static_cast<int>(gens_.size()); }
    const Generator& gen(int id) const { return gens_[static_cast<std::size_t>(id)]; }
    int dim_of(int id) const { return gens_[static_cast<std::size_t>(id)].dim; }
    const std::string& name_of(int id) const { return gens_[static_cast<std::size_t>(id)].name; }

    /// Maximum generator dimension; -1 for the empty simplicial set.
    int dim() const { return dim_; }
    const std::vector<int>& generators_of_dim(int d) const;
    int count_of_dim(int d) const { return static_cast<int>(generators_of_dim(d).size()); }
    int find_generator(const std::string& name) const;  // -1 if absent

    /// Presheaf action: the simplex s pulled back along alpha, in normal form.
    SimplexRef act(const SimplexRef& s, const MonotoneMap& alpha) const;
    SimplexRef face(const SimplexRef& s, int i) const;
    SimplexRef degeneracy(const SimplexRef& s, int i) const;
    /// The i-th vertex of s, as a generator id of dimension 0.
    int vertex(const SimplexRef& s, int i) const;

    bool operator==(const SimplicialSet&) const = default;

private:
    friend class SimplicialSetBuilder;
    std::vector<Generator> gens_;
    std::vector<std::vector<int>> by_dim_;
    int dim_ = -1;
};

using SSetPtr = std::shared_ptr<const SimplicialSet>;

/// Incremental construction; `build` checks the simplicial identities
/// d_i d_j = d_{j-1} d_i on every generator.
class SimplicialSetBuilder {
public:
    int add_generator(int dim, std::string name, std::vector<SimplexRef> faces = {});
    SSetPtr build();

private:
    SimplicialSet s_;
};

/// Canonical enumeration of all simplices (degenerate included) of a finitely
/// generated simplicial set at levels 0..bound, with index lookup.
class LevelIndex {
public:
    LevelIndex(SSetPtr x, int bound);

    int bound() const { return bound_; }
    int size(int n) const { return static_cast<int>(refs_[static_cast<std::size_t>(n)].size()); }
    const SimplexRef& ref(int n, int i) const { return refs_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]; }
    int index(int n, const SimplexRef& r) const;
    const std::vector<SimplexRef>& level(int n) const { return refs_[static_cast<std::size_t>(n)]; }

private:
    SSetPtr x_;
    int bound_;
    std::vector<std::vector<SimplexRef>> refs_;
    std::vector<std::unordered_map<SimplexRef, int, SimplexRefHash>> idx_;
};

/// A simplicial map, stored on generators; commutes with the action, so
/// values on degenerate simplices follow by naturality.
class SimplicialMap {
public:
    SimplicialMap(SSetPtr source, SSetPtr target, std::vector<SimplexRef> assignment,
                  bool validate = true);

    static SimplicialMap identity(SSetPtr x);

    const SSetPtr& source() const { return source_; }
    const SSetPtr& target() const { return target_; }
    const std::vector<SimplexRef>& assignment() const { return assignment_; }

    SimplexRef operator()(const SimplexRef& s) const {
        return target_->act(assignment_[static_cast<std::size_t>(s.gen)], s.deg);
    }
    SimplexRef on_generator(int g) const { return assignment_[static_cast<std::size_t>(g)]; }

    /// Injectivity on every level up to dim(source); equivalent to being a
    /// monomorphism of simplicial sets. On failure reports a witness pair.
    bool is_mono(std::string* witness = nullptr) const;

    bool operator==(const SimplicialMap& o) const { return assignment_ == o.assignment_; }

private:
    SSetPtr source_;
    SSetPtr target_;
    std::vector<SimplexRef> assignment_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Posetification: the left adjoint to the nerve, computed as the SCC
/// condensation of the 1-skeleton reachability preorder. Vertex v maps to
/// component vertex_assignment[v].
struct Posetification {
    PosetPtr poset;
    std::vector<int> vertex_assignment;  // indexed by vertex generator id
};
Posetification posetify(const SimplicialSet& x);

/// Exhaustive enumeration of simplicial maps source -> target, generator by
/// generator in increasing dimension with face-compatibility pruning.
/// `vertex_constraint[v]`, when present, restricts the image of vertex v to
/// target vertices with the given label (used by the stratified wrappers).
std::vector<SimplicialMap> enumerate_simplicial_maps(
    const SSetPtr& source, const SSetPtr& target,
    const std::vector<std::vector<int>>* vertex_candidates = nullptr);

/// Assignment order for backtracking searches over generators: faces come
/// first and cells are placed as soon as their faces are available.
std::vector<int> constraint_order(const SimplicialSet& a);

/// Does any isomorphism source -> target exist? (Backtracking over
/// dimension-wise bijections of generators.) The candidate table, when
/// present, restricts vertex images as in enumerate_simplicial_maps.
bool is_isomorphic(const SSetPtr& a, const SSetPtr& b,
                   const std::vector<std::vector<int>>* vertex_candidates = nullptr);

}  // namespace strat
