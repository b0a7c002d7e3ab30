#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "strat/monotone.hpp"

namespace strat {

/// A finite poset. Elements are addressed by index; every element carries a
/// string id used for serialization and deterministic ordering. The full
/// reflexive-transitive relation is stored densely; all inputs are desk scale
/// and order queries dominate construction.
class Poset {
public:
    /// Builds from generating relations: the reflexive-transitive closure is
    /// taken, then antisymmetry is checked (violations are an error here;
    /// colimit-style constructions that must collapse cycles go through
    /// poset_quotient_of_preorder below).
    Poset(std::vector<std::string> element_ids, const std::vector<std::pair<int, int>>& relations);

    static std::shared_ptr<const Poset> chain(int n);  // [n] with ids "0".."n"
    static std::shared_ptr<const Poset> antichain(const std::vector<std::string>& ids);
    static std::shared_ptr<const Poset> singleton(const std::string& id = "0");

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id_of(int e) const { return ids_[static_cast<std::size_t>(e)]; }
    const std::vector<std::string>& ids() const { return ids_; }
    std::optional<int> index_of(const std::string& id) const;

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    /// Non-reflexive pairs of the full relation, sorted; the canonical
    /// serialized form.
    std::vector<std::pair<int, int>> strict_pairs() const;

    bool same_order_as(const Poset& other) const;  // equality of ids and relation

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<bool>> leq_;
};

using PosetPtr = std::shared_ptr<const Poset>;

/// A monotone map between posets.
class PosetMap {
public:
    PosetMap(PosetPtr source, PosetPtr target, std::vector<int> assignment);

    static PosetMap identity(PosetPtr p);

    const PosetPtr& source() const { return source_; }
    const PosetPtr& target() const { return target_; }
    int operator()(int e) const { return assignment_[static_cast<std::size_t>(e)]; }
    const std::vector<int>& assignment() const { return assignment_; }

    bool is_bijective() const;
    /// Bijective and both preserves and reflects the order.
    bool is_order_isomorphism() const;

private:
    PosetPtr source_;
    PosetPtr target_;
    std::vector<int> assignment_;
};

PosetMap compose(const PosetMap& g, const PosetMap& f);

/// A flag [p0 <= ... <= pn] in a poset; length n means n+1 entries. The empty
/// flag (no entries) is permitted where constructions need it.
struct Flag {
    PosetPtr poset;
    std::vector<int> entries;

    int length() const { return static_cast<int>(entries.size()) - 1; }
    bool empty() const { return entries.empty(); }
    bool is_regular() const;
    void validate() const;  // entries weakly increasing

    /// The regular flag this flag degenerates from (duplicates removed).
    Flag support() const;
    /// Entries of the support as a set of element indices.
    std::vector<int> support_set() const;

    /// Positions {l : entries[l] == p}, contiguous; the p-block of the flag.
    std::vector<int> block(int p) const;
    /// The restriction J_p = block of p as a flag (may be empty).
    Flag restrict_to_element(int p) const;

    std::string to_string() const;
    bool operator==(const Flag& o) const { return entries == o.entries; }
};

/// Subsequence of entries lying in the subset, order preserved.
Flag flag_restrict(const Flag& j, const std::vector<int>& subset);

/// Ordered union of two flags with disjoint supports; rejects the merge when
/// the result is not monotone (incomparable heads) or the supports overlap.
Flag flag_join(const Flag& j0, const Flag& j1);

/// All strictly increasing flags of length <= max_len (at most max_len+1
/// entries), in lexicographic order on entry vectors grouped by size.
std::vector<Flag> regular_flags(const PosetPtr& p, int max_len);

/// All flags (weakly increasing) of exact length len, lexicographic.
std::vector<Flag> all_flags_of_length(const PosetPtr& p, int len);

/// The poset of monotone maps Q -> P, ordered pointwise.
/// Also returns the assignment vectors in element order.
struct ExponentialPoset {
    PosetPtr poset;
    std::vector<std::vector<int>> maps;  // element -> assignment Q -> P
};
ExponentialPoset exponential_poset(const PosetPtr& p, const PosetPtr& q);

/// The product poset P x Q with componentwise order; element (a,b) has index
/// a*|Q|+b and id "(a,b)".
PosetPtr product_poset(const PosetPtr& p, const PosetPtr& q);

/// Poset reflection of a preorder presented by a digraph: strongly connected
/// components ordered by reachability. Component ids are the lexicographically
/// least member id. Used by posetification and by poset-level pushouts.
struct PreorderQuotient {
    PosetPtr poset;
    std::vector<int> component_of;  // node -> element of the quotient
};
PreorderQuotient poset_quotient_of_preorder(const std::vector<std::string>& node_ids,
                                            const std::vector<std::pair<int, int>>& arcs);

/// Pushout Q <- A -> P' in posets: elements-and-relations, with cycle
/// collapse via the SCC machinery. Returns the pushout and both leg maps.
struct PosetPushout {
    PosetPtr poset;
    PosetMap left_leg;   // from f.target()
    PosetMap right_leg;  // from g.target()
};
PosetPushout poset_pushout(const PosetMap& f, const PosetMap& g);

}  // namespace strat
