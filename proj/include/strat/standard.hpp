#pragma once

#include "strat/colimits.hpp"
#include "strat/simplicial_set.hpp"

namespace strat {

/// The standard n-simplex; generators are the injective monotone tuples into
/// [n], named by their vertex strings ("02", "012", ...).
SSetPtr standard_simplex(int n);
/// Its boundary (all proper faces).
SSetPtr standard_boundary(int n);
/// The horn missing the k-th facet.
SSetPtr standard_horn(int n, int k);

/// Inclusions between the standard complexes, matched by generator name.
SimplicialMap inclusion_by_names(const SSetPtr& sub, const SSetPtr& whole);

/// Nerve of a poset: one generator per regular flag, named by the flag ids
/// joined with '.'.
SSetPtr nerve(const PosetPtr& p);

/// S^1 = Delta^1 / boundary: one vertex, one loop. Built by the quotient.
SSetPtr circle();

/// E = Delta^2 with the edge [0,2] collapsed and the vertices 0, 1
/// identified: the generating data of a right-invertible endomorphism.
SSetPtr free_right_invertible();

/// The inclusion S^1 -> E along the [0,1] edge.
SimplicialMap circle_into_e();

/// Empty simplicial set.
SSetPtr empty_sset();

/// The simplicial map Delta^m -> Delta^n realizing a monotone map.
SimplicialMap simplex_map(const SSetPtr& dm, const SSetPtr& dn, const MonotoneMap& alpha);

}  // namespace strat
