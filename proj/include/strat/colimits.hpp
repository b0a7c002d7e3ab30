#pragma once

#include <map>

#include "strat/levelwise.hpp"
#include "strat/simplicial_set.hpp"

namespace strat {

/// Binary product with projections. The EZ criterion (pairs with no common
/// degeneracy factor) falls out of the generic levelwise extraction; the
/// pairing table is kept so maps into the product can be assembled.
class Product {
public:
    Product(SSetPtr x, SSetPtr y);

    const SSetPtr& complex() const { return complex_; }
    const SimplicialMap& pr1() const { return *pr1_; }
    const SimplicialMap& pr2() const { return *pr2_; }

    /// The simplex of the product with the given projections.
    SimplexRef pair(const SimplexRef& a, const SimplexRef& b) const;

    /// The map (f,g) : Z -> X x Y induced by f : Z -> X and g : Z -> Y.
    SimplicialMap induced(const SimplicialMap& f, const SimplicialMap& g) const;

private:
    SSetPtr x_, y_;
    SSetPtr complex_;
    std::unique_ptr<SimplicialMap> pr1_, pr2_;
    std::vector<std::map<std::pair<SimplexRef, SimplexRef>, SimplexRef>> pair_of_;
};

/// The map f x g : X x Z -> Y x W between given product complexes.
SimplicialMap product_of_maps(const Product& src, const Product& dst, const SimplicialMap& f,
                              const SimplicialMap& g);

/// Pushout of X <- A -> Y along f, g; the legs are returned and a map out of
/// the pushout can be induced from a compatible cocone.
class Pushout {
public:
    Pushout(const SimplicialMap& f, const SimplicialMap& g);

    const SSetPtr& complex() const { return complex_; }
    const SimplicialMap& leg_x() const { return *leg_x_; }
    const SimplicialMap& leg_y() const { return *leg_y_; }

    /// Unique map out of the pushout with u o leg_x = p, u o leg_y = q.
    SimplicialMap induced(const SimplicialMap& p, const SimplicialMap& q) const;

private:
    SSetPtr complex_;
    std::unique_ptr<SimplicialMap> leg_x_, leg_y_;
};

/// Quotient of X collapsing the image of a subcomplex map c : A -> X to a
/// single point (used for the circle and E builders). Returns the quotient
/// and the projection.
struct QuotientToPoint {
    SSetPtr complex;
    SimplicialMap projection;
};
QuotientToPoint collapse_to_point(const SimplicialMap& c);

}  // namespace strat
