#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "strat/modelcheck.hpp"

using namespace strat;
using namespace strat::testing;

namespace {
PosetPtr pq() { return named_chain({"p", "q"}); }
}

TEST_CASE("cofibration checks") {
    for (int n = 0; n <= 3; ++n) {
        auto b = make_generator_set("boundaries_refined", nullptr, n);
        for (const auto& m : b.members)
            for (const char* s : {"D", "C", "DR", "CR"})
                CHECK(is_cofibration(m, s).is_cofibration);
    }
    // empty over the empty poset vs empty over [0]
    StratSet e0 = empty_strat(Poset::antichain({}));
    StratSet e1 = empty_strat(Poset::chain(0));
    StratMap em{e0, e1, SimplicialMap(e0.space, e1.space, {}, false),
                PosetMap(e0.poset, e1.poset, {})};
    CHECK(is_cofibration(em, "D").is_cofibration);
    CHECK(!is_cofibration(em, "DR").is_cofibration);

    // a non-injective map is rejected with a witness
    auto p = pq();
    auto dpp = strat_simplex(Flag{p, {0, 0}});
    auto dp = strat_simplex(Flag{p, {0}});
    std::vector<SimplexRef> collapse;
    for (int g = 0; g < dpp.space->generator_count(); ++g)
        collapse.push_back(SimplexRef{MonotoneMap::constant(dpp.space->dim_of(g), 0, 0), 0});
    StratMap bad{dpp, dp, SimplicialMap(dpp.space, dp.space, std::move(collapse), false),
                 PosetMap::identity(p)};
    auto verdict = is_cofibration(bad, "D");
    CHECK(!verdict.is_cofibration);
    CHECK(!verdict.reason.empty());

    CHECK_THROWS_AS(is_cofibration(em, "XX"), Error);
}

TEST_CASE("cof_D_global members are cofibrations and detect poset isos") {
    auto gens = make_generator_set("cof_D_global", nullptr, 3);
    CHECK(gens.members.size() == 6);  // 4 boundaries + 2 poset detectors
    for (const auto& m : gens.members) CHECK(is_cofibration(m, "D").is_cofibration);
}

TEST_CASE("rlp probe basics") {
    auto p = pq();
    auto x = strat_simplex(Flag{p, {0, 1}});
    auto id = strat_identity(x);
    CHECK(rlp_probe(id, make_generator_set("acof_D_global", p, 2), 2).pass);

    // the trivially stratified circle to the point: no filler for the inner
    // horn with both faces the loop
    auto c = trivially_stratified(circle());
    auto pt = trivially_stratified(standard_simplex(0));
    std::vector<SimplexRef> collapse;
    for (int g = 0; g < c.space->generator_count(); ++g)
        collapse.push_back(SimplexRef{MonotoneMap::constant(c.space->dim_of(g), 0, 0), 0});
    StratMap f{c, pt, SimplicialMap(c.space, pt.space, std::move(collapse), false),
               PosetMap::identity(c.poset)};
    auto verdict = rlp_probe(f, make_generator_set("acof_D_global", c.poset, 2), 2);
    CHECK(!verdict.pass);
    CHECK(!verdict.details.at("top").empty());

    // D^{[p<q]} to the terminal point over [0]: admissible and inner horns
    // all lift
    auto terminal = trivially_stratified(standard_simplex(0));
    std::vector<SimplexRef> collapse2;
    for (int g = 0; g < x.space->generator_count(); ++g)
        collapse2.push_back(SimplexRef{MonotoneMap::constant(x.space->dim_of(g), 0, 0), 0});
    StratMap f2{x, terminal, SimplicialMap(x.space, terminal.space, std::move(collapse2), false),
                PosetMap(p, terminal.poset, {0, 0})};
    auto gens = make_generator_set("acof_D_global", p, 3);
    auto inner = make_generator_set("inner_horns", p, 3);
    for (auto& m : inner.members) gens.members.push_back(m);
    CHECK(rlp_probe(f2, gens, 3).pass);
}

TEST_CASE("fibrancy probe") {
    auto p = pq();
    CHECK(fibrancy_probe(nerve_identity_strat(p), 3, false).pass);
    CHECK(fibrancy_probe(nerve_identity_strat(p), 3, true).pass);

    // the p-stratum of Delta^{[p,p]} is Delta^1, which is not Kan: the
    // admissible class detects the missing inverse
    auto dpp = strat_simplex(Flag{p, {0, 0}});
    auto v = fibrancy_probe(dpp, 2, false);
    CHECK(!v.pass);

    auto c = trivially_stratified(circle());
    auto vc = fibrancy_probe(c, 2, false);
    CHECK(!vc.pass);
    CHECK(!vc.details.at("top").empty());
}

TEST_CASE("acyclic fibration check") {
    auto p = pq();
    auto dpp = strat_simplex(Flag{p, {0, 0}});
    auto counit = refinement(dpp).counit;
    auto good = acyclic_fibration_check(counit, 2);
    CHECK(good.rp_isomorphism);
    CHECK(good.boundary_rlp.pass);
    CHECK(good.pass());

    // the interval-to-point collapse has an isomorphism on refined posets but
    // is not a trivial fibration of spaces: the (1,0) sphere does not fill
    auto dp = strat_simplex(Flag{p, {0}});
    std::vector<SimplexRef> collapse;
    for (int g = 0; g < dpp.space->generator_count(); ++g)
        collapse.push_back(SimplexRef{MonotoneMap::constant(dpp.space->dim_of(g), 0, 0), 0});
    StratMap f{dpp, dp, SimplicialMap(dpp.space, dp.space, std::move(collapse), false),
               PosetMap::identity(p)};
    auto mixed = acyclic_fibration_check(f, 2);
    CHECK(mixed.rp_isomorphism);
    CHECK(!mixed.boundary_rlp.pass);

    // missing a vertex: fails at the 0-boundary
    auto incl = strat_boundary_inclusion(Flag{p, {0, 1}});
    auto badv = acyclic_fibration_check(StratMap{incl.source, incl.target, incl.space_map,
                                                 incl.poset_map},
                                        1);
    CHECK(!badv.pass());
}

TEST_CASE("exponential unit law against the terminal object") {
    auto p = pq();
    auto y = strat_simplex(Flag{p, {0, 1}});
    StratSet terminal = trivially_stratified(standard_simplex(0));
    StratExponential e(y, terminal, 2);
    LevelIndex ly(y.space, 2);
    for (int k = 0; k <= 2; ++k) CHECK(e.level_size(k) == ly.size(k));
    e.levelwise().space.validate();
    // labels at level 0 are the strata of the vertices
    CHECK(e.poset().poset->size() == p->size());
}

TEST_CASE("exponential adjunction: counts and naturality") {
    auto p = pq();
    std::vector<StratSet> fam = {strat_simplex(Flag{p, {0}}), strat_simplex(Flag{p, {0, 1}}),
                                 strat_simplex(Flag{p, {0, 0}})};
    for (const auto& z : fam)
        for (const auto& x : fam)
            for (const auto& y : fam) {
                auto zx = strat_product(z, x);
                auto maps = enumerate_strat_maps(zx.strat, y);
                StratExponential e(y, x, std::max(z.space->dim(), 0));
                auto into = enumerate_strat_maps_into(z, e.levelwise());
                REQUIRE(maps.size() == into.size());
                // the explicit adjoint is one of the enumerated maps, and the
                // assignment is injective
                std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
                for (const auto& f : maps) {
                    auto adj = e.adjoint(zx, f);
                    CHECK(seen
                              .insert(std::make_pair(adj.poset_map.assignment(), adj.assignment))
                              .second);
                }
            }
}

TEST_CASE("exponential adjunction is natural under precomposition") {
    auto p = pq();
    auto z = strat_simplex(Flag{p, {0, 1}});
    auto zp = strat_simplex(Flag{p, {0}});
    auto x = strat_simplex(Flag{p, {0, 0}});
    auto y = strat_simplex(Flag{p, {0, 1}});
    // w : z' -> z the 0th vertex inclusion
    StratMap w{zp, z,
               SimplicialMap(zp.space, z.space,
                             {SimplexRef::nondeg(z.space->find_generator("0"), 0)}, false),
               PosetMap::identity(p)};
    auto zx = strat_product(z, x);
    auto zpx = strat_product(zp, x);
    StratExponential e(y, x, 1);
    StratMap wx = strat_product_of_maps(zpx, zx, w, strat_identity(x));
    for (const auto& f : enumerate_strat_maps(zx.strat, y)) {
        auto lhs = e.adjoint(zpx, compose_strat(f, wx));
        auto rhs = e.adjoint(zx, f);
        // adj(f) o w on the single generator of z'
        SimplexRef img = w.space_map.on_generator(0);
        CHECK(lhs.assignment[0] ==
              rhs.assignment[static_cast<std::size_t>(img.gen)]);
        CHECK(lhs.poset_map.assignment()[0] ==
              rhs.poset_map.assignment()[static_cast<std::size_t>(w.poset_map(0))]);
    }
}

TEST_CASE("nerve exponential compatibility on vertices") {
    auto p = pq();
    auto q3 = named_chain({"a", "b", "c"});
    StratExponential e(nerve_identity_strat(p), nerve_identity_strat(q3), 1);
    CHECK(e.level_size(0) == static_cast<int>(exponential_poset(p, q3).maps.size()));
    // labels are exactly the poset maps themselves
    for (int v = 0; v < e.level_size(0); ++v) {
        const auto& el = e.element(0, v);
        CHECK(el.chain[0] == e.levelwise().labels[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("path space") {
    auto p = pq();
    auto x = strat_simplex(Flag{p, {0, 1}});
    int vp = x.space->find_generator("0");
    auto ps = path_space(x, {vp}, 2);
    CHECK(ps.space.level_size(0) == 2);
    CHECK(ps.poset->size() == 3);
    ps.space.validate();

    CHECK(path_space(x, {}, 1).space.level_size(0) == 0);

    auto point = strat_simplex(Flag{p, {0}});
    auto ps2 = path_space(point, {point.space->find_generator("0")}, 2);
    for (int k = 0; k <= 2; ++k) CHECK(ps2.space.level_size(k) == 1);

    // level-0 contract: 1-simplices with first face in A, by enumeration
    auto x2 = strat_simplex(Flag{p, {0, 0, 1}});
    std::vector<int> sub = {x2.space->find_generator("0"), x2.space->find_generator("1"),
                            x2.space->find_generator("01")};
    auto ps3 = path_space(x2, sub, 1);
    LevelIndex li(x2.space, 1);
    int expect = 0;
    for (int e = 0; e < li.size(1); ++e) {
        SimplexRef start = x2.space->face(li.ref(1, e), 1);
        if (std::find(sub.begin(), sub.end(), start.gen) != sub.end()) ++expect;
    }
    CHECK(ps3.space.level_size(0) == expect);
    CHECK(expect == 5);

    // a non-subcomplex is rejected
    CHECK_THROWS_AS(path_space(x2, {x2.space->find_generator("01")}, 1), Error);
}

TEST_CASE("pushout product") {
    auto p = pq();
    // unit case: empty -> point against any cofibration is the cofibration
    // with a point factor
    StratSet e0 = empty_strat(Poset::antichain({}));
    StratSet d0 = lstr_simplex(0);
    StratMap unit{e0, d0, SimplicialMap(e0.space, d0.space, {}, false),
                  PosetMap(e0.poset, d0.poset, {})};
    auto j = strat_boundary_inclusion(Flag{p, {0, 1}});
    auto pp1 = pushout_product(unit, j);
    CHECK(is_isomorphic(pp1.source.space, j.source.space));
    CHECK(is_isomorphic(pp1.target.space, j.target.space));

    auto sq = pushout_product(j, j);
    CHECK(sq.source.space->count_of_dim(0) == 4);
    CHECK(sq.source.space->count_of_dim(1) == 4);
    CHECK(sq.space_map.is_mono());
    CHECK(betti_of(sq.source.space, 1, 2) == std::vector<int>{1, 1});

    // non-cofibration inputs are rejected
    auto dpp = strat_simplex(Flag{p, {0, 0}});
    auto dp = strat_simplex(Flag{p, {0}});
    std::vector<SimplexRef> collapse;
    for (int g = 0; g < dpp.space->generator_count(); ++g)
        collapse.push_back(SimplexRef{MonotoneMap::constant(dpp.space->dim_of(g), 0, 0), 0});
    StratMap nc{dpp, dp, SimplicialMap(dpp.space, dp.space, std::move(collapse), false),
                PosetMap::identity(p)};
    CHECK_THROWS_AS(pushout_product(nc, j), Error);
}

TEST_CASE("layered probe") {
    CHECK(layered_probe(nerve(Poset::chain(1)), 2).witnessed);
    auto c = layered_probe(circle(), 2);
    CHECK(!c.witnessed);
    CHECK(!c.edge.empty());
    auto e = layered_probe(free_right_invertible(), 2);
    CHECK(!e.witnessed);
    CHECK(!e.edge.empty());
    CHECK_THROWS_AS(layered_probe(circle(), 1), Error);
}
