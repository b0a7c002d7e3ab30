#include <doctest.h>

#include "helpers.hpp"
#include "strat/links.hpp"

using namespace strat;
using namespace strat::testing;

namespace {
PosetPtr pq() { return named_chain({"p", "q"}); }
}

TEST_CASE("geometric link closed form on stratified simplices") {
    auto p = pq();
    Flag ppq{p, {0, 0, 1}}, ipq{p, {0, 1}};
    auto l = link_geo(strat_simplex(ppq), ipq);
    CHECK(is_isomorphic(l, standard_simplex(1)));

    Flag iq{p, {1}};
    CHECK(link_geo(strat_simplex(ipq), iq)->generator_count() == 1);
    CHECK(link_geo(strat_horn(ipq, 0), iq)->dim() == -1);

    // link of the admissible horn inside the link of the simplex
    auto lh = link_geo(strat_horn(ppq, 0), ipq);
    CHECK(lh->count_of_dim(0) == 1);
    CHECK(lh->dim() == 0);
}

TEST_CASE("links only see the supported part") {
    auto p3 = named_chain({"p", "q", "r"});
    // I not inside the support: empty on both horn and simplex
    Flag j{p3, {0, 1}}, i{p3, {0, 2}};
    CHECK(link_geo(strat_simplex(j), i)->dim() == -1);
    CHECK(link_geo(strat_horn(j, 0), i)->dim() == -1);
}

TEST_CASE("homotopy links") {
    auto p = pq();
    Flag ipq{p, {0, 1}};
    auto h = hol(strat_simplex(ipq), ipq, 2);
    for (int k = 0; k <= 2; ++k) CHECK(h.lv.level_size(k) == 1);
    h.lv.validate();

    Flag ip{p, {0}};
    auto h2 = hol(strat_simplex(ipq), ip, 1);
    CHECK(h2.lv.level_size(0) == 1);  // one vertex in stratum p

    auto h3 = hol(strat_simplex(ip), ipq, 1);
    CHECK(h3.lv.level_size(0) == 0);
}

TEST_CASE("link to hol comparison is a levelwise bijection on simplices") {
    auto p = pq();
    for (auto entries : std::vector<std::vector<int>>{{0}, {0, 1}, {0, 0}, {0, 0, 1}, {0, 1, 1}}) {
        Flag j{p, entries};
        for (const auto& i : regular_flags(p, 1)) {
            // only flags supported by j produce anything; the map must be a
            // bijection either way
            auto cmp = link_to_hol(strat_simplex(j), i, 3);
            CHECK_MESSAGE(!cmp.first_non_bijective_level().has_value(),
                          "flag ", j.to_string(), " at ", i.to_string());
        }
    }
}

TEST_CASE("extended homotopy links decompose by flags") {
    auto p = pq();
    auto x = strat_simplex(Flag{p, {0, 1}});
    auto comps = ext_hol(x, 1, 2);
    REQUIRE(comps.size() == 3);
    for (auto& c : comps) {
        CHECK(c.fam.lv.level_size(0) == 1);
        c.fam.lv.validate();
    }
    CHECK(ext_hol(empty_strat(p), 1, 1).size() == 3);
    for (auto& c : ext_hol(empty_strat(p), 1, 1)) CHECK(c.fam.lv.level_size(0) == 0);

    // length 0: vertices per stratum
    auto h0 = ext_hol(strat_simplex(Flag{p, {0, 0}}), 0, 1);
    REQUIRE(h0.size() == 2);
    CHECK(h0[0].fam.lv.level_size(0) == 2);
    CHECK(h0[1].fam.lv.level_size(0) == 0);
}

TEST_CASE("diagrammatic equivalence probe") {
    auto p = pq();
    Flag ipq{p, {0, 1}}, ppq{p, {0, 0, 1}};
    auto id = strat_identity(strat_simplex(ppq));
    CHECK(diag_equiv_probe(id, 2, 2, 3).pass);

    auto bad = diag_equiv_probe(strat_horn_inclusion(ipq, 0), 2, 2, 3);
    CHECK(!bad.pass);
    CHECK(bad.details.at("flag") == "[q]");
    CHECK(bad.details.at("invariant") == "pi0");

    auto good = diag_equiv_probe(strat_horn_inclusion(ppq, 0), 2, 2, 3);
    CHECK(good.pass);

    CHECK_THROWS_AS(diag_equiv_probe(id, 3, 1, 2), Error);
}

TEST_CASE("optional certification by stratified homotopy data") {
    auto p = pq();
    auto dpp = strat_simplex(Flag{p, {0, 0}});
    auto counit = refinement(dpp).counit;
    auto cert = certify_equivalence(counit);
    CHECK(cert.has_value());

    // the non-admissible horn inclusion cannot be certified
    auto horn = strat_horn_inclusion(Flag{p, {0, 1}}, 0);
    CHECK(!certify_equivalence(horn).has_value());
}

TEST_CASE("probe agrees with the horn classification at small lengths") {
    for (int len = 1; len <= 2; ++len) {
        // canonical flags over their support chains: multiplicity patterns
        std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& pattern) {
            int total = 0;
            for (int m : pattern) total += m;
            if (total == len + 1) {
                auto chain = Poset::chain(static_cast<int>(pattern.size()) - 1);
                Flag j{chain, {}};
                for (std::size_t s = 0; s < pattern.size(); ++s)
                    for (int t = 0; t < pattern[s]; ++t) j.entries.push_back(static_cast<int>(s));
                for (int k = 0; k <= len; ++k) {
                    auto verdict = diag_equiv_probe(strat_horn_inclusion(j, k), 2, 2, 3);
                    CHECK_MESSAGE(verdict.pass == classify_horn(j, k).admissible, "pattern ",
                                  j.to_string(), " k=", k);
                }
                return;
            }
            if (total > len + 1) return;
            for (int next = 1; next + total <= len + 1; ++next) {
                pattern.push_back(next);
                rec(pattern);
                pattern.pop_back();
            }
        };
        std::vector<int> pattern;
        rec(pattern);
    }
}
