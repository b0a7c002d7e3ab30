#include <doctest.h>

#include "helpers.hpp"
#include "strat/standard.hpp"

using namespace strat;
using namespace strat::testing;

namespace {

// Brute-force oracle: all functions Q -> P, filtered for monotonicity.
int count_monotone_maps_oracle(const Poset& p, const Poset& q) {
    if (q.size() == 0) return 1;
    long total = 1;
    for (int i = 0; i < q.size(); ++i) total *= p.size();
    int count = 0;
    for (long code = 0; code < total; ++code) {
        long c = code;
        std::vector<int> f;
        for (int i = 0; i < q.size(); ++i) {
            f.push_back(static_cast<int>(c % p.size()));
            c /= p.size();
        }
        bool mono = true;
        for (int a = 0; a < q.size() && mono; ++a)
            for (int b = 0; b < q.size() && mono; ++b)
                if (q.leq(a, b) && !p.leq(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]))
                    mono = false;
        if (mono) ++count;
    }
    return count;
}

int count_chains_oracle(const Poset& p, int max_entries) {
    // strictly increasing tuples of size 1..max_entries, brute force
    int count = 0;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cur) {
        if (!cur.empty()) ++count;
        if (static_cast<int>(cur.size()) == max_entries) return;
        for (int e = 0; e < p.size(); ++e) {
            if (!cur.empty() && (e == cur.back() || !p.leq(cur.back(), e))) continue;
            cur.push_back(e);
            rec(cur);
            cur.pop_back();
        }
    };
    std::vector<int> cur;
    rec(cur);
    return count;
}

}  // namespace

TEST_CASE("poset construction and validation") {
    auto p = Poset::chain(2);
    CHECK(p->size() == 3);
    CHECK(p->leq(0, 2));
    CHECK(!p->leq(2, 0));
    CHECK_THROWS_AS(Poset({"a", "b"}, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Poset({"a", "a"}, {}), Error);
}

TEST_CASE("exponential poset basics") {
    auto p1 = Poset::chain(1);
    auto p0 = Poset::chain(0);
    auto e = exponential_poset(p1, p0);
    CHECK(e.poset->size() == 2);
    CHECK(e.poset->leq(0, 1));

    auto none = Poset::antichain({});
    CHECK(exponential_poset(p1, none).poset->size() == 1);

    auto ee = exponential_poset(p1, p1);
    REQUIRE(ee.poset->size() == 3);
    // 3-element chain const0 < id < const1
    CHECK(ee.poset->leq(0, 1));
    CHECK(ee.poset->leq(1, 2));
    CHECK(ee.maps[0] == std::vector<int>{0, 0});
    CHECK(ee.maps[1] == std::vector<int>{0, 1});
    CHECK(ee.maps[2] == std::vector<int>{1, 1});
}

TEST_CASE("exponential poset counts against the brute-force oracle") {
    std::vector<PosetPtr> sample;
    for (int n = 1; n <= 3; ++n)
        for (auto& p : all_posets(n)) sample.push_back(p);
    for (auto& p : random_posets(4, 4, 11)) sample.push_back(p);
    for (std::size_t i = 0; i < sample.size(); i += 7)
        for (std::size_t j = 0; j < sample.size(); j += 9) {
            auto e = exponential_poset(sample[i], sample[j]);
            CHECK(static_cast<int>(e.maps.size()) ==
                  count_monotone_maps_oracle(*sample[i], *sample[j]));
        }
}

TEST_CASE("posetify forced examples") {
    auto d1 = posetify(*standard_simplex(1));
    CHECK(d1.poset->size() == 2);
    CHECK(d1.poset->leq(0, 1));

    auto s1 = posetify(*circle());
    CHECK(s1.poset->size() == 1);

    SimplicialSetBuilder b;
    int a = b.add_generator(0, "a");
    int v = b.add_generator(0, "b");
    b.add_generator(1, "ab", {SimplexRef::nondeg(v, 0), SimplexRef::nondeg(a, 0)});
    b.add_generator(1, "ba", {SimplexRef::nondeg(a, 0), SimplexRef::nondeg(v, 0)});
    auto two = posetify(*b.build());
    CHECK(two.poset->size() == 1);
}

TEST_CASE("posetify is idempotent through the nerve") {
    std::vector<PosetPtr> sample;
    for (int n = 1; n <= 4; ++n)
        for (auto& p : all_posets(n)) sample.push_back(p);
    for (auto& p : random_posets(5, 30, 5)) sample.push_back(p);
    for (auto& p : random_posets(6, 20, 6)) sample.push_back(p);
    for (const auto& p : sample) {
        auto q = posetify(*nerve(p));
        REQUIRE(q.poset->size() == p->size());
        // nerve vertices carry the element ids; the condensation keeps them
        for (int a = 0; a < p->size(); ++a)
            for (int b = 0; b < p->size(); ++b) {
                auto ia = q.poset->index_of(p->id_of(a));
                auto ib = q.poset->index_of(p->id_of(b));
                REQUIRE(ia);
                REQUIRE(ib);
                CHECK(q.poset->leq(*ia, *ib) == p->leq(a, b));
            }
    }
}

TEST_CASE("posetify ignores degenerate data and within-SCC 2-simplices") {
    // adding a 2-simplex whose edges stay within existing reachability does
    // not change the condensation
    SimplicialSetBuilder b;
    int v0 = b.add_generator(0, "0");
    int v1 = b.add_generator(0, "1");
    int v2 = b.add_generator(0, "2");
    int e01 = b.add_generator(1, "01", {SimplexRef::nondeg(v1, 0), SimplexRef::nondeg(v0, 0)});
    int e12 = b.add_generator(1, "12", {SimplexRef::nondeg(v2, 0), SimplexRef::nondeg(v1, 0)});
    int e02 = b.add_generator(1, "02", {SimplexRef::nondeg(v2, 0), SimplexRef::nondeg(v0, 0)});
    auto spineish = b.build();
    auto before = posetify(*spineish);

    SimplicialSetBuilder b2;
    v0 = b2.add_generator(0, "0");
    v1 = b2.add_generator(0, "1");
    v2 = b2.add_generator(0, "2");
    e01 = b2.add_generator(1, "01", {SimplexRef::nondeg(v1, 0), SimplexRef::nondeg(v0, 0)});
    e12 = b2.add_generator(1, "12", {SimplexRef::nondeg(v2, 0), SimplexRef::nondeg(v1, 0)});
    e02 = b2.add_generator(1, "02", {SimplexRef::nondeg(v2, 0), SimplexRef::nondeg(v0, 0)});
    b2.add_generator(2, "012",
                     {SimplexRef::nondeg(e12, 1), SimplexRef::nondeg(e02, 1),
                      SimplexRef::nondeg(e01, 1)});
    auto after = posetify(*b2.build());
    CHECK(before.poset->same_order_as(*after.poset));
}

TEST_CASE("regular flags") {
    auto p1 = Poset::chain(1);
    auto f = regular_flags(p1, 1);
    REQUIRE(f.size() == 3);
    CHECK(f[0].entries == std::vector<int>{0});
    CHECK(f[1].entries == std::vector<int>{1});
    CHECK(f[2].entries == std::vector<int>{0, 1});

    auto pt = Poset::singleton("p");
    CHECK(regular_flags(pt, 3).size() == 1);

    auto p2 = Poset::chain(2);
    CHECK(regular_flags(p2, 2).size() == 7);
    for (int n = 1; n <= 3; ++n)
        for (auto& p : all_posets(n))
            CHECK(static_cast<int>(regular_flags(p, 3).size()) == count_chains_oracle(*p, 4));
}

TEST_CASE("flag restriction") {
    auto p = named_chain({"p", "q", "r"});
    Flag j{p, {0, 0, 1}};
    CHECK(flag_restrict(j, {0}).entries == std::vector<int>{0, 0});
    CHECK(flag_restrict(j, {1}).entries == std::vector<int>{1});
    Flag j2{p, {0, 1, 2}};
    CHECK(flag_restrict(j2, {0, 2}).entries == std::vector<int>{0, 2});
}

TEST_CASE("flag restriction composes along intersections") {
    auto p = named_chain({"p", "q", "r", "s"});
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> entries;
        int cur = 0;
        while (cur < 4) {
            entries.push_back(cur);
            if (rng() % 2) ++cur;
            else cur += static_cast<int>(rng() % 2) + 1;
        }
        Flag j{p, entries};
        std::vector<int> s, t, st;
        for (int e = 0; e < 4; ++e) {
            bool in_s = rng() % 2, in_t = rng() % 2;
            if (in_s) s.push_back(e);
            if (in_t) t.push_back(e);
            if (in_s && in_t) st.push_back(e);
        }
        CHECK(flag_restrict(j, st).entries == flag_restrict(flag_restrict(j, s), t).entries);
    }
}

TEST_CASE("flag join") {
    auto p = named_chain({"p", "q"});
    Flag fp{p, {0}}, fq{p, {1}}, fpp{p, {0, 0}};
    CHECK(flag_join(fp, fq).entries == std::vector<int>{0, 1});
    CHECK(flag_join(fpp, fq).entries == std::vector<int>{0, 0, 1});
    auto anti = Poset::antichain({"p", "r"});
    Flag ap{anti, {0}}, ar{anti, {1}};
    CHECK_THROWS_AS(flag_join(ap, ar), Error);
    CHECK_THROWS_AS(flag_join(fp, fp), Error);  // shared support
}

TEST_CASE("poset pushout with cycle collapse") {
    // glue p<=q and q<=p patterns: everything identifies
    auto a = Poset::antichain({"p", "q"});
    auto c1 = named_chain({"p", "q"});
    auto c2 = named_chain({"q", "p"});  // q <= p
    PosetMap f(a, c1, {static_cast<int>(*c1->index_of("p")), static_cast<int>(*c1->index_of("q"))});
    PosetMap g(a, c2, {static_cast<int>(*c2->index_of("p")), static_cast<int>(*c2->index_of("q"))});
    auto po = poset_pushout(f, g);
    CHECK(po.poset->size() == 1);

    // disjoint gluing keeps both elements
    auto single = Poset::antichain({"x"});
    PosetMap f2(Poset::antichain({}), single, {});
    PosetMap g2(Poset::antichain({}), Poset::antichain({"y"}), {});
    auto po2 = poset_pushout(f2, g2);
    CHECK(po2.poset->size() == 2);
    CHECK(!po2.poset->comparable(0, 1));
}
