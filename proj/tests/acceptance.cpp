// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Everything runs at desk scale with pinned bounds.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "strat/modelcheck.hpp"

using namespace strat;
using namespace strat::testing;

namespace {

int checks = 0;
std::string first_failure;

void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
}

std::vector<PosetPtr> posets_up_to_3() {
    std::vector<PosetPtr> out;
    for (int n = 1; n <= 3; ++n)
        for (auto& p : all_posets(n)) out.push_back(p);
    return out;
}

std::vector<Flag> flags_up_to(const PosetPtr& p, int max_len) {
    std::vector<Flag> out;
    for (int len = 0; len <= max_len; ++len)
        for (auto& j : all_flags_of_length(p, len)) out.push_back(j);
    return out;
}

// Closed-form product of simplices: the oracle side of the link formula.
SSetPtr link_product_oracle(const StratSet& simplex_strat, const Flag& j, const Flag& i) {
    SSetPtr acc;
    for (int pelt : i.entries) {
        int len = static_cast<int>(j.block(pelt).size()) - 1;
        if (len < 0) return empty_sset();
        SSetPtr factor = standard_simplex(len);
        if (!acc) acc = factor;
        else acc = Product(acc, factor).complex();
    }
    (void)simplex_strat;
    return acc ? acc : standard_simplex(0);
}

// ---------------------------------------------------------------- criteria

bool criterion1_link_closed_form() {
    first_failure.clear();
    for (const auto& p : posets_up_to_3())
        for (const auto& j : flags_up_to(p, 3)) {
            if (j.empty()) continue;
            StratSet dj = strat_simplex(j);
            for (const auto& i : regular_flags(p, p->size() - 1)) {
                auto lhs = link_geo(dj, i);
                auto rhs = link_product_oracle(dj, j, i);
                require(is_isomorphic(lhs, rhs),
                        "link(" + j.to_string() + "," + i.to_string() + ")");
            }
        }
    return first_failure.empty();
}

bool criterion2_horn_case_law() {
    first_failure.clear();
    // (a) the four cases of the link of a horn, exhaustively
    for (const auto& p : posets_up_to_3())
        for (const auto& j : flags_up_to(p, 3)) {
            int n = j.length();
            if (n < 1) continue;
            StratSet dj = strat_simplex(j);
            auto supp = j.support_set();
            for (int k = 0; k <= n; ++k) {
                StratSet horn = strat_horn(j, k);
                int pk = j.entries[static_cast<std::size_t>(k)];
                int blen = static_cast<int>(j.block(pk).size()) - 1;
                // The join decomposition of the horn (independent of I).
                std::vector<int> supp_minus_pk;
                for (int e : supp)
                    if (e != pk) supp_minus_pk.push_back(e);
                StratSet decomposition = horn;  // placeholder for the single-stratum case
                if (static_cast<int>(supp.size()) >= 2) {
                    Flag j0 = flag_restrict(j, supp_minus_pk);
                    Flag jd{p, {}};
                    for (int t = 0; t <= blen; ++t) jd.entries.push_back(pk);
                    int k0 = j.block(pk)[0];
                    StratSet d_block = strat_simplex(jd);
                    if (blen == 0) {
                        decomposition =
                            strat_join(strat_boundary(j0), d_block, supp_minus_pk, {pk}).strat;
                    } else {
                        StratSet h_block = strat_horn(jd, k - k0);
                        auto piece1 = strat_join(strat_simplex(j0), h_block, supp_minus_pk, {pk});
                        auto piece2 = strat_join(strat_boundary(j0), d_block, supp_minus_pk, {pk});
                        auto glue = strat_join(strat_boundary(j0), h_block, supp_minus_pk, {pk});
                        StratMap inc1{glue.strat, piece1.strat,
                                      inclusion_by_names(glue.strat.space, piece1.strat.space),
                                      PosetMap::identity(p)};
                        StratMap inc2{glue.strat, piece2.strat,
                                      inclusion_by_names(glue.strat.space, piece2.strat.space),
                                      PosetMap::identity(p)};
                        decomposition = strat_pushout(inc1, inc2).strat;
                    }
                    require(is_strat_isomorphic(horn, decomposition),
                            "case4 join decomposition " + j.to_string() + " k" + std::to_string(k));
                }
                for (const auto& i : regular_flags(p, p->size() - 1)) {
                    bool inside = true;
                    for (int e : i.entries)
                        if (std::find(supp.begin(), supp.end(), e) == supp.end()) inside = false;
                    auto lh = link_geo(horn, i);
                    auto ls = link_geo(dj, i);
                    if (!inside) {  // case 1
                        require(lh->dim() < 0 && ls->dim() < 0,
                                "case1 " + j.to_string() + " k" + std::to_string(k) + " " +
                                    i.to_string());
                        continue;
                    }
                    std::vector<int> supp_minus;
                    for (int e : supp)
                        if (e != pk) supp_minus.push_back(e);
                    bool is_case2 = (i.entries == supp_minus) && blen == 0 && !supp_minus.empty();
                    bool is_case4 = i.entries == supp;
                    if (is_case2) {
                        // polytope boundary inside the polytope
                        int d = ls->dim();
                        auto bs = d >= 1 ? betti_of(lh, std::min(2, std::max(1, d - 1)), 2)
                                         : std::vector<int>{};
                        if (d == 0) {
                            require(lh->dim() < 0, "case2 empty boundary " + j.to_string());
                        } else {
                            std::vector<int> sphere(static_cast<std::size_t>(std::min(2, std::max(1, d - 1))) + 1, 0);
                            sphere[0] = 1;
                            if (d - 1 <= std::min(2, std::max(1, d - 1))) {
                                if (d - 1 == 0) sphere[0] = 2;
                                else sphere[static_cast<std::size_t>(d - 1)] += 1;
                            }
                            require(bs == sphere, "case2 sphere betti " + j.to_string() + " k" +
                                                      std::to_string(k) + " " + i.to_string());
                            require(betti_of(ls, 1, 2) == std::vector<int>{1, 0},
                                    "case2 polytope contractible " + j.to_string());
                        }
                        continue;
                    }
                    if (!is_case4) {  // case 3
                        require(is_isomorphic(lh, ls), "case3 " + j.to_string() + " k" +
                                                           std::to_string(k) + " " + i.to_string());
                        continue;
                    }
                    // case 4: the join decomposition of the horn itself
                    if (static_cast<int>(supp.size()) == 1) {
                        require(is_isomorphic(lh, standard_horn(n, k)),
                                "case4 single-stratum link " + j.to_string());
                        require(is_isomorphic(ls, standard_simplex(n)),
                                "case4 single-stratum ambient " + j.to_string());
                        continue;
                    }
                    require(is_isomorphic(lh, link_geo(decomposition, i)),
                            "case4 link through decomposition " + j.to_string() + " k" +
                                std::to_string(k));
                }
            }
        }
    if (!first_failure.empty()) return false;

    // (b) probe verdicts match the admissibility classification; every
    // multiplicity pattern of length <= 3 over its support chain
    std::function<void(std::vector<int>&, int)> patterns = [&](std::vector<int>& pat, int len) {
        int total = 0;
        for (int m : pat) total += m;
        if (total == len + 1) {
            auto chain = Poset::chain(static_cast<int>(pat.size()) - 1);
            Flag j{chain, {}};
            for (std::size_t s = 0; s < pat.size(); ++s)
                for (int t = 0; t < pat[s]; ++t) j.entries.push_back(static_cast<int>(s));
            for (int k = 0; k <= len; ++k) {
                auto verdict = diag_equiv_probe(strat_horn_inclusion(j, k), 2, 2, 3);
                require(verdict.pass == classify_horn(j, k).admissible,
                        "probe/classify " + j.to_string() + " k" + std::to_string(k));
            }
            return;
        }
        if (total > len + 1) return;
        for (int next = 1; next + total <= len + 1; ++next) {
            pat.push_back(next);
            patterns(pat, len);
            pat.pop_back();
        }
    };
    for (int len = 1; len <= 3; ++len) {
        std::vector<int> pat;
        patterns(pat, len);
    }
    return first_failure.empty();
}

bool criterion3_join() {
    first_failure.clear();
    for (const auto& p : posets_up_to_3()) {
        auto flags = flags_up_to(p, 2);
        for (const auto& j0 : flags) {
            if (j0.empty()) continue;
            for (const auto& j1 : flags) {
                if (j1.empty()) continue;
                if (j0.length() + j1.length() > 2) continue;  // total length <= 3 after joining
                auto s0 = j0.support_set();
                auto s1 = j1.support_set();
                bool disjoint = true;
                for (int a : s0)
                    for (int b : s1)
                        if (a == b) disjoint = false;
                if (!disjoint) continue;
                std::vector<int> u = s0;
                u.insert(u.end(), s1.begin(), s1.end());
                std::sort(u.begin(), u.end());
                Flag iu{p, u};
                bool chain = true;
                for (std::size_t t = 0; t + 1 < u.size(); ++t)
                    if (!p->leq(u[t], u[t + 1])) chain = false;
                if (!chain) continue;
                Flag merged = [&]() -> Flag {
                    try {
                        return flag_join(j0, j1);
                    } catch (const Error&) {
                        return Flag{p, {}};
                    }
                }();
                if (merged.empty()) continue;
                auto join = strat_join(strat_simplex(j0), strat_simplex(j1), s0, s1);
                require(is_strat_isomorphic(join.strat, strat_simplex(merged)),
                        "join " + j0.to_string() + "*" + j1.to_string());
                auto lhs = link_geo(join.strat, iu);
                Product rhs(link_geo(strat_simplex(j0), Flag{p, s0}),
                            link_geo(strat_simplex(j1), Flag{p, s1}));
                require(is_isomorphic(lhs, rhs.complex()),
                        "join-link " + j0.to_string() + "*" + j1.to_string());
            }
        }
    }
    return first_failure.empty();
}

bool criterion4_link_is_hol() {
    first_failure.clear();
    for (const auto& p : posets_up_to_3())
        for (const auto& j : flags_up_to(p, 2)) {
            if (j.empty()) continue;
            StratSet dj = strat_simplex(j);
            for (const auto& i : regular_flags(p, p->size() - 1)) {
                auto cmp = link_to_hol(dj, i, 3);
                require(!cmp.first_non_bijective_level().has_value(),
                        "link~hol " + j.to_string() + " at " + i.to_string());
            }
        }
    return first_failure.empty();
}

std::vector<StratSet> refinement_corpus() {
    auto p = named_chain({"p", "q"});
    auto p3 = named_chain({"p", "q", "r"});
    auto v = std::make_shared<Poset>(std::vector<std::string>{"a", "b", "c"},
                                     std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    std::vector<StratSet> out;
    out.push_back(strat_simplex(Flag{p, {0}}));
    out.push_back(strat_simplex(Flag{p, {0, 1}}));
    out.push_back(strat_simplex(Flag{p, {0, 0}}));        // empty stratum q
    out.push_back(strat_simplex(Flag{p3, {0, 1, 2}}));
    out.push_back(strat_simplex(Flag{p3, {0, 0, 2}}));    // empty middle stratum
    out.push_back(strat_boundary(Flag{p, {0, 1}}));
    out.push_back(strat_boundary(Flag{p3, {0, 1, 2}}));
    out.push_back(strat_horn(Flag{p3, {0, 1, 2}}, 1));
    out.push_back(strat_horn(Flag{p, {0, 0}}, 0));
    out.push_back(trivially_stratified(circle()));
    out.push_back(trivially_stratified(free_right_invertible()));
    out.push_back(trivially_stratified(standard_boundary(2)));
    out.push_back(nerve_identity_strat(p));
    out.push_back(nerve_identity_strat(p3));
    out.push_back(nerve_identity_strat(v));
    out.push_back(spine(Flag{p3, {0, 1, 2}}).strat);
    out.push_back(lstr(standard_boundary(1)));
    out.push_back(lstr(standard_simplex(2)));
    out.push_back(tensor(strat_simplex(Flag{p, {0, 1}}), standard_simplex(1)));
    out.push_back(strat_join(strat_simplex(Flag{p, {0, 0}}), strat_simplex(Flag{p, {1}}), {0}, {1}).strat);
    // disconnected stratum
    {
        SimplicialSetBuilder b;
        b.add_generator(0, "a");
        b.add_generator(0, "b");
        out.push_back(strat_from_labels(b.build(), Poset::singleton("p"), {0, 0}));
    }
    // within-stratum inverse pair, second stratum reachable
    {
        SimplicialSetBuilder b;
        int a = b.add_generator(0, "a");
        int b2 = b.add_generator(0, "b");
        int c = b.add_generator(0, "c");
        b.add_generator(1, "ab", {SimplexRef::nondeg(b2, 0), SimplexRef::nondeg(a, 0)});
        b.add_generator(1, "ba", {SimplexRef::nondeg(a, 0), SimplexRef::nondeg(b2, 0)});
        b.add_generator(1, "bc", {SimplexRef::nondeg(c, 0), SimplexRef::nondeg(b2, 0)});
        out.push_back(strat_from_labels(b.build(), p, {0, 0, 1, -1, -1, -1}));
    }
    return out;
}

bool criterion5_refinement_suite() {
    first_failure.clear();
    auto corpus = refinement_corpus();
    require(corpus.size() >= 20, "corpus size");
    auto p = named_chain({"p", "q"});
    std::vector<StratSet> zs = {strat_simplex(Flag{Poset::singleton("p"), {0}}),
                                strat_simplex(Flag{p, {0, 1}}), lstr(standard_boundary(1))};
    for (std::size_t ci = 0; ci < corpus.size(); ++ci) {
        const auto& x = corpus[ci];
        std::string tag = "corpus[" + std::to_string(ci) + "]";
        auto once = refinement(x);
        auto twice = refinement(once.refined);
        require(twice.refined.poset->same_order_as(*once.refined.poset), tag + " idempotent poset");
        require(twice.refined.labels == once.refined.labels, tag + " idempotent labels");
        require(once.counit.poset_map.is_order_isomorphism() == is_refined(x),
                tag + " counit-iso iff refined");
        if (x.space->generator_count() <= 8) {
            for (const auto& z : zs)
                require(enumerate_strat_maps(z, once.refined).size() ==
                            enumerate_strat_maps(z, x).size(),
                        tag + " coreflection counts");
        }
        if (x.space->generator_count() <= 10) {
            auto direct = refined_poset(x);
            auto via = refined_poset_from_links(x, 1);
            require(via.poset->ids() == direct.poset->ids() &&
                        via.poset->strict_pairs() == direct.poset->strict_pairs(),
                    tag + " rP from links");
        }
    }
    return first_failure.empty();
}

bool criterion6_cartesian_closure() {
    first_failure.clear();
    auto p = named_chain({"p", "q"});
    std::vector<StratSet> fam = {strat_simplex(Flag{p, {0}}), strat_simplex(Flag{p, {0, 1}}),
                                 strat_simplex(Flag{p, {0, 0}})};
    for (const auto& z : fam)
        for (const auto& x : fam)
            for (const auto& y : fam) {
                auto zx = strat_product(z, x);
                auto maps = enumerate_strat_maps(zx.strat, y);
                StratExponential e(y, x, std::max(z.space->dim(), 0));
                auto into = enumerate_strat_maps_into(z, e.levelwise());
                require(maps.size() == into.size(), "adjunction cardinality");
                std::set<std::pair<std::vector<int>, std::vector<int>>> image;
                for (const auto& f : maps) {
                    auto adj = e.adjoint(zx, f);
                    require(image.emplace(adj.poset_map.assignment(), adj.assignment).second,
                            "adjunction injectivity");
                }
            }
    // naturality under precomposition with a vertex inclusion
    {
        auto z = strat_simplex(Flag{p, {0, 1}});
        auto zp = strat_simplex(Flag{p, {0}});
        auto x = strat_simplex(Flag{p, {0, 0}});
        auto y = strat_simplex(Flag{p, {0, 1}});
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
            SimplexRef img = w.space_map.on_generator(0);
            require(lhs.assignment[0] == rhs.assignment[static_cast<std::size_t>(img.gen)],
                    "adjunction naturality (space)");
            require(lhs.poset_map.assignment()[0] ==
                        rhs.poset_map.assignment()[static_cast<std::size_t>(w.poset_map(0))],
                    "adjunction naturality (poset)");
        }
    }
    // pushout-products of boundary generators are monomorphisms
    for (int n = 0; n + 0 <= 3; ++n)
        for (int m = 0; n + m <= 3; ++m) {
            auto gi = make_generator_set("boundaries_refined", nullptr, n).members[static_cast<std::size_t>(n)];
            auto gj = make_generator_set("boundaries_refined", nullptr, m).members[static_cast<std::size_t>(m)];
            auto out = pushout_product(gi, gj);
            require(out.space_map.is_mono(), "pushout-product mono " + std::to_string(n) + "," +
                                                 std::to_string(m));
        }
    // path space vertex contract on five examples
    {
        auto count_expected = [](const StratSet& x, const std::vector<int>& sub) {
            LevelIndex li(x.space, 1);
            int c = 0;
            for (int e = 0; e < li.size(1); ++e) {
                SimplexRef start = x.space->face(li.ref(1, e), 1);
                if (std::find(sub.begin(), sub.end(), start.gen) != sub.end()) ++c;
            }
            return c;
        };
        std::vector<std::pair<StratSet, std::vector<int>>> cases;
        auto xpq = strat_simplex(Flag{p, {0, 1}});
        cases.emplace_back(xpq, std::vector<int>{xpq.space->find_generator("0")});
        cases.emplace_back(xpq, std::vector<int>{});
        auto point = strat_simplex(Flag{p, {0}});
        cases.emplace_back(point, std::vector<int>{0});
        auto c = trivially_stratified(circle());
        cases.emplace_back(c, std::vector<int>{c.space->generators_of_dim(0)[0]});
        auto x3 = strat_simplex(Flag{p, {0, 0, 1}});
        cases.emplace_back(x3, std::vector<int>{x3.space->find_generator("0"),
                                                x3.space->find_generator("1"),
                                                x3.space->find_generator("01")});
        for (auto& [x, sub] : cases) {
            auto ps = path_space(x, sub, 1);
            require(ps.space.level_size(0) == count_expected(x, sub), "path space vertices");
        }
    }
    return first_failure.empty();
}

bool criterion7_generators_probes() {
    first_failure.clear();
    auto cof = make_generator_set("cof_D_global", nullptr, 3);
    for (std::size_t i = 0; i < cof.members.size(); ++i)
        require(is_cofibration(cof.members[i], "D").is_cofibration,
                "cof_D_global[" + std::to_string(i) + "]");
    auto dr = make_generator_set("boundaries_refined", nullptr, 3);
    for (std::size_t i = 0; i < dr.members.size(); ++i)
        require(is_cofibration(dr.members[i], "DR").is_cofibration,
                "boundaries_refined[" + std::to_string(i) + "]");

    std::vector<PosetPtr> nerve_family = {
        Poset::chain(0), Poset::chain(1), Poset::chain(2), Poset::antichain({"a", "b"}),
        std::make_shared<Poset>(std::vector<std::string>{"a", "b", "c"},
                                std::vector<std::pair<int, int>>{{0, 1}, {0, 2}}),
        std::make_shared<Poset>(std::vector<std::string>{"a", "b", "c"},
                                std::vector<std::pair<int, int>>{{0, 2}, {1, 2}})};
    for (const auto& p : nerve_family) {
        auto x = nerve_identity_strat(p);
        require(fibrancy_probe(x, 3, false).pass, "nerve fibrancy admissible");
        require(fibrancy_probe(x, 3, true).pass, "nerve fibrancy admissible+inner");
    }
    auto vc = fibrancy_probe(trivially_stratified(circle()), 2, false);
    require(!vc.pass, "circle fibrancy fails");
    require(!vc.details.at("top").empty() && !vc.details.at("bottom").empty(),
            "circle failure carries a witness square");
    return first_failure.empty();
}

bool criterion8_substrate() {
    first_failure.clear();
    // simplicial identities on levelwise objects
    try {
        mapping_space(standard_boundary(1), circle(), 2).lv.validate();
        ex_truncated(circle(), 2).fam.lv.validate();
        ex_truncated(standard_simplex(1), 2).fam.lv.validate();
        levelwise_of(Product(standard_simplex(1), standard_simplex(1)).complex(), 3).validate();
    } catch (const Error& e) {
        require(false, std::string("identities: ") + e.what());
    }
    // sd -| Ex bijection counts
    std::vector<SSetPtr> as = {standard_simplex(0), standard_simplex(1), standard_boundary(1),
                               standard_simplex(2)};
    std::vector<SSetPtr> xs = {standard_simplex(0), standard_simplex(1), circle()};
    for (const auto& a : as)
        for (const auto& x : xs) {
            auto lhs = enumerate_simplicial_maps(subdivision(a).complex, x).size();
            auto ex = ex_truncated(x, std::max(a->dim(), 0));
            auto rhs = enumerate_maps_into_levelwise(a, ex.fam.lv).size();
            require(lhs == rhs, "sd -| Ex counts");
        }
    require(ex_truncated(standard_simplex(1), 1).fam.lv.level_size(1) == 5, "Ex(D1) level 1");
    // shuffle counts
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            Product q(standard_simplex(m), standard_simplex(n));
            require(q.complex()->count_of_dim(m + n) == binom(m + n, n), "shuffle count");
        }
    // Betti regressions
    require(betti_of(standard_simplex(2), 2, 2) == std::vector<int>{1, 0, 0}, "betti D2");
    require(betti_of(standard_boundary(2), 1, 2) == std::vector<int>{1, 1}, "betti bd D2");
    require(betti_of(circle(), 1, 2) == std::vector<int>{1, 1}, "betti circle");
    return first_failure.empty();
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"link closed form on stratified simplices", criterion1_link_closed_form},
        {"horn-link case law and probe/classification agreement", criterion2_horn_case_law},
        {"stratified join against the flag coproduct and the link bifunctor",
         criterion3_join},
        {"link-to-hol levelwise bijection on simplices", criterion4_link_is_hol},
        {"refinement suite on the pathology corpus", criterion5_refinement_suite},
        {"cartesian closure: adjunction, pushout-products, path spaces",
         criterion6_cartesian_closure},
        {"generator and probe coherence", criterion7_generators_probes},
        {"substrate soundness", criterion8_substrate},
    };
    bool all = true;
    int idx = 0;
    for (auto& [name, fn] : criteria) {
        ++idx;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
            detail = first_failure;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << name << " ("
             << checks << " checks, " << static_cast<int>(secs * 1000) << " ms)";
        if (!ok) line << " -- first failure: " << detail;
        std::cout << line.str() << std::endl;
        checks = 0;
        all = all && ok;
    }
    return all ? 0 : 1;
}
