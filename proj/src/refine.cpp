#include "strat/refine.hpp"

#include <algorithm>
#include <numeric>

#include "strat/mapping.hpp"

namespace strat {

RefinedPosetResult refined_poset_core(int vertex_count,
                                      const std::vector<std::pair<int, int>>& edges,
                                      const std::vector<int>& vertex_labels, const PosetPtr& p,
                                      const std::vector<std::string>& vertex_names) {
    // Path components of strata: vertices joined by within-stratum edges.
    std::vector<int> parent(static_cast<std::size_t>(vertex_count));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (auto [u, v] : edges)
        if (vertex_labels[static_cast<std::size_t>(u)] == vertex_labels[static_cast<std::size_t>(v)]) {
            int a = find(u), b = find(v);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::vector<int> comp(static_cast<std::size_t>(vertex_count), -1);
    std::vector<std::string> comp_names;
    std::vector<int> comp_label;
    for (int v = 0; v < vertex_count; ++v) {
        int r = find(v);
        if (comp[static_cast<std::size_t>(r)] < 0) {
            // Deterministic element id: lexicographically least member name.
            std::string least = vertex_names[static_cast<std::size_t>(v)];
            for (int w = v; w < vertex_count; ++w)
                if (find(w) == r && vertex_names[static_cast<std::size_t>(w)] < least)
                    least = vertex_names[static_cast<std::size_t>(w)];
            comp[static_cast<std::size_t>(r)] = static_cast<int>(comp_names.size());
            comp_names.push_back(least);
            comp_label.push_back(vertex_labels[static_cast<std::size_t>(r)]);
        }
        comp[static_cast<std::size_t>(v)] = comp[static_cast<std::size_t>(r)];
    }
    const int k = static_cast<int>(comp_names.size());

    // Reachability where cross-stratum edges only point forwards.
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(k),
                                         std::vector<bool>(static_cast<std::size_t>(k), false));
    for (int c = 0; c < k; ++c) reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] = true;
    for (auto [u, v] : edges)
        reach[static_cast<std::size_t>(comp[static_cast<std::size_t>(u)])]
             [static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = true;
    for (int m = 0; m < k; ++m)
        for (int i = 0; i < k; ++i)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)])
                for (int j = 0; j < k; ++j)
                    if (reach[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)])
                        reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                reach[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                throw Error("refined_poset: antisymmetry failure between components '" +
                            comp_names[static_cast<std::size_t>(a)] + "' and '" +
                            comp_names[static_cast<std::size_t>(b)] +
                            "' (witness cycle through distinct strata components)");

    // Deterministic element order by component name.
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return comp_names[static_cast<std::size_t>(a)] < comp_names[static_cast<std::size_t>(b)];
    });
    std::vector<int> rank(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rank[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::string> ids(static_cast<std::size_t>(k));
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < k; ++i) ids[static_cast<std::size_t>(i)] = comp_names[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                rel.emplace_back(rank[static_cast<std::size_t>(a)], rank[static_cast<std::size_t>(b)]);
    PosetPtr rp = std::make_shared<Poset>(std::move(ids), rel);

    RefinedPosetResult out{rp, std::vector<int>(static_cast<std::size_t>(vertex_count)),
                           PosetMap(rp, p, [&] {
                               std::vector<int> s(static_cast<std::size_t>(k));
                               for (int c = 0; c < k; ++c)
                                   s[static_cast<std::size_t>(rank[static_cast<std::size_t>(c)])] =
                                       comp_label[static_cast<std::size_t>(c)];
                               return s;
                           }())};
    for (int v = 0; v < vertex_count; ++v)
        out.component_of[static_cast<std::size_t>(v)] = rank[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])];
    return out;
}

namespace {

struct VertexData {
    int count;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> labels;
    std::vector<std::string> names;
    std::vector<int> vertex_of_gen;  // generator -> dense vertex index
};

VertexData vertex_data(const StratSet& x) {
    VertexData d;
    const auto& verts = x.space->generators_of_dim(0);
    d.count = static_cast<int>(verts.size());
    d.vertex_of_gen.assign(static_cast<std::size_t>(x.space->generator_count()), -1);
    for (int i = 0; i < d.count; ++i) {
        int g = verts[static_cast<std::size_t>(i)];
        d.vertex_of_gen[static_cast<std::size_t>(g)] = i;
        d.labels.push_back(x.labels[static_cast<std::size_t>(g)]);
        d.names.push_back(x.space->name_of(g));
    }
    for (int e : x.space->generators_of_dim(1)) {
        SimplexRef top = SimplexRef::nondeg(e, 1);
        d.edges.emplace_back(d.vertex_of_gen[static_cast<std::size_t>(x.space->vertex(top, 0))],
                             d.vertex_of_gen[static_cast<std::size_t>(x.space->vertex(top, 1))]);
    }
    return d;
}

}  // namespace

RefinedPosetResult refined_poset(const StratSet& x) {
    VertexData d = vertex_data(x);
    RefinedPosetResult core =
        refined_poset_core(d.count, d.edges, d.labels, x.poset, d.names);
    // Re-index component_of by generator id.
    std::vector<int> by_gen(static_cast<std::size_t>(x.space->generator_count()), -1);
    for (int g = 0; g < x.space->generator_count(); ++g)
        if (d.vertex_of_gen[static_cast<std::size_t>(g)] >= 0)
            by_gen[static_cast<std::size_t>(g)] =
                core.component_of[static_cast<std::size_t>(d.vertex_of_gen[static_cast<std::size_t>(g)])];
    core.component_of = std::move(by_gen);
    return core;
}

Refinement refinement(const StratSet& x) {
    RefinedPosetResult rp = refined_poset(x);
    StratSet refined = strat_from_labels(x.space, rp.poset, rp.component_of);
    StratMap counit{refined, x, SimplicialMap::identity(x.space), rp.stratum_of};
    counit.validate();
    return Refinement{std::move(refined), std::move(counit)};
}

bool is_refined(const StratSet& x) {
    RefinedPosetResult rp = refined_poset(x);
    return rp.stratum_of.is_order_isomorphism();
}

StratLevelwise stratified_ex(const StratSet& x, int levels) {
    ExTruncated ex = ex_truncated(x.space, levels);
    // An element f : sd Delta^n -> uX survives when some flag c of P has
    // label(f(U)) = c(max U) for every subset U of [n].
    std::vector<std::vector<int>> keep(static_cast<std::size_t>(levels) + 1);
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(levels) + 1);
    for (int n = 0; n <= levels; ++n) {
        const SdSimplex& sd = sd_simplex(n);
        pos[static_cast<std::size_t>(n)].assign(
            static_cast<std::size_t>(ex.fam.lv.level_size(n)), -1);
        for (int e = 0; e < ex.fam.lv.level_size(n); ++e) {
            const SimplicialMap& f = ex.fam.elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)];
            std::vector<int> c(static_cast<std::size_t>(n) + 1, -1);
            bool ok = true;
            for (int g = 0; g < sd.complex->generator_count() && ok; ++g) {
                if (sd.complex->dim_of(g) != 0) continue;
                int mask = sd.chain_of_gen[static_cast<std::size_t>(g)][0];
                int mx = 0;
                for (int v = 0; mask >> v; ++v)
                    if (mask & (1 << v)) mx = v;
                int label = x.labels[static_cast<std::size_t>(f.on_generator(g).gen)];
                if (c[static_cast<std::size_t>(mx)] < 0) c[static_cast<std::size_t>(mx)] = label;
                else if (c[static_cast<std::size_t>(mx)] != label) ok = false;
            }
            for (int t = 0; ok && t + 1 <= n; ++t)
                ok = x.poset->leq(c[static_cast<std::size_t>(t)], c[static_cast<std::size_t>(t + 1)]);
            if (!ok) continue;
            pos[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] =
                static_cast<int>(keep[static_cast<std::size_t>(n)].size());
            keep[static_cast<std::size_t>(n)].push_back(e);
        }
    }
    std::vector<int> sizes;
    for (int n = 0; n <= levels; ++n)
        sizes.push_back(static_cast<int>(keep[static_cast<std::size_t>(n)].size()));
    LevelwiseSimplicialSet space(
        sizes,
        [&](int n, int i, int e) {
            int raw = ex.fam.lv.face(n, i, keep[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]);
            int q = pos[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(raw)];
            if (q < 0) throw Error("stratified_ex: face left the pullback");
            return q;
        },
        [&](int n, int i, int e) {
            int raw = ex.fam.lv.degeneracy(n, i, keep[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]);
            int q = pos[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(raw)];
            if (q < 0) throw Error("stratified_ex: degeneracy left the pullback");
            return q;
        });
    std::vector<int> labels;
    for (int e : keep[0])
        labels.push_back(x.labels[static_cast<std::size_t>(
            ex.fam.elements[0][static_cast<std::size_t>(e)].on_generator(0).gen)]);
    return StratLevelwise{std::move(space), x.poset, std::move(labels)};
}

RefinedPosetResult refined_poset_levelwise(const StratLevelwise& x) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < x.space.level_size(1); ++e)
        edges.emplace_back(x.space.face(1, 1, e), x.space.face(1, 0, e));
    std::vector<std::string> names;
    for (int v = 0; v < x.space.level_size(0); ++v) {
        std::string s = std::to_string(v);
        names.push_back(std::string(6 - std::min<std::size_t>(6, s.size()), '0') + s);
    }
    return refined_poset_core(x.space.level_size(0), edges, x.labels, x.poset, names);
}

}  // namespace strat
