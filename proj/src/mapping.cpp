#include "strat/mapping.hpp"

#include <algorithm>

#include "strat/standard.hpp"

namespace strat {

int MapFamilyLevelwise::index_of(int level, const SimplicialMap& m) const {
    auto it = index[static_cast<std::size_t>(level)].find(m.assignment());
    if (it == index[static_cast<std::size_t>(level)].end())
        throw Error("map family: element not found at level " + std::to_string(level));
    return it->second;
}

namespace {

MapFamilyLevelwise assemble_family(std::vector<std::vector<SimplicialMap>> elements,
                                   const std::function<SimplicialMap(int, int)>& coface,
                                   const std::function<SimplicialMap(int, int)>& codeg) {
    MapFamilyLevelwise out;
    out.elements = std::move(elements);
    const int bound = static_cast<int>(out.elements.size()) - 1;
    out.index.resize(static_cast<std::size_t>(bound) + 1);
    for (int n = 0; n <= bound; ++n)
        for (int i = 0; i < static_cast<int>(out.elements[static_cast<std::size_t>(n)].size()); ++i)
            out.index[static_cast<std::size_t>(n)].emplace(
                out.elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)].assignment(), i);
    std::vector<int> sizes;
    for (int n = 0; n <= bound; ++n)
        sizes.push_back(static_cast<int>(out.elements[static_cast<std::size_t>(n)].size()));
    out.lv = LevelwiseSimplicialSet(
        sizes,
        [&](int n, int i, int e) {
            return out.index_of(n - 1, compose(out.elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)],
                                               coface(n, i)));
        },
        [&](int n, int i, int e) {
            return out.index_of(n + 1, compose(out.elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)],
                                               codeg(n, i)));
        });
    return out;
}

}  // namespace

std::shared_ptr<Product> cylinder_product(const SSetPtr& a, int k) {
    // The cache holds the factors alive, so keying on the raw address is
    // stable.
    static std::map<std::pair<const SimplicialSet*, int>, std::shared_ptr<Product>> cache;
    auto key = std::make_pair(a.get(), k);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_shared<Product>(a, standard_simplex(k))).first;
    return it->second;
}

MapFamilyLevelwise mapping_space(const SSetPtr& a, const SSetPtr& x, int levels,
                                 const std::vector<std::vector<int>>* vertex_candidates) {
    std::vector<SSetPtr> deltas;
    std::vector<std::shared_ptr<Product>> prods;
    for (int k = 0; k <= levels; ++k) {
        deltas.push_back(standard_simplex(k));
        prods.push_back(cylinder_product(a, k));
    }
    // Vertex candidates transfer along the first projection: a vertex of
    // A x Delta^k is constrained by its A-component.
    auto candidates_for = [&](int k) -> std::vector<std::vector<int>> {
        std::vector<std::vector<int>> out;
        if (!vertex_candidates) return out;
        const SSetPtr& p = prods[static_cast<std::size_t>(k)]->complex();
        out.resize(static_cast<std::size_t>(p->generator_count()));
        for (int v : p->generators_of_dim(0)) {
            SimplexRef av = prods[static_cast<std::size_t>(k)]->pr1()(SimplexRef::nondeg(v, 0));
            out[static_cast<std::size_t>(v)] =
                (*vertex_candidates)[static_cast<std::size_t>(av.gen)];
        }
        return out;
    };
    std::vector<std::vector<SimplicialMap>> elements;
    for (int k = 0; k <= levels; ++k) {
        auto cand = candidates_for(k);
        elements.push_back(enumerate_simplicial_maps(prods[static_cast<std::size_t>(k)]->complex(), x,
                                                     vertex_candidates ? &cand : nullptr));
    }
    auto coface = [&](int n, int i) {
        return prods[static_cast<std::size_t>(n)]->induced(
            prods[static_cast<std::size_t>(n - 1)]->pr1(),
            compose(simplex_map(deltas[static_cast<std::size_t>(n - 1)], deltas[static_cast<std::size_t>(n)],
                                MonotoneMap::coface(n, i)),
                    prods[static_cast<std::size_t>(n - 1)]->pr2()));
    };
    auto codeg = [&](int n, int i) {
        return prods[static_cast<std::size_t>(n)]->induced(
            prods[static_cast<std::size_t>(n + 1)]->pr1(),
            compose(simplex_map(deltas[static_cast<std::size_t>(n + 1)], deltas[static_cast<std::size_t>(n)],
                                MonotoneMap::codegeneracy(n, i)),
                    prods[static_cast<std::size_t>(n + 1)]->pr2()));
    };
    MapFamilyLevelwise out = assemble_family(std::move(elements), coface, codeg);
    out.domains = std::move(prods);
    return out;
}

ExTruncated ex_truncated(const SSetPtr& x, int levels) {
    std::vector<std::vector<SimplicialMap>> elements;
    for (int n = 0; n <= levels; ++n)
        elements.push_back(enumerate_simplicial_maps(sd_simplex(n).complex, x));
    auto coface = [&](int n, int i) { return sd_of_monotone(MonotoneMap::coface(n, i)); };
    auto codeg = [&](int n, int i) { return sd_of_monotone(MonotoneMap::codegeneracy(n, i)); };
    ExTruncated out;
    out.fam = assemble_family(std::move(elements), coface, codeg);
    return out;
}

int ExTruncated::unit_at(const SSetPtr& x, const SimplexRef& s) const {
    int n = s.level();
    const SdSimplex& sd = sd_simplex(n);
    std::vector<SimplexRef> assign;
    for (int g = 0; g < sd.complex->generator_count(); ++g)
        assign.push_back(x->act(s, sd.maxima(g)));
    return fam.index_of(n, SimplicialMap(sd.complex, x, std::move(assign), false));
}

std::vector<std::vector<int>> enumerate_maps_into_levelwise(
    const SSetPtr& a, const LevelwiseSimplicialSet& w,
    const std::vector<std::vector<int>>* vertex_candidates) {
    std::vector<std::vector<int>> found;
    if (a->dim() > w.level_bound())
        throw Error("enumerate_maps_into_levelwise: level bound below source dimension");
    std::vector<int> order = constraint_order(*a);

    // Edge compatibility pruning while the vertices are being placed.
    const int v0 = w.level_size(0);
    std::vector<std::vector<bool>> spans_edge(static_cast<std::size_t>(v0),
                                              std::vector<bool>(static_cast<std::size_t>(v0), false));
    if (w.level_bound() >= 1)
        for (int e = 0; e < w.level_size(1); ++e)
            spans_edge[static_cast<std::size_t>(w.face(1, 1, e))]
                      [static_cast<std::size_t>(w.face(1, 0, e))] = true;
    std::vector<int> posn(static_cast<std::size_t>(a->generator_count()), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        posn[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::vector<std::pair<int, bool>>> earlier_edges(
        static_cast<std::size_t>(a->generator_count()));
    for (int e : a->generators_of_dim(1)) {
        SimplexRef t = SimplexRef::nondeg(e, 1);
        int u = a->vertex(t, 0), v = a->vertex(t, 1);
        if (u == v) continue;
        if (posn[static_cast<std::size_t>(u)] > posn[static_cast<std::size_t>(v)])
            earlier_edges[static_cast<std::size_t>(u)].emplace_back(v, true);
        else earlier_edges[static_cast<std::size_t>(v)].emplace_back(u, false);
    }

    std::vector<int> assign(static_cast<std::size_t>(a->generator_count()), -1);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == order.size()) {
            found.push_back(assign);
            return;
        }
        int g = order[pos];
        int n = a->dim_of(g);
        for (int e = 0; e < w.level_size(n); ++e) {
            bool ok = true;
            if (n == 0) {
                if (vertex_candidates) {
                    const auto& allowed = (*vertex_candidates)[static_cast<std::size_t>(g)];
                    ok = std::find(allowed.begin(), allowed.end(), e) != allowed.end();
                }
                for (auto [other, i_am_start] : earlier_edges[static_cast<std::size_t>(g)]) {
                    if (!ok) break;
                    int o = assign[static_cast<std::size_t>(other)];
                    if (o < 0) continue;
                    ok = i_am_start ? spans_edge[static_cast<std::size_t>(e)][static_cast<std::size_t>(o)]
                                    : spans_edge[static_cast<std::size_t>(o)][static_cast<std::size_t>(e)];
                }
            }
            for (int i = 0; i <= n && ok && n >= 1; ++i) {
                const SimplexRef& f = a->gen(g).faces[static_cast<std::size_t>(i)];
                int expect = w.act(a->dim_of(f.gen), f.deg, assign[static_cast<std::size_t>(f.gen)]);
                if (w.face(n, i, e) != expect) ok = false;
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(g)] = e;
            rec(pos + 1);
        }
        assign[static_cast<std::size_t>(g)] = -1;
    };
    rec(0);
    return found;
}

LevelwiseSimplicialSet ex_of_levelwise(const LevelwiseSimplicialSet& w, int levels) {
    std::vector<std::vector<std::vector<int>>> elements;
    std::vector<std::map<std::vector<int>, int>> index(static_cast<std::size_t>(levels) + 1);
    for (int n = 0; n <= levels; ++n) {
        elements.push_back(enumerate_maps_into_levelwise(sd_simplex(n).complex, w));
        for (int i = 0; i < static_cast<int>(elements.back().size()); ++i)
            index[static_cast<std::size_t>(n)].emplace(elements.back()[static_cast<std::size_t>(i)], i);
    }
    auto precompose = [&](int n_from, const std::vector<int>& elem, const SimplicialMap& m) {
        const SSetPtr& src = m.source();
        std::vector<int> out(static_cast<std::size_t>(src->generator_count()));
        for (int g = 0; g < src->generator_count(); ++g) {
            SimplexRef r = m.on_generator(g);
            out[static_cast<std::size_t>(g)] =
                w.act(sd_simplex(n_from).complex->dim_of(r.gen), r.deg,
                      elem[static_cast<std::size_t>(r.gen)]);
        }
        return out;
    };
    std::vector<int> sizes;
    for (int n = 0; n <= levels; ++n) sizes.push_back(static_cast<int>(elements[static_cast<std::size_t>(n)].size()));
    return LevelwiseSimplicialSet(
        sizes,
        [&](int n, int i, int e) {
            auto v = precompose(n, elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)],
                                sd_of_monotone(MonotoneMap::coface(n, i)));
            return index[static_cast<std::size_t>(n - 1)].at(v);
        },
        [&](int n, int i, int e) {
            auto v = precompose(n, elements[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)],
                                sd_of_monotone(MonotoneMap::codegeneracy(n, i)));
            return index[static_cast<std::size_t>(n + 1)].at(v);
        });
}

LevelwiseSimplicialSet ex_iterated(const SSetPtr& x, int k, int levels) {
    if (k < 1) throw Error("ex_iterated: k must be >= 1");
    LevelwiseSimplicialSet cur = ex_truncated(x, levels).fam.lv;
    for (int i = 1; i < k; ++i) cur = ex_of_levelwise(cur, levels);
    return cur;
}

}  // namespace strat
