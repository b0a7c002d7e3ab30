#include "strat/strat_set.hpp"

#include <algorithm>
#include <map>

namespace strat {

Flag StratSet::flag_of(const SimplexRef& s) const {
    Flag f{poset, {}};
    for (int i = 0; i <= s.level(); ++i)
        f.entries.push_back(labels[static_cast<std::size_t>(space->vertex(s, i))]);
    return f;
}

void StratSet::validate() const {
    if (static_cast<int>(labels.size()) != space->generator_count())
        throw Error("StratSet: label table size mismatch");
    for (int v : space->generators_of_dim(0)) {
        int l = labels[static_cast<std::size_t>(v)];
        if (l < 0 || l >= poset->size())
            throw Error("StratSet: vertex '" + space->name_of(v) + "' has no valid label");
    }
    for (int e : space->generators_of_dim(1)) {
        SimplexRef top = SimplexRef::nondeg(e, 1);
        int a = labels[static_cast<std::size_t>(space->vertex(top, 0))];
        int b = labels[static_cast<std::size_t>(space->vertex(top, 1))];
        if (!poset->leq(a, b))
            throw Error("StratSet: labels violate monotonicity on edge '" + space->name_of(e) +
                        "' (" + poset->id_of(a) + " to " + poset->id_of(b) + ")");
    }
}

std::vector<int> StratSet::occupied_strata() const {
    std::vector<int> out;
    for (int v : space->generators_of_dim(0)) {
        int l = labels[static_cast<std::size_t>(v)];
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
    std::sort(out.begin(), out.end());
    return out;
}

StratSet strat_from_labels(SSetPtr space, PosetPtr poset, std::vector<int> labels) {
    StratSet out{std::move(space), std::move(poset), std::move(labels)};
    out.validate();
    return out;
}

StratSet empty_strat(PosetPtr poset) {
    return StratSet{SimplicialSetBuilder().build(), std::move(poset), {}};
}

StratSet trivially_stratified(SSetPtr space) {
    std::vector<int> labels(static_cast<std::size_t>(space->generator_count()), -1);
    for (int v : space->generators_of_dim(0)) labels[static_cast<std::size_t>(v)] = 0;
    return StratSet{std::move(space), Poset::singleton(), std::move(labels)};
}

StratSet nerve_identity_strat(const PosetPtr& p) {
    SSetPtr nv = nerve(p);
    std::vector<int> labels(static_cast<std::size_t>(nv->generator_count()), -1);
    for (int v : nv->generators_of_dim(0)) {
        auto idx = p->index_of(nv->name_of(v));
        if (!idx) throw Error("nerve_identity_strat: vertex name does not match an element");
        labels[static_cast<std::size_t>(v)] = *idx;
    }
    return strat_from_labels(std::move(nv), p, std::move(labels));
}

void StratMap::validate() const {
    for (int v : source.space->generators_of_dim(0)) {
        SimplexRef img = space_map.on_generator(v);
        int lhs = target.labels[static_cast<std::size_t>(img.gen)];
        int rhs = poset_map(source.labels[static_cast<std::size_t>(v)]);
        if (lhs != rhs)
            throw Error("StratMap: square does not commute at vertex '" + source.space->name_of(v) +
                        "'");
    }
}

StratMap strat_identity(const StratSet& x) {
    return StratMap{x, x, SimplicialMap::identity(x.space), PosetMap::identity(x.poset)};
}

StratMap compose_strat(const StratMap& g, const StratMap& f) {
    return StratMap{f.source, g.target, compose(g.space_map, f.space_map),
                    compose(g.poset_map, f.poset_map)};
}

namespace {

std::vector<int> labels_from_flag(const SSetPtr& space, const Flag& j) {
    std::vector<int> labels(static_cast<std::size_t>(space->generator_count()), -1);
    for (int v : space->generators_of_dim(0)) {
        int i = std::stoi(space->name_of(v));  // standard complexes name vertices "0".."n"
        labels[static_cast<std::size_t>(v)] = j.entries[static_cast<std::size_t>(i)];
    }
    return labels;
}

}  // namespace

StratSet strat_simplex(const Flag& j) {
    j.validate();
    if (j.empty()) return empty_strat(j.poset);
    SSetPtr s = standard_simplex(j.length());
    return strat_from_labels(s, j.poset, labels_from_flag(s, j));
}

StratSet strat_boundary(const Flag& j) {
    j.validate();
    if (j.empty()) return empty_strat(j.poset);
    if (j.length() == 0) return empty_strat(j.poset);
    SSetPtr s = standard_boundary(j.length());
    return strat_from_labels(s, j.poset, labels_from_flag(s, j));
}

StratSet strat_horn(const Flag& j, int k) {
    j.validate();
    if (k < 0 || k > j.length()) throw Error("strat_horn: index out of range");
    if (j.length() < 1) throw Error("strat_horn: flag must have length >= 1");
    SSetPtr s = standard_horn(j.length(), k);
    return strat_from_labels(s, j.poset, labels_from_flag(s, j));
}

namespace {

StratMap sub_inclusion(const StratSet& sub, const StratSet& whole) {
    return StratMap{sub, whole, inclusion_by_names(sub.space, whole.space),
                    PosetMap::identity(sub.poset)};
}

}  // namespace

StratMap strat_boundary_inclusion(const Flag& j) {
    return sub_inclusion(strat_boundary(j), strat_simplex(j));
}

StratMap strat_horn_inclusion(const Flag& j, int k) {
    return sub_inclusion(strat_horn(j, k), strat_simplex(j));
}

StratSet lstr_simplex(int n) { return lstr(standard_simplex(n)); }

StratSet lstr_boundary(int n) {
    // lstr(bd Delta^n) lives over the posetification of the boundary: the
    // empty poset for n = 0, the 2-element antichain for n = 1, the chain
    // [n] from n >= 2 on.
    return lstr(standard_boundary(n));
}

StratSet lstr_horn(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw Error("lstr_horn: invalid parameters");
    return lstr(standard_horn(n, k));
}

HornClass classify_horn(const Flag& j, int k) {
    j.validate();
    int n = j.length();
    if (k < 0 || k > n) throw Error("classify_horn: index out of range");
    bool adm = false;
    if (k + 1 <= n && j.entries[static_cast<std::size_t>(k)] == j.entries[static_cast<std::size_t>(k + 1)])
        adm = true;
    if (k - 1 >= 0 && j.entries[static_cast<std::size_t>(k)] == j.entries[static_cast<std::size_t>(k - 1)])
        adm = true;
    return HornClass{adm, 0 < k && k < n};
}

StratSet lstr(const SSetPtr& x) {
    auto p = posetify(*x);
    return StratSet{x, p.poset, p.vertex_assignment};
}

BaseChange base_change(const PosetMap& f, const StratSet& x) {
    const PosetPtr& q = f.source();
    const SSetPtr& u = x.space;
    const int bound = std::max(0, std::max(u->dim(), 0) + std::max(q->size() - 1, 0));
    if (u->dim() < 0) {
        StratSet es = empty_strat(q);
        return BaseChange{es, StratMap{es, x, SimplicialMap(es.space, u, {}, false), f}};
    }
    LevelIndex iu(u, bound);
    // Level n: pairs (simplex of u, flag of Q of length n) matching under f.
    std::vector<std::vector<std::pair<int, std::vector<int>>>> cells(static_cast<std::size_t>(bound) + 1);
    std::vector<std::map<std::pair<int, std::vector<int>>, int>> cell_idx(static_cast<std::size_t>(bound) + 1);
    for (int n = 0; n <= bound; ++n) {
        for (int e = 0; e < iu.size(n); ++e) {
            Flag fx = x.flag_of(iu.ref(n, e));
            for (const auto& c : all_flags_of_length(q, n)) {
                bool ok = true;
                for (int i = 0; i <= n && ok; ++i)
                    ok = f(c.entries[static_cast<std::size_t>(i)]) == fx.entries[static_cast<std::size_t>(i)];
                if (!ok) continue;
                cell_idx[static_cast<std::size_t>(n)].emplace(std::make_pair(e, c.entries),
                                                              static_cast<int>(cells[static_cast<std::size_t>(n)].size()));
                cells[static_cast<std::size_t>(n)].emplace_back(e, c.entries);
            }
        }
    }
    auto apply = [&](int n, int target_level, const MonotoneMap& alpha, int cell) {
        const auto& [e, flag] = cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(cell)];
        SimplexRef r = u->act(iu.ref(n, e), alpha);
        std::vector<int> nf;
        for (int i = 0; i <= alpha.source_dim(); ++i)
            nf.push_back(flag[static_cast<std::size_t>(alpha(i))]);
        return cell_idx[static_cast<std::size_t>(target_level)].at(
            std::make_pair(iu.index(target_level, r), nf));
    };
    std::vector<int> sizes;
    for (int n = 0; n <= bound; ++n) sizes.push_back(static_cast<int>(cells[static_cast<std::size_t>(n)].size()));
    LevelwiseSimplicialSet lv(
        sizes,
        [&](int n, int i, int e) { return apply(n, n - 1, MonotoneMap::coface(n, i), e); },
        [&](int n, int i, int e) { return apply(n, n + 1, MonotoneMap::codegeneracy(n, i), e); });
    std::function<std::string(int, int)> namer = [&](int n, int e) {
        const auto& [cell, flag] = cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)];
        std::string s = u->name_of(iu.ref(n, cell).gen) + "@";
        for (std::size_t i = 0; i < flag.size(); ++i) s += (i ? "," : "") + q->id_of(flag[i]);
        return s;
    };
    auto ex = extract_complex(lv, &namer);

    std::vector<int> labels(static_cast<std::size_t>(ex.complex->generator_count()), -1);
    std::vector<SimplexRef> proj(static_cast<std::size_t>(ex.complex->generator_count()),
                                 SimplexRef{MonotoneMap::identity(0), -1});
    for (int g = 0; g < ex.complex->generator_count(); ++g) {
        auto [n, cell] = ex.cell_of_gen[static_cast<std::size_t>(g)];
        const auto& [e, flag] = cells[static_cast<std::size_t>(n)][static_cast<std::size_t>(cell)];
        if (n == 0) labels[static_cast<std::size_t>(g)] = flag[0];
        proj[static_cast<std::size_t>(g)] = iu.ref(n, e);
    }
    StratSet out = strat_from_labels(ex.complex, q, std::move(labels));
    return BaseChange{out, StratMap{out, x, SimplicialMap(ex.complex, u, std::move(proj)), f}};
}

StratSet pushforward(const PosetMap& f, const StratSet& x) {
    std::vector<int> labels(x.labels.size(), -1);
    for (int v : x.space->generators_of_dim(0))
        labels[static_cast<std::size_t>(v)] = f(x.labels[static_cast<std::size_t>(v)]);
    return strat_from_labels(x.space, f.target(), std::move(labels));
}

SSetPtr stratum(const StratSet& x, int p) {
    std::vector<std::string> one = {x.poset->id_of(p)};
    PosetPtr single = Poset::antichain(one);
    PosetMap incl(single, x.poset, {p});
    return base_change(incl, x).strat.space;
}

StratSet tensor(const StratSet& x, const SSetPtr& k) {
    Product prod(x.space, k);
    std::vector<int> labels(static_cast<std::size_t>(prod.complex()->generator_count()), -1);
    for (int v : prod.complex()->generators_of_dim(0)) {
        SimplexRef xa = prod.pr1()(SimplexRef::nondeg(v, 0));
        labels[static_cast<std::size_t>(v)] = x.labels[static_cast<std::size_t>(xa.gen)];
    }
    return strat_from_labels(prod.complex(), x.poset, std::move(labels));
}

int StratProduct::pair_elem(int a, int b) const {
    return a * pr2.target.poset->size() + b;
}

StratProduct strat_product(const StratSet& x, const StratSet& y) {
    auto space = std::make_shared<Product>(x.space, y.space);
    PosetPtr pq = product_poset(x.poset, y.poset);
    std::vector<int> labels(static_cast<std::size_t>(space->complex()->generator_count()), -1);
    for (int v : space->complex()->generators_of_dim(0)) {
        SimplexRef xa = space->pr1()(SimplexRef::nondeg(v, 0));
        SimplexRef yb = space->pr2()(SimplexRef::nondeg(v, 0));
        labels[static_cast<std::size_t>(v)] = x.labels[static_cast<std::size_t>(xa.gen)] * y.poset->size() +
                                              y.labels[static_cast<std::size_t>(yb.gen)];
    }
    StratSet strat = strat_from_labels(space->complex(), pq, std::move(labels));
    std::vector<int> p1(static_cast<std::size_t>(pq->size())), p2(static_cast<std::size_t>(pq->size()));
    for (int a = 0; a < x.poset->size(); ++a)
        for (int b = 0; b < y.poset->size(); ++b) {
            p1[static_cast<std::size_t>(a * y.poset->size() + b)] = a;
            p2[static_cast<std::size_t>(a * y.poset->size() + b)] = b;
        }
    StratMap pr1{strat, x, space->pr1(), PosetMap(pq, x.poset, std::move(p1))};
    StratMap pr2{strat, y, space->pr2(), PosetMap(pq, y.poset, std::move(p2))};
    return StratProduct{std::move(strat), std::move(space), std::move(pr1), std::move(pr2)};
}

StratMap strat_product_of_maps(const StratProduct& src, const StratProduct& dst, const StratMap& f,
                               const StratMap& g) {
    SimplicialMap sm = product_of_maps(*src.space, *dst.space, f.space_map, g.space_map);
    const PosetPtr& sp = src.strat.poset;
    const PosetPtr& dp = dst.strat.poset;
    int ny_src = src.pr2.target.poset->size();
    int ny_dst = dst.pr2.target.poset->size();
    std::vector<int> pm(static_cast<std::size_t>(sp->size()));
    for (int e = 0; e < sp->size(); ++e) {
        int a = e / ny_src, b = e % ny_src;
        pm[static_cast<std::size_t>(e)] = f.poset_map(a) * ny_dst + g.poset_map(b);
    }
    StratMap out{src.strat, dst.strat, sm, PosetMap(sp, dp, std::move(pm))};
    out.validate();
    return out;
}

StratPushout strat_pushout(const StratMap& f, const StratMap& g) {
    auto space = std::make_shared<Pushout>(f.space_map, g.space_map);
    PosetPushout pp = poset_pushout(f.poset_map, g.poset_map);
    const SSetPtr& c = space->complex();
    std::vector<int> labels(static_cast<std::size_t>(c->generator_count()), -1);
    auto fill = [&](const SimplicialMap& leg, const StratSet& side, const PosetMap& pleg) {
        for (int v : side.space->generators_of_dim(0)) {
            SimplexRef img = leg(SimplexRef::nondeg(v, 0));
            int want = pleg(side.labels[static_cast<std::size_t>(v)]);
            int& slot = labels[static_cast<std::size_t>(img.gen)];
            if (slot >= 0 && slot != want)
                throw Error("strat_pushout: inconsistent labels on the glued space");
            slot = want;
        }
    };
    fill(space->leg_x(), f.target, pp.left_leg);
    fill(space->leg_y(), g.target, pp.right_leg);
    StratSet strat = strat_from_labels(c, pp.poset, std::move(labels));
    StratMap leg_x{f.target, strat, space->leg_x(), pp.left_leg};
    StratMap leg_y{g.target, strat, space->leg_y(), pp.right_leg};
    return StratPushout{std::move(strat), std::move(leg_x), std::move(leg_y), std::move(space)};
}

StratMap StratPushout::induced(const StratMap& p, const StratMap& q) const {
    SimplicialMap sm = space->induced(p.space_map, q.space_map);
    // The poset component: every pushout element is hit by a leg.
    const PosetPtr& pp = strat.poset;
    std::vector<int> pa(static_cast<std::size_t>(pp->size()), -1);
    for (int e = 0; e < leg_x.poset_map.source()->size(); ++e)
        pa[static_cast<std::size_t>(leg_x.poset_map(e))] = p.poset_map(e);
    for (int e = 0; e < leg_y.poset_map.source()->size(); ++e) {
        int slot = pa[static_cast<std::size_t>(leg_y.poset_map(e))];
        if (slot >= 0 && slot != q.poset_map(e))
            throw Error("strat pushout induced: incompatible poset cocone");
        pa[static_cast<std::size_t>(leg_y.poset_map(e))] = q.poset_map(e);
    }
    for (int v : pa)
        if (v < 0) throw Error("strat pushout induced: poset element not covered");
    StratMap out{strat, p.target, sm, PosetMap(pp, p.target.poset, std::move(pa))};
    out.validate();
    return out;
}

Spine spine(const Flag& j) {
    j.validate();
    int n = j.length();
    if (n < 0) throw Error("spine: empty flag");
    SimplicialSetBuilder b;
    std::vector<int> verts;
    for (int i = 0; i <= n; ++i) verts.push_back(b.add_generator(0, std::to_string(i)));
    for (int k = 0; k + 1 <= n; ++k)
        b.add_generator(1, std::to_string(k) + std::to_string(k + 1),
                        {SimplexRef::nondeg(verts[static_cast<std::size_t>(k + 1)], 0),
                         SimplexRef::nondeg(verts[static_cast<std::size_t>(k)], 0)});
    SSetPtr sp = b.build();
    StratSet strat = strat_from_labels(sp, j.poset, labels_from_flag(sp, j));
    StratSet whole = strat_simplex(j);
    std::vector<SimplexRef> incl;
    for (int g = 0; g < sp->generator_count(); ++g) {
        int h = whole.space->find_generator(sp->name_of(g));
        incl.push_back(SimplexRef::nondeg(h, whole.space->dim_of(h)));
    }
    Spine out{strat, StratMap{strat, whole, SimplicialMap(sp, whole.space, std::move(incl)),
                              PosetMap::identity(j.poset)}};
    return out;
}

std::vector<std::vector<int>> label_candidates(const StratSet& a, const StratSet& x,
                                               const PosetMap& g) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(a.space->generator_count()));
    for (int v : a.space->generators_of_dim(0)) {
        int want = g(a.labels[static_cast<std::size_t>(v)]);
        for (int w : x.space->generators_of_dim(0))
            if (x.labels[static_cast<std::size_t>(w)] == want)
                out[static_cast<std::size_t>(v)].push_back(w);
    }
    return out;
}

std::vector<StratMap> enumerate_strat_maps_over(const StratSet& a, const StratSet& x,
                                                const PosetMap& g) {
    auto cands = label_candidates(a, x, g);
    std::vector<StratMap> out;
    for (auto& sm : enumerate_simplicial_maps(a.space, x.space, &cands))
        out.push_back(StratMap{a, x, sm, g});
    return out;
}

std::vector<StratMap> enumerate_strat_maps(const StratSet& a, const StratSet& x) {
    std::vector<StratMap> out;
    auto exp = exponential_poset(x.poset, a.poset);
    for (const auto& assignment : exp.maps) {
        PosetMap g(a.poset, x.poset, assignment);
        auto part = enumerate_strat_maps_over(a, x, g);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool is_strat_isomorphic(const StratSet& a, const StratSet& b) {
    // Try every order isomorphism of posets, then search for a label
    // compatible isomorphism of spaces.
    if (a.poset->size() != b.poset->size()) return false;
    auto exp = exponential_poset(b.poset, a.poset);
    for (const auto& assignment : exp.maps) {
        PosetMap g(a.poset, b.poset, assignment);
        if (!g.is_order_isomorphism()) continue;
        auto cands = label_candidates(a, b, g);
        if (is_isomorphic(a.space, b.space, &cands)) return true;
    }
    return false;
}

}  // namespace strat
