#include "strat/modelcheck.hpp"

#include <algorithm>

namespace strat {

namespace {

StratMap lstr_inclusion(const SSetPtr& sub, const SSetPtr& whole) {
    StratSet a = lstr(sub);
    StratSet b = lstr(whole);
    SimplicialMap sm = inclusion_by_names(sub, whole);
    // Poset component: the posetification is functorial; a component maps to
    // the component of any member vertex.
    std::vector<int> pa(static_cast<std::size_t>(a.poset->size()), -1);
    for (int v : sub->generators_of_dim(0)) {
        SimplexRef img = sm(SimplexRef::nondeg(v, 0));
        pa[static_cast<std::size_t>(a.labels[static_cast<std::size_t>(v)])] =
            b.labels[static_cast<std::size_t>(img.gen)];
    }
    for (int e : pa)
        if (e < 0) throw Error("lstr_inclusion: uncovered poset element");
    StratMap out{a, b, sm, PosetMap(a.poset, b.poset, std::move(pa))};
    out.validate();
    return out;
}

}  // namespace

GeneratorSet make_generator_set(const std::string& name, const PosetPtr& target_poset,
                                int dim_max) {
    GeneratorSet out{name, {}};
    if (name == "cof_D_global" || name == "boundaries_refined") {
        for (int n = 0; n <= dim_max; ++n)
            out.members.push_back(lstr_inclusion(standard_boundary(n), standard_simplex(n)));
        if (name == "cof_D_global") {
            // The two poset detectors: empty spaces over 0 -> [0] and over
            // the 2-element antichain -> [1].
            StratSet e0 = empty_strat(Poset::antichain({}));
            StratSet e1 = empty_strat(Poset::chain(0));
            out.members.push_back(StratMap{e0, e1, SimplicialMap(e0.space, e1.space, {}, false),
                                           PosetMap(e0.poset, e1.poset, {})});
            StratSet a2 = empty_strat(Poset::antichain({"0", "1"}));
            StratSet c2 = empty_strat(Poset::chain(1));
            out.members.push_back(StratMap{a2, c2, SimplicialMap(a2.space, c2.space, {}, false),
                                           PosetMap(a2.poset, c2.poset, {0, 1})});
        } else {
            // Boundary of the trivially stratified interval.
            StratSet a = lstr(standard_boundary(1));
            StratSet b = trivially_stratified(standard_simplex(1));
            SimplicialMap sm = inclusion_by_names(a.space, b.space);
            out.members.push_back(
                StratMap{a, b, sm, PosetMap(a.poset, b.poset, std::vector<int>(2, 0))});
        }
        return out;
    }
    if (name == "acof_D_global" || name == "inner_horns") {
        if (!target_poset) throw Error("generator set '" + name + "' needs a target poset");
        for (int n = 1; n <= dim_max; ++n)
            for (const auto& j : all_flags_of_length(target_poset, n))
                for (int k = 0; k <= n; ++k) {
                    HornClass hc = classify_horn(j, k);
                    bool want = name == "acof_D_global" ? hc.admissible : hc.inner;
                    if (want) out.members.push_back(strat_horn_inclusion(j, k));
                }
        return out;
    }
    throw Error("unknown generator set '" + name + "'");
}

CofibrationCheck is_cofibration(const StratMap& f, const std::string& structure) {
    if (structure != "D" && structure != "C" && structure != "DR" && structure != "CR")
        throw Error("is_cofibration: structure must be one of D, C, DR, CR");
    std::string witness;
    if (!f.space_map.is_mono(&witness))
        return CofibrationCheck{false, "space map is not a monomorphism: " + witness};
    if (structure == "D" || structure == "C") return CofibrationCheck{true, ""};

    // Refined structures: the square of refinements must be a pushout of
    // posets. The spaces of that square agree, so only the poset square is
    // checked: P_B must be the pushout of P_A <- rP(A) -> rP(B).
    RefinedPosetResult ra = refined_poset(f.source);
    RefinedPosetResult rb = refined_poset(f.target);
    std::vector<int> induced(static_cast<std::size_t>(ra.poset->size()), -1);
    for (int v : f.source.space->generators_of_dim(0)) {
        SimplexRef img = f.space_map(SimplexRef::nondeg(v, 0));
        induced[static_cast<std::size_t>(ra.component_of[static_cast<std::size_t>(v)])] =
            rb.component_of[static_cast<std::size_t>(img.gen)];
    }
    for (int e : induced)
        if (e < 0) throw Error("is_cofibration: refined poset component not covered");
    PosetMap rmap(ra.poset, rb.poset, std::move(induced));
    PosetPushout po = poset_pushout(ra.stratum_of, rmap);
    // Induced comparison pushout -> P_B; iso <=> square is pushout.
    std::vector<int> cmp(static_cast<std::size_t>(po.poset->size()), -1);
    for (int e = 0; e < f.source.poset->size(); ++e)
        cmp[static_cast<std::size_t>(po.left_leg(e))] = f.poset_map(e);
    for (int e = 0; e < rb.poset->size(); ++e) {
        int want = rb.stratum_of(e);
        int& slot = cmp[static_cast<std::size_t>(po.right_leg(e))];
        if (slot >= 0 && slot != want)
            return CofibrationCheck{false, "refinement square does not commute with the pushout"};
        slot = want;
    }
    for (int e : cmp)
        if (e < 0) return CofibrationCheck{false, "pushout comparison not totally defined"};
    PosetMap comparison(po.poset, f.target.poset, std::move(cmp));
    if (!comparison.is_order_isomorphism())
        return CofibrationCheck{false,
                                "poset square is not a pushout (comparison to the computed pushout "
                                "of posets is not an isomorphism)"};
    return CofibrationCheck{true, ""};
}

namespace {

bool strat_maps_equal(const StratMap& a, const StratMap& b) {
    return a.space_map.assignment() == b.space_map.assignment() &&
           a.poset_map.assignment() == b.poset_map.assignment();
}

/// Search for a diagonal in a lifting square. The left map must be a
/// monomorphism with non-degenerate generator images.
bool has_filler(const LiftingProblem& lp) {
    const StratSet& bb = lp.left->target;
    const StratSet& xx = lp.right->source;
    // Poset component candidates.
    std::vector<std::vector<int>> hs;
    for (const auto& cand : exponential_poset(xx.poset, bb.poset).maps) {
        bool ok = true;
        for (int e = 0; e < lp.left->source.poset->size() && ok; ++e)
            ok = cand[static_cast<std::size_t>(lp.left->poset_map(e))] == lp.top.poset_map(e);
        for (int e = 0; e < bb.poset->size() && ok; ++e)
            ok = lp.right->poset_map(cand[static_cast<std::size_t>(e)]) == lp.bottom.poset_map(e);
        if (ok) hs.push_back(cand);
    }
    if (hs.empty()) return false;

    // Forced space values along the left inclusion.
    std::vector<SimplexRef> forced(static_cast<std::size_t>(bb.space->generator_count()),
                                   SimplexRef{MonotoneMap::identity(0), -1});
    std::vector<bool> is_forced(static_cast<std::size_t>(bb.space->generator_count()), false);
    for (int g = 0; g < lp.left->source.space->generator_count(); ++g) {
        SimplexRef img = lp.left->space_map.on_generator(g);
        if (img.is_degenerate()) throw Error("has_filler: left map must send generators to generators");
        forced[static_cast<std::size_t>(img.gen)] = lp.top.space_map.on_generator(g);
        is_forced[static_cast<std::size_t>(img.gen)] = true;
    }

    const int d = bb.space->dim();
    LevelIndex xi(xx.space, std::max(d, 0));
    for (const auto& h : hs) {
        std::vector<int> order;
        for (int dd = 0; dd <= d; ++dd)
            for (int g : bb.space->generators_of_dim(dd)) order.push_back(g);
        std::vector<SimplexRef> cur(static_cast<std::size_t>(bb.space->generator_count()),
                                    SimplexRef{MonotoneMap::identity(0), -1});
        std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
            if (pos == order.size()) return true;
            int g = order[pos];
            int n = bb.space->dim_of(g);
            auto consistent = [&](const SimplexRef& img) {
                if (img.level() != n) return false;
                for (int i = 0; i <= n && n >= 1; ++i) {
                    const SimplexRef& fc = bb.space->gen(g).faces[static_cast<std::size_t>(i)];
                    if (xx.space->face(img, i) !=
                        xx.space->act(cur[static_cast<std::size_t>(fc.gen)], fc.deg))
                        return false;
                }
                if (n == 0 &&
                    xx.labels[static_cast<std::size_t>(img.gen)] !=
                        h[static_cast<std::size_t>(bb.labels[static_cast<std::size_t>(g)])])
                    return false;
                // lower triangle: f o lift = bottom
                SimplexRef want = lp.bottom.space_map.on_generator(g);
                if (!(lp.right->space_map(img) == want)) return false;
                return true;
            };
            if (is_forced[static_cast<std::size_t>(g)]) {
                const SimplexRef& img = forced[static_cast<std::size_t>(g)];
                if (!consistent(img)) return false;
                cur[static_cast<std::size_t>(g)] = img;
                return rec(pos + 1);
            }
            for (const auto& img : xi.level(n)) {
                if (!consistent(img)) continue;
                cur[static_cast<std::size_t>(g)] = img;
                if (rec(pos + 1)) return true;
            }
            return false;
        };
        if (xx.space->dim() < 0 && !order.empty()) continue;
        if (rec(0)) return true;
    }
    return false;
}

std::string describe_map(const StratMap& m) {
    std::string s = "space[";
    for (int g = 0; g < m.source.space->generator_count(); ++g) {
        if (g) s += ",";
        s += m.source.space->name_of(g) + ":" + m.target.space->name_of(m.space_map.on_generator(g).gen);
    }
    s += "] poset[";
    for (int e = 0; e < m.source.poset->size(); ++e) {
        if (e) s += ",";
        s += m.source.poset->id_of(e) + ":" + m.target.poset->id_of(m.poset_map(e));
    }
    return s + "]";
}

}  // namespace

ProbeVerdict rlp_probe(const StratMap& f, const GeneratorSet& generators, int dim_max) {
    for (std::size_t mi = 0; mi < generators.members.size(); ++mi) {
        const StratMap& i = generators.members[mi];
        if (i.target.space->dim() > dim_max) continue;
        auto tops = enumerate_strat_maps(i.source, f.source);
        auto bottoms = enumerate_strat_maps(i.target, f.target);
        for (const auto& top : tops) {
            StratMap ft = compose_strat(f, top);
            for (const auto& bottom : bottoms) {
                StratMap bi = compose_strat(bottom, i);
                if (!strat_maps_equal(ft, bi)) continue;
                LiftingProblem lp{&i, &f, top, bottom};
                if (!has_filler(lp)) {
                    return ProbeVerdict{
                        false, dim_max,
                        "unsolved lifting problem against generator #" + std::to_string(mi) + " (" +
                            generators.name + ")",
                        {{"generator", std::to_string(mi)},
                         {"generator_target", i.target.space->dim() >= 0
                                                  ? i.target.space->name_of(
                                                        i.target.space->generators_of_dim(
                                                            i.target.space->dim())[0])
                                                  : std::string("empty")},
                         {"top", describe_map(top)},
                         {"bottom", describe_map(bottom)}}};
                }
            }
        }
    }
    return ProbeVerdict{true, dim_max, "", {}};
}

namespace {

StratMap map_to_identity_nerve(const StratSet& x) {
    StratSet target = nerve_identity_strat(x.poset);
    // The stratification as a simplicial map into the nerve.
    std::vector<SimplexRef> assign;
    for (int g = 0; g < x.space->generator_count(); ++g) {
        Flag j = x.flag_of(SimplexRef::nondeg(g, x.space->dim_of(g)));
        Flag supp = j.support();
        // the nerve simplex with these vertex labels: degeneracy onto the
        // regular chain
        std::string nm;
        for (std::size_t t = 0; t < supp.entries.size(); ++t)
            nm += (t ? "." : "") + x.poset->id_of(supp.entries[t]);
        int gen = target.space->find_generator(nm);
        std::vector<int> surj;
        int pos = 0;
        for (int e : j.entries) {
            while (supp.entries[static_cast<std::size_t>(pos)] != e) ++pos;
            surj.push_back(pos);
        }
        assign.push_back(SimplexRef{MonotoneMap(std::move(surj), supp.length()), gen});
    }
    StratMap out{x, target, SimplicialMap(x.space, target.space, std::move(assign)),
                 PosetMap::identity(x.poset)};
    out.validate();
    return out;
}

}  // namespace

ProbeVerdict fibrancy_probe(const StratSet& x, int dim_max, bool include_inner) {
    StratMap f = map_to_identity_nerve(x);
    GeneratorSet gens = make_generator_set("acof_D_global", x.poset, dim_max);
    if (include_inner) {
        GeneratorSet inner = make_generator_set("inner_horns", x.poset, dim_max);
        for (auto& m : inner.members) {
            bool dup = false;
            for (auto& a : gens.members)
                if (a.source.space->generator_count() == m.source.space->generator_count() &&
                    strat_maps_equal(a, m) &&
                    a.source.labels == m.source.labels && a.target.labels == m.target.labels)
                    dup = true;
            if (!dup) gens.members.push_back(m);
        }
        gens.name = "admissible_and_inner";
    }
    return rlp_probe(f, gens, dim_max);
}

AcyclicFibrationCheck acyclic_fibration_check(const StratMap& f, int dim_max) {
    RefinedPosetResult ra = refined_poset(f.source);
    RefinedPosetResult rb = refined_poset(f.target);
    bool rp_iso = false;
    if (ra.poset->size() == rb.poset->size()) {
        std::vector<int> induced(static_cast<std::size_t>(ra.poset->size()), -1);
        bool total = true;
        for (int v : f.source.space->generators_of_dim(0)) {
            SimplexRef img = f.space_map(SimplexRef::nondeg(v, 0));
            induced[static_cast<std::size_t>(ra.component_of[static_cast<std::size_t>(v)])] =
                rb.component_of[static_cast<std::size_t>(img.gen)];
        }
        for (int e : induced)
            if (e < 0) total = false;
        if (total) rp_iso = PosetMap(ra.poset, rb.poset, std::move(induced)).is_order_isomorphism();
    }
    GeneratorSet gens = make_generator_set("boundaries_refined", f.source.poset, dim_max);
    return AcyclicFibrationCheck{rp_iso, rlp_probe(f, gens, dim_max)};
}

StratExponential::StratExponential(const StratSet& y, const StratSet& x, int levels)
    : y_(y), x_(x), q_(exponential_poset(y.poset, x.poset)) {
    elements_.resize(static_cast<std::size_t>(levels) + 1);
    index_.resize(static_cast<std::size_t>(levels) + 1);
    std::vector<std::shared_ptr<Product>> prods;
    for (int k = 0; k <= levels; ++k) prods.push_back(cylinder_product(x.space, k));

    for (int k = 0; k <= levels; ++k) {
        const Product& dom = *prods[static_cast<std::size_t>(k)];
        for (const auto& chain : all_flags_of_length(q_.poset, k)) {
            std::vector<std::vector<int>> cands(
                static_cast<std::size_t>(dom.complex()->generator_count()));
            for (int v : dom.complex()->generators_of_dim(0)) {
                SimplexRef xa = dom.pr1()(SimplexRef::nondeg(v, 0));
                SimplexRef tb = dom.pr2()(SimplexRef::nondeg(v, 0));
                int jpos = std::stoi(standard_simplex(k)->name_of(tb.gen));
                int g = chain.entries[static_cast<std::size_t>(jpos)];
                int want = q_.maps[static_cast<std::size_t>(g)][static_cast<std::size_t>(
                    x.labels[static_cast<std::size_t>(xa.gen)])];
                for (int w : y.space->generators_of_dim(0))
                    if (y.labels[static_cast<std::size_t>(w)] == want)
                        cands[static_cast<std::size_t>(v)].push_back(w);
            }
            for (auto& m : enumerate_simplicial_maps(dom.complex(), y.space, &cands)) {
                index_[static_cast<std::size_t>(k)].emplace(
                    std::make_pair(chain.entries, m.assignment()),
                    static_cast<int>(elements_[static_cast<std::size_t>(k)].size()));
                elements_[static_cast<std::size_t>(k)].push_back(Element{chain.entries, m});
            }
        }
    }
    auto connect = [&](int from_level, int to_level, const MonotoneMap& op, int e) {
        // op : [to] -> [from] on the Delta factor; precompose map and chain.
        const Element& el = elements_[static_cast<std::size_t>(from_level)][static_cast<std::size_t>(e)];
        std::vector<int> chain;
        for (int t = 0; t <= op.source_dim(); ++t)
            chain.push_back(el.chain[static_cast<std::size_t>(op(t))]);
        SimplicialMap conn = prods[static_cast<std::size_t>(from_level)]->induced(
            prods[static_cast<std::size_t>(to_level)]->pr1(),
            compose(simplex_map(standard_simplex(to_level), standard_simplex(from_level), op),
                    prods[static_cast<std::size_t>(to_level)]->pr2()));
        SimplicialMap res = compose(el.map, conn);
        return index_[static_cast<std::size_t>(to_level)].at(std::make_pair(chain, res.assignment()));
    };
    std::vector<int> sizes;
    for (int k = 0; k <= levels; ++k)
        sizes.push_back(static_cast<int>(elements_[static_cast<std::size_t>(k)].size()));
    LevelwiseSimplicialSet space(
        sizes,
        [&](int n, int i, int e) { return connect(n, n - 1, MonotoneMap::coface(n, i), e); },
        [&](int n, int i, int e) { return connect(n, n + 1, MonotoneMap::codegeneracy(n, i), e); });
    std::vector<int> labels;
    for (const auto& el : elements_[0]) labels.push_back(el.chain[0]);
    lv_ = StratLevelwise{std::move(space), q_.poset, std::move(labels)};
}

int StratExponential::index_of(int level, const std::vector<int>& chain,
                               const SimplicialMap& m) const {
    auto it = index_[static_cast<std::size_t>(level)].find(std::make_pair(chain, m.assignment()));
    if (it == index_[static_cast<std::size_t>(level)].end())
        throw Error("StratExponential: element not found");
    return it->second;
}

StratExponential::Adjoint StratExponential::adjoint(const StratProduct& zx,
                                                    const StratMap& f) const {
    const StratSet& z = zx.pr1.target;
    // Poset part: a |-> f_pos(a, -).
    std::vector<int> passign;
    for (int a = 0; a < z.poset->size(); ++a) {
        std::vector<int> vals;
        for (int b = 0; b < x_.poset->size(); ++b) vals.push_back(f.poset_map(zx.pair_elem(a, b)));
        auto it = std::find(q_.maps.begin(), q_.maps.end(), vals);
        if (it == q_.maps.end()) throw Error("adjoint: poset component not found in the exponential");
        passign.push_back(static_cast<int>(it - q_.maps.begin()));
    }
    PosetMap pm(z.poset, q_.poset, passign);
    std::vector<int> assign;
    for (int g = 0; g < z.space->generator_count(); ++g) {
        int d = z.space->dim_of(g);
        std::vector<int> chain;
        for (int t = 0; t <= d; ++t) {
            int v = z.space->vertex(SimplexRef::nondeg(g, d), t);
            chain.push_back(passign[static_cast<std::size_t>(z.labels[static_cast<std::size_t>(v)])]);
        }
        auto dom = cylinder_product(x_.space, d);
        std::vector<SimplexRef> vals;
        for (int h = 0; h < dom->complex()->generator_count(); ++h) {
            int s = dom->complex()->dim_of(h);
            SimplexRef xpart = dom->pr1()(SimplexRef::nondeg(h, s));
            SimplexRef tpart = dom->pr2()(SimplexRef::nondeg(h, s));
            std::vector<int> m;
            for (int t = 0; t <= s; ++t)
                m.push_back(std::stoi(standard_simplex(d)->name_of(
                    standard_simplex(d)->vertex(tpart, t))));
            SimplexRef zpart = z.space->act(SimplexRef::nondeg(g, d), MonotoneMap(std::move(m), d));
            vals.push_back(f.space_map(zx.space->pair(zpart, xpart)));
        }
        SimplicialMap fd(dom->complex(), y_.space, std::move(vals), false);
        assign.push_back(index_of(d, chain, fd));
    }
    return Adjoint{pm, std::move(assign)};
}

std::vector<MapIntoLevelwise> enumerate_strat_maps_into(const StratSet& z,
                                                        const StratLevelwise& w) {
    std::vector<MapIntoLevelwise> out;
    for (const auto& passign : exponential_poset(w.poset, z.poset).maps) {
        PosetMap pm(z.poset, w.poset, passign);
        std::vector<std::vector<int>> cands(static_cast<std::size_t>(z.space->generator_count()));
        for (int v : z.space->generators_of_dim(0)) {
            int want = pm(z.labels[static_cast<std::size_t>(v)]);
            for (int e = 0; e < w.space.level_size(0); ++e)
                if (w.labels[static_cast<std::size_t>(e)] == want)
                    cands[static_cast<std::size_t>(v)].push_back(e);
        }
        for (auto& a : enumerate_maps_into_levelwise(z.space, w.space, &cands))
            out.push_back(MapIntoLevelwise{pm, std::move(a)});
    }
    return out;
}

StratLevelwise path_space(const StratSet& x, const std::vector<int>& subcomplex_gens, int levels) {
    // Validate the subcomplex: closed under faces.
    std::vector<bool> in_sub(static_cast<std::size_t>(x.space->generator_count()), false);
    for (int g : subcomplex_gens) {
        if (g < 0 || g >= x.space->generator_count())
            throw Error("path_space: unknown subcomplex generator");
        in_sub[static_cast<std::size_t>(g)] = true;
    }
    for (int g : subcomplex_gens)
        for (const auto& fc :
             x.space->gen(g).faces)
            if (!in_sub[static_cast<std::size_t>(fc.gen)])
                throw Error("path_space: generator set is not a subcomplex (missing face of '" +
                            x.space->name_of(g) + "')");

    StratSet interval = lstr_simplex(1);
    StratExponential exp(x, interval, levels);
    auto dom0 = cylinder_product(interval.space, 0);  // for orientation only

    // ev_0 membership of an element: restrict the map to {0} x Delta^k.
    int v0 = interval.space->find_generator("0");
    auto starts_in_sub = [&](int k, const StratExponential::Element& el) {
        auto dom = cylinder_product(interval.space, k);
        SimplexRef v0k = interval.space->act(SimplexRef::nondeg(v0, 0), MonotoneMap::constant(k, 0, 0));
        int topk = standard_simplex(k)->generators_of_dim(k)[0];
        SimplexRef cell = dom->pair(v0k, SimplexRef::nondeg(topk, k));
        SimplexRef img = el.map(cell);
        return in_sub[static_cast<std::size_t>(img.gen)];
    };
    (void)dom0;
    std::vector<std::vector<int>> keep(static_cast<std::size_t>(levels) + 1);
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(levels) + 1);
    for (int k = 0; k <= levels; ++k) {
        pos[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(exp.level_size(k)), -1);
        for (int e = 0; e < exp.level_size(k); ++e)
            if (starts_in_sub(k, exp.element(k, e))) {
                pos[static_cast<std::size_t>(k)][static_cast<std::size_t>(e)] =
                    static_cast<int>(keep[static_cast<std::size_t>(k)].size());
                keep[static_cast<std::size_t>(k)].push_back(e);
            }
    }
    std::vector<int> sizes;
    for (int k = 0; k <= levels; ++k) sizes.push_back(static_cast<int>(keep[static_cast<std::size_t>(k)].size()));
    LevelwiseSimplicialSet space(
        sizes,
        [&](int n, int i, int e) {
            int raw = exp.levelwise().space.face(n, i, keep[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]);
            int p = pos[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(raw)];
            if (p < 0) throw Error("path_space: face left the subspace");
            return p;
        },
        [&](int n, int i, int e) {
            int raw = exp.levelwise().space.degeneracy(n, i, keep[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]);
            int p = pos[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(raw)];
            if (p < 0) throw Error("path_space: degeneracy left the subspace");
            return p;
        });
    std::vector<int> labels;
    for (int e : keep[0]) labels.push_back(exp.levelwise().labels[static_cast<std::size_t>(e)]);
    return StratLevelwise{std::move(space), exp.poset().poset, std::move(labels)};
}

StratMap pushout_product(const StratMap& i, const StratMap& j) {
    auto ci = is_cofibration(i, "D");
    auto cj = is_cofibration(j, "D");
    if (!ci.is_cofibration || !cj.is_cofibration)
        throw Error("pushout_product: inputs must be cofibrations (monomorphisms)");
    StratProduct a_bp = strat_product(i.source, j.target);
    StratProduct b_ap = strat_product(i.target, j.source);
    StratProduct a_ap = strat_product(i.source, j.source);
    StratProduct b_bp = strat_product(i.target, j.target);
    StratMap to_abp = strat_product_of_maps(a_ap, a_bp, strat_identity(i.source), j);
    StratMap to_bap = strat_product_of_maps(a_ap, b_ap, i, strat_identity(j.source));
    StratPushout po = strat_pushout(to_abp, to_bap);
    StratMap leg1 = strat_product_of_maps(a_bp, b_bp, i, strat_identity(j.target));
    StratMap leg2 = strat_product_of_maps(b_ap, b_bp, strat_identity(i.target), j);
    StratMap out = po.induced(leg1, leg2);
    std::string w;
    if (!out.space_map.is_mono(&w))
        throw Error("pushout_product: result is not a monomorphism: " + w);
    return out;
}

LayeredVerdict layered_probe(const SSetPtr& x, int dim_bound) {
    if (dim_bound < 2)
        throw Error("layered_probe: witnesses are 2-simplices; dimension bound must be >= 2");
    Posetification p = posetify(*x);
    std::vector<SimplexRef> triangles;
    if (x->dim() >= 2) {
        LevelIndex idx(x, 2);
        for (int t = 0; t < idx.size(2); ++t) triangles.push_back(idx.ref(2, t));
    }
    auto degenerate_edge_at = [&](int vgen) {
        return x->degeneracy(SimplexRef::nondeg(vgen, 0), 0);
    };
    for (int e : x->generators_of_dim(1)) {
        SimplexRef er = SimplexRef::nondeg(e, 1);
        int v0 = x->vertex(er, 0);
        int v1 = x->vertex(er, 1);
        if (p.vertex_assignment[static_cast<std::size_t>(v0)] !=
            p.vertex_assignment[static_cast<std::size_t>(v1)])
            continue;
        bool left = false, right = false;
        for (const auto& t : triangles) {
            if (x->face(t, 2) == er && x->face(t, 1) == degenerate_edge_at(v0)) left = true;
            if (x->face(t, 0) == er && x->face(t, 1) == degenerate_edge_at(v1)) right = true;
            if (left && right) break;
        }
        if (!(left && right)) return LayeredVerdict{false, x->name_of(e)};
    }
    return LayeredVerdict{true, ""};
}

}  // namespace strat
