#include "strat/links.hpp"

#include <algorithm>
#include <numeric>

namespace strat {

namespace {

std::vector<std::vector<int>> hol_candidates(const StratSet& x, const Flag& i) {
    const SSetPtr& a = standard_simplex(i.length());
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(a->generator_count()));
    for (int v : a->generators_of_dim(0)) {
        int pos = std::stoi(a->name_of(v));
        int want = i.entries[static_cast<std::size_t>(pos)];
        for (int w : x.space->generators_of_dim(0))
            if (x.labels[static_cast<std::size_t>(w)] == want)
                cands[static_cast<std::size_t>(v)].push_back(w);
    }
    return cands;
}

}  // namespace

MapFamilyLevelwise hol(const StratSet& x, const Flag& i, int levels) {
    i.validate();
    if (!i.is_regular()) throw Error("hol: flag must be regular");
    auto cands = hol_candidates(x, i);
    return mapping_space(standard_simplex(i.length()), x.space, levels, &cands);
}

GeometricLink::GeometricLink(const StratSet& x, const Flag& i) : i_{i} {
    i.validate();
    if (!i.is_regular()) throw Error("link_geo: flag must be regular");
    const int d = x.space->dim();
    const int bound = std::max(d, 0);
    lookup_.resize(static_cast<std::size_t>(bound) + 1);
    reps_.resize(static_cast<std::size_t>(bound) + 1);
    refs_.resize(static_cast<std::size_t>(bound) + 1);
    if (d < 0) {
        complex_ = SimplicialSetBuilder().build();
        xindex_ = std::make_unique<LevelIndex>(x.space, 0);
        return;
    }
    xindex_ = std::make_unique<LevelIndex>(x.space, d);
    const LevelIndex& xi = *xindex_;
    const int k = static_cast<int>(i.entries.size());

    // Block lengths of every simplex; -1 marks an unoccupied block (cell set
    // empty).
    std::vector<std::vector<std::vector<int>>> blocks(static_cast<std::size_t>(d) + 1);
    for (int n = 0; n <= d; ++n) {
        blocks[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(xi.size(n)));
        for (int e = 0; e < xi.size(n); ++e) {
            Flag j = x.flag_of(xi.ref(n, e));
            std::vector<int> lens;
            bool ok = true;
            for (int p : i.entries) {
                int cnt = static_cast<int>(std::count(j.entries.begin(), j.entries.end(), p));
                if (cnt == 0) ok = false;
                lens.push_back(cnt - 1);
            }
            blocks[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] = ok ? lens : std::vector<int>{};
        }
    }
    auto occupied = [&](int n, int e) {
        return !blocks[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)].empty() || k == 0;
    };

    // Raw cells per link level: (n, e, tuple of monotone maps into blocks).
    struct Raw {
        std::vector<GeometricLink::Cell> cells;
        std::map<std::tuple<int, int, std::vector<std::vector<int>>>, int> idx;
        // cell ids grouped by the carrying simplex (level n, index e)
        std::map<std::pair<int, int>, std::vector<int>> by_simplex;
    };
    std::vector<Raw> raw(static_cast<std::size_t>(bound) + 1);
    auto flat = [](const std::vector<MonotoneMap>& tuple) {
        std::vector<std::vector<int>> out;
        for (const auto& t : tuple) out.push_back(t.images());
        return out;
    };
    for (int r = 0; r <= bound; ++r) {
        for (int n = 0; n <= d; ++n)
            for (int e = 0; e < xi.size(n); ++e) {
                if (!occupied(n, e)) continue;
                const auto& lens = blocks[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)];
                std::vector<std::vector<MonotoneMap>> per_block;
                for (int b = 0; b < k; ++b) per_block.push_back(all_monotone_maps(r, lens[static_cast<std::size_t>(b)]));
                std::vector<MonotoneMap> tuple;
                std::function<void(int)> rec = [&](int b) {
                    if (b == k) {
                        int cid = static_cast<int>(raw[static_cast<std::size_t>(r)].cells.size());
                        raw[static_cast<std::size_t>(r)].idx.emplace(std::make_tuple(n, e, flat(tuple)), cid);
                        raw[static_cast<std::size_t>(r)].by_simplex[std::make_pair(n, e)].push_back(cid);
                        raw[static_cast<std::size_t>(r)].cells.push_back(Cell{n, e, tuple});
                        return;
                    }
                    for (const auto& t : per_block[static_cast<std::size_t>(b)]) {
                        tuple.push_back(t);
                        rec(b + 1);
                        tuple.pop_back();
                    }
                };
                rec(0);
            }
    }

    // Coend relations over all operators between computed levels.
    std::vector<std::vector<int>> parent(static_cast<std::size_t>(bound) + 1);
    for (int r = 0; r <= bound; ++r) {
        parent[static_cast<std::size_t>(r)].resize(raw[static_cast<std::size_t>(r)].cells.size());
        std::iota(parent[static_cast<std::size_t>(r)].begin(), parent[static_cast<std::size_t>(r)].end(), 0);
    }
    std::function<int(int, int)> find = [&](int r, int a) {
        auto& par = parent[static_cast<std::size_t>(r)];
        while (par[static_cast<std::size_t>(a)] != a) {
            par[static_cast<std::size_t>(a)] = par[static_cast<std::size_t>(par[static_cast<std::size_t>(a)])];
            a = par[static_cast<std::size_t>(a)];
        }
        return a;
    };
    auto unite = [&](int r, int a, int b) {
        a = find(r, a);
        b = find(r, b);
        if (a == b) return;
        parent[static_cast<std::size_t>(r)][static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };

    for (int n = 0; n <= d; ++n)
        for (int m = 0; m <= d; ++m)
            for (const auto& alpha : all_monotone_maps(m, n))
                for (int e = 0; e < xi.size(n); ++e) {
                    if (!occupied(n, e)) continue;
                    SimplexRef rx = x.space->act(xi.ref(n, e), alpha);
                    int e2 = xi.index(m, rx);
                    if (!occupied(m, e2)) continue;
                    // Block components of alpha: positions of p in J' map to
                    // positions of p in J.
                    Flag j = x.flag_of(xi.ref(n, e));
                    Flag j2 = x.flag_of(xi.ref(m, e2));
                    std::vector<MonotoneMap> alpha_blocks;
                    for (int b = 0; b < k; ++b) {
                        int p = i.entries[static_cast<std::size_t>(b)];
                        auto pos_j = j.block(p);
                        auto pos_j2 = j2.block(p);
                        std::vector<int> im;
                        for (int l : pos_j2) {
                            int target = alpha(l);
                            int idx = static_cast<int>(std::lower_bound(pos_j.begin(), pos_j.end(), target) -
                                                       pos_j.begin());
                            im.push_back(idx);
                        }
                        alpha_blocks.emplace_back(std::move(im), static_cast<int>(pos_j.size()) - 1);
                    }
                    for (int r = 0; r <= bound; ++r) {
                        // every cell of (m, e2) is identified with its image over (n, e)
                        auto it = raw[static_cast<std::size_t>(r)].by_simplex.find(std::make_pair(m, e2));
                        if (it == raw[static_cast<std::size_t>(r)].by_simplex.end()) continue;
                        for (int cid : it->second) {
                            const Cell& c = raw[static_cast<std::size_t>(r)].cells[static_cast<std::size_t>(cid)];
                            std::vector<MonotoneMap> image;
                            for (int b = 0; b < k; ++b)
                                image.push_back(compose(alpha_blocks[static_cast<std::size_t>(b)],
                                                        c.tuple[static_cast<std::size_t>(b)]));
                            int to = raw[static_cast<std::size_t>(r)].idx.at(std::make_tuple(n, e, flat(image)));
                            unite(r, cid, to);
                        }
                    }
                }

    // Compress classes, build the levelwise presentation and extract.
    std::vector<std::vector<int>> class_of(static_cast<std::size_t>(bound) + 1);
    std::vector<int> sizes;
    for (int r = 0; r <= bound; ++r) {
        auto& cells = raw[static_cast<std::size_t>(r)].cells;
        class_of[static_cast<std::size_t>(r)].assign(cells.size(), -1);
        int count = 0;
        for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
            int root = find(r, c);
            if (class_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(root)] < 0) {
                class_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(root)] = count++;
                reps_[static_cast<std::size_t>(r)].push_back(cells[static_cast<std::size_t>(root)]);
            }
            class_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                class_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(root)];
        }
        sizes.push_back(count);
        for (const auto& [key, cid] : raw[static_cast<std::size_t>(r)].idx)
            lookup_[static_cast<std::size_t>(r)].emplace(key, class_of[static_cast<std::size_t>(r)][static_cast<std::size_t>(cid)]);
    }
    auto tuple_act = [&](const Cell& c, const MonotoneMap& op) {
        std::vector<MonotoneMap> out;
        for (const auto& t : c.tuple) out.push_back(compose(t, op));
        return out;
    };
    LevelwiseSimplicialSet lv(
        sizes,
        [&](int r, int iface, int cls) {
            const Cell& c = reps_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cls)];
            auto img = tuple_act(c, MonotoneMap::coface(r, iface));
            return lookup_[static_cast<std::size_t>(r - 1)].at(std::make_tuple(c.n, c.x, flat(img)));
        },
        [&](int r, int ideg, int cls) {
            const Cell& c = reps_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cls)];
            auto img = tuple_act(c, MonotoneMap::codegeneracy(r, ideg));
            return lookup_[static_cast<std::size_t>(r + 1)].at(std::make_tuple(c.n, c.x, flat(img)));
        });
    auto ex = extract_complex(lv);
    complex_ = ex.complex;
    for (int r = 0; r <= bound; ++r) refs_[static_cast<std::size_t>(r)] = ex.ref_of[static_cast<std::size_t>(r)];
    class_of_gen_.assign(static_cast<std::size_t>(complex_->generator_count()), -1);
    for (int g = 0; g < complex_->generator_count(); ++g)
        class_of_gen_[static_cast<std::size_t>(g)] = ex.cell_of_gen[static_cast<std::size_t>(g)].second;
}

int GeometricLink::class_of(int r, const Cell& c) const {
    std::vector<std::vector<int>> f;
    for (const auto& t : c.tuple) f.push_back(t.images());
    return lookup_[static_cast<std::size_t>(r)].at(std::make_tuple(c.n, c.x, f));
}

const GeometricLink::Cell& GeometricLink::rep_of_class(int r, int cls) const {
    return reps_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cls)];
}

int GeometricLink::class_count(int r) const {
    if (r < 0 || r >= static_cast<int>(reps_.size())) return 0;
    return static_cast<int>(reps_[static_cast<std::size_t>(r)].size());
}

const SimplexRef& GeometricLink::ref_of_class(int r, int cls) const {
    return refs_[static_cast<std::size_t>(r)][static_cast<std::size_t>(cls)];
}

SSetPtr link_geo(const StratSet& x, const Flag& i) { return GeometricLink(x, i).complex(); }

LinkToHol link_to_hol(const StratSet& x, const Flag& i, int levels) {
    LinkToHol out{GeometricLink(x, i), hol(x, i, levels), {}};
    const SSetPtr& u = x.space;
    const SSetPtr& lc = out.link.complex();
    // tau-hat on each generator of the link, then extension by naturality
    // along degeneracy operators.
    std::vector<int> gen_img(static_cast<std::size_t>(lc->generator_count()), -1);
    for (int g = 0; g < lc->generator_count(); ++g) {
        int r = lc->dim_of(g);
        if (r > levels)
            throw Error("link_to_hol: level bound below the dimension of the link");
        const auto& c = out.link.rep_of_class(r, out.link.class_of_generator(g));
        SimplexRef xr = out.link.simplex_index().ref(c.n, c.x);
        Flag j = x.flag_of(xr);
        const Product& dom = *out.hol.domains[static_cast<std::size_t>(r)];
        const SSetPtr& ia = standard_simplex(i.length());
        const SSetPtr& dr = standard_simplex(r);
        std::vector<SimplexRef> assign;
        for (int pg = 0; pg < dom.complex()->generator_count(); ++pg) {
            int s = dom.complex()->dim_of(pg);
            SimplexRef a = dom.pr1()(SimplexRef::nondeg(pg, s));
            SimplexRef b = dom.pr2()(SimplexRef::nondeg(pg, s));
            std::vector<int> grid;
            for (int t = 0; t <= s; ++t) {
                int lpos = std::stoi(ia->name_of(ia->vertex(a, t)));
                int jpos = std::stoi(dr->name_of(dr->vertex(b, t)));
                int p = i.entries[static_cast<std::size_t>(lpos)];
                auto block = j.block(p);
                grid.push_back(block[static_cast<std::size_t>(
                    c.tuple[static_cast<std::size_t>(lpos)](jpos))]);
            }
            assign.push_back(u->act(xr, MonotoneMap(std::move(grid), c.n)));
        }
        SimplicialMap m(dom.complex(), u, std::move(assign), false);
        gen_img[static_cast<std::size_t>(g)] = out.hol.index_of(r, m);
    }
    out.map.resize(static_cast<std::size_t>(levels) + 1);
    if (lc->dim() >= 0) {
        LevelIndex li(lc, levels);
        for (int r = 0; r <= levels; ++r)
            for (int e = 0; e < li.size(r); ++e) {
                const SimplexRef& s = li.ref(r, e);
                out.map[static_cast<std::size_t>(r)].push_back(
                    out.hol.lv.act(lc->dim_of(s.gen), s.deg, gen_img[static_cast<std::size_t>(s.gen)]));
            }
    }
    return out;
}

std::optional<int> LinkToHol::first_non_bijective_level() const {
    for (int r = 0; r < static_cast<int>(map.size()); ++r) {
        const auto& m = map[static_cast<std::size_t>(r)];
        if (static_cast<int>(m.size()) != hol.lv.level_size(r)) return r;
        std::vector<bool> hit(m.size(), false);
        for (int v : m) {
            if (hit[static_cast<std::size_t>(v)]) return r;
            hit[static_cast<std::size_t>(v)] = true;
        }
    }
    return std::nullopt;
}

std::vector<ExtHolComponent> ext_hol(const StratSet& x, int length, int levels) {
    std::vector<ExtHolComponent> out;
    for (const auto& j : all_flags_of_length(x.poset, length)) {
        Flag jj = j;
        auto cands = [&] {
            const SSetPtr& a = standard_simplex(length);
            std::vector<std::vector<int>> c(static_cast<std::size_t>(a->generator_count()));
            for (int v : a->generators_of_dim(0)) {
                int pos = std::stoi(a->name_of(v));
                for (int w : x.space->generators_of_dim(0))
                    if (x.labels[static_cast<std::size_t>(w)] ==
                        jj.entries[static_cast<std::size_t>(pos)])
                        c[static_cast<std::size_t>(v)].push_back(w);
            }
            return c;
        }();
        out.push_back(ExtHolComponent{
            jj, mapping_space(standard_simplex(length), x.space, levels, &cands)});
    }
    return out;
}

ProbeVerdict diag_equiv_probe(const StratMap& f, int depth, int flag_len, int levels) {
    if (levels < depth + 1)
        throw Error("diag_equiv_probe: level bound too small for requested depth");
    for (int n = 0; n <= flag_len; ++n) {
        auto src = ext_hol(f.source, n, levels);
        auto dst = ext_hol(f.target, n, levels);
        auto dst_index = [&](const Flag& j) -> int {
            for (int t = 0; t < static_cast<int>(dst.size()); ++t)
                if (dst[static_cast<std::size_t>(t)].flag.entries == j.entries) return t;
            throw Error("diag_equiv_probe: missing target flag");
        };
        // pi0 classes on both sides.
        std::vector<Pi0> src_pi0, dst_pi0;
        for (auto& c : src) src_pi0.push_back(pi0_levelwise(c.fam.lv));
        for (auto& c : dst) dst_pi0.push_back(pi0_levelwise(c.fam.lv));
        // Induced map on components via postcomposition of a representative
        // level-0 element.
        std::vector<std::vector<std::pair<int, int>>> hits(dst.size());
        for (std::size_t t = 0; t < dst.size(); ++t)
            hits[t].assign(static_cast<std::size_t>(dst_pi0[t].count), {-1, -1});
        for (int s = 0; s < static_cast<int>(src.size()); ++s) {
            const auto& comp = src[static_cast<std::size_t>(s)];
            Flag fj{f.target.poset, {}};
            for (int e : comp.flag.entries) fj.entries.push_back(f.poset_map(e));
            int t = dst_index(fj);
            std::vector<bool> seen(static_cast<std::size_t>(src_pi0[static_cast<std::size_t>(s)].count), false);
            for (int e = 0; e < comp.fam.lv.level_size(0); ++e) {
                int sc = src_pi0[static_cast<std::size_t>(s)].component[static_cast<std::size_t>(e)];
                if (seen[static_cast<std::size_t>(sc)]) continue;
                seen[static_cast<std::size_t>(sc)] = true;
                SimplicialMap img = compose(f.space_map, comp.fam.elements[0][static_cast<std::size_t>(e)]);
                int te = dst[static_cast<std::size_t>(t)].fam.index_of(0, img);
                int tc = dst_pi0[static_cast<std::size_t>(t)].component[static_cast<std::size_t>(te)];
                auto& slot = hits[static_cast<std::size_t>(t)][static_cast<std::size_t>(tc)];
                if (slot.first >= 0)
                    return ProbeVerdict{false, depth,
                                        "pi0 not injective at flag " + fj.to_string(),
                                        {{"flag", fj.to_string()},
                                         {"invariant", "pi0"},
                                         {"detail", "two source components hit one target component"}}};
                slot = {s, sc};
            }
        }
        for (std::size_t t = 0; t < dst.size(); ++t)
            for (int tc = 0; tc < dst_pi0[t].count; ++tc) {
                auto [s, sc] = hits[t][static_cast<std::size_t>(tc)];
                if (s < 0)
                    return ProbeVerdict{false, depth,
                                        "pi0 not surjective at flag " + dst[t].flag.to_string(),
                                        {{"flag", dst[t].flag.to_string()},
                                         {"invariant", "pi0"},
                                         {"source", "0"},
                                         {"target", "1"}}};
                auto bs = betti_of_component(src[static_cast<std::size_t>(s)].fam.lv,
                                             src_pi0[static_cast<std::size_t>(s)], sc, depth);
                auto bt = betti_of_component(dst[t].fam.lv, dst_pi0[t], tc, depth);
                if (bs != bt) {
                    auto show = [](const std::vector<int>& v) {
                        std::string s2;
                        for (std::size_t q = 0; q < v.size(); ++q) s2 += (q ? "," : "") + std::to_string(v[q]);
                        return s2;
                    };
                    return ProbeVerdict{false, depth,
                                        "betti mismatch at flag " + dst[t].flag.to_string() + ": " +
                                            show(bs) + " vs " + show(bt),
                                        {{"flag", dst[t].flag.to_string()},
                                         {"invariant", "betti"},
                                         {"source", show(bs)},
                                         {"target", show(bt)}}};
                }
            }
    }
    return ProbeVerdict{true, depth, "", {}};
}

RefinedPosetResult refined_poset_from_links(const StratSet& x, int levels) {
    auto h0 = ext_hol(x, 0, levels);
    auto h1 = ext_hol(x, 1, levels);
    // Vertices of the recomputation: one node per pi0 class of each length-0
    // component; relations from pi0 classes of length-1 components.
    std::vector<int> node_label;
    std::vector<std::string> node_name;
    std::vector<std::vector<int>> node_of;  // per component, per pi0 class
    for (auto& c : h0) {
        Pi0 p = pi0_levelwise(c.fam.lv);
        std::vector<int> ids(static_cast<std::size_t>(p.count));
        std::vector<std::string> names(static_cast<std::size_t>(p.count));
        for (int e = 0; e < c.fam.lv.level_size(0); ++e) {
            // The element is a map Delta^0 x Delta^0 -> X; its image vertex
            // provides a deterministic name.
            int cls = p.component[static_cast<std::size_t>(e)];
            std::string nm =
                x.space->name_of(c.fam.elements[0][static_cast<std::size_t>(e)].assignment()[0].gen);
            if (names[static_cast<std::size_t>(cls)].empty() || nm < names[static_cast<std::size_t>(cls)])
                names[static_cast<std::size_t>(cls)] = nm;
        }
        for (int q = 0; q < p.count; ++q) {
            ids[static_cast<std::size_t>(q)] = static_cast<int>(node_label.size());
            node_label.push_back(c.flag.entries.empty() ? -1 : c.flag.entries[0]);
            node_name.push_back(names[static_cast<std::size_t>(q)]);
        }
        node_of.push_back(std::move(ids));
    }
    auto node_of_vertex = [&](int gen) -> int {
        // locate the pi0 class of the stratum component containing a vertex
        for (std::size_t ci = 0; ci < h0.size(); ++ci) {
            const auto& c = h0[ci];
            for (int e = 0; e < c.fam.lv.level_size(0); ++e)
                if (c.fam.elements[0][static_cast<std::size_t>(e)].assignment()[0].gen == gen) {
                    Pi0 p = pi0_levelwise(c.fam.lv);
                    return node_of[ci][static_cast<std::size_t>(p.component[static_cast<std::size_t>(e)])];
                }
        }
        throw Error("refined_poset_from_links: vertex not found in any stratum");
    };
    std::vector<std::pair<int, int>> arcs;
    for (auto& c : h1) {
        for (int e = 0; e < c.fam.lv.level_size(0); ++e) {
            // level-0 element of the length-1 component: a map
            // Delta^1 x Delta^0 -> X; take its edge endpoints.
            const SimplicialMap& m = c.fam.elements[0][static_cast<std::size_t>(e)];
            const Product& dom = *c.fam.domains[0];
            SimplexRef start{MonotoneMap::identity(0), -1}, end{MonotoneMap::identity(0), -1};
            for (int v : dom.complex()->generators_of_dim(0)) {
                SimplexRef a = dom.pr1()(SimplexRef::nondeg(v, 0));
                int pos = std::stoi(standard_simplex(1)->name_of(a.gen));
                if (pos == 0) start = m.on_generator(v);
                else end = m.on_generator(v);
            }
            arcs.emplace_back(node_of_vertex(start.gen), node_of_vertex(end.gen));
        }
    }
    const int count = static_cast<int>(node_label.size());
    std::vector<std::pair<int, int>> edges = arcs;
    // Present the nodes as a stratified vertex set and reuse the core.
    return refined_poset_core(count, edges, node_label, x.poset, node_name);
}

std::optional<std::string> certify_equivalence(const StratMap& f, int max_generators) {
    const StratSet& x = f.source;
    const StratSet& y = f.target;
    if (x.space->generator_count() > max_generators || y.space->generator_count() > max_generators)
        return std::nullopt;

    // Z x Delta^1 with its cylinder end inclusions and the label table for
    // stratum-preserving homotopies into Z.
    struct Cylinder {
        Product prod;
        SimplicialMap end0, end1;
        std::vector<std::vector<int>> cands;
    };
    auto make_cyl = [](const StratSet& z) {
        Product prod(z.space, standard_simplex(1));
        auto end_map = [&](int endpoint) {
            std::vector<SimplexRef> a;
            int v = standard_simplex(1)->find_generator(std::to_string(endpoint));
            for (int g = 0; g < z.space->generator_count(); ++g) {
                int nn = z.space->dim_of(g);
                SimplexRef ir = standard_simplex(1)->act(SimplexRef::nondeg(v, 0),
                                                         MonotoneMap::constant(nn, 0, 0));
                a.push_back(prod.pair(SimplexRef::nondeg(g, nn), ir));
            }
            return SimplicialMap(z.space, prod.complex(), std::move(a), false);
        };
        std::vector<std::vector<int>> cands(
            static_cast<std::size_t>(prod.complex()->generator_count()));
        for (int v : prod.complex()->generators_of_dim(0)) {
            SimplexRef za = prod.pr1()(SimplexRef::nondeg(v, 0));
            int want = z.labels[static_cast<std::size_t>(za.gen)];
            for (int w : z.space->generators_of_dim(0))
                if (z.labels[static_cast<std::size_t>(w)] == want)
                    cands[static_cast<std::size_t>(v)].push_back(w);
        }
        SimplicialMap e0 = end_map(0), e1 = end_map(1);
        return Cylinder{std::move(prod), std::move(e0), std::move(e1), std::move(cands)};
    };
    Cylinder cx = make_cyl(x), cy = make_cyl(y);

    auto homotopic = [&](const StratSet& z, const Cylinder& cyl, const SimplicialMap& from,
                         const SimplicialMap& to) {
        for (auto& h : enumerate_simplicial_maps(cyl.prod.complex(), z.space, &cyl.cands)) {
            if (compose(h, cyl.end0) == from && compose(h, cyl.end1) == to) return true;
            if (compose(h, cyl.end0) == to && compose(h, cyl.end1) == from) return true;
        }
        return false;
    };
    for (auto& g : enumerate_strat_maps(y, x)) {
        SimplicialMap gf = compose(g.space_map, f.space_map);
        SimplicialMap fg = compose(f.space_map, g.space_map);
        if (!homotopic(x, cx, gf, SimplicialMap::identity(x.space))) continue;
        if (homotopic(y, cy, fg, SimplicialMap::identity(y.space)))
            return "stratified homotopy inverse found";
    }
    return std::nullopt;
}

}  // namespace strat
