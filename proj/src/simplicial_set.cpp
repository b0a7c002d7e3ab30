#include "strat/simplicial_set.hpp"

#include <algorithm>
#include <map>

namespace strat {

namespace {
const std::vector<int> kEmpty;
}

const std::vector<int>& SimplicialSet::generators_of_dim(int d) const {
    if (d < 0 || d >= static_cast<int>(by_dim_.size())) return kEmpty;
    return by_dim_[static_cast<std::size_t>(d)];
}

int SimplicialSet::find_generator(const std::string& name) const {
    for (int i = 0; i < generator_count(); ++i)
        if (gens_[static_cast<std::size_t>(i)].name == name) return i;
    return -1;
}

SimplexRef SimplicialSet::act(const SimplexRef& s, const MonotoneMap& alpha) const {
    if (alpha.target_dim() != s.level()) throw Error("act: dimension mismatch");
    // Reduce to evaluating the generator along deg o alpha, peeling the
    // injective part through stored face assignments.
    MonotoneMap beta = compose(s.deg, alpha);
    int g = s.gen;
    for (;;) {
        auto f = beta.factor();
        if (f.mono.is_identity()) return SimplexRef{f.epi, g};
        // Apply the top missing coface first; lower indices stay valid.
        int j = f.mono.complement_of_image().back();
        const SimplexRef& dj = gens_[static_cast<std::size_t>(g)].faces[static_cast<std::size_t>(j)];
        // mono factors as delta_j o mono' with mono' : [r] -> [dim-1].
        std::vector<int> im;
        im.reserve(f.mono.images().size());
        for (int v : f.mono.images()) im.push_back(v > j ? v - 1 : v);
        MonotoneMap mono_rest(std::move(im), f.mono.target_dim() - 1);
        beta = compose(dj.deg, compose(mono_rest, f.epi));
        g = dj.gen;
    }
}

SimplexRef SimplicialSet::face(const SimplexRef& s, int i) const {
    return act(s, MonotoneMap::coface(s.level(), i));
}

SimplexRef SimplicialSet::degeneracy(const SimplexRef& s, int i) const {
    return act(s, MonotoneMap::codegeneracy(s.level(), i));
}

int SimplicialSet::vertex(const SimplexRef& s, int i) const {
    SimplexRef v = act(s, MonotoneMap(std::vector<int>{i}, s.level()));
    return v.gen;
}

int SimplicialSetBuilder::add_generator(int dim, std::string name, std::vector<SimplexRef> faces) {
    if (dim < 0) throw Error("add_generator: negative dimension");
    if (dim >= 1 && static_cast<int>(faces.size()) != dim + 1)
        throw Error("add_generator: generator '" + name + "' needs " + std::to_string(dim + 1) +
                    " faces");
    if (dim == 0 && !faces.empty()) throw Error("add_generator: vertex with faces");
    int id = static_cast<int>(s_.gens_.size());
    for (const auto& f : faces) {
        if (f.level() != dim - 1) throw Error("add_generator: face level mismatch in '" + name + "'");
        if (f.gen < 0 || f.gen >= id) throw Error("add_generator: face references unknown generator");
    }
    s_.gens_.push_back(SimplicialSet::Generator{dim, std::move(name), std::move(faces)});
    if (dim >= static_cast<int>(s_.by_dim_.size())) s_.by_dim_.resize(static_cast<std::size_t>(dim) + 1);
    s_.by_dim_[static_cast<std::size_t>(dim)].push_back(id);
    s_.dim_ = std::max(s_.dim_, dim);
    return id;
}

SSetPtr SimplicialSetBuilder::build() {
    auto out = std::make_shared<SimplicialSet>(std::move(s_));
    s_ = SimplicialSet{};
    for (int g = 0; g < out->generator_count(); ++g) {
        int n = out->dim_of(g);
        if (n < 2) continue;
        SimplexRef top = SimplexRef::nondeg(g, n);
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i) {
                SimplexRef a = out->face(out->face(top, j), i);
                SimplexRef b = out->face(out->face(top, i), j - 1);
                if (a != b)
                    throw Error("simplicial identity d_" + std::to_string(i) + " d_" +
                                std::to_string(j) + " fails on generator '" + out->name_of(g) + "'");
            }
    }
    return out;
}

LevelIndex::LevelIndex(SSetPtr x, int bound) : x_(std::move(x)), bound_(bound) {
    refs_.resize(static_cast<std::size_t>(bound_) + 1);
    idx_.resize(static_cast<std::size_t>(bound_) + 1);
    for (int n = 0; n <= bound_; ++n) {
        auto& lvl = refs_[static_cast<std::size_t>(n)];
        for (int m = 0; m <= n; ++m) {
            auto surjections = all_surjections(n, m);
            for (int g : x_->generators_of_dim(m))
                for (const auto& s : surjections) lvl.push_back(SimplexRef{s, g});
        }
        std::sort(lvl.begin(), lvl.end());
        for (int i = 0; i < static_cast<int>(lvl.size()); ++i)
            idx_[static_cast<std::size_t>(n)].emplace(lvl[static_cast<std::size_t>(i)], i);
    }
}

int LevelIndex::index(int n, const SimplexRef& r) const {
    auto it = idx_[static_cast<std::size_t>(n)].find(r);
    if (it == idx_[static_cast<std::size_t>(n)].end()) throw Error("LevelIndex: unknown simplex");
    return it->second;
}

SimplicialMap::SimplicialMap(SSetPtr source, SSetPtr target, std::vector<SimplexRef> assignment,
                             bool validate)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
    if (static_cast<int>(assignment_.size()) != source_->generator_count())
        throw Error("SimplicialMap: assignment size mismatch");
    for (int g = 0; g < source_->generator_count(); ++g)
        if (assignment_[static_cast<std::size_t>(g)].level() != source_->dim_of(g))
            throw Error("SimplicialMap: image level mismatch on '" + source_->name_of(g) + "'");
    if (!validate) return;
    for (int g = 0; g < source_->generator_count(); ++g) {
        int n = source_->dim_of(g);
        for (int i = 0; i <= n && n >= 1; ++i) {
            SimplexRef expect = (*this)(source_->gen(g).faces[static_cast<std::size_t>(i)]);
            SimplexRef got = target_->face(assignment_[static_cast<std::size_t>(g)], i);
            if (expect != got)
                throw Error("SimplicialMap: does not commute with d_" + std::to_string(i) +
                            " on '" + source_->name_of(g) + "'");
        }
    }
}

SimplicialMap SimplicialMap::identity(SSetPtr x) {
    std::vector<SimplexRef> a;
    a.reserve(static_cast<std::size_t>(x->generator_count()));
    for (int g = 0; g < x->generator_count(); ++g) a.push_back(SimplexRef::nondeg(g, x->dim_of(g)));
    SSetPtr src = x;
    return SimplicialMap(std::move(src), std::move(x), std::move(a), false);
}

bool SimplicialMap::is_mono(std::string* witness) const {
    int d = source_->dim();
    if (d < 0) return true;
    LevelIndex idx(source_, d);
    for (int n = 0; n <= d; ++n) {
        std::unordered_map<SimplexRef, SimplexRef, SimplexRefHash> seen;
        for (int i = 0; i < idx.size(n); ++i) {
            const SimplexRef& s = idx.ref(n, i);
            SimplexRef img = (*this)(s);
            auto [it, fresh] = seen.emplace(img, s);
            if (!fresh) {
                if (witness)
                    *witness = "level " + std::to_string(n) + ": '" + source_->name_of(it->second.gen) +
                               "' and '" + source_->name_of(s.gen) + "' collide";
                return false;
            }
        }
    }
    return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    std::vector<SimplexRef> a;
    a.reserve(f.assignment().size());
    for (const auto& r : f.assignment()) a.push_back(g(r));
    return SimplicialMap(f.source(), g.target(), std::move(a), false);
}

Posetification posetify(const SimplicialSet& x) {
    std::vector<std::string> node_ids;
    const auto& verts = x.generators_of_dim(0);
    for (int v : verts) node_ids.push_back(x.name_of(v));
    std::vector<int> vert_pos(static_cast<std::size_t>(x.generator_count()), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        vert_pos[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;

    std::vector<std::pair<int, int>> arcs;
    for (int e : x.generators_of_dim(1)) {
        SimplexRef top = SimplexRef::nondeg(e, 1);
        int from = x.vertex(top, 0);  // 1st face d_1 is the 0-th vertex
        int to = x.vertex(top, 1);
        arcs.emplace_back(vert_pos[static_cast<std::size_t>(from)], vert_pos[static_cast<std::size_t>(to)]);
    }
    auto q = poset_quotient_of_preorder(node_ids, arcs);
    Posetification out;
    out.poset = q.poset;
    out.vertex_assignment.assign(static_cast<std::size_t>(x.generator_count()), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        out.vertex_assignment[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] =
            q.component_of[static_cast<std::size_t>(i)];
    return out;
}

/// Every generator comes after its faces, and a generator is placed as soon
/// as its faces are available (highest dimension first), so constraints fire
/// as early as possible.
std::vector<int> constraint_order(const SimplicialSet& a) {
    const int gc = a.generator_count();
    std::vector<bool> placed(static_cast<std::size_t>(gc), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(gc));
    while (static_cast<int>(order.size()) < gc) {
        int best = -1;
        for (int g = 0; g < gc; ++g) {
            if (placed[static_cast<std::size_t>(g)]) continue;
            bool ready = true;
            for (const auto& f : a.gen(g).faces)
                if (!placed[static_cast<std::size_t>(f.gen)]) ready = false;
            if (!ready) continue;
            if (best < 0 || a.dim_of(g) > a.dim_of(best)) best = g;
        }
        placed[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
    }
    return order;
}

namespace {

struct MapSearch {
    const SSetPtr& src;
    const SSetPtr& dst;
    const std::vector<std::vector<int>>* vertex_candidates;
    std::vector<int> order;  // constraint order over generators
    std::vector<SimplexRef> dst_vertices;  // level-0 refs of the target
    // Candidates at dimension n >= 1, bucketed by their vertex tuples.
    std::vector<std::map<std::vector<int>, std::vector<SimplexRef>>> by_tuple;
    std::vector<std::vector<int>> src_vertices;  // per generator, its vertex ids
    std::vector<SimplexRef> current;
    std::vector<SimplicialMap> found;
    bool iso_mode = false;
    std::vector<std::vector<bool>> used_by_dim;  // iso mode: target generator usage
    // Edge pruning: source edges to earlier vertices, target edge relation.
    std::vector<std::vector<std::pair<int, bool>>> earlier_edges;  // (other vertex, I-am-start)
    std::vector<std::vector<bool>> dst_edge;

    MapSearch(const SSetPtr& s, const SSetPtr& d, const std::vector<std::vector<int>>* vc)
        : src(s), dst(d), vertex_candidates(vc) {
        order = constraint_order(*s);
        int top = std::max(s->dim(), 0);
        LevelIndex idx(d, top);
        for (const auto& r : idx.level(0)) dst_vertices.push_back(r);
        by_tuple.resize(static_cast<std::size_t>(top) + 1);
        for (int n = 1; n <= top; ++n)
            for (const auto& r : idx.level(n)) {
                std::vector<int> tuple;
                for (int t = 0; t <= n; ++t) tuple.push_back(d->vertex(r, t));
                by_tuple[static_cast<std::size_t>(n)][std::move(tuple)].push_back(r);
            }
        src_vertices.resize(static_cast<std::size_t>(s->generator_count()));
        for (int g = 0; g < s->generator_count(); ++g) {
            int n = s->dim_of(g);
            for (int t = 0; t <= n; ++t)
                src_vertices[static_cast<std::size_t>(g)].push_back(
                    s->vertex(SimplexRef::nondeg(g, n), t));
        }
        current.assign(static_cast<std::size_t>(s->generator_count()),
                       SimplexRef{MonotoneMap::identity(0), -1});

        // A source edge u -> v forces the images of u and v to span an edge
        // of the target; checking this while vertices are being placed cuts
        // the grid-shaped searches down to size.
        const int gc = d->generator_count();
        dst_edge.assign(static_cast<std::size_t>(gc), std::vector<bool>(static_cast<std::size_t>(gc), false));
        for (int w : d->generators_of_dim(0)) dst_edge[static_cast<std::size_t>(w)][static_cast<std::size_t>(w)] = true;
        for (int e : d->generators_of_dim(1)) {
            SimplexRef t = SimplexRef::nondeg(e, 1);
            dst_edge[static_cast<std::size_t>(d->vertex(t, 0))][static_cast<std::size_t>(d->vertex(t, 1))] = true;
        }
        std::vector<int> pos(static_cast<std::size_t>(s->generator_count()), 0);
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        earlier_edges.assign(static_cast<std::size_t>(s->generator_count()), {});
        for (int e : s->generators_of_dim(1)) {
            SimplexRef t = SimplexRef::nondeg(e, 1);
            int u = s->vertex(t, 0), v = s->vertex(t, 1);
            if (u == v) continue;
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)])
                earlier_edges[static_cast<std::size_t>(u)].emplace_back(v, true);
            else earlier_edges[static_cast<std::size_t>(v)].emplace_back(u, false);
        }
    }

    bool vertex_ok(int g, const SimplexRef& img) {
        if (vertex_candidates) {
            const auto& allowed = (*vertex_candidates)[static_cast<std::size_t>(g)];
            if (std::find(allowed.begin(), allowed.end(), img.gen) == allowed.end()) return false;
        }
        for (auto [other, i_am_start] : earlier_edges[static_cast<std::size_t>(g)]) {
            int o = current[static_cast<std::size_t>(other)].gen;
            if (o < 0) continue;
            bool ok = i_am_start ? dst_edge[static_cast<std::size_t>(img.gen)][static_cast<std::size_t>(o)]
                                 : dst_edge[static_cast<std::size_t>(o)][static_cast<std::size_t>(img.gen)];
            if (!ok) return false;
        }
        return true;
    }

    bool faces_ok(int g, const SimplexRef& img) {
        int n = src->dim_of(g);
        for (int i = 0; i <= n; ++i) {
            const SimplexRef& f = src->gen(g).faces[static_cast<std::size_t>(i)];
            SimplexRef expect = dst->act(current[static_cast<std::size_t>(f.gen)], f.deg);
            if (dst->face(img, i) != expect) return false;
        }
        return true;
    }

    bool search(std::size_t pos, bool stop_at_first) {
        if (pos == order.size()) {
            found.emplace_back(src, dst, current, false);
            return true;
        }
        int g = order[pos];
        int n = src->dim_of(g);
        auto try_img = [&](const SimplexRef& img) {
            if (iso_mode) {
                if (img.is_degenerate()) return false;
                if (used_by_dim[static_cast<std::size_t>(n)][static_cast<std::size_t>(img.gen)])
                    return false;
            }
            if (n == 0 ? !vertex_ok(g, img) : !faces_ok(g, img)) return false;
            current[static_cast<std::size_t>(g)] = img;
            if (iso_mode) used_by_dim[static_cast<std::size_t>(n)][static_cast<std::size_t>(img.gen)] = true;
            bool hit = search(pos + 1, stop_at_first);
            if (iso_mode) used_by_dim[static_cast<std::size_t>(n)][static_cast<std::size_t>(img.gen)] = false;
            return hit;
        };
        if (n == 0) {
            for (const auto& img : dst_vertices)
                if (try_img(img) && stop_at_first) return true;
            return false;
        }
        std::vector<int> wanted;
        wanted.reserve(src_vertices[static_cast<std::size_t>(g)].size());
        for (int v : src_vertices[static_cast<std::size_t>(g)])
            wanted.push_back(current[static_cast<std::size_t>(v)].gen);
        auto it = by_tuple[static_cast<std::size_t>(n)].find(wanted);
        if (it == by_tuple[static_cast<std::size_t>(n)].end()) return false;
        for (const auto& img : it->second)
            if (try_img(img) && stop_at_first) return true;
        return false;
    }
};

}  // namespace

std::vector<SimplicialMap> enumerate_simplicial_maps(
    const SSetPtr& source, const SSetPtr& target,
    const std::vector<std::vector<int>>* vertex_candidates) {
    if (source->dim() < 0) return {SimplicialMap(source, target, {}, false)};
    if (target->dim() < 0) return {};
    MapSearch s(source, target, vertex_candidates);
    s.search(0, false);
    return std::move(s.found);
}

bool is_isomorphic(const SSetPtr& a, const SSetPtr& b,
                   const std::vector<std::vector<int>>* vertex_candidates) {
    int top = std::max(a->dim(), b->dim());
    for (int d = 0; d <= top; ++d)
        if (a->count_of_dim(d) != b->count_of_dim(d)) return false;
    if (a->dim() < 0) return true;
    MapSearch s(a, b, vertex_candidates);
    s.iso_mode = true;
    s.used_by_dim.resize(static_cast<std::size_t>(a->dim()) + 1);
    for (int d = 0; d <= a->dim(); ++d)
        s.used_by_dim[static_cast<std::size_t>(d)].assign(
            static_cast<std::size_t>(b->generator_count()), false);
    return s.search(0, true);
}

}  // namespace strat
