#include "strat/colimits.hpp"

#include <algorithm>
#include <numeric>

namespace strat {

namespace {

struct UF {
    std::vector<int> parent;
    explicit UF(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
    }
};

}  // namespace

Product::Product(SSetPtr x, SSetPtr y) : x_(std::move(x)), y_(std::move(y)) {
    const int bound = std::max(0, std::max(x_->dim(), 0) + std::max(y_->dim(), 0));
    if (x_->dim() < 0 || y_->dim() < 0) {
        // Empty factor: empty product.
        complex_ = SimplicialSetBuilder().build();
        pr1_ = std::make_unique<SimplicialMap>(complex_, x_, std::vector<SimplexRef>{}, false);
        pr2_ = std::make_unique<SimplicialMap>(complex_, y_, std::vector<SimplexRef>{}, false);
        pair_of_.resize(static_cast<std::size_t>(bound) + 1);
        return;
    }
    LevelIndex ix(x_, bound), iy(y_, bound);
    std::vector<int> sizes;
    for (int n = 0; n <= bound; ++n) sizes.push_back(ix.size(n) * iy.size(n));
    auto split = [&](int n, int e) { return std::pair<int, int>{e / iy.size(n), e % iy.size(n)}; };
    auto join = [&](int n, int a, int b) { return a * iy.size(n) + b; };
    LevelwiseSimplicialSet lv(
        sizes,
        [&](int n, int i, int e) {
            auto [a, b] = split(n, e);
            return join(n - 1, ix.index(n - 1, x_->face(ix.ref(n, a), i)),
                        iy.index(n - 1, y_->face(iy.ref(n, b), i)));
        },
        [&](int n, int i, int e) {
            auto [a, b] = split(n, e);
            return join(n + 1, ix.index(n + 1, x_->degeneracy(ix.ref(n, a), i)),
                        iy.index(n + 1, y_->degeneracy(iy.ref(n, b), i)));
        });
    std::function<std::string(int, int)> namer = [&](int n, int e) {
        auto [a, b] = split(n, e);
        const SimplexRef& ra = ix.ref(n, a);
        const SimplexRef& rb = iy.ref(n, b);
        return "(" + x_->name_of(ra.gen) + "|" + y_->name_of(rb.gen) + ")#" + std::to_string(e);
    };
    auto ex = extract_complex(lv, &namer);
    complex_ = ex.complex;

    std::vector<SimplexRef> a1, a2;
    for (auto [n, e] : ex.cell_of_gen) {
        auto [a, b] = split(n, e);
        a1.push_back(ix.ref(n, a));
        a2.push_back(iy.ref(n, b));
    }
    pr1_ = std::make_unique<SimplicialMap>(complex_, x_, std::move(a1));
    pr2_ = std::make_unique<SimplicialMap>(complex_, y_, std::move(a2));
    pair_of_.resize(static_cast<std::size_t>(bound) + 1);
    for (int n = 0; n <= bound; ++n)
        for (int e = 0; e < static_cast<int>(sizes[static_cast<std::size_t>(n)]); ++e) {
            auto [a, b] = split(n, e);
            pair_of_[static_cast<std::size_t>(n)].emplace(
                std::make_pair(ix.ref(n, a), iy.ref(n, b)),
                ex.ref_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)]);
        }
}

SimplexRef Product::pair(const SimplexRef& a, const SimplexRef& b) const {
    if (a.level() != b.level()) throw Error("Product::pair: level mismatch");
    int n = a.level();
    if (n < static_cast<int>(pair_of_.size())) {
        auto it = pair_of_[static_cast<std::size_t>(n)].find(std::make_pair(a, b));
        if (it == pair_of_[static_cast<std::size_t>(n)].end()) throw Error("Product::pair: unknown pair");
        return it->second;
    }
    // Beyond the table the pair is degenerate along a shared index; peel it.
    for (int i = 0; i < n; ++i) {
        SimplexRef da = x_->face(a, i + 1);
        SimplexRef db = y_->face(b, i + 1);
        if (x_->degeneracy(da, i) == a && y_->degeneracy(db, i) == b)
            return complex_->degeneracy(pair(da, db), i);
    }
    throw Error("Product::pair: non-degenerate pair beyond the table bound");
}

SimplicialMap Product::induced(const SimplicialMap& f, const SimplicialMap& g) const {
    std::vector<SimplexRef> a;
    const SSetPtr& z = f.source();
    for (int gen = 0; gen < z->generator_count(); ++gen)
        a.push_back(pair(f.on_generator(gen), g.on_generator(gen)));
    return SimplicialMap(z, complex_, std::move(a), false);
}

SimplicialMap product_of_maps(const Product& src, const Product& dst, const SimplicialMap& f,
                              const SimplicialMap& g) {
    return dst.induced(compose(f, src.pr1()), compose(g, src.pr2()));
}

Pushout::Pushout(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.source().get() != g.source().get())
        throw Error("pushout: the two maps must share their source");
    SSetPtr a = f.source(), x = f.target(), y = g.target();
    const int bound = std::max({x->dim(), y->dim(), 0});
    LevelIndex ia(a, bound);
    LevelIndex ix(x, bound), iy(y, bound);

    // Levelwise set pushout: classes of X_n ⊔ Y_n under f(s) ~ g(s).
    std::vector<UF> uf;
    std::vector<int> offset(static_cast<std::size_t>(bound) + 1);
    for (int n = 0; n <= bound; ++n) {
        offset[static_cast<std::size_t>(n)] = ix.size(n);
        uf.emplace_back(ix.size(n) + iy.size(n));
        if (a->dim() >= 0)
            for (int s = 0; s < ia.size(n); ++s) {
                const SimplexRef& r = ia.ref(n, s);
                uf[static_cast<std::size_t>(n)].unite(ix.index(n, f(r)), offset[static_cast<std::size_t>(n)] + iy.index(n, g(r)));
            }
    }
    // Compress classes to 0..k-1 per level, keeping least-raw-index order.
    std::vector<std::vector<int>> class_of(static_cast<std::size_t>(bound) + 1);
    std::vector<std::vector<int>> rep(static_cast<std::size_t>(bound) + 1);
    for (int n = 0; n <= bound; ++n) {
        int total = ix.size(n) + iy.size(n);
        class_of[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(total), -1);
        for (int e = 0; e < total; ++e) {
            int r = uf[static_cast<std::size_t>(n)].find(e);
            if (class_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] < 0) {
                class_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] =
                    static_cast<int>(rep[static_cast<std::size_t>(n)].size());
                rep[static_cast<std::size_t>(n)].push_back(r);
            }
            class_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(e)] =
                class_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
        }
    }
    auto face_raw = [&](int n, int i, int e) {
        if (e < offset[static_cast<std::size_t>(n)]) return ix.index(n - 1, x->face(ix.ref(n, e), i));
        return offset[static_cast<std::size_t>(n - 1)] +
               iy.index(n - 1, y->face(iy.ref(n, e - offset[static_cast<std::size_t>(n)]), i));
    };
    auto deg_raw = [&](int n, int i, int e) {
        if (e < offset[static_cast<std::size_t>(n)]) return ix.index(n + 1, x->degeneracy(ix.ref(n, e), i));
        return offset[static_cast<std::size_t>(n + 1)] +
               iy.index(n + 1, y->degeneracy(iy.ref(n, e - offset[static_cast<std::size_t>(n)]), i));
    };
    std::vector<int> sizes;
    for (int n = 0; n <= bound; ++n) sizes.push_back(static_cast<int>(rep[static_cast<std::size_t>(n)].size()));
    LevelwiseSimplicialSet lv(
        sizes,
        [&](int n, int i, int c) {
            int e = rep[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
            return class_of[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(face_raw(n, i, e))];
        },
        [&](int n, int i, int c) {
            int e = rep[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
            return class_of[static_cast<std::size_t>(n + 1)][static_cast<std::size_t>(deg_raw(n, i, e))];
        });
    std::function<std::string(int, int)> namer = [&](int n, int c) {
        int e = rep[static_cast<std::size_t>(n)][static_cast<std::size_t>(c)];
        std::string base = e < offset[static_cast<std::size_t>(n)]
                               ? x->name_of(ix.ref(n, e).gen)
                               : y->name_of(iy.ref(n, e - offset[static_cast<std::size_t>(n)]).gen) + "'";
        return base + "~" + std::to_string(n) + "." + std::to_string(c);
    };
    auto ex = extract_complex(lv, &namer);
    complex_ = ex.complex;
    std::vector<SimplexRef> lx, ly;
    for (int gx = 0; gx < x->generator_count(); ++gx) {
        int n = x->dim_of(gx);
        int cls = class_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(ix.index(n, SimplexRef::nondeg(gx, n)))];
        lx.push_back(ex.ref_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(cls)]);
    }
    for (int gy = 0; gy < y->generator_count(); ++gy) {
        int n = y->dim_of(gy);
        int cls = class_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(
            offset[static_cast<std::size_t>(n)] + iy.index(n, SimplexRef::nondeg(gy, n)))];
        ly.push_back(ex.ref_of[static_cast<std::size_t>(n)][static_cast<std::size_t>(cls)]);
    }
    leg_x_ = std::make_unique<SimplicialMap>(x, complex_, std::move(lx));
    leg_y_ = std::make_unique<SimplicialMap>(y, complex_, std::move(ly));
}

SimplicialMap Pushout::induced(const SimplicialMap& p, const SimplicialMap& q) const {
    // Each generator of the pushout is hit by a generator of X or Y through a
    // leg; trace one preimage and push it through the cocone.
    const SSetPtr& target = p.target();
    std::vector<SimplexRef> assign(static_cast<std::size_t>(complex_->generator_count()),
                                   SimplexRef{MonotoneMap::identity(0), -1});
    std::vector<bool> have(static_cast<std::size_t>(complex_->generator_count()), false);
    auto scan = [&](const SimplicialMap& leg, const SimplicialMap& cocone) {
        const SSetPtr& side = leg.source();
        LevelIndex idx(side, std::max(side->dim(), 0));
        for (int n = 0; n <= side->dim(); ++n)
            for (int e = 0; e < idx.size(n); ++e) {
                SimplexRef img = leg(idx.ref(n, e));
                if (img.is_degenerate()) continue;
                if (have[static_cast<std::size_t>(img.gen)]) continue;
                have[static_cast<std::size_t>(img.gen)] = true;
                assign[static_cast<std::size_t>(img.gen)] = cocone(idx.ref(n, e));
            }
    };
    scan(*leg_x_, p);
    scan(*leg_y_, q);
    for (bool h : have)
        if (!h) throw Error("pushout induced map: generator not covered by the legs");
    return SimplicialMap(complex_, target, std::move(assign));
}

QuotientToPoint collapse_to_point(const SimplicialMap& c) {
    SimplicialSetBuilder pt;
    pt.add_generator(0, "*");
    SSetPtr point = pt.build();
    std::vector<SimplexRef> to_point;
    for (int g = 0; g < c.source()->generator_count(); ++g) {
        int n = c.source()->dim_of(g);
        to_point.push_back(SimplexRef{MonotoneMap::constant(n, 0, 0), 0});
    }
    SimplicialMap collapse(c.source(), point, std::move(to_point), false);
    Pushout po(c, collapse);
    return QuotientToPoint{po.complex(), po.leg_x()};
}

}  // namespace strat
