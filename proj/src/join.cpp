#include "strat/join.hpp"

#include <algorithm>
#include <map>

namespace strat {

namespace {

/// Merge two flags with disjoint supports, recording which positions come
/// from the first.
struct MergedFlag {
    std::vector<int> entries;
    std::vector<bool> from_first;
};

MergedFlag merge_flags(const Poset& p, const std::vector<int>& j0, const std::vector<int>& j1) {
    MergedFlag out;
    std::size_t i = 0, k = 0;
    while (i < j0.size() || k < j1.size()) {
        bool take_first;
        if (i == j0.size()) take_first = false;
        else if (k == j1.size()) take_first = true;
        else if (p.leq(j0[i], j1[k])) take_first = true;
        else if (p.leq(j1[k], j0[i])) take_first = false;
        else
            throw Error("strat_join: flags cannot be merged monotonically ('" + p.id_of(j0[i]) +
                        "' vs '" + p.id_of(j1[k]) + "')");
        out.entries.push_back(take_first ? j0[i] : j1[k]);
        out.from_first.push_back(take_first);
        if (take_first) ++i;
        else ++k;
    }
    return out;
}

void check_support(const StratSet& x, const std::vector<int>& range, const char* side) {
    for (int l : x.occupied_strata())
        if (std::find(range.begin(), range.end(), l) == range.end())
            throw Error(std::string("strat_join: ") + side + " factor has a vertex outside its flag range ('" +
                        x.poset->id_of(l) + "')");
}

}  // namespace

StratJoin strat_join(const StratSet& x, const StratSet& y, const std::vector<int>& range_x,
                     const std::vector<int>& range_y) {
    if (x.poset.get() != y.poset.get() && !x.poset->same_order_as(*y.poset))
        throw Error("strat_join: factors over different posets");
    const PosetPtr& p = x.poset;
    for (int a : range_x)
        for (int b : range_y)
            if (a == b) throw Error("strat_join: flag ranges not disjoint at '" + p->id_of(a) + "'");
    {
        std::vector<int> all = range_x;
        all.insert(all.end(), range_y.begin(), range_y.end());
        std::sort(all.begin(), all.end(), [&](int a, int b) { return a != b && p->leq(a, b); });
        Flag i{p, all};
        if (!i.is_regular()) throw Error("strat_join: I = I0 u I1 must be regular");
        i.validate();
    }
    check_support(x, range_x, "left");
    check_support(y, range_y, "right");

    SimplicialSetBuilder b;
    std::vector<int> xmap(static_cast<std::size_t>(x.space->generator_count()), -1);
    std::vector<int> ymap(static_cast<std::size_t>(y.space->generator_count()), -1);
    std::map<std::pair<int, int>, int> pairmap;
    std::vector<int> labels;

    const int dx = x.space->dim(), dy = y.space->dim();
    const int top = std::max({dx, dy, dx + dy + 1, 0});

    // Precomputed merged flags per pair of generators.
    auto merged_of = [&](int gx, int gy) {
        return merge_flags(*p, x.flag_of(SimplexRef::nondeg(gx, x.space->dim_of(gx))).entries,
                           y.flag_of(SimplexRef::nondeg(gy, y.space->dim_of(gy))).entries);
    };
    // Merged position of the i-th first-block (resp. second-block) entry.
    auto block_positions = [](const MergedFlag& m, bool first) {
        std::vector<int> out;
        for (std::size_t l = 0; l < m.entries.size(); ++l)
            if (m.from_first[l] == first) out.push_back(static_cast<int>(l));
        return out;
    };

    for (int d = 0; d <= top; ++d) {
        for (int g : x.space->generators_of_dim(d)) {
            std::vector<SimplexRef> faces;
            for (int i = 0; i <= d && d >= 1; ++i) {
                const SimplexRef& f = x.space->gen(g).faces[static_cast<std::size_t>(i)];
                faces.push_back(SimplexRef{f.deg, xmap[static_cast<std::size_t>(f.gen)]});
            }
            xmap[static_cast<std::size_t>(g)] = b.add_generator(d, x.space->name_of(g) + "<", std::move(faces));
            labels.push_back(d == 0 ? x.labels[static_cast<std::size_t>(g)] : -1);
        }
        for (int g : y.space->generators_of_dim(d)) {
            std::vector<SimplexRef> faces;
            for (int i = 0; i <= d && d >= 1; ++i) {
                const SimplexRef& f = y.space->gen(g).faces[static_cast<std::size_t>(i)];
                faces.push_back(SimplexRef{f.deg, ymap[static_cast<std::size_t>(f.gen)]});
            }
            ymap[static_cast<std::size_t>(g)] = b.add_generator(d, y.space->name_of(g) + ">", std::move(faces));
            labels.push_back(d == 0 ? y.labels[static_cast<std::size_t>(g)] : -1);
        }
        // Join cells of total dimension d = a + b' + 1.
        for (int a = 0; a + 1 <= d && a <= dx; ++a) {
            int bdim = d - a - 1;
            if (bdim > dy) continue;
            for (int gx : x.space->generators_of_dim(a))
                for (int gy : y.space->generators_of_dim(bdim)) {
                    MergedFlag m = merged_of(gx, gy);
                    auto pos0 = block_positions(m, true);
                    auto pos1 = block_positions(m, false);
                    std::vector<SimplexRef> faces;
                    for (int l = 0; l <= d; ++l) {
                        bool first = m.from_first[static_cast<std::size_t>(l)];
                        int block_index =
                            static_cast<int>(std::lower_bound((first ? pos0 : pos1).begin(),
                                                              (first ? pos0 : pos1).end(), l) -
                                             (first ? pos0 : pos1).begin());
                        if (first && a == 0) {
                            faces.push_back(SimplexRef::nondeg(ymap[static_cast<std::size_t>(gy)], bdim));
                            continue;
                        }
                        if (!first && bdim == 0) {
                            faces.push_back(SimplexRef::nondeg(xmap[static_cast<std::size_t>(gx)], a));
                            continue;
                        }
                        // Join of the block face with the untouched factor.
                        SimplexRef fr = first ? x.space->face(SimplexRef::nondeg(gx, a), block_index)
                                              : y.space->face(SimplexRef::nondeg(gy, bdim), block_index);
                        int gxp = first ? fr.gen : gx;
                        int gyp = first ? gy : fr.gen;
                        MergedFlag mt = merged_of(gxp, gyp);
                        auto tpos0 = block_positions(mt, true);
                        auto tpos1 = block_positions(mt, false);
                        std::vector<int> tau;
                        for (int l2 = 0; l2 <= d; ++l2) {
                            if (l2 == l) continue;
                            bool f2 = m.from_first[static_cast<std::size_t>(l2)];
                            int bi = static_cast<int>(std::lower_bound((f2 ? pos0 : pos1).begin(),
                                                                       (f2 ? pos0 : pos1).end(), l2) -
                                                      (f2 ? pos0 : pos1).begin());
                            int image_block;
                            if (f2 == first) {
                                int reduced = bi > block_index ? bi - 1 : bi;
                                image_block = fr.deg(reduced);
                            } else {
                                image_block = bi;
                            }
                            tau.push_back(f2 ? tpos0[static_cast<std::size_t>(image_block)]
                                             : tpos1[static_cast<std::size_t>(image_block)]);
                        }
                        int tdim = static_cast<int>(mt.entries.size()) - 1;
                        faces.push_back(SimplexRef{MonotoneMap(std::move(tau), tdim),
                                                   pairmap.at(std::make_pair(gxp, gyp))});
                    }
                    int id = b.add_generator(d, x.space->name_of(gx) + "*" + y.space->name_of(gy),
                                             std::move(faces));
                    pairmap.emplace(std::make_pair(gx, gy), id);
                    labels.push_back(-1);
                }
        }
    }

    SSetPtr space = b.build();
    StratSet strat = strat_from_labels(space, p, std::move(labels));
    std::vector<SimplexRef> ax, ay;
    for (int g = 0; g < x.space->generator_count(); ++g)
        ax.push_back(SimplexRef::nondeg(xmap[static_cast<std::size_t>(g)], x.space->dim_of(g)));
    for (int g = 0; g < y.space->generator_count(); ++g)
        ay.push_back(SimplexRef::nondeg(ymap[static_cast<std::size_t>(g)], y.space->dim_of(g)));
    StratMap ix{x, strat, SimplicialMap(x.space, space, std::move(ax)), PosetMap::identity(p)};
    StratMap iy{y, strat, SimplicialMap(y.space, space, std::move(ay)), PosetMap::identity(p)};
    return StratJoin{std::move(strat), std::move(ix), std::move(iy)};
}

}  // namespace strat
