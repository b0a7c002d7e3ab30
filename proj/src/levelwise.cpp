#include "strat/levelwise.hpp"

#include <algorithm>
#include <numeric>

namespace strat {

LevelwiseSimplicialSet::LevelwiseSimplicialSet(std::vector<int> level_sizes,
                                               std::function<int(int, int, int)> face,
                                               std::function<int(int, int, int)> degeneracy)
    : sizes_(std::move(level_sizes)) {
    const int b = level_bound();
    face_.resize(static_cast<std::size_t>(b) + 1);
    deg_.resize(static_cast<std::size_t>(b) + 1);
    for (int n = 1; n <= b; ++n) {
        face_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            auto& tab = face_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            tab.resize(static_cast<std::size_t>(sizes_[static_cast<std::size_t>(n)]));
            for (int x = 0; x < sizes_[static_cast<std::size_t>(n)]; ++x) {
                int y = face(n, i, x);
                if (y < 0 || y >= sizes_[static_cast<std::size_t>(n - 1)])
                    throw Error("levelwise face out of range");
                tab[static_cast<std::size_t>(x)] = y;
            }
        }
    }
    for (int n = 0; n < b; ++n) {
        deg_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
            auto& tab = deg_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
            tab.resize(static_cast<std::size_t>(sizes_[static_cast<std::size_t>(n)]));
            for (int x = 0; x < sizes_[static_cast<std::size_t>(n)]; ++x) {
                int y = degeneracy(n, i, x);
                if (y < 0 || y >= sizes_[static_cast<std::size_t>(n + 1)])
                    throw Error("levelwise degeneracy out of range");
                tab[static_cast<std::size_t>(x)] = y;
            }
        }
    }
}

bool LevelwiseSimplicialSet::is_degenerate(int n, int x) const {
    if (n == 0) return false;
    for (int i = 0; i < n; ++i)
        if (degeneracy(n - 1, i, face(n, i + 1, x)) == x) return true;
    return false;
}

void LevelwiseSimplicialSet::validate() const {
    const int b = level_bound();
    auto fail = [](const std::string& what) { throw Error("levelwise identities: " + what); };
    for (int n = 2; n <= b; ++n)
        for (int x = 0; x < level_size(n); ++x)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (face(n - 1, i, face(n, j, x)) != face(n - 1, j - 1, face(n, i, x)))
                        fail("d_i d_j at level " + std::to_string(n));
    for (int n = 0; n + 1 <= b; ++n)
        for (int x = 0; x < level_size(n); ++x)
            for (int j = 0; j <= n; ++j) {
                int sx = degeneracy(n, j, x);
                for (int i = 0; i <= n + 1; ++i) {
                    int got = face(n + 1, i, sx);
                    if (i == j || i == j + 1) {
                        if (got != x) fail("d_i s_i identity at level " + std::to_string(n));
                    } else if (n >= 1) {
                        int expect = i < j ? degeneracy(n - 1, j - 1, face(n, i, x))
                                           : degeneracy(n - 1, j, face(n, i - 1, x));
                        if (got != expect) fail("d_i s_j identity at level " + std::to_string(n));
                    }
                }
                if (n + 2 <= b)
                    for (int i = 0; i <= j; ++i)
                        if (degeneracy(n + 1, i, sx) != degeneracy(n + 1, j + 1, degeneracy(n, i, x)))
                            fail("s_i s_j identity at level " + std::to_string(n));
            }
}

int LevelwiseSimplicialSet::act(int n, const MonotoneMap& alpha, int x) const {
    if (alpha.target_dim() != n) throw Error("levelwise act: dimension mismatch");
    auto f = alpha.factor();
    int cur = x;
    int lvl = n;
    auto missing = f.mono.complement_of_image();
    for (auto it = missing.rbegin(); it != missing.rend(); ++it) {
        cur = face(lvl, *it, cur);
        --lvl;
    }
    // epi = product of codegeneracies: sigma_{i} for each duplicated step,
    // applied bottom-up.
    const auto& im = f.epi.images();
    std::vector<int> dup;
    for (std::size_t i = 1; i < im.size(); ++i)
        if (im[i] == im[i - 1]) dup.push_back(im[i]);
    for (auto it = dup.rbegin(); it != dup.rend(); ++it) {
        cur = degeneracy(lvl, *it, cur);
        ++lvl;
    }
    return cur;
}

LevelwiseSimplicialSet levelwise_of(const SSetPtr& x, int bound) {
    LevelIndex idx(x, bound);
    std::vector<int> sizes;
    for (int n = 0; n <= bound; ++n) sizes.push_back(idx.size(n));
    return LevelwiseSimplicialSet(
        std::move(sizes),
        [&](int n, int i, int e) { return idx.index(n - 1, x->face(idx.ref(n, e), i)); },
        [&](int n, int i, int e) { return idx.index(n + 1, x->degeneracy(idx.ref(n, e), i)); });
}

ExtractedComplex extract_complex(const LevelwiseSimplicialSet& lv,
                                 const std::function<std::string(int, int)>* namer) {
    const int b = lv.level_bound();
    ExtractedComplex out;
    out.ref_of.resize(static_cast<std::size_t>(b) + 1);
    SimplicialSetBuilder builder;

    // EZ factorization computed levelwise: strip degeneracies greedily.
    std::vector<std::vector<int>> gen_at(static_cast<std::size_t>(b) + 1);
    for (int n = 0; n <= b; ++n)
        gen_at[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(lv.level_size(n)), -1);

    std::function<SimplexRef(int, int)> normal_form = [&](int n, int x) -> SimplexRef {
        for (int i = 0; i < n; ++i) {
            int y = lv.face(n, i + 1, x);
            if (lv.degeneracy(n - 1, i, y) == x) {
                SimplexRef inner = normal_form(n - 1, y);
                return SimplexRef{compose(inner.deg, MonotoneMap::codegeneracy(n - 1, i)), inner.gen};
            }
        }
        int g = gen_at[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
        if (g < 0) throw Error("extract_complex: non-degenerate cell out of processing order");
        return SimplexRef::nondeg(g, n);
    };

    for (int n = 0; n <= b; ++n) {
        for (int x = 0; x < lv.level_size(n); ++x) {
            if (lv.is_degenerate(n, x)) continue;
            std::vector<SimplexRef> faces;
            for (int i = 0; i <= n && n >= 1; ++i) faces.push_back(normal_form(n - 1, lv.face(n, i, x)));
            std::string name = namer ? (*namer)(n, x)
                                     : "s" + std::to_string(n) + "_" + std::to_string(x);
            int id = builder.add_generator(n, std::move(name), std::move(faces));
            gen_at[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)] = id;
            out.cell_of_gen.emplace_back(n, x);
        }
    }
    out.complex = builder.build();
    for (int n = 0; n <= b; ++n) {
        out.ref_of[static_cast<std::size_t>(n)].reserve(static_cast<std::size_t>(lv.level_size(n)));
        for (int x = 0; x < lv.level_size(n); ++x)
            out.ref_of[static_cast<std::size_t>(n)].push_back(normal_form(n, x));
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
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
        parent[static_cast<std::size_t>(b)] = a;  // keep least index as root
    }
};

Pi0 pi0_from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    UnionFind uf(vertex_count);
    for (auto [a, b] : edges) uf.unite(a, b);
    Pi0 out;
    out.component.assign(static_cast<std::size_t>(vertex_count), -1);
    std::vector<int> root_to_comp(static_cast<std::size_t>(vertex_count), -1);
    for (int v = 0; v < vertex_count; ++v) {
        int r = uf.find(v);
        if (root_to_comp[static_cast<std::size_t>(r)] < 0) root_to_comp[static_cast<std::size_t>(r)] = out.count++;
        out.component[static_cast<std::size_t>(v)] = root_to_comp[static_cast<std::size_t>(r)];
    }
    return out;
}

}  // namespace

Pi0 pi0_levelwise(const LevelwiseSimplicialSet& lv) {
    if (lv.level_bound() < 0) return Pi0{};
    std::vector<std::pair<int, int>> edges;
    if (lv.level_bound() >= 1)
        for (int e = 0; e < lv.level_size(1); ++e)
            edges.emplace_back(lv.face(1, 0, e), lv.face(1, 1, e));
    return pi0_from_edges(lv.level_size(0), edges);
}

Pi0 pi0_of(const SimplicialSet& x) {
    const auto& verts = x.generators_of_dim(0);
    std::vector<int> pos(static_cast<std::size_t>(x.generator_count()), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        pos[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
    std::vector<std::pair<int, int>> edges;
    for (int e : x.generators_of_dim(1)) {
        SimplexRef top = SimplexRef::nondeg(e, 1);
        edges.emplace_back(pos[static_cast<std::size_t>(x.vertex(top, 0))],
                           pos[static_cast<std::size_t>(x.vertex(top, 1))]);
    }
    return pi0_from_edges(static_cast<int>(verts.size()), edges);
}

namespace {

int rank_mod_p(std::vector<std::vector<int>> m, int p) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        int inv = 1;
        int a = ((m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)] % p) + p) % p;
        for (int k = 1; k < p; ++k)
            if (a * k % p == 1) inv = k;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            int factor = ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] % p) + p) % p;
            if (factor == 0) continue;
            for (int cc = c; cc < cols; ++cc)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                    ((m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -
                      factor * inv * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]) %
                         p +
                     p) %
                    p;
        }
        ++rank;
    }
    return rank;
}

std::vector<int> betti_from_basis(const LevelwiseSimplicialSet& lv, int max_degree, int p,
                                  const std::function<bool(int, int)>& in_basis) {
    if (p < 2) throw Error("betti: field characteristic must be a prime >= 2");
    if (lv.level_bound() < max_degree + 1) throw Error("betti: level bound insufficient");
    // Basis of C_k = non-degenerate k-cells (in the chosen subset); boundary
    // drops degenerate faces.
    std::vector<std::vector<int>> basis(static_cast<std::size_t>(max_degree) + 2);
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(max_degree) + 2);
    for (int k = 0; k <= max_degree + 1; ++k) {
        pos[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(lv.level_size(k)), -1);
        for (int x = 0; x < lv.level_size(k); ++x)
            if (!lv.is_degenerate(k, x) && in_basis(k, x)) {
                pos[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] =
                    static_cast<int>(basis[static_cast<std::size_t>(k)].size());
                basis[static_cast<std::size_t>(k)].push_back(x);
            }
    }
    std::vector<int> ranks(static_cast<std::size_t>(max_degree) + 2, 0);  // rank of d_k : C_k -> C_{k-1}
    for (int k = 1; k <= max_degree + 1; ++k) {
        const auto& bk = basis[static_cast<std::size_t>(k)];
        const auto& bk1 = basis[static_cast<std::size_t>(k - 1)];
        std::vector<std::vector<int>> m(bk.size(), std::vector<int>(bk1.size(), 0));
        for (std::size_t r = 0; r < bk.size(); ++r)
            for (int i = 0; i <= k; ++i) {
                int y = lv.face(k, i, bk[r]);
                int c = pos[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(y)];
                if (c < 0) continue;  // degenerate (or outside the component)
                int sign = (p == 2 || i % 2 == 0) ? 1 : p - 1;
                m[r][static_cast<std::size_t>(c)] = (m[r][static_cast<std::size_t>(c)] + sign) % p;
            }
        ranks[static_cast<std::size_t>(k)] = rank_mod_p(std::move(m), p);
    }
    std::vector<int> betti(static_cast<std::size_t>(max_degree) + 1);
    for (int k = 0; k <= max_degree; ++k)
        betti[static_cast<std::size_t>(k)] = static_cast<int>(basis[static_cast<std::size_t>(k)].size()) -
                                             ranks[static_cast<std::size_t>(k)] -
                                             ranks[static_cast<std::size_t>(k + 1)];
    return betti;
}

}  // namespace

std::vector<int> betti_levelwise(const LevelwiseSimplicialSet& lv, int max_degree, int p) {
    return betti_from_basis(lv, max_degree, p, [](int, int) { return true; });
}

std::vector<int> betti_of(const SSetPtr& x, int max_degree, int p) {
    return betti_levelwise(levelwise_of(x, max_degree + 1), max_degree, p);
}

std::vector<int> betti_of_component(const LevelwiseSimplicialSet& lv, const Pi0& pi0,
                                    int component, int max_degree, int p) {
    return betti_from_basis(lv, max_degree, p, [&](int k, int x) {
        int v = x;
        for (int lvl = k; lvl >= 1; --lvl) v = lv.face(lvl, 1, v);
        return pi0.component[static_cast<std::size_t>(v)] == component;
    });
}

}  // namespace strat
