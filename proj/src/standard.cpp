#include "strat/standard.hpp"

#include <algorithm>
#include <map>

namespace strat {

namespace {

std::string tuple_name(const std::vector<int>& verts) {
    std::string s;
    for (int v : verts) {
        if (!s.empty()) s += v > 9 ? "." : "";
        s += std::to_string(v);
    }
    return s;
}

/// Shared skeleton construction: generators are the given strictly
/// increasing vertex tuples, faces drop one entry.
SSetPtr complex_from_tuples(std::vector<std::vector<int>> tuples) {
    std::sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    SimplicialSetBuilder b;
    std::map<std::vector<int>, int> id_of;
    for (const auto& t : tuples) {
        int dim = static_cast<int>(t.size()) - 1;
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= dim && dim >= 1; ++i) {
            std::vector<int> f = t;
            f.erase(f.begin() + i);
            faces.push_back(SimplexRef::nondeg(id_of.at(f), dim - 1));
        }
        id_of[t] = b.add_generator(dim, tuple_name(t), std::move(faces));
    }
    return b.build();
}

std::vector<std::vector<int>> faces_of_simplex(int n, bool include_top, int skip_facet) {
    std::vector<std::vector<int>> tuples;
    for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
        std::vector<int> t;
        for (int v = 0; v <= n; ++v)
            if (mask & (1 << v)) t.push_back(v);
        int dim = static_cast<int>(t.size()) - 1;
        if (dim == n && !include_top) continue;
        if (skip_facet >= 0 && dim == n - 1 &&
            std::find(t.begin(), t.end(), skip_facet) == t.end())
            continue;
        tuples.push_back(std::move(t));
    }
    return tuples;
}

}  // namespace

SSetPtr standard_simplex(int n) {
    if (n < 0) throw Error("standard_simplex: negative dimension");
    static std::map<int, SSetPtr> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, complex_from_tuples(faces_of_simplex(n, true, -1))).first;
    return it->second;
}

SSetPtr standard_boundary(int n) {
    if (n < 0) throw Error("standard_boundary: negative dimension");
    return complex_from_tuples(faces_of_simplex(n, false, -1));
}

SSetPtr standard_horn(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw Error("standard_horn: invalid parameters");
    return complex_from_tuples(faces_of_simplex(n, false, k));
}

SimplicialMap inclusion_by_names(const SSetPtr& sub, const SSetPtr& whole) {
    std::vector<SimplexRef> a;
    for (int g = 0; g < sub->generator_count(); ++g) {
        int h = whole->find_generator(sub->name_of(g));
        if (h < 0) throw Error("inclusion_by_names: no generator named '" + sub->name_of(g) + "'");
        a.push_back(SimplexRef::nondeg(h, whole->dim_of(h)));
    }
    return SimplicialMap(sub, whole, std::move(a));
}

SSetPtr nerve(const PosetPtr& p) {
    SimplicialSetBuilder b;
    std::map<std::vector<int>, int> id_of;
    auto flags = regular_flags(p, p->size() - 1 >= 0 ? p->size() - 1 : 0);
    for (const auto& fl : flags) {
        int dim = fl.length();
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= dim && dim >= 1; ++i) {
            std::vector<int> f = fl.entries;
            f.erase(f.begin() + i);
            faces.push_back(SimplexRef::nondeg(id_of.at(f), dim - 1));
        }
        std::string name;
        for (std::size_t i = 0; i < fl.entries.size(); ++i)
            name += (i ? "." : "") + p->id_of(fl.entries[i]);
        id_of[fl.entries] = b.add_generator(dim, std::move(name), std::move(faces));
    }
    return b.build();
}

SSetPtr empty_sset() { return SimplicialSetBuilder().build(); }

SimplicialMap simplex_map(const SSetPtr& dm, const SSetPtr& dn, const MonotoneMap& alpha) {
    if (dm->dim() != alpha.source_dim() || dn->dim() != alpha.target_dim())
        throw Error("simplex_map: dimensions do not match the monotone map");
    int top = dn->find_generator(tuple_name([&] {
        std::vector<int> all;
        for (int i = 0; i <= dn->dim(); ++i) all.push_back(i);
        return all;
    }()));
    std::vector<SimplexRef> a;
    for (int g = 0; g < dm->generator_count(); ++g) {
        // Generator = injective tuple into [m]; compose with alpha.
        const std::string& nm = dm->name_of(g);
        std::vector<int> verts;
        for (char c : nm)
            if (c != '.') verts.push_back(c - '0');
        std::vector<int> image;
        for (int v : verts) image.push_back(alpha(v));
        a.push_back(dn->act(SimplexRef::nondeg(top, dn->dim()),
                            MonotoneMap(std::move(image), dn->dim())));
    }
    return SimplicialMap(dm, dn, std::move(a));
}

SSetPtr circle() {
    SSetPtr d1 = standard_simplex(1);
    SSetPtr bd = standard_boundary(1);
    return collapse_to_point(inclusion_by_names(bd, d1)).complex;
}

SSetPtr free_right_invertible() {
    SSetPtr d2 = standard_simplex(2);
    // Collapse the [0,2] edge, then identify the two remaining vertices.
    SimplicialSetBuilder eb;
    int v0 = eb.add_generator(0, "0");
    int v2 = eb.add_generator(0, "2");
    eb.add_generator(1, "02", {SimplexRef::nondeg(v2, 0), SimplexRef::nondeg(v0, 0)});
    SSetPtr edge = eb.build();
    std::vector<SimplexRef> incl;
    incl.push_back(SimplexRef::nondeg(d2->find_generator("0"), 0));
    incl.push_back(SimplexRef::nondeg(d2->find_generator("2"), 0));
    incl.push_back(SimplexRef::nondeg(d2->find_generator("02"), 1));
    auto step1 = collapse_to_point(SimplicialMap(edge, d2, std::move(incl)));

    SimplicialSetBuilder two;
    two.add_generator(0, "a");
    two.add_generator(0, "b");
    SSetPtr pts = two.build();
    SimplexRef w0 = step1.projection(SimplexRef::nondeg(d2->find_generator("0"), 0));
    SimplexRef w1 = step1.projection(SimplexRef::nondeg(d2->find_generator("1"), 0));
    SimplicialMap both(pts, step1.complex, {w0, w1}, false);
    return collapse_to_point(both).complex;
}

SimplicialMap circle_into_e() {
    SSetPtr s1 = circle();
    SSetPtr e = free_right_invertible();
    // S^1 has one vertex and one loop. The [0,1]-edge of E is d_2 of its
    // unique triangle.
    int vs = s1->generators_of_dim(0)[0];
    int ls = s1->generators_of_dim(1)[0];
    int ve = e->generators_of_dim(0)[0];
    int t = e->generators_of_dim(2)[0];
    SimplexRef a_edge = e->face(SimplexRef::nondeg(t, 2), 2);
    if (a_edge.is_degenerate()) throw Error("circle_into_e: unexpected E normal form");
    std::vector<SimplexRef> a(static_cast<std::size_t>(s1->generator_count()),
                              SimplexRef{MonotoneMap::identity(0), -1});
    a[static_cast<std::size_t>(vs)] = SimplexRef::nondeg(ve, 0);
    a[static_cast<std::size_t>(ls)] = a_edge;
    return SimplicialMap(s1, e, std::move(a));
}

}  // namespace strat
