#include "strat/subdivision.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace strat {

namespace {

std::string mask_name(int mask) {
    std::string s;
    for (int v = 0; mask >> v; ++v)
        if (mask & (1 << v)) s += std::to_string(v);
    return s;
}

std::string chain_name(const std::vector<int>& chain) {
    std::string s;
    for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "<" : "") + mask_name(chain[i]);
    return s;
}

bool subset(int a, int b) { return (a & ~b) == 0; }

SdSimplex build_sd_simplex(int n) {
    SdSimplex out;
    out.n = n;
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        if (!cur.empty()) chains.push_back(cur);
        if (static_cast<int>(cur.size()) == n + 1) return;  // longest chain
        for (int mask = cur.empty() ? 1 : cur.back() + 1; mask < (1 << (n + 1)); ++mask) {
            if (!cur.empty() && (!subset(cur.back(), mask) || mask == cur.back())) continue;
            cur.push_back(mask);
            rec();
            cur.pop_back();
        }
    };
    rec();
    std::sort(chains.begin(), chains.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    SimplicialSetBuilder b;
    std::map<std::vector<int>, int> id_of;
    for (const auto& c : chains) {
        int dim = static_cast<int>(c.size()) - 1;
        std::vector<SimplexRef> faces;
        for (int i = 0; i <= dim && dim >= 1; ++i) {
            std::vector<int> f = c;
            f.erase(f.begin() + i);
            faces.push_back(SimplexRef::nondeg(id_of.at(f), dim - 1));
        }
        int id = b.add_generator(dim, chain_name(c), std::move(faces));
        id_of[c] = id;
        out.chain_of_gen.push_back(c);
    }
    out.complex = b.build();
    for (const auto& [c, id] : id_of) out.index.emplace_back(c, id);
    std::sort(out.index.begin(), out.index.end());
    return out;
}

}  // namespace

int SdSimplex::gen_of_chain(const std::vector<int>& chain) const {
    auto it = std::lower_bound(index.begin(), index.end(), chain,
                               [](const auto& a, const std::vector<int>& c) { return a.first < c; });
    if (it == index.end() || it->first != chain) throw Error("sd: unknown chain");
    return it->second;
}

MonotoneMap SdSimplex::maxima(int gen) const {
    const auto& c = chain_of_gen[static_cast<std::size_t>(gen)];
    std::vector<int> im;
    for (int mask : c) {
        int m = 0;
        for (int v = 0; mask >> v; ++v)
            if (mask & (1 << v)) m = v;
        im.push_back(m);
    }
    return MonotoneMap(std::move(im), n);
}

const SdSimplex& sd_simplex(int n) {
    static std::map<int, SdSimplex> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_sd_simplex(n)).first;
    return it->second;
}

SimplicialMap sd_of_monotone(const MonotoneMap& alpha) {
    const SdSimplex& src = sd_simplex(alpha.source_dim());
    const SdSimplex& dst = sd_simplex(alpha.target_dim());
    std::vector<SimplexRef> assign;
    for (int g = 0; g < src.complex->generator_count(); ++g) {
        const auto& chain = src.chain_of_gen[static_cast<std::size_t>(g)];
        std::vector<int> image;
        for (int mask : chain) {
            int im = 0;
            for (int v = 0; mask >> v; ++v)
                if (mask & (1 << v)) im |= 1 << alpha(v);
            image.push_back(im);
        }
        // Strip repeated subsets into a degeneracy operator.
        std::vector<int> distinct;
        std::vector<int> surj;
        for (int m : image) {
            if (distinct.empty() || distinct.back() != m) distinct.push_back(m);
            surj.push_back(static_cast<int>(distinct.size()) - 1);
        }
        int target_gen = dst.gen_of_chain(distinct);
        assign.push_back(SimplexRef{
            MonotoneMap(std::move(surj), static_cast<int>(distinct.size()) - 1), target_gen});
    }
    return SimplicialMap(src.complex, dst.complex, std::move(assign));
}

Subdivision subdivision(const SSetPtr& x) {
    SSetPtr acc = SimplicialSetBuilder().build();
    SimplicialMap lv(acc, x, {}, false);
    // For every processed generator g, the gluing map sd Delta^{dim g} -> acc.
    std::vector<std::unique_ptr<SimplicialMap>> glue(
        static_cast<std::size_t>(x->generator_count()));

    for (int d = 0; d <= x->dim(); ++d) {
        for (int g : x->generators_of_dim(d)) {
            const SdSimplex& sdd = sd_simplex(d);
            // Attach along the subdivided boundary: chains of proper subsets.
            SimplicialSetBuilder bb;
            std::vector<int> sub_of_gen;  // boundary generator -> sdd generator
            std::vector<int> gen_to_sub(static_cast<std::size_t>(sdd.complex->generator_count()), -1);
            int full = (1 << (d + 1)) - 1;
            for (int h = 0; h < sdd.complex->generator_count(); ++h) {
                const auto& chain = sdd.chain_of_gen[static_cast<std::size_t>(h)];
                if (chain.back() == full) continue;
                int dim = sdd.complex->dim_of(h);
                std::vector<SimplexRef> faces;
                for (int i = 0; i <= dim && dim >= 1; ++i) {
                    const SimplexRef& f = sdd.complex->gen(h).faces[static_cast<std::size_t>(i)];
                    faces.push_back(SimplexRef{f.deg, gen_to_sub[static_cast<std::size_t>(f.gen)]});
                }
                int id = bb.add_generator(dim, sdd.complex->name_of(h), std::move(faces));
                gen_to_sub[static_cast<std::size_t>(h)] = id;
                sub_of_gen.push_back(h);
            }
            SSetPtr sdb = bb.build();
            std::vector<SimplexRef> into_whole;
            for (std::size_t i = 0; i < sub_of_gen.size(); ++i)
                into_whole.push_back(SimplexRef::nondeg(
                    sub_of_gen[i], sdb->dim_of(static_cast<int>(i))));
            SimplicialMap incl(sdb, sdd.complex, std::move(into_whole), false);

            // The attaching map factors each boundary chain through a facet.
            std::vector<SimplexRef> attach_assign;
            for (std::size_t i = 0; i < sub_of_gen.size(); ++i) {
                const auto& chain = sdd.chain_of_gen[static_cast<std::size_t>(sub_of_gen[i])];
                int top = chain.back();
                int j = 0;
                while (top & (1 << j)) ++j;  // least vertex missing from the whole chain
                // chain = delta_j(chain'), chain' in sd Delta^{d-1}.
                std::vector<int> reduced;
                for (int mask : chain) {
                    int r = 0;
                    for (int v = 0; mask >> v; ++v)
                        if (mask & (1 << v)) r |= 1 << (v > j ? v - 1 : v);
                    reduced.push_back(r);
                }
                const SimplexRef& fj = x->gen(g).faces[static_cast<std::size_t>(j)];
                SimplicialMap sd_sigma = sd_of_monotone(fj.deg);
                SimplexRef in_sd_h = sd_sigma(SimplexRef::nondeg(
                    sd_simplex(d - 1).gen_of_chain(reduced), static_cast<int>(chain.size()) - 1));
                attach_assign.push_back((*glue[static_cast<std::size_t>(fj.gen)])(in_sd_h));
            }
            SimplicialMap attach(sdb, acc, std::move(attach_assign));

            Pushout po(attach, incl);
            // Last vertex on the new piece.
            std::vector<SimplexRef> lv_new;
            for (int h = 0; h < sdd.complex->generator_count(); ++h)
                lv_new.push_back(x->act(SimplexRef::nondeg(g, d), sdd.maxima(h)));
            SimplicialMap lv_piece(sdd.complex, x, std::move(lv_new));
            SimplicialMap lv_next = po.induced(lv, lv_piece);

            for (auto& gm : glue)
                if (gm) *gm = compose(po.leg_x(), *gm);
            glue[static_cast<std::size_t>(g)] = std::make_unique<SimplicialMap>(po.leg_y());
            acc = po.complex();
            lv = lv_next;
        }
    }
    Subdivision out;
    out.complex = acc;
    out.last_vertex = std::make_unique<SimplicialMap>(std::move(lv));
    return out;
}

}  // namespace strat
