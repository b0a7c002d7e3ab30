#include "strat/monotone.hpp"

namespace strat {

namespace {

void gen_monotone(int pos, int n, int m, int min_val, std::vector<int>& cur,
                  std::vector<MonotoneMap>& out) {
    if (pos > n) {
        out.emplace_back(cur, m);
        return;
    }
    for (int v = min_val; v <= m; ++v) {
        cur.push_back(v);
        gen_monotone(pos + 1, n, m, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<MonotoneMap> all_monotone_maps(int n, int m) {
    std::vector<MonotoneMap> out;
    if (n < 0 || m < 0) return out;
    std::vector<int> cur;
    gen_monotone(0, n, m, 0, cur, out);
    return out;
}

std::vector<MonotoneMap> all_surjections(int n, int m) {
    std::vector<MonotoneMap> out;
    for (auto& f : all_monotone_maps(n, m))
        if (f.is_surjective()) out.push_back(f);
    return out;
}

std::vector<MonotoneMap> all_injections(int n, int m) {
    std::vector<MonotoneMap> out;
    for (auto& f : all_monotone_maps(n, m))
        if (f.is_injective()) out.push_back(f);
    return out;
}

}  // namespace strat
