#include "strat/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strat {

namespace {

void transitive_close(std::vector<std::vector<bool>>& r) {
    const std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
}

}  // namespace

Poset::Poset(std::vector<std::string> element_ids, const std::vector<std::pair<int, int>>& relations)
    : ids_(std::move(element_ids)) {
    const int n = size();
    {
        std::set<std::string> seen;
        for (const auto& id : ids_)
            if (!seen.insert(id).second) throw Error("Poset: duplicate element id '" + id + "'");
    }
    leq_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) leq_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [a, b] : relations) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error("Poset: relation index out of range");
        leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
    transitive_close(leq_);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (leq(a, b) && leq(b, a))
                throw Error("Poset: antisymmetry violated between '" + ids_[static_cast<std::size_t>(a)] +
                            "' and '" + ids_[static_cast<std::size_t>(b)] + "'");
}

std::shared_ptr<const Poset> Poset::chain(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i <= n; ++i) {
        ids.push_back(std::to_string(i));
        if (i > 0) rel.emplace_back(i - 1, i);
    }
    return std::make_shared<Poset>(std::move(ids), rel);
}

std::shared_ptr<const Poset> Poset::antichain(const std::vector<std::string>& ids) {
    return std::make_shared<Poset>(ids, std::vector<std::pair<int, int>>{});
}

std::shared_ptr<const Poset> Poset::singleton(const std::string& id) {
    return std::make_shared<Poset>(std::vector<std::string>{id}, std::vector<std::pair<int, int>>{});
}

std::optional<int> Poset::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (ids_[static_cast<std::size_t>(i)] == id) return i;
    return std::nullopt;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (a != b && leq(a, b)) out.emplace_back(a, b);
    return out;
}

bool Poset::same_order_as(const Poset& other) const {
    return ids_ == other.ids_ && leq_ == other.leq_;
}

PosetMap::PosetMap(PosetPtr source, PosetPtr target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
    if (static_cast<int>(assignment_.size()) != source_->size())
        throw Error("PosetMap: assignment size mismatch");
    for (int v : assignment_)
        if (v < 0 || v >= target_->size()) throw Error("PosetMap: value out of range");
    for (int a = 0; a < source_->size(); ++a)
        for (int b = 0; b < source_->size(); ++b)
            if (source_->leq(a, b) && !target_->leq((*this)(a), (*this)(b)))
                throw Error("PosetMap: not monotone at '" + source_->id_of(a) + "' <= '" +
                            source_->id_of(b) + "'");
}

PosetMap PosetMap::identity(PosetPtr p) {
    std::vector<int> a(static_cast<std::size_t>(p->size()));
    for (int i = 0; i < p->size(); ++i) a[static_cast<std::size_t>(i)] = i;
    return PosetMap(p, p, std::move(a));
}

bool PosetMap::is_bijective() const {
    if (source_->size() != target_->size()) return false;
    std::vector<bool> hit(static_cast<std::size_t>(target_->size()), false);
    for (int v : assignment_) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool PosetMap::is_order_isomorphism() const {
    if (!is_bijective()) return false;
    for (int a = 0; a < source_->size(); ++a)
        for (int b = 0; b < source_->size(); ++b)
            if (source_->leq(a, b) != target_->leq((*this)(a), (*this)(b))) return false;
    return true;
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
    if (f.target().get() != g.source().get() && !f.target()->same_order_as(*g.source()))
        throw Error("compose(PosetMap): target/source mismatch");
    std::vector<int> a;
    a.reserve(static_cast<std::size_t>(f.source()->size()));
    for (int i = 0; i < f.source()->size(); ++i) a.push_back(g(f(i)));
    return PosetMap(f.source(), g.target(), std::move(a));
}

bool Flag::is_regular() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i] == entries[i - 1]) return false;
    return true;
}

void Flag::validate() const {
    for (int e : entries)
        if (e < 0 || e >= poset->size()) throw Error("Flag: entry out of range");
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (!poset->leq(entries[i - 1], entries[i]))
            throw Error("Flag: entries not weakly increasing at position " + std::to_string(i));
}

Flag Flag::support() const {
    Flag out{poset, {}};
    for (int e : entries)
        if (out.entries.empty() || out.entries.back() != e) out.entries.push_back(e);
    return out;
}

std::vector<int> Flag::support_set() const { return support().entries; }

std::vector<int> Flag::block(int p) const {
    std::vector<int> out;
    for (std::size_t l = 0; l < entries.size(); ++l)
        if (entries[l] == p) out.push_back(static_cast<int>(l));
    return out;
}

Flag Flag::restrict_to_element(int p) const {
    Flag out{poset, {}};
    for (int e : entries)
        if (e == p) out.entries.push_back(e);
    return out;
}

std::string Flag::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s += ",";
        s += poset->id_of(entries[i]);
    }
    return s + "]";
}

Flag flag_restrict(const Flag& j, const std::vector<int>& subset) {
    Flag out{j.poset, {}};
    for (int e : j.entries)
        if (std::find(subset.begin(), subset.end(), e) != subset.end()) out.entries.push_back(e);
    return out;
}

Flag flag_join(const Flag& j0, const Flag& j1) {
    if (j0.poset.get() != j1.poset.get() && !j0.poset->same_order_as(*j1.poset))
        throw Error("flag_join: flags over different posets");
    for (int a : j0.support_set())
        for (int b : j1.support_set())
            if (a == b) throw Error("flag_join: supports not disjoint at '" + j0.poset->id_of(a) + "'");
    Flag out{j0.poset, {}};
    std::size_t i = 0, k = 0;
    const auto& p = *j0.poset;
    while (i < j0.entries.size() || k < j1.entries.size()) {
        if (i == j0.entries.size()) {
            out.entries.push_back(j1.entries[k++]);
        } else if (k == j1.entries.size()) {
            out.entries.push_back(j0.entries[i++]);
        } else {
            int a = j0.entries[i], b = j1.entries[k];
            if (p.leq(a, b)) out.entries.push_back(j0.entries[i++]);
            else if (p.leq(b, a)) out.entries.push_back(j1.entries[k++]);
            else
                throw Error("flag_join: merged sequence not monotone ('" + p.id_of(a) + "' vs '" +
                            p.id_of(b) + "')");
        }
    }
    out.validate();
    return out;
}

namespace {

void gen_regular(const PosetPtr& p, int max_entries, std::vector<int>& cur,
                 std::vector<Flag>& out) {
    if (!cur.empty()) out.push_back(Flag{p, cur});
    if (static_cast<int>(cur.size()) == max_entries) return;
    int start = 0;
    for (int e = start; e < p->size(); ++e) {
        if (!cur.empty()) {
            if (e == cur.back() || !p->leq(cur.back(), e)) continue;
        }
        cur.push_back(e);
        gen_regular(p, max_entries, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Flag> regular_flags(const PosetPtr& p, int max_len) {
    std::vector<Flag> out;
    std::vector<int> cur;
    gen_regular(p, max_len + 1, cur, out);
    std::stable_sort(out.begin(), out.end(), [](const Flag& a, const Flag& b) {
        if (a.entries.size() != b.entries.size()) return a.entries.size() < b.entries.size();
        return a.entries < b.entries;
    });
    return out;
}

std::vector<Flag> all_flags_of_length(const PosetPtr& p, int len) {
    std::vector<Flag> out;
    std::vector<int> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == len + 1) {
            out.push_back(Flag{p, cur});
            return;
        }
        for (int e = 0; e < p->size(); ++e) {
            if (!cur.empty() && !p->leq(cur.back(), e)) continue;
            cur.push_back(e);
            rec();
            cur.pop_back();
        }
    };
    if (len >= 0) rec();
    return out;
}

ExponentialPoset exponential_poset(const PosetPtr& p, const PosetPtr& q) {
    std::vector<std::vector<int>> maps;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == q->size()) {
            maps.push_back(cur);
            return;
        }
        for (int v = 0; v < p->size(); ++v) {
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                if (q->leq(prev, pos) && !p->leq(cur[static_cast<std::size_t>(prev)], v)) ok = false;
                if (q->leq(pos, prev) && !p->leq(v, cur[static_cast<std::size_t>(prev)])) ok = false;
            }
            if (!ok) continue;
            cur.push_back(v);
            rec(pos + 1);
            cur.pop_back();
        }
    };
    if (q->size() == 0) maps.push_back({});
    else rec(0);
    std::sort(maps.begin(), maps.end());

    std::vector<std::string> ids;
    for (const auto& m : maps) {
        std::string id = "(";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) id += ",";
            id += p->id_of(m[i]);
        }
        id += ")";
        ids.push_back(id);
    }
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < static_cast<int>(maps.size()); ++a)
        for (int b = 0; b < static_cast<int>(maps.size()); ++b) {
            if (a == b) continue;
            bool le = true;
            for (int e = 0; e < q->size() && le; ++e)
                le = p->leq(maps[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)],
                            maps[static_cast<std::size_t>(b)][static_cast<std::size_t>(e)]);
            if (le) rel.emplace_back(a, b);
        }
    return ExponentialPoset{std::make_shared<Poset>(std::move(ids), rel), std::move(maps)};
}

PosetPtr product_poset(const PosetPtr& p, const PosetPtr& q) {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> rel;
    auto index = [&](int a, int b) { return a * q->size() + b; };
    for (int a = 0; a < p->size(); ++a)
        for (int b = 0; b < q->size(); ++b) ids.push_back("(" + p->id_of(a) + "," + q->id_of(b) + ")");
    for (int a = 0; a < p->size(); ++a)
        for (int b = 0; b < q->size(); ++b)
            for (int c = 0; c < p->size(); ++c)
                for (int d = 0; d < q->size(); ++d)
                    if (p->leq(a, c) && q->leq(b, d)) rel.emplace_back(index(a, b), index(c, d));
    return std::make_shared<Poset>(std::move(ids), rel);
}

PreorderQuotient poset_quotient_of_preorder(const std::vector<std::string>& node_ids,
                                            const std::vector<std::pair<int, int>>& arcs) {
    const int n = static_cast<int>(node_ids.size());
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [a, b] : arcs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw Error("preorder quotient: arc out of range");
        reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
    transitive_close(reach);

    // Mutual reachability classes, each named by its lexicographically least
    // member id and ordered deterministically by that id.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::string> comp_name;
    std::vector<int> comp_rep;
    for (int i = 0; i < n; ++i) {
        if (comp[static_cast<std::size_t>(i)] != -1) continue;
        std::vector<int> members;
        for (int j = 0; j < n; ++j)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                members.push_back(j);
        std::string least = node_ids[static_cast<std::size_t>(members[0])];
        int rep = members[0];
        for (int m : members)
            if (node_ids[static_cast<std::size_t>(m)] < least) {
                least = node_ids[static_cast<std::size_t>(m)];
                rep = m;
            }
        int c = static_cast<int>(comp_name.size());
        comp_name.push_back(least);
        comp_rep.push_back(rep);
        for (int m : members) comp[static_cast<std::size_t>(m)] = c;
    }
    std::vector<int> order(comp_name.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return comp_name[static_cast<std::size_t>(a)] < comp_name[static_cast<std::size_t>(b)]; });
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<std::string> ids_sorted(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) ids_sorted[i] = comp_name[static_cast<std::size_t>(order[i])];
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = 0; b < order.size(); ++b) {
            int ra = comp_rep[static_cast<std::size_t>(order[a])];
            int rb = comp_rep[static_cast<std::size_t>(order[b])];
            if (reach[static_cast<std::size_t>(ra)][static_cast<std::size_t>(rb)])
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    PreorderQuotient out;
    out.poset = std::make_shared<Poset>(std::move(ids_sorted), rel);
    out.component_of.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.component_of[static_cast<std::size_t>(i)] = rank[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])];
    return out;
}

PosetPushout poset_pushout(const PosetMap& f, const PosetMap& g) {
    if (f.source().get() != g.source().get() && !f.source()->same_order_as(*g.source()))
        throw Error("poset_pushout: shared source required");
    const Poset& x = *f.target();
    const Poset& y = *g.target();
    const int nx = x.size(), ny = y.size();
    // Nodes: X-elements then Y-elements; glue f(a) ~ g(a) with two-way arcs.
    std::vector<std::string> node_ids;
    for (int i = 0; i < nx; ++i) node_ids.push_back(x.id_of(i));
    for (int i = 0; i < ny; ++i) node_ids.push_back(y.id_of(i) + "'");
    std::vector<std::pair<int, int>> arcs;
    for (auto [a, b] : x.strict_pairs()) arcs.emplace_back(a, b);
    for (auto [a, b] : y.strict_pairs()) arcs.emplace_back(nx + a, nx + b);
    for (int a = 0; a < f.source()->size(); ++a) {
        arcs.emplace_back(f(a), nx + g(a));
        arcs.emplace_back(nx + g(a), f(a));
    }
    auto q = poset_quotient_of_preorder(node_ids, arcs);
    std::vector<int> left(static_cast<std::size_t>(nx)), right(static_cast<std::size_t>(ny));
    for (int i = 0; i < nx; ++i) left[static_cast<std::size_t>(i)] = q.component_of[static_cast<std::size_t>(i)];
    for (int i = 0; i < ny; ++i) right[static_cast<std::size_t>(i)] = q.component_of[static_cast<std::size_t>(nx + i)];
    return PosetPushout{q.poset, PosetMap(f.target(), q.poset, std::move(left)),
                        PosetMap(g.target(), q.poset, std::move(right))};
}

}  // namespace strat
