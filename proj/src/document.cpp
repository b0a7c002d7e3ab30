#include "strat/document.hpp"

#include <algorithm>

#include <json.hpp>

namespace strat {

using json = nlohmann::ordered_json;

namespace {

SimplexRef parse_ref(const json& j, const SimplicialSet& target,
                     const std::map<std::string, int>& gen_ids, const std::string& where) {
    if (!j.is_object() || !j.contains("op") || !j.contains("gen"))
        throw Error(where + ": a simplex reference needs 'op' and 'gen'");
    std::string gen = j.at("gen").get<std::string>();
    auto it = gen_ids.find(gen);
    if (it == gen_ids.end()) throw Error(where + ": unknown generator '" + gen + "'");
    std::vector<int> op = j.at("op").get<std::vector<int>>();
    MonotoneMap deg(op, target.dim_of(it->second));
    if (!deg.is_surjective())
        throw Error(where + ": 'op' must be a surjective degeneracy operator");
    return SimplexRef{deg, it->second};
}

json ref_to_json(const SimplexRef& r, const SimplicialSet& owner) {
    json out = json::object();
    out["op"] = r.deg.images();
    out["gen"] = owner.name_of(r.gen);
    return out;
}

}  // namespace

Document parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("JSON syntax error: ") + e.what());
    }
    if (!root.is_object()) throw Error("document: top level must be an object");
    Document doc;

    if (root.contains("posets")) {
        for (const auto& [name, body] : root.at("posets").items()) {
            std::vector<std::string> elements = body.at("elements").get<std::vector<std::string>>();
            std::sort(elements.begin(), elements.end());
            std::map<std::string, int> idx;
            for (int i = 0; i < static_cast<int>(elements.size()); ++i)
                idx[elements[static_cast<std::size_t>(i)]] = i;
            std::vector<std::pair<int, int>> rel;
            if (body.contains("leq"))
                for (const auto& pr : body.at("leq")) {
                    auto a = idx.find(pr.at(0).get<std::string>());
                    auto b = idx.find(pr.at(1).get<std::string>());
                    if (a == idx.end() || b == idx.end())
                        throw Error("poset '" + name + "': leq references unknown element");
                    rel.emplace_back(a->second, b->second);
                }
            try {
                doc.posets.emplace(name, std::make_shared<Poset>(elements, rel));
            } catch (const Error& e) {
                throw Error("poset '" + name + "': " + e.what());
            }
        }
    }

    if (root.contains("ssets")) {
        for (const auto& [name, body] : root.at("ssets").items()) {
            std::vector<json> gens;
            for (const auto& g : body.at("generators")) gens.push_back(g);
            std::stable_sort(gens.begin(), gens.end(), [](const json& a, const json& b) {
                if (a.at("dim") != b.at("dim")) return a.at("dim") < b.at("dim");
                return a.at("id").get<std::string>() < b.at("id").get<std::string>();
            });
            SimplicialSetBuilder builder;
            std::map<std::string, int> gen_ids;
            std::vector<int> dims;
            try {
                for (const auto& g : gens) {
                    std::string id = g.at("id").get<std::string>();
                    int dim = g.at("dim").get<int>();
                    if (gen_ids.count(id))
                        throw Error("duplicate generator id '" + id + "'");
                    std::vector<SimplexRef> faces;
                    if (dim >= 1) {
                        if (!g.contains("faces"))
                            throw Error("generator '" + id + "' of dimension " +
                                        std::to_string(dim) + " needs faces");
                        for (const auto& f : g.at("faces")) {
                            if (!f.contains("gen")) throw Error("face without 'gen'");
                            std::string fg = f.at("gen").get<std::string>();
                            auto it = gen_ids.find(fg);
                            if (it == gen_ids.end())
                                throw Error("generator '" + id + "' references unknown face '" +
                                            fg + "'");
                            std::vector<int> op = f.at("op").get<std::vector<int>>();
                            MonotoneMap deg(op, dims[static_cast<std::size_t>(it->second)]);
                            if (!deg.is_surjective())
                                throw Error("face of '" + id + "': op must be surjective");
                            faces.push_back(SimplexRef{deg, it->second});
                        }
                    }
                    int got = builder.add_generator(dim, id, std::move(faces));
                    gen_ids[id] = got;
                    dims.push_back(dim);
                }
                doc.ssets.emplace(name, builder.build());
            } catch (const Error& e) {
                throw Error("sset '" + name + "': " + e.what());
            }
        }
    }

    if (root.contains("strats")) {
        for (const auto& [name, body] : root.at("strats").items()) {
            std::string sset = body.at("sset").get<std::string>();
            std::string poset = body.at("poset").get<std::string>();
            auto si = doc.ssets.find(sset);
            if (si == doc.ssets.end())
                throw Error("strat '" + name + "': unknown sset '" + sset + "'");
            auto pi = doc.posets.find(poset);
            if (pi == doc.posets.end())
                throw Error("strat '" + name + "': unknown poset '" + poset + "'");
            std::vector<int> labels(static_cast<std::size_t>(si->second->generator_count()), -1);
            for (const auto& [vertex, elem] : body.at("labels").items()) {
                int g = si->second->find_generator(vertex);
                if (g < 0 || si->second->dim_of(g) != 0)
                    throw Error("strat '" + name + "': label on unknown vertex '" + vertex + "'");
                auto e = pi->second->index_of(elem.get<std::string>());
                if (!e)
                    throw Error("strat '" + name + "': unknown poset element '" +
                                elem.get<std::string>() + "'");
                labels[static_cast<std::size_t>(g)] = *e;
            }
            try {
                doc.strats.emplace(name, strat_from_labels(si->second, pi->second, std::move(labels)));
            } catch (const Error& e) {
                throw Error("strat '" + name + "': " + e.what());
            }
        }
    }

    if (root.contains("maps")) {
        for (const auto& [name, body] : root.at("maps").items()) {
            Document::NamedMap m;
            m.kind = body.at("kind").get<std::string>();
            m.source = body.at("source").get<std::string>();
            m.target = body.at("target").get<std::string>();
            try {
                if (m.kind == "poset") {
                    auto s = doc.posets.find(m.source);
                    auto t = doc.posets.find(m.target);
                    if (s == doc.posets.end() || t == doc.posets.end())
                        throw Error("unresolved source/target poset");
                    std::vector<int> assign(static_cast<std::size_t>(s->second->size()), -1);
                    for (const auto& [from, to] : body.at("assignment").items()) {
                        auto a = s->second->index_of(from);
                        auto b = t->second->index_of(to.get<std::string>());
                        if (!a || !b) throw Error("assignment references unknown element");
                        assign[static_cast<std::size_t>(*a)] = *b;
                    }
                    for (int v : assign)
                        if (v < 0) throw Error("assignment not total");
                    m.poset_map = std::make_shared<PosetMap>(s->second, t->second, std::move(assign));
                } else if (m.kind == "sset") {
                    auto s = doc.ssets.find(m.source);
                    auto t = doc.ssets.find(m.target);
                    if (s == doc.ssets.end() || t == doc.ssets.end())
                        throw Error("unresolved source/target sset");
                    std::map<std::string, int> tgt_ids;
                    for (int g = 0; g < t->second->generator_count(); ++g)
                        tgt_ids[t->second->name_of(g)] = g;
                    std::vector<SimplexRef> assign;
                    for (int g = 0; g < s->second->generator_count(); ++g) {
                        const std::string& id = s->second->name_of(g);
                        if (!body.at("assignment").contains(id))
                            throw Error("assignment missing generator '" + id + "'");
                        assign.push_back(parse_ref(body.at("assignment").at(id), *t->second,
                                                   tgt_ids, "map '" + name + "'"));
                    }
                    m.sset_map =
                        std::make_shared<SimplicialMap>(s->second, t->second, std::move(assign));
                } else if (m.kind == "strat") {
                    auto s = doc.strats.find(m.source);
                    auto t = doc.strats.find(m.target);
                    if (s == doc.strats.end() || t == doc.strats.end())
                        throw Error("unresolved source/target strat");
                    std::map<std::string, int> tgt_ids;
                    for (int g = 0; g < t->second.space->generator_count(); ++g)
                        tgt_ids[t->second.space->name_of(g)] = g;
                    std::vector<SimplexRef> assign;
                    for (int g = 0; g < s->second.space->generator_count(); ++g) {
                        const std::string& id = s->second.space->name_of(g);
                        if (!body.at("space_assignment").contains(id))
                            throw Error("space_assignment missing generator '" + id + "'");
                        assign.push_back(parse_ref(body.at("space_assignment").at(id),
                                                   *t->second.space, tgt_ids, "map '" + name + "'"));
                    }
                    std::vector<int> passign(static_cast<std::size_t>(s->second.poset->size()), -1);
                    for (const auto& [from, to] : body.at("poset_assignment").items()) {
                        auto a = s->second.poset->index_of(from);
                        auto b = t->second.poset->index_of(to.get<std::string>());
                        if (!a || !b) throw Error("poset_assignment references unknown element");
                        passign[static_cast<std::size_t>(*a)] = *b;
                    }
                    for (int v : passign)
                        if (v < 0) throw Error("poset_assignment not total");
                    StratMap sm{s->second, t->second,
                                SimplicialMap(s->second.space, t->second.space, std::move(assign)),
                                PosetMap(s->second.poset, t->second.poset, std::move(passign))};
                    sm.validate();
                    m.strat_map = std::make_shared<StratMap>(std::move(sm));
                } else {
                    throw Error("kind must be one of sset, poset, strat");
                }
            } catch (const Error& e) {
                throw Error("map '" + name + "': " + e.what());
            }
            doc.maps.emplace(name, std::move(m));
        }
    }
    return doc;
}

namespace {

json poset_to_json(const Poset& p) {
    json out = json::object();
    out["elements"] = p.ids();
    json rel = json::array();
    for (auto [a, b] : p.strict_pairs()) rel.push_back(json::array({p.id_of(a), p.id_of(b)}));
    out["leq"] = rel;
    return out;
}

json sset_to_json(const SimplicialSet& x) {
    json out = json::object();
    json gens = json::array();
    std::vector<int> order;
    for (int d = 0; d <= x.dim(); ++d)
        for (int g : x.generators_of_dim(d)) order.push_back(g);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (x.dim_of(a) != x.dim_of(b)) return x.dim_of(a) < x.dim_of(b);
        return x.name_of(a) < x.name_of(b);
    });
    for (int g : order) {
        json jg = json::object();
        jg["id"] = x.name_of(g);
        jg["dim"] = x.dim_of(g);
        if (x.dim_of(g) >= 1) {
            json faces = json::array();
            for (const auto& f : x.gen(g).faces) faces.push_back(ref_to_json(f, x));
            jg["faces"] = faces;
        }
        gens.push_back(jg);
    }
    out["generators"] = gens;
    return out;
}

}  // namespace

std::string serialize_document(const Document& doc) {
    json root = json::object();
    json posets = json::object();
    for (const auto& [name, p] : doc.posets) posets[name] = poset_to_json(*p);
    root["posets"] = posets;
    json ssets = json::object();
    for (const auto& [name, x] : doc.ssets) ssets[name] = sset_to_json(*x);
    root["ssets"] = ssets;
    json strats = json::object();
    for (const auto& [name, s] : doc.strats) {
        json body = json::object();
        std::string sset_name, poset_name;
        for (const auto& [n2, x] : doc.ssets)
            if (x.get() == s.space.get()) sset_name = n2;
        for (const auto& [n2, p] : doc.posets)
            if (p.get() == s.poset.get()) poset_name = n2;
        body["sset"] = sset_name;
        body["poset"] = poset_name;
        json labels = json::object();
        std::vector<int> verts = s.space->generators_of_dim(0);
        std::sort(verts.begin(), verts.end(),
                  [&](int a, int b) { return s.space->name_of(a) < s.space->name_of(b); });
        for (int v : verts)
            labels[s.space->name_of(v)] = s.poset->id_of(s.labels[static_cast<std::size_t>(v)]);
        body["labels"] = labels;
        strats[name] = body;
    }
    root["strats"] = strats;
    json maps = json::object();
    for (const auto& [name, m] : doc.maps) {
        json body = json::object();
        body["kind"] = m.kind;
        body["source"] = m.source;
        body["target"] = m.target;
        if (m.kind == "poset") {
            json a = json::object();
            const PosetMap& pm = *m.poset_map;
            for (int e = 0; e < pm.source()->size(); ++e)
                a[pm.source()->id_of(e)] = pm.target()->id_of(pm(e));
            body["assignment"] = a;
        } else if (m.kind == "sset") {
            json a = json::object();
            const SimplicialMap& sm = *m.sset_map;
            std::vector<int> order;
            for (int g = 0; g < sm.source()->generator_count(); ++g) order.push_back(g);
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                return sm.source()->name_of(x) < sm.source()->name_of(y);
            });
            for (int g : order) a[sm.source()->name_of(g)] = ref_to_json(sm.on_generator(g), *sm.target());
            body["assignment"] = a;
        } else {
            const StratMap& st = *m.strat_map;
            json a = json::object();
            std::vector<int> order;
            for (int g = 0; g < st.source.space->generator_count(); ++g) order.push_back(g);
            std::sort(order.begin(), order.end(), [&](int x, int y) {
                return st.source.space->name_of(x) < st.source.space->name_of(y);
            });
            for (int g : order)
                a[st.source.space->name_of(g)] =
                    ref_to_json(st.space_map.on_generator(g), *st.target.space);
            body["space_assignment"] = a;
            json pa = json::object();
            for (int e = 0; e < st.source.poset->size(); ++e)
                pa[st.source.poset->id_of(e)] = st.target.poset->id_of(st.poset_map(e));
            body["poset_assignment"] = pa;
        }
        maps[name] = body;
    }
    root["maps"] = maps;
    return root.dump(2) + "\n";
}

}  // namespace strat
