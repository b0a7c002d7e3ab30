// Batch CLI over the stratified simplicial set library: every operation is a
// subcommand producing one JSON report on standard output. Exit code 0 covers
// every computed result including FAIL verdicts; nonzero is reserved for
// input and validation errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strat/document.hpp"
#include "strat/modelcheck.hpp"

using json = nlohmann::ordered_json;
using namespace strat;

namespace {

struct Context {
    Document doc;
    PosetPtr cli_poset;  // from --poset, if any
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// A comma-separated flag; entries resolve in the --poset context when given,
/// otherwise the distinct entries in order of first appearance form a chain.
Flag parse_flag(const Context& ctx, const std::string& text) {
    auto parts = split(text, ',');
    if (parts.empty() || parts[0].empty()) throw Error("empty flag");
    PosetPtr p = ctx.cli_poset;
    if (!p) {
        std::vector<std::string> distinct;
        for (const auto& e : parts)
            if (std::find(distinct.begin(), distinct.end(), e) == distinct.end())
                distinct.push_back(e);
        std::vector<std::pair<int, int>> rel;
        for (int i = 0; i + 1 < static_cast<int>(distinct.size()); ++i) rel.emplace_back(i, i + 1);
        p = std::make_shared<Poset>(distinct, rel);
    }
    Flag f{p, {}};
    for (const auto& e : parts) {
        auto idx = p->index_of(e);
        if (!idx) throw Error("flag entry '" + e + "' is not an element of the poset");
        f.entries.push_back(*idx);
    }
    f.validate();
    return f;
}

StratSet resolve_strat(const Context& ctx, const std::string& expr);

SSetPtr resolve_sset(const Context& ctx, const std::string& expr) {
    auto it = ctx.doc.ssets.find(expr);
    if (it != ctx.doc.ssets.end()) return it->second;
    auto parts = split(expr, ':');
    const std::string& head = parts[0];
    if (head == "delta" && parts.size() == 2) return standard_simplex(std::stoi(parts[1]));
    if (head == "bd" && parts.size() == 2) return standard_boundary(std::stoi(parts[1]));
    if (head == "horn-sset" && parts.size() == 3)
        return standard_horn(std::stoi(parts[1]), std::stoi(parts[2]));
    if (head == "circle") return circle();
    if (head == "E") return free_right_invertible();
    if (head == "sd" && parts.size() == 2)
        return subdivision(resolve_sset(ctx, parts[1])).complex;
    if (head == "nerve" && parts.size() == 2) {
        auto p = ctx.doc.posets.find(parts[1]);
        if (p == ctx.doc.posets.end()) throw Error("nerve: unknown poset '" + parts[1] + "'");
        return nerve(p->second);
    }
    return resolve_strat(ctx, expr).space;
}

StratSet resolve_strat(const Context& ctx, const std::string& expr) {
    auto it = ctx.doc.strats.find(expr);
    if (it != ctx.doc.strats.end()) return it->second;
    auto parts = split(expr, ':');
    const std::string& head = parts[0];
    if (head == "simplex" && parts.size() == 2) return strat_simplex(parse_flag(ctx, parts[1]));
    if (head == "boundary" && parts.size() == 2) return strat_boundary(parse_flag(ctx, parts[1]));
    if (head == "horn" && parts.size() == 3)
        return strat_horn(parse_flag(ctx, parts[1]), std::stoi(parts[2]));
    if (head == "lstr-simplex" && parts.size() == 2) return lstr_simplex(std::stoi(parts[1]));
    if (head == "lstr-boundary" && parts.size() == 2) return lstr_boundary(std::stoi(parts[1]));
    if (head == "lstr-horn" && parts.size() == 3)
        return lstr_horn(std::stoi(parts[1]), std::stoi(parts[2]));
    if (head == "spine" && parts.size() == 2) return spine(parse_flag(ctx, parts[1])).strat;
    if (head == "nerve-id" && parts.size() == 2) {
        auto p = ctx.doc.posets.find(parts[1]);
        if (p == ctx.doc.posets.end()) throw Error("nerve-id: unknown poset '" + parts[1] + "'");
        return nerve_identity_strat(p->second);
    }
    if (head == "trivial" && parts.size() >= 2) {
        std::string rest = expr.substr(head.size() + 1);
        return trivially_stratified(resolve_sset(ctx, rest));
    }
    if (head == "lstr" && parts.size() >= 2) {
        std::string rest = expr.substr(head.size() + 1);
        return lstr(resolve_sset(ctx, rest));
    }
    // A named sset resolves as its trivially stratified version.
    auto si = ctx.doc.ssets.find(expr);
    if (si != ctx.doc.ssets.end()) return trivially_stratified(si->second);
    throw Error("cannot resolve object '" + expr + "'");
}

StratMap resolve_map(const Context& ctx, const std::string& expr) {
    auto it = ctx.doc.maps.find(expr);
    if (it != ctx.doc.maps.end()) {
        if (it->second.kind != "strat")
            throw Error("map '" + expr + "' is not a stratified map");
        return *it->second.strat_map;
    }
    auto parts = split(expr, ':');
    const std::string& head = parts[0];
    if (head == "horn-incl" && parts.size() == 3)
        return strat_horn_inclusion(parse_flag(ctx, parts[1]), std::stoi(parts[2]));
    if (head == "boundary-incl" && parts.size() == 2)
        return strat_boundary_inclusion(parse_flag(ctx, parts[1]));
    if (head == "spine-incl" && parts.size() == 2) return spine(parse_flag(ctx, parts[1])).inclusion;
    if (head == "identity" && parts.size() >= 2)
        return strat_identity(resolve_strat(ctx, expr.substr(head.size() + 1)));
    if (head == "counit" && parts.size() >= 2)
        return refinement(resolve_strat(ctx, expr.substr(head.size() + 1))).counit;
    throw Error("cannot resolve map '" + expr + "'");
}

json poset_json(const Poset& p) {
    json out = json::object();
    out["elements"] = p.ids();
    json rel = json::array();
    for (auto [a, b] : p.strict_pairs()) rel.push_back(json::array({p.id_of(a), p.id_of(b)}));
    out["leq"] = rel;
    return out;
}

json sset_json(const SimplicialSet& x) {
    json out = json::object();
    json counts = json::array();
    for (int d = 0; d <= x.dim(); ++d) counts.push_back(x.count_of_dim(d));
    out["counts_by_dim"] = counts;
    json gens = json::array();
    for (int d = 0; d <= x.dim(); ++d)
        for (int g : x.generators_of_dim(d)) {
            json jg = json::object();
            jg["id"] = x.name_of(g);
            jg["dim"] = d;
            if (d >= 1) {
                json faces = json::array();
                for (const auto& f : x.gen(g).faces) {
                    json jf = json::object();
                    jf["op"] = f.deg.images();
                    jf["gen"] = x.name_of(f.gen);
                    faces.push_back(jf);
                }
                jg["faces"] = faces;
            }
            gens.push_back(jg);
        }
    out["generators"] = gens;
    return out;
}

json strat_json(const StratSet& s) {
    json out = json::object();
    out["space"] = sset_json(*s.space);
    out["poset"] = poset_json(*s.poset);
    json labels = json::object();
    for (int v : s.space->generators_of_dim(0))
        labels[s.space->name_of(v)] = s.poset->id_of(s.labels[static_cast<std::size_t>(v)]);
    out["labels"] = labels;
    return out;
}

json verdict_json(const ProbeVerdict& v) {
    json out = json::object();
    out["status"] = v.status();
    out["depth"] = v.depth;
    if (!v.pass) {
        out["witness"] = v.witness;
        json d = json::object();
        for (const auto& [k, val] : v.details) d[k] = val;
        out["details"] = d;
    }
    return out;
}

json levels_json(const LevelwiseSimplicialSet& lv) {
    json out = json::array();
    for (int n = 0; n <= lv.level_bound(); ++n) out.push_back(lv.level_size(n));
    return out;
}

json posetmap_json(const PosetMap& m) {
    json out = json::object();
    for (int e = 0; e < m.source()->size(); ++e)
        out[m.source()->id_of(e)] = m.target()->id_of(m(e));
    return out;
}

void emit(const std::string& command, const json& params, const json& result) {
    json out = json::object();
    out["command"] = command;
    out["parameters"] = params;
    out["result"] = result;
    std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stratified simplicial set toolkit"};
    app.require_subcommand(1);

    std::string doc_path, poset_name;
    app.add_option("--doc", doc_path, "JSON document with named objects")->expected(1);
    app.add_option("--poset", poset_name, "ambient poset (by document name) for flags");

    // Common option holders.
    std::string of, flag_text, left, right, f_expr, g_expr, i_expr, j_expr, base, expo, subcomplex,
        generators = "acof_D_global", structure = "D", horn_class = "admissible";
    int k = 0, levels = 3, n_len = 0, dim = 3, depth = 2, flaglen = 2, max_degree = 1, charp = 2,
        iterate = 1;
    bool certify = false;

    auto* c_posetify = app.add_subcommand("posetify", "poset reflection of a simplicial set");
    c_posetify->add_option("--of,--sset", of)->required();
    auto* c_refine = app.add_subcommand("refine", "refinement over the refined poset");
    c_refine->add_option("--of,--strat", of)->required();
    auto* c_isref = app.add_subcommand("is-refined", "refined-ness decision");
    c_isref->add_option("--of,--strat", of)->required();
    auto* c_rp = app.add_subcommand("refined-poset", "refined poset rP");
    c_rp->add_option("--of,--strat", of)->required();
    auto* c_link = app.add_subcommand("link", "geometric link at a regular flag");
    c_link->add_option("--of,--strat", of)->required();
    c_link->add_option("--flag", flag_text)->required();
    auto* c_hol = app.add_subcommand("hol", "homotopy link at a regular flag");
    c_hol->add_option("--of,--strat", of)->required();
    c_hol->add_option("--flag", flag_text)->required();
    c_hol->add_option("--levels", levels);
    auto* c_exthol = app.add_subcommand("ext-hol", "extended homotopy links of one length");
    c_exthol->add_option("--of,--strat", of)->required();
    c_exthol->add_option("-n,--length", n_len)->required();
    c_exthol->add_option("--levels", levels);
    auto* c_join = app.add_subcommand("join", "stratified join");
    c_join->add_option("--left", left)->required();
    c_join->add_option("--right", right)->required();
    auto* c_prod = app.add_subcommand("product", "product of stratified sets");
    c_prod->add_option("--left", left)->required();
    c_prod->add_option("--right", right)->required();
    auto* c_po = app.add_subcommand("pushout", "pushout of two stratified maps");
    c_po->add_option("--f", f_expr)->required();
    c_po->add_option("--g", g_expr)->required();
    auto* c_sd = app.add_subcommand("sd", "barycentric subdivision");
    c_sd->add_option("--of,--sset", of)->required();
    auto* c_ex = app.add_subcommand("ex", "truncated Ex");
    c_ex->add_option("--of,--sset", of)->required();
    c_ex->add_option("--levels", levels);
    c_ex->add_option("--iterate", iterate, "apply Ex this many times");
    auto* c_exp = app.add_subcommand("exp", "stratified exponential Y^X");
    c_exp->add_option("--base", base)->required();
    c_exp->add_option("--exponent", expo)->required();
    c_exp->add_option("--levels", levels);
    auto* c_path = app.add_subcommand("pathspace", "stratified path space from a subcomplex");
    c_path->add_option("--of,--strat", of)->required();
    c_path->add_option("--subcomplex", subcomplex, "comma-separated generator ids of uX");
    c_path->add_option("--levels", levels);
    auto* c_spine = app.add_subcommand("spine", "spine of a stratified simplex");
    c_spine->add_option("--flag", flag_text)->required();
    auto* c_ch = app.add_subcommand("classify-horn", "admissible/inner classification");
    c_ch->add_option("--flag", flag_text)->required();
    c_ch->add_option("--k", k)->required();
    auto* c_fib = app.add_subcommand("probe-fibrant", "horn filler probe");
    c_fib->add_option("--of,--strat", of)->required();
    c_fib->add_option("--dim", dim);
    c_fib->add_option("--class", horn_class)->check(CLI::IsMember({"admissible", "admissible_and_inner"}));
    auto* c_rlp = app.add_subcommand("probe-rlp", "right lifting property probe");
    c_rlp->add_option("--f", f_expr)->required();
    c_rlp->add_option("--generators", generators)
        ->check(CLI::IsMember({"cof_D_global", "acof_D_global", "inner_horns", "boundaries_refined"}));
    c_rlp->add_option("--dim", dim);
    auto* c_diag = app.add_subcommand("probe-diag-equiv", "diagrammatic equivalence probe");
    c_diag->add_option("--f", f_expr)->required();
    c_diag->add_option("--depth", depth);
    c_diag->add_option("--flaglen", flaglen);
    c_diag->add_option("--levels", levels);
    c_diag->add_flag("--certify", certify, "also search for stratified homotopy inverse data");
    auto* c_cof = app.add_subcommand("check-cofibration", "cofibration decision");
    c_cof->add_option("--f", f_expr)->required();
    c_cof->add_option("--structure", structure)->check(CLI::IsMember({"D", "C", "DR", "CR"}));
    auto* c_acf = app.add_subcommand("check-acyclic-fibration", "acyclic fibration check");
    c_acf->add_option("--f", f_expr)->required();
    c_acf->add_option("--dim", dim);
    auto* c_pp = app.add_subcommand("pushout-product", "pushout-product of two cofibrations");
    c_pp->add_option("--i", i_expr)->required();
    c_pp->add_option("--j", j_expr)->required();
    auto* c_lay = app.add_subcommand("probe-layered", "layeredness witness probe");
    c_lay->add_option("--of,--sset", of)->required();
    c_lay->add_option("--dim", dim);
    auto* c_hom = app.add_subcommand("homology", "Betti numbers over F_p");
    c_hom->add_option("--of,--sset", of)->required();
    c_hom->add_option("--max-degree", max_degree);
    c_hom->add_option("--char", charp);
    auto* c_pi0 = app.add_subcommand("pi0", "path components");
    c_pi0->add_option("--of,--sset", of)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Context ctx;
        if (!doc_path.empty()) {
            std::ifstream in(doc_path);
            if (!in) throw Error("cannot open document '" + doc_path + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            ctx.doc = parse_document(ss.str());
        }
        if (!poset_name.empty()) {
            auto it = ctx.doc.posets.find(poset_name);
            if (it == ctx.doc.posets.end()) throw Error("unknown poset '" + poset_name + "'");
            ctx.cli_poset = it->second;
        }

        json params = json::object();
        if (c_posetify->parsed()) {
            params["of"] = of;
            auto p = posetify(*resolve_sset(ctx, of));
            json res = json::object();
            res["poset"] = poset_json(*p.poset);
            json va = json::object();
            SSetPtr x = resolve_sset(ctx, of);
            for (int v : x->generators_of_dim(0))
                va[x->name_of(v)] = p.poset->id_of(p.vertex_assignment[static_cast<std::size_t>(v)]);
            res["vertex_assignment"] = va;
            emit("posetify", params, res);
        } else if (c_refine->parsed()) {
            params["of"] = of;
            auto r = refinement(resolve_strat(ctx, of));
            json res = json::object();
            res["refined"] = strat_json(r.refined);
            res["counit_poset_map"] = posetmap_json(r.counit.poset_map);
            emit("refine", params, res);
        } else if (c_isref->parsed()) {
            params["of"] = of;
            json res = json::object();
            res["is_refined"] = is_refined(resolve_strat(ctx, of));
            emit("is-refined", params, res);
        } else if (c_rp->parsed()) {
            params["of"] = of;
            StratSet s = resolve_strat(ctx, of);
            auto r = refined_poset(s);
            json res = json::object();
            res["poset"] = poset_json(*r.poset);
            json comp = json::object();
            for (int v : s.space->generators_of_dim(0))
                comp[s.space->name_of(v)] = r.poset->id_of(r.component_of[static_cast<std::size_t>(v)]);
            res["component_of"] = comp;
            res["stratum_of"] = posetmap_json(r.stratum_of);
            emit("refined-poset", params, res);
        } else if (c_link->parsed()) {
            params["of"] = of;
            params["flag"] = flag_text;
            StratSet s = resolve_strat(ctx, of);
            Flag i{s.poset, {}};
            for (const auto& e : split(flag_text, ',')) {
                auto idx = s.poset->index_of(e);
                if (!idx) throw Error("flag entry '" + e + "' not in the object's poset");
                i.entries.push_back(*idx);
            }
            json res = json::object();
            res["link"] = sset_json(*link_geo(s, i));
            auto parts = split(of, ':');
            if (parts[0] == "horn" && parts.size() == 3) {
                StratSet amb = strat_simplex(parse_flag(ctx, parts[1]));
                Flag ia{amb.poset, i.entries};
                res["ambient_link"] = sset_json(*link_geo(amb, ia));
            }
            emit("link", params, res);
        } else if (c_hol->parsed()) {
            params["of"] = of;
            params["flag"] = flag_text;
            params["levels"] = levels;
            StratSet s = resolve_strat(ctx, of);
            Flag i{s.poset, {}};
            for (const auto& e : split(flag_text, ',')) i.entries.push_back(*s.poset->index_of(e));
            json res = json::object();
            res["levels"] = levels_json(hol(s, i, levels).lv);
            emit("hol", params, res);
        } else if (c_exthol->parsed()) {
            params["of"] = of;
            params["length"] = n_len;
            params["levels"] = levels;
            StratSet s = resolve_strat(ctx, of);
            json comps = json::array();
            for (auto& c : ext_hol(s, n_len, levels)) {
                json jc = json::object();
                jc["flag"] = c.flag.to_string();
                jc["levels"] = levels_json(c.fam.lv);
                comps.push_back(jc);
            }
            json res = json::object();
            res["components"] = comps;
            emit("ext-hol", params, res);
        } else if (c_join->parsed()) {
            params["left"] = left;
            params["right"] = right;
            StratSet a = resolve_strat(ctx, left);
            // both factors must live over one poset: re-resolve the right
            // factor in the left factor's poset context when built inline
            Context rctx = ctx;
            rctx.cli_poset = a.poset;
            StratSet b = resolve_strat(rctx, right);
            if (!a.poset->same_order_as(*b.poset)) {
                Context lctx = ctx;
                lctx.cli_poset = b.poset;
                a = resolve_strat(lctx, left);
            }
            auto j = strat_join(a, b, a.occupied_strata(), b.occupied_strata());
            json res = json::object();
            res["join"] = strat_json(j.strat);
            emit("join", params, res);
        } else if (c_prod->parsed()) {
            params["left"] = left;
            params["right"] = right;
            auto pr = strat_product(resolve_strat(ctx, left), resolve_strat(ctx, right));
            json res = json::object();
            res["product"] = strat_json(pr.strat);
            emit("product", params, res);
        } else if (c_po->parsed()) {
            params["f"] = f_expr;
            params["g"] = g_expr;
            auto po = strat_pushout(resolve_map(ctx, f_expr), resolve_map(ctx, g_expr));
            json res = json::object();
            res["pushout"] = strat_json(po.strat);
            emit("pushout", params, res);
        } else if (c_sd->parsed()) {
            params["of"] = of;
            auto s = subdivision(resolve_sset(ctx, of));
            json res = json::object();
            res["sd"] = sset_json(*s.complex);
            emit("sd", params, res);
        } else if (c_ex->parsed()) {
            params["of"] = of;
            params["levels"] = levels;
            params["iterate"] = iterate;
            auto lv = ex_iterated(resolve_sset(ctx, of), iterate, levels);
            json res = json::object();
            res["levels"] = levels_json(lv);
            emit("ex", params, res);
        } else if (c_exp->parsed()) {
            params["base"] = base;
            params["exponent"] = expo;
            params["levels"] = levels;
            StratExponential e(resolve_strat(ctx, base), resolve_strat(ctx, expo), levels);
            json res = json::object();
            res["poset"] = poset_json(*e.poset().poset);
            res["levels"] = levels_json(e.levelwise().space);
            json labels = json::array();
            for (int v = 0; v < e.level_size(0); ++v)
                labels.push_back(e.poset().poset->id_of(e.levelwise().labels[static_cast<std::size_t>(v)]));
            res["vertex_labels"] = labels;
            emit("exp", params, res);
        } else if (c_path->parsed()) {
            params["of"] = of;
            params["subcomplex"] = subcomplex;
            params["levels"] = levels;
            StratSet s = resolve_strat(ctx, of);
            std::vector<int> gens;
            if (!subcomplex.empty())
                for (const auto& g : split(subcomplex, ',')) {
                    int id = s.space->find_generator(g);
                    if (id < 0) throw Error("subcomplex generator '" + g + "' not found");
                    gens.push_back(id);
                }
            // close under faces
            std::vector<bool> in(static_cast<std::size_t>(s.space->generator_count()), false);
            std::function<void(int)> close = [&](int g2) {
                if (in[static_cast<std::size_t>(g2)]) return;
                in[static_cast<std::size_t>(g2)] = true;
                for (const auto& f : s.space->gen(g2).faces) close(f.gen);
            };
            for (int g2 : gens) close(g2);
            gens.clear();
            for (int g2 = 0; g2 < s.space->generator_count(); ++g2)
                if (in[static_cast<std::size_t>(g2)]) gens.push_back(g2);
            auto ps = path_space(s, gens, levels);
            json res = json::object();
            res["poset"] = poset_json(*ps.poset);
            res["levels"] = levels_json(ps.space);
            emit("pathspace", params, res);
        } else if (c_spine->parsed()) {
            params["flag"] = flag_text;
            auto sp = spine(parse_flag(ctx, flag_text));
            json res = json::object();
            res["spine"] = strat_json(sp.strat);
            emit("spine", params, res);
        } else if (c_ch->parsed()) {
            params["flag"] = flag_text;
            params["k"] = k;
            auto hc = classify_horn(parse_flag(ctx, flag_text), k);
            json res = json::object();
            res["admissible"] = hc.admissible;
            res["inner"] = hc.inner;
            emit("classify-horn", params, res);
        } else if (c_fib->parsed()) {
            params["of"] = of;
            params["dim"] = dim;
            params["class"] = horn_class;
            auto v = fibrancy_probe(resolve_strat(ctx, of), dim, horn_class == "admissible_and_inner");
            emit("probe-fibrant", params, verdict_json(v));
        } else if (c_rlp->parsed()) {
            params["f"] = f_expr;
            params["generators"] = generators;
            params["dim"] = dim;
            StratMap f = resolve_map(ctx, f_expr);
            auto gens = make_generator_set(generators, f.source.poset, dim);
            emit("probe-rlp", params, verdict_json(rlp_probe(f, gens, dim)));
        } else if (c_diag->parsed()) {
            params["f"] = f_expr;
            params["depth"] = depth;
            params["flaglen"] = flaglen;
            params["levels"] = levels;
            StratMap f = resolve_map(ctx, f_expr);
            json res = verdict_json(diag_equiv_probe(f, depth, flaglen, levels));
            if (certify) {
                auto cert = certify_equivalence(f);
                res["certificate"] = cert ? *cert : "none";
            }
            emit("probe-diag-equiv", params, res);
        } else if (c_cof->parsed()) {
            params["f"] = f_expr;
            params["structure"] = structure;
            auto c = is_cofibration(resolve_map(ctx, f_expr), structure);
            json res = json::object();
            res["is_cofibration"] = c.is_cofibration;
            if (!c.is_cofibration) res["reason"] = c.reason;
            emit("check-cofibration", params, res);
        } else if (c_acf->parsed()) {
            params["f"] = f_expr;
            params["dim"] = dim;
            auto c = acyclic_fibration_check(resolve_map(ctx, f_expr), dim);
            json res = json::object();
            res["rp_isomorphism"] = c.rp_isomorphism;
            res["boundary_rlp"] = verdict_json(c.boundary_rlp);
            res["pass"] = c.pass();
            emit("check-acyclic-fibration", params, res);
        } else if (c_pp->parsed()) {
            params["i"] = i_expr;
            params["j"] = j_expr;
            auto out = pushout_product(resolve_map(ctx, i_expr), resolve_map(ctx, j_expr));
            json res = json::object();
            res["mono"] = true;
            json sc = json::array(), tc = json::array();
            for (int d = 0; d <= out.source.space->dim(); ++d) sc.push_back(out.source.space->count_of_dim(d));
            for (int d = 0; d <= out.target.space->dim(); ++d) tc.push_back(out.target.space->count_of_dim(d));
            res["source_counts"] = sc;
            res["target_counts"] = tc;
            emit("pushout-product", params, res);
        } else if (c_lay->parsed()) {
            params["of"] = of;
            params["dim"] = dim;
            auto v = layered_probe(resolve_sset(ctx, of), dim);
            json res = json::object();
            res["status"] = v.witnessed ? "LAYERED_WITNESSED" : "NOT_WITNESSED";
            if (!v.witnessed) res["edge"] = v.edge;
            emit("probe-layered", params, res);
        } else if (c_hom->parsed()) {
            params["of"] = of;
            params["max_degree"] = max_degree;
            params["char"] = charp;
            auto b = betti_of(resolve_sset(ctx, of), max_degree, charp);
            json res = json::object();
            res["betti"] = b;
            emit("homology", params, res);
        } else if (c_pi0->parsed()) {
            params["of"] = of;
            SSetPtr x = resolve_sset(ctx, of);
            auto p = pi0_of(*x);
            json res = json::object();
            res["components"] = p.count;
            json a = json::object();
            const auto& verts = x->generators_of_dim(0);
            for (int i = 0; i < static_cast<int>(verts.size()); ++i)
                a[x->name_of(verts[static_cast<std::size_t>(i)])] = p.component[static_cast<std::size_t>(i)];
            res["assignment"] = a;
            emit("pi0", params, res);
        }
        return 0;
    } catch (const Error& e) {
        json err = json::object();
        err["error"] = e.what();
        std::cerr << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err = json::object();
        err["error"] = std::string("internal: ") + e.what();
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
