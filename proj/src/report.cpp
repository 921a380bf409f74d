#include "eggers/report.hpp"

#include <algorithm>

namespace eggers {

namespace {

Rat rat_field(const Json& j, const std::string& what) {
    check(j.is_string(), Errc::syntax_error, what + " must be a rational string");
    auto q = rat_parse(j.get<std::string>());
    check(q.has_value(), Errc::syntax_error, what + " is not a rational: " + j.get<std::string>());
    return *q;
}

int branch_index(const Germ& g, const std::string& label, const std::string& what) {
    for (int i = 0; i < g.r(); ++i)
        if (g.branches[i].label == label) return i;
    fail(Errc::invalid_contacts, what + ": no branch labelled " + label);
}

} // namespace

GermDocument parse_document(const Json& j) {
    check(j.is_object(), Errc::syntax_error, "document must be a JSON object");
    GermDocument doc;
    if (j.contains("poly")) {
        check(j["poly"].is_string(), Errc::syntax_error, "poly must be a string");
        doc.poly = j["poly"].get<std::string>();
    }
    if (j.contains("abstract")) {
        check(!doc.poly, Errc::syntax_error, "give either poly or abstract, not both");
        const Json& a = j["abstract"];
        check(a.is_object() && a.contains("branches"), Errc::syntax_error, "abstract needs branches");
        Germ g;
        for (const Json& b : a["branches"]) {
            Germ::Branch br;
            check(b.contains("label"), Errc::syntax_error, "branch needs a label");
            br.label = b["label"].get<std::string>();
            if (b.contains("smooth") && b["smooth"].get<bool>()) {
                br.ch = char_data_from(1, {});
            } else {
                check(b.contains("semigroup"), Errc::syntax_error,
                      "branch needs semigroup generators or smooth: true");
                SemigroupSeq s;
                for (const Json& x : b["semigroup"]) s.betas.emplace_back(x.get<long long>());
                br.ch = char_from_semigroup(s);
            }
            g.branches.push_back(std::move(br));
        }
        int r = g.r();
        g.contact.assign(r, std::vector<ExtRat>(r, ExtRat(Rat(1))));
        for (int i = 0; i < r; ++i) g.contact[i][i] = ExtRat::infinity();
        if (a.contains("contacts"))
            for (const Json& c : a["contacts"]) {
                check(c.contains("pair") && c["pair"].size() == 2, Errc::syntax_error,
                      "contact entry needs a pair");
                int i = branch_index(g, c["pair"][0].get<std::string>(), "contacts");
                int k = branch_index(g, c["pair"][1].get<std::string>(), "contacts");
                Rat v = rat_field(c.at("value"), "contact value");
                g.contact[i][k] = ExtRat(v);
                g.contact[k][i] = ExtRat(v);
            }
        doc.abstract = std::move(g);
    }
    check(doc.poly || doc.abstract, Errc::syntax_error, "document needs poly or abstract");
    if (j.contains("lambdas"))
        for (const Json& l : j["lambdas"]) {
            LambdaSpec spec;
            spec.label = l.contains("label") ? l["label"].get<std::string>() : "l";
            if (l.contains("transversal") && l["transversal"].get<bool>())
                spec.transversal = true;
            else if (l.contains("x") && l["x"].get<bool>())
                spec.x_axis = true;
            else if (l.contains("branch"))
                spec.branch = l["branch"].get<std::string>();
            else if (l.contains("contacts"))
                for (const Json& c : l["contacts"])
                    spec.contacts.emplace_back(c.at("branch").get<std::string>(),
                                               rat_field(c.at("value"), "lambda contact"));
            else
                fail(Errc::syntax_error, "lambda entry needs transversal, x, branch or contacts");
            doc.lambdas.push_back(std::move(spec));
        }
    return doc;
}

Json document_json(const Germ& g, const std::vector<LambdaSpec>& lambdas) {
    Json branches = Json::array();
    for (const auto& b : g.branches) {
        Json jb{{"label", b.label}};
        if (b.ch.smooth())
            jb["smooth"] = true;
        else {
            Json sg = Json::array();
            for (const Int& x : semigroup_from_char(b.ch).betas) sg.push_back(x.convert_to<long long>());
            jb["semigroup"] = sg;
        }
        branches.push_back(std::move(jb));
    }
    Json contacts = Json::array();
    for (int i = 0; i < g.r(); ++i)
        for (int k = i + 1; k < g.r(); ++k)
            contacts.push_back(Json{{"pair", {g.branches[i].label, g.branches[k].label}},
                                    {"value", ext_str(g.d(i, k))}});
    Json out{{"abstract", Json{{"branches", branches}, {"contacts", contacts}}}};
    if (!lambdas.empty()) {
        Json ls = Json::array();
        for (const auto& l : lambdas) {
            Json jl{{"label", l.label}};
            if (l.transversal)
                jl["transversal"] = true;
            else if (l.branch)
                jl["branch"] = *l.branch;
            else {
                Json cs = Json::array();
                for (const auto& [lab, v] : l.contacts)
                    cs.push_back(Json{{"branch", lab}, {"value", rat_str(v)}});
                jl["contacts"] = cs;
            }
            ls.push_back(std::move(jl));
        }
        out["lambdas"] = ls;
    }
    return out;
}

ExternalBranch resolve_lambda(const LambdaSpec& spec, const Germ& g, const PolyGerm* pg) {
    if (spec.x_axis) {
        check(pg != nullptr, Errc::invalid_contacts,
              "the X parameter needs a polynomial input with its coordinates");
        ExternalBranch h = lambda_x_probe(*pg);
        h.label = spec.label;
        return h;
    }
    ExternalBranch h;
    h.label = spec.label;
    h.ch = char_data_from(1, {});
    if (spec.transversal) {
        h.contacts.assign(g.r(), ExtRat(Rat(1)));
        return h;
    }
    if (spec.branch) {
        int i = branch_index(g, *spec.branch, "lambda");
        check(g.branches[i].ch.smooth(), Errc::not_smooth, "parameter branch must be smooth");
        h.same_as = i;
        h.ch = g.branches[i].ch;
        for (int j = 0; j < g.r(); ++j)
            h.contacts.push_back(j == i ? ExtRat::infinity() : g.d(i, j));
        return h;
    }
    h.contacts.assign(g.r(), ExtRat(Rat(1)));
    for (const auto& [lab, v] : spec.contacts) h.contacts[branch_index(g, lab, "lambda")] = ExtRat(v);
    return h;
}

Analysis analyze_document(const GermDocument& doc, bool with_cross_verify, bool allow_partial) {
    Analysis a;
    if (doc.poly) {
        BiPoly f = parse_poly(*doc.poly);
        a.poly = germ_from_poly(f);
        a.germ = a.poly->germ;
        if (with_cross_verify && a.germ.singular()) {
            a.verify = cross_verify_with(*a.poly, f, allow_partial);
            a.partial = a.verify->partial;
        }
    } else {
        a.germ = *doc.abstract;
        auto viol = validate_germ(a.germ);
        check(viol.empty(), Errc::invalid_contacts,
              viol.empty() ? "" : "germ fails validation: " + viol.front().message);
    }
    a.tree = build_tree(a.germ);
    for (const auto& spec : doc.lambdas) {
        ExternalBranch lam = resolve_lambda(spec, a.germ, a.poly ? &*a.poly : nullptr);
        Placement p = placement(a.germ, lam);
        a.lambda_reports.emplace_back(spec.label, build_polar_report(p, a.germ));
    }
    return a;
}

namespace {

Json quotients_json(const std::map<Rat, Int>& m) {
    Json out = Json::array();
    for (const auto& [q, mult] : m) out.push_back(Json{{"q", rat_str(q)}, {"m", mult.str()}});
    return out;
}

Json tree_json(const EggersTree& t) {
    Json vs = Json::array();
    for (size_t i = 0; i < t.v.size(); ++i) {
        const auto& vx = t.v[i];
        Json jv{{"id", i},
                {"color", t.is_white(static_cast<int>(i)) ? "white" : "black"},
                {"label", ball_str(vx.ball, t.germ)},
                {"d", ext_str(vx.data.d)},
                {"order", vx.data.order.str()},
                {"nu", vx.data.nu.str()}};
        Json cs = Json::array();
        for (const Rat& c : vx.data.char_set) cs.push_back(rat_str(c));
        jv["char"] = cs;
        if (t.is_white(static_cast<int>(i))) {
            jv["branch"] = t.germ.branches[vx.ball.center].label;
        } else {
            jv["n"] = vx.data.n.str();
            jv["t"] = vx.data.t;
            jv["t1"] = vx.data.t1;
            jv["t2"] = vx.data.t2;
            jv["q"] = rat_str(*vx.data.q);
            jv["m"] = vx.data.m->str();
        }
        vs.push_back(std::move(jv));
    }
    Json es = Json::array();
    for (size_t i = 0; i < t.v.size(); ++i)
        if (t.v[i].parent >= 0)
            es.push_back(Json{{"from", t.v[i].parent},
                              {"to", i},
                              {"style", t.v[i].solid_to_parent ? "solid" : "dashed"}});
    return Json{{"vertices", vs}, {"edges", es}, {"root", t.root}};
}

Json polar_json(const PolarReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(Json{{"ball", row.label},
                            {"q", rat_str(row.q)},
                            {"d_lambda", rat_str(row.d_lambda)},
                            {"m", row.m.str()},
                            {"in_chain", row.in_chain}});
    Json lp;
    if (r.l_polar.exact)
        lp = Json{{"exact", rat_str(r.l_polar.value)}};
    else
        lp = Json{{"class_dependent", true}, {"upper", rat_str(r.l_polar.value)}};
    Json flags{{"a1", r.flags.a1},
               {"a2", r.flags.a2},
               {"bounds_only", r.flags.bounds_only},
               {"morse", r.flags.morse},
               {"eq_L", r.flags.eq_L},
               {"eq_q", r.flags.eq_q}};
    if (r.flags.equiv) flags["equiv"] = *r.flags.equiv;
    Json out{{"lambda", r.lambda_label},
             {"delta", r.delta},
             {"per_ball", rows},
             {"quotients", quotients_json(r.quotients)},
             {"sum", r.total_m.str()},
             {"expected_sum", r.expected_total.str()},
             {"sum_ok", r.sum_ok},
             {"q0", r.q0_lambda ? Json(rat_str(*r.q0_lambda)) : Json("-inf")},
             {"tilde_L", rat_str(r.tilde_L)},
             {"L_on_polar", lp},
             {"is_special", r.special},
             {"thm_1_11", flags}};
    if (r.q_tilde_ball) out["q_tilde_ball"] = rat_str(*r.q_tilde_ball);
    return out;
}

} // namespace

Json verify_json(const VerifyReport& r) {
    Json cs = Json::array();
    for (const auto& c : r.checks)
        cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return Json{{"checks", cs}, {"pass", r.pass()}, {"partial", r.partial}};
}

Json report_json(const Analysis& a) {
    Json out{{"schema_version", 1}};
    Json germ = document_json(a.germ)["abstract"];
    Json orders = Json::array();
    for (const auto& b : a.germ.branches)
        orders.push_back(Json{{"label", b.label}, {"ord", b.ch.ord.str()}});
    germ["orders"] = orders;
    if (a.poly) germ["poly"] = a.poly->printed;
    out["germ"] = germ;
    out["tree"] = tree_json(a.tree);
    if (a.germ.singular()) {
        auto pi = polar_invariants(a.germ);
        out["polar_invariants"] =
            Json{{"values", quotients_json(pi.mult)}, {"q0", rat_str(pi.q0)}};
        out["L0"] = rat_str(lojasiewicz(a.germ));
        auto verdict = special_verdict(a.germ);
        auto classes = tangential_decomposition(a.germ);
        Json comps = Json::array();
        for (size_t c = 0; c < classes.size(); ++c) {
            Json labels = Json::array();
            for (int i : classes[c]) labels.push_back(a.germ.branches[i].label);
            Germ s = sub_germ(a.germ, classes[c]);
            comps.push_back(Json{{"branches", labels},
                                 {"ord", s.total_order().str()},
                                 {"L0", rat_str(lojasiewicz(s))},
                                 {"M", rat_str(verdict.M[c])}});
        }
        out["tangential"] = Json{{"t", classes.size()}, {"components", comps}};
        if (verdict.component)
            out["special_direction"] =
                Json{{"exists", true}, {"component", *verdict.component}};
        else
            out["special_direction"] = Json{{"exists", false}};
    } else {
        out["L0"] = "0";
        out["nonsingular"] = true;
    }
    Json ls = Json::array();
    for (const auto& [label, rep] : a.lambda_reports) ls.push_back(polar_json(rep));
    out["lambdas"] = ls;
    if (a.verify) out["cross_verify"] = verify_json(*a.verify);
    return out;
}

} // namespace eggers
