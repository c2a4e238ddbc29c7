#include "eulergraph/reports.hpp"

#include "eulergraph/error.hpp"

namespace eulergraph::reports {

namespace {

json check_entry(const char* name, bool ok) {
    return json{{"name", name}, {"ok", ok}};
}

json group_to_json(const HomologyGroup& g) {
    json j = json::object();
    j["degree"] = g.degree;
    j["rank"] = g.rank;
    json tors = json::array();
    for (const Int& t : g.torsion) tors.push_back(int_to_json(t));
    j["torsion"] = tors;
    return j;
}

const char* kind_name(Kind k) { return k == Kind::closed ? "closed" : "ideal"; }

}  // namespace

json validate_report(const Triangulation& tri) {
    json j = json::object();
    j["kind"] = kind_name(tri.kind());
    j["tetrahedra"] = tri.tet_count();
    j["edge_classes"] = tri.edge_classes().size();
    j["face_classes"] = tri.face_classes().size();
    j["vertex_classes"] = tri.vertex_classes().size();
    json degs = json::array();
    for (const EdgeClass& ec : tri.edge_classes()) degs.push_back(ec.degree());
    j["edge_degrees"] = degs;
    j["edges_orientable"] = tri.all_edges_orientable();
    json chis = json::array();
    for (const VertexClass& vc : tri.vertex_classes()) chis.push_back(vc.link_chi);
    j["vertex_link_chis"] = chis;
    j["dual_fingerprint"] = tri.dual_complex().fingerprint();
    j["checks"] = json::array({check_entry("validate", true)});
    j["ok"] = true;
    return j;
}

json homology_report(const Triangulation& tri, std::optional<int> k) {
    const ChainComplex& dual = tri.dual_complex();
    if (k && *k == 3 && tri.kind() == Kind::ideal)
        throw DomainError("no dual 3-cells");
    json j = json::object();
    j["kind"] = kind_name(tri.kind());
    j["fingerprint"] = dual.fingerprint();
    json groups = json::array();
    if (k)
        groups.push_back(group_to_json(dual.homology(*k)));
    else
        for (int d = 0; d <= dual.top_degree(); ++d)
            groups.push_back(group_to_json(dual.homology(d)));
    j["groups"] = groups;
    j["checks"] = json::array({check_entry("homology", true)});
    j["ok"] = true;
    return j;
}

json orient_enum_report(const Triangulation& tri, long long limit, bool count_only) {
    json j = json::object();
    j["edge_classes"] = tri.edge_classes().size();
    j["edges_orientable"] = tri.all_edges_orientable();
    json literals = json::array();
    std::function<void(const EdgeOrientation&)> cb;
    if (!count_only)
        cb = [&](const EdgeOrientation& o) { literals.push_back(o.literal()); };
    EnumerationResult res = enumerate_acyclic_orientations(tri, limit, cb);
    j["count"] = res.count;
    j["complete"] = res.complete;
    if (!count_only) j["orientations"] = literals;
    j["checks"] = json::array({check_entry("enumeration", true)});
    j["ok"] = true;
    return j;
}

json euler_dunfield_report(const Triangulation& tri, const EdgeOrientation& o) {
    json j = json::object();
    j["orientation"] = o.literal();
    j["interpretation"] =
        "Euler class of the carried foliation, conditional on foliarity";
    if (!is_acyclic(tri, o)) throw DomainError("orientation is not acyclic");
    EulerClassResult r = euler_class(tri, o);
    json mixed = json::array();
    for (const EdgeClass& ec : tri.edge_classes())
        mixed.push_back(mixed_count(tri, o, ec.index));
    j["mixed_counts"] = mixed;
    j["cochain"] = chain_to_json(r.cochain);
    j["defect"] = chain_to_json(r.defect);
    j["cocycle_ok"] = r.cocycle_ok;
    if (r.cocycle_ok) {
        j["class"] = homology_class_to_json(r.cls);
        j["is_zero"] = r.is_zero;
        j["witness"] = r.witness ? chain_to_json(*r.witness) : json(nullptr);
    } else {
        j["class"] = nullptr;
        j["is_zero"] = nullptr;
        j["witness"] = nullptr;
    }
    j["checks"] = json::array({check_entry("acyclic", true),
                               check_entry("cochain integral", true),
                               check_entry("cocycle", r.cocycle_ok)});
    j["ok"] = r.cocycle_ok;
    return j;
}

json taut_find_report(const Triangulation& tri) {
    json j = json::object();
    std::vector<TautStructure> found = find_taut_structures(tri);
    j["count"] = found.size();
    json lits = json::array();
    for (const TautStructure& ts : found) lits.push_back(ts.literal());
    j["structures"] = lits;
    j["checks"] = json::array({check_entry("search", true)});
    j["ok"] = true;
    return j;
}

json taut_euler_report(const Triangulation& tri, const TautStructure& ts) {
    json j = json::object();
    j["taut"] = ts.literal();
    TautReport rep = check_taut(tri, ts);
    if (!rep.ok) {
        json viols = json::array();
        for (const TautViolation& v : rep.violations)
            viols.push_back(json{{"what", v.what}, {"index", v.index}});
        j["taut_check"] = json{{"ok", false}, {"violations", viols}};
        j["checks"] = json::array({check_entry("taut structure", false)});
        j["ok"] = false;
        return j;
    }
    j["taut_check"] = json{{"ok", true}, {"violations", json::array()}};
    LackenbyResult r = lackenby_classes(tri, ts);
    json chains = json::object();
    chains["gamma_plus"] = chain_to_json(r.gamma_plus);
    chains["gamma_minus"] = chain_to_json(r.gamma_minus);
    chains["g"] = chain_to_json(r.g);
    chains["beta"] = chain_to_json(r.beta);
    j["chains"] = chains;
    json classes = json::object();
    classes["gamma_plus"] = homology_class_to_json(r.gamma_plus_class);
    classes["gamma_minus"] = homology_class_to_json(r.gamma_minus_class);
    classes["g"] = homology_class_to_json(r.g_class);
    classes["beta"] = homology_class_to_json(r.beta_class);
    j["classes"] = classes;
    j["checks"] = json::array({check_entry("taut structure", true),
                               check_entry("cycle law", r.cycle_law),
                               check_entry("chain identity plus", r.chain_identity_plus),
                               check_entry("chain identity minus", r.chain_identity_minus),
                               check_entry("difference bounds", r.difference_bounds),
                               check_entry("double class relation", r.double_class_relation)});
    j["ok"] = r.ok;
    return j;
}

json maw_graph_report(const BranchedComplex& bc) {
    json j = json::object();
    MawGraph g = maw_dual_graph(bc);
    json arcs = json::array();
    for (const MawArc& a : g.arcs)
        arcs.push_back(json{{"sector", a.sector},
                            {"from", a.from},
                            {"to", a.to},
                            {"weight", int_to_json(a.weight)}});
    j["arcs"] = arcs;
    CycleReport rep = check_cycle(g, bc);
    json regions = json::array();
    for (const RegionBalance& b : rep.regions)
        regions.push_back(json{{"region", b.region},
                               {"in", int_to_json(b.in)},
                               {"out", int_to_json(b.out)},
                               {"expected", int_to_json(b.expected)},
                               {"ok", b.ok}});
    j["regions"] = regions;
    j["checks"] = json::array({check_entry("cycle law", rep.ok)});
    j["ok"] = rep.ok;
    return j;
}

json swap_report(long long k, const HomologyClass& delta) {
    json j = json::object();
    j["k"] = k;
    j["delta"] = homology_class_to_json(delta);
    HomologyClass result = swap_difference_class(k, delta);
    j["result"] = homology_class_to_json(result);
    j["result_is_zero"] = result.is_zero();
    j["checks"] = json::array({check_entry("swap", true)});
    j["ok"] = true;
    return j;
}

}  // namespace eulergraph::reports
