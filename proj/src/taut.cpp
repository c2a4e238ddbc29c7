#include "eulergraph/taut.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eulergraph/error.hpp"

namespace eulergraph {

namespace {

void check_structure_shape(const Triangulation& tri, const TautStructure& ts) {
    if (ts.up.size() != size_t(tri.tet_count()))
        throw DomainError("taut structure size does not match tetrahedron count");
    for (const auto& p : ts.up)
        if (p[0] < 0 || p[0] > 3 || p[1] < 0 || p[1] > 3 || p[0] >= p[1])
            throw DomainError("up pair must be two distinct faces in increasing order");
}

bool face_is_up(const TautStructure& ts, int tet, int face) {
    const auto& p = ts.up[size_t(tet)];
    return p[0] == face || p[1] == face;
}

// Positions of the up-pi and down-pi corners in the embedding list of one
// edge class. Exactly one of each for a verified taut structure.
std::pair<size_t, size_t> pi_corner_positions(const TautStructure& ts,
                                              const EdgeClass& ec) {
    size_t p_up = ec.degree(), p_down = ec.degree();
    for (size_t i = 0; i < ec.embeddings.size(); ++i) {
        const EdgeEmbedding& emb = ec.embeddings[i];
        int lo = std::min(emb.a, emb.b), hi = std::max(emb.a, emb.b);
        auto [ua, ub] = up_pi_edge(ts, emb.tet);
        auto [da, db] = down_pi_edge(ts, emb.tet);
        if (lo == ua && hi == ub) {
            if (p_up != ec.degree())
                throw DomainError("edge class has two up pi corners");
            p_up = i;
        } else if (lo == da && hi == db) {
            if (p_down != ec.degree())
                throw DomainError("edge class has two down pi corners");
            p_down = i;
        }
    }
    if (p_up == ec.degree() || p_down == ec.degree())
        throw DomainError("edge class is missing a pi corner");
    return {p_up, p_down};
}

// Signed dual-edge path along one side of the edge link fan from the up-pi
// corner to the down-pi corner. Crossing i sits between embeddings i and i+1;
// sign +1 when the crossing passes the face class from its canonical side.
std::vector<std::pair<int, Int>> fan_path(const Triangulation& tri,
                                          const EdgeClass& ec, size_t p_up,
                                          size_t p_down, FanSide side) {
    size_t d = ec.degree();
    auto crossing_sign = [&](const FaceEmbedding& cr) {
        const FaceClass& fc = tri.face_classes()[size_t(
            tri.face_class_of(cr.tet, cr.face))];
        return std::pair<int, int>(fc.index, fc.canonical == cr ? 1 : -1);
    };
    // Forward side first crosses link_cycle[p_up]; the backward side first
    // crosses link_cycle[p_up - 1] against the walk direction.
    const FaceEmbedding& fwd_first = ec.link_cycle[p_up];
    const FaceEmbedding& bwd_first = ec.link_cycle[(p_up + d - 1) % d];
    bool forward = fwd_first <= bwd_first;
    if (side == FanSide::alternate) forward = !forward;

    std::map<int, Int> acc;
    if (forward) {
        for (size_t i = p_up; i % d != p_down; ++i) {
            auto [cell, sign] = crossing_sign(ec.link_cycle[i % d]);
            acc[cell] += sign;
        }
    } else {
        for (size_t i = p_up + d; i % d != p_down; --i) {
            auto [cell, sign] = crossing_sign(ec.link_cycle[(i + d - 1) % d]);
            acc[cell] -= sign;
        }
    }
    std::vector<std::pair<int, Int>> out;
    for (auto& [cell, coeff] : acc)
        if (coeff != 0) out.push_back({cell, coeff});
    return out;
}

}  // namespace

std::string TautStructure::literal() const {
    std::string s;
    for (size_t t = 0; t < up.size(); ++t) {
        if (t) s.push_back(' ');
        s.push_back(char('0' + up[t][0]));
        s.push_back(char('0' + up[t][1]));
    }
    return s;
}

TautStructure TautStructure::from_literal(const std::string& s, int tet_count) {
    std::string body = s;
    if (body.rfind("taut ", 0) == 0) body = body.substr(5);
    std::istringstream ss(body);
    TautStructure ts;
    std::string tok;
    while (ss >> tok) {
        if (tok.size() != 2 || tok[0] < '0' || tok[0] > '3' || tok[1] < '0' ||
            tok[1] > '3' || tok[0] >= tok[1])
            throw InputError("bad up pair '" + tok +
                             "': need two increasing digits in 0..3");
        ts.up.push_back({tok[0] - '0', tok[1] - '0'});
    }
    if (ts.up.size() != size_t(tet_count))
        throw InputError("taut literal has " + std::to_string(ts.up.size()) +
                         " pairs, triangulation has " + std::to_string(tet_count) +
                         " tetrahedra");
    return ts;
}

std::pair<int, int> up_pi_edge(const TautStructure& ts, int tet) {
    const auto& p = ts.up[size_t(tet)];
    int a = -1, b = -1;
    for (int v = 0; v < 4; ++v) {
        if (v == p[0] || v == p[1]) continue;
        if (a == -1)
            a = v;
        else
            b = v;
    }
    return {a, b};
}

std::pair<int, int> down_pi_edge(const TautStructure& ts, int tet) {
    return {ts.up[size_t(tet)][0], ts.up[size_t(tet)][1]};
}

TautReport check_taut(const Triangulation& tri, const TautStructure& ts) {
    if (tri.kind() != Kind::ideal)
        throw DomainError("taut structures require an ideal triangulation");
    check_structure_shape(tri, ts);
    TautReport report;
    report.ok = true;
    for (const FaceClass& fc : tri.face_classes()) {
        bool up1 = face_is_up(ts, fc.canonical.tet, fc.canonical.face);
        bool up2 = face_is_up(ts, fc.partner.tet, fc.partner.face);
        if (up1 == up2) {
            report.ok = false;
            report.violations.push_back({"face coorientation", fc.index});
        }
    }
    for (const EdgeClass& ec : tri.edge_classes()) {
        int pis = 0;
        for (const EdgeEmbedding& emb : ec.embeddings) {
            int lo = std::min(emb.a, emb.b), hi = std::max(emb.a, emb.b);
            auto [da, db] = down_pi_edge(ts, emb.tet);
            auto [ua, ub] = up_pi_edge(ts, emb.tet);
            if ((lo == da && hi == db) || (lo == ua && hi == ub)) ++pis;
        }
        if (pis != 2) {
            report.ok = false;
            report.violations.push_back({"edge angle", ec.index});
        }
    }
    return report;
}

std::vector<TautStructure> find_taut_structures(const Triangulation& tri) {
    if (tri.kind() != Kind::ideal)
        throw DomainError("taut structures require an ideal triangulation");
    int n = tri.tet_count();
    const auto& faces = tri.face_classes();
    const auto& edges = tri.edge_classes();

    // A constraint becomes testable once its largest tetrahedron is assigned.
    std::vector<std::vector<int>> faces_at(static_cast<size_t>(n));
    std::vector<std::vector<int>> edges_at(static_cast<size_t>(n));
    for (const FaceClass& fc : faces)
        faces_at[size_t(std::max(fc.canonical.tet, fc.partner.tet))].push_back(
            fc.index);
    for (const EdgeClass& ec : edges) {
        int trigger = 0;
        for (const EdgeEmbedding& emb : ec.embeddings)
            trigger = std::max(trigger, emb.tet);
        edges_at[size_t(trigger)].push_back(ec.index);
    }

    std::vector<TautStructure> out;
    TautStructure ts;
    ts.up.assign(size_t(n), {0, 1});
    std::function<void(int)> rec = [&](int t) {
        if (t == n) {
            out.push_back(ts);
            return;
        }
        for (const auto& [pa, pb] : kEdges) {
            ts.up[size_t(t)] = {pa, pb};
            bool viable = true;
            for (int fi : faces_at[size_t(t)]) {
                const FaceClass& fc = faces[size_t(fi)];
                if (face_is_up(ts, fc.canonical.tet, fc.canonical.face) ==
                    face_is_up(ts, fc.partner.tet, fc.partner.face)) {
                    viable = false;
                    break;
                }
            }
            if (viable)
                for (int ei : edges_at[size_t(t)]) {
                    int pis = 0;
                    for (const EdgeEmbedding& emb : edges[size_t(ei)].embeddings) {
                        int lo = std::min(emb.a, emb.b), hi = std::max(emb.a, emb.b);
                        auto [da, db] = down_pi_edge(ts, emb.tet);
                        auto [ua, ub] = up_pi_edge(ts, emb.tet);
                        if ((lo == da && hi == db) || (lo == ua && hi == ub)) ++pis;
                    }
                    if (pis != 2) {
                        viable = false;
                        break;
                    }
                }
            if (viable) rec(t + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<Int> dual_graph_G(const Triangulation& tri, const TautStructure& ts) {
    TautReport rep = check_taut(tri, ts);
    if (!rep.ok) throw DomainError("taut check failed");
    std::vector<Int> g(tri.face_classes().size());
    for (const FaceClass& fc : tri.face_classes())
        g[size_t(fc.index)] =
            face_is_up(ts, fc.canonical.tet, fc.canonical.face) ? 1 : -1;
    // Two outgoing and two incoming arcs at every dual vertex, counted per
    // face slot so self-gluings contribute on both sides.
    for (int t = 0; t < tri.tet_count(); ++t) {
        int outgoing = 0;
        for (int f = 0; f < 4; ++f)
            if (face_is_up(ts, t, f)) ++outgoing;
        if (outgoing != 2)
            throw DomainError("dual graph is not two-in two-out at tetrahedron " +
                              std::to_string(t));
    }
    if (!tri.dual_complex().is_cycle(g, 1))
        throw DomainError("dual graph chain is not a cycle");
    return g;
}

BranchedComplex flatten(const Triangulation& tri, const TautStructure& ts,
                        BoundaryCoorientation co, FanSide side) {
    TautReport rep = check_taut(tri, ts);
    if (!rep.ok) throw DomainError("taut check failed");
    bool outward = co == BoundaryCoorientation::outward;
    BranchedComplex bc;
    bc.boundary_coorientation = co;
    bc.regions.assign(size_t(tri.tet_count()), Region{1, 1});
    for (const FaceClass& fc : tri.face_classes()) {
        Sector s;
        s.chi = 1;
        s.dc = outward ? 0 : 6;
        bool up_on_canonical = face_is_up(ts, fc.canonical.tet, fc.canonical.face);
        s.region_neg = up_on_canonical ? fc.canonical.tet : fc.partner.tet;
        s.region_pos = up_on_canonical ? fc.partner.tet : fc.canonical.tet;
        s.chain = std::vector<std::pair<int, Int>>{
            {fc.index, Int(up_on_canonical ? 1 : -1)}};
        bc.sectors.push_back(std::move(s));
    }
    for (const EdgeClass& ec : tri.edge_classes()) {
        auto [p_up, p_down] = pi_corner_positions(ts, ec);
        Sector s;
        s.chi = 1;
        s.dc = outward ? 4 : 0;
        s.region_neg = ec.embeddings[p_up].tet;
        s.region_pos = ec.embeddings[p_down].tet;
        s.chain = fan_path(tri, ec, p_up, p_down, side);
        bc.sectors.push_back(std::move(s));
    }
    return bc;
}

LackenbyResult lackenby_classes(const Triangulation& tri, const TautStructure& ts,
                                FanSide side) {
    BranchedComplex bc_out = flatten(tri, ts, BoundaryCoorientation::outward, side);
    BranchedComplex bc_in = flatten(tri, ts, BoundaryCoorientation::inward, side);
    const ChainComplex& dual = tri.dual_complex();

    LackenbyResult r;
    MawGraph g_out = maw_dual_graph(bc_out);
    r.cycle_law = check_cycle(g_out, bc_out).ok;
    r.gamma_plus = graph_chain(g_out, bc_out, dual);
    r.gamma_minus = graph_chain(maw_dual_graph(bc_in), bc_in, dual);
    r.g = dual_graph_G(tri, ts);
    r.beta.assign(dual.dim(1), Int(0));
    size_t n_f = tri.face_classes().size();
    for (size_t i = n_f; i < bc_out.sectors.size(); ++i)
        for (const auto& [cell, coeff] : *bc_out.sectors[i].chain)
            r.beta[size_t(cell)] -= coeff;

    r.chain_identity_plus = true;
    r.chain_identity_minus = true;
    std::vector<Int> diff(dual.dim(1));
    for (size_t i = 0; i < dual.dim(1); ++i) {
        if (r.gamma_plus[i] != r.g[i] + r.beta[i]) r.chain_identity_plus = false;
        if (r.gamma_minus[i] != -2 * r.g[i] - r.beta[i]) r.chain_identity_minus = false;
        diff[i] = r.gamma_plus[i] - r.gamma_minus[i];
    }

    r.gamma_plus_class = dual.cycle_class(r.gamma_plus, 1);
    r.gamma_minus_class = dual.cycle_class(r.gamma_minus, 1);
    r.g_class = dual.cycle_class(r.g, 1);
    r.beta_class = dual.cycle_class(r.beta, 1);
    r.difference_bounds = dual.is_boundary(diff, 1);
    r.double_class_relation = (r.gamma_plus_class * Int(2) + r.g_class).is_zero();
    r.ok = r.chain_identity_plus && r.chain_identity_minus && r.difference_bounds &&
           r.double_class_relation && r.cycle_law;
    return r;
}

}  // namespace eulergraph
