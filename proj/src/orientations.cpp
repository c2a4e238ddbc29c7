#include "eulergraph/orientations.hpp"

#include <array>

#include "eulergraph/error.hpp"

namespace eulergraph {

namespace {

void check_signs(const Triangulation& tri, const EdgeOrientation& o) {
    if (o.signs.size() != tri.edge_classes().size())
        throw DomainError("orientation sign count does not match edge class count");
    for (int s : o.signs)
        if (s != 1 && s != -1) throw DomainError("orientation signs must be +1 or -1");
}

// In and out degrees of the three corners of a face under the orientation.
struct FaceDegrees {
    std::array<int, 4> in{}, out{};
};

FaceDegrees face_degrees(const Triangulation& tri, const EdgeOrientation& o,
                         const FaceEmbedding& f) {
    FaceDegrees d;
    for (int a = 0; a < 4; ++a) {
        if (a == f.face) continue;
        for (int b = a + 1; b < 4; ++b) {
            if (b == f.face) continue;
            auto [u, v] = directed_edge(tri, o, f.tet, a, b);
            ++d.out[size_t(u)];
            ++d.in[size_t(v)];
        }
    }
    return d;
}

}  // namespace

std::string EdgeOrientation::literal() const {
    std::string s;
    s.reserve(signs.size());
    for (int v : signs) s.push_back(v > 0 ? '+' : '-');
    return s;
}

EdgeOrientation EdgeOrientation::from_literal(const std::string& s, size_t edge_count) {
    std::string body = s;
    if (body.rfind("orient ", 0) == 0) body = body.substr(7);
    if (body.size() != edge_count)
        throw InputError("orientation literal has " + std::to_string(body.size()) +
                         " signs, triangulation has " + std::to_string(edge_count) +
                         " edge classes");
    EdgeOrientation o;
    o.signs.reserve(edge_count);
    for (char c : body) {
        if (c == '+')
            o.signs.push_back(1);
        else if (c == '-')
            o.signs.push_back(-1);
        else
            throw InputError(std::string("bad orientation sign '") + c + "'");
    }
    return o;
}

std::pair<int, int> directed_edge(const Triangulation& tri, const EdgeOrientation& o,
                                  int tet, int a, int b) {
    check_signs(tri, o);
    auto [u, v] = tri.edge_direction(tet, a, b);
    if (o.signs[size_t(tri.edge_class_of(tet, a, b))] < 0) std::swap(u, v);
    return {u, v};
}

bool face_is_cyclic(const Triangulation& tri, const EdgeOrientation& o,
                    const FaceEmbedding& f) {
    FaceDegrees d = face_degrees(tri, o, f);
    for (int v = 0; v < 4; ++v) {
        if (v == f.face) continue;
        if (d.in[size_t(v)] != 1 || d.out[size_t(v)] != 1) return false;
    }
    return true;
}

bool is_acyclic(const Triangulation& tri, const EdgeOrientation& o) {
    if (!tri.all_edges_orientable())
        throw DomainError("some edge class has no consistent direction transport");
    check_signs(tri, o);
    for (const FaceClass& fc : tri.face_classes())
        if (face_is_cyclic(tri, o, fc.canonical)) return false;
    return true;
}

std::pair<int, int> long_edge(const Triangulation& tri, const EdgeOrientation& o,
                              const FaceEmbedding& f) {
    FaceDegrees d = face_degrees(tri, o, f);
    int src = -1, snk = -1;
    for (int v = 0; v < 4; ++v) {
        if (v == f.face) continue;
        if (d.out[size_t(v)] == 2) src = v;
        if (d.in[size_t(v)] == 2) snk = v;
    }
    if (src == -1 || snk == -1) throw DomainError("cyclic face has no long edge");
    return {src, snk};
}

long long mixed_count(const Triangulation& tri, const EdgeOrientation& o,
                      int edge_class) {
    if (edge_class < 0 || size_t(edge_class) >= tri.edge_classes().size())
        throw DomainError("edge class index out of range");
    long long count = 0;
    for (const EdgeEmbedding& emb : tri.edge_classes()[size_t(edge_class)].embeddings) {
        int longs = 0;
        for (int f = 0; f < 4; ++f) {
            if (f == emb.a || f == emb.b) continue;
            auto [u, v] = long_edge(tri, o, {emb.tet, f});
            if ((u == emb.a && v == emb.b) || (u == emb.b && v == emb.a)) ++longs;
        }
        if (longs == 1) ++count;
    }
    return count;
}

std::vector<Int> euler_cochain(const Triangulation& tri, const EdgeOrientation& o) {
    std::vector<Int> phi;
    phi.reserve(tri.edge_classes().size());
    for (const EdgeClass& ec : tri.edge_classes()) {
        long long m = mixed_count(tri, o, ec.index);
        if (m % 2 != 0) throw DomainError("non-integral cochain");
        phi.push_back(Int(1) - Int(m / 2));
    }
    return phi;
}

EulerClassResult euler_class(const Triangulation& tri, const EdgeOrientation& o) {
    if (tri.kind() == Kind::ideal) throw DomainError("no dual 3-cells");
    EulerClassResult r;
    r.cochain = euler_cochain(tri, o);
    const ChainComplex& dual = tri.dual_complex();
    r.defect = dual.apply_coboundary(r.cochain, 2);
    r.cocycle_ok = true;
    for (const Int& d : r.defect)
        if (d != 0) r.cocycle_ok = false;
    if (r.cocycle_ok) {
        r.cls = dual.cocycle_class(r.cochain, 2);
        r.witness = dual.coboundary_witness(r.cochain, 2);
        r.is_zero = r.witness.has_value();
    }
    return r;
}

EnumerationResult enumerate_acyclic_orientations(
    const Triangulation& tri, long long limit,
    const std::function<void(const EdgeOrientation&)>& fn) {
    EnumerationResult result;
    if (!tri.all_edges_orientable()) return result;
    size_t n_e = tri.edge_classes().size();

    // A face becomes testable as soon as its largest edge class is assigned.
    std::vector<std::vector<const FaceEmbedding*>> by_trigger(n_e);
    for (const FaceClass& fc : tri.face_classes()) {
        const FaceEmbedding& emb = fc.canonical;
        int trigger = -1;
        for (int a = 0; a < 4; ++a) {
            if (a == emb.face) continue;
            for (int b = a + 1; b < 4; ++b) {
                if (b == emb.face) continue;
                trigger = std::max(trigger, tri.edge_class_of(emb.tet, a, b));
            }
        }
        by_trigger[size_t(trigger)].push_back(&fc.canonical);
    }

    EdgeOrientation o;
    o.signs.assign(n_e, 1);
    // Returns false to abort the whole enumeration.
    std::function<bool(size_t)> rec = [&](size_t j) -> bool {
        if (j == n_e) {
            if (limit > 0 && result.count == limit) {
                result.complete = false;
                return false;
            }
            ++result.count;
            if (fn) fn(o);
            return true;
        }
        for (int s : {1, -1}) {
            o.signs[j] = s;
            bool viable = true;
            for (const FaceEmbedding* emb : by_trigger[j])
                if (face_is_cyclic(tri, o, *emb)) {
                    viable = false;
                    break;
                }
            if (viable && !rec(j + 1)) return false;
        }
        o.signs[j] = 1;
        return true;
    };
    rec(0);
    return result;
}

}  // namespace eulergraph
