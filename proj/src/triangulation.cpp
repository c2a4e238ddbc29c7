#include "eulergraph/triangulation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "eulergraph/error.hpp"

namespace eulergraph {

int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int i = 0; i < 6; ++i)
        if (kEdges[size_t(i)].first == a && kEdges[size_t(i)].second == b) return i;
    throw DomainError("bad edge endpoints (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
}

Triangulation::Triangulation(int tet_count, std::vector<std::array<Gluing, 4>> gluings)
    : tet_count_(tet_count), glu_(std::move(gluings)) {
    if (tet_count_ <= 0) throw InputError("tetrahedron count must be positive");
    if (glu_.size() != size_t(tet_count_))
        throw InputError("gluing table size does not match tetrahedron count");
    for (int t = 0; t < tet_count_; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glu_[size_t(t)][size_t(f)];
            if (g.tet == -1)
                throw DomainError("unglued face: tetrahedron " + std::to_string(t) +
                                  " face " + std::to_string(f));
            if (g.tet < 0 || g.tet >= tet_count_)
                throw InputError("gluing target out of range at tetrahedron " +
                                 std::to_string(t) + " face " + std::to_string(f));
        }
    for (int t = 0; t < tet_count_; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glu_[size_t(t)][size_t(f)];
            int f2 = g.perm[f];
            if (g.tet == t && f2 == f)
                throw DomainError("face glued to itself: tetrahedron " +
                                  std::to_string(t) + " face " + std::to_string(f));
            const Gluing& back = glu_[size_t(g.tet)][size_t(f2)];
            if (back.tet != t || !(back.perm == g.perm.inverse()))
                throw DomainError("conflicting gluings between tetrahedron " +
                                  std::to_string(t) + " face " + std::to_string(f) +
                                  " and tetrahedron " + std::to_string(g.tet) +
                                  " face " + std::to_string(f2));
        }
    build_orientations();
    build_face_classes();
    build_edge_classes();
    build_vertex_classes();
    build_dual_complex();
}

const Gluing& Triangulation::gluing(int tet, int face) const {
    if (tet < 0 || tet >= tet_count_ || face < 0 || face > 3)
        throw DomainError("tetrahedron or face index out of range");
    return glu_[size_t(tet)][size_t(face)];
}

void Triangulation::build_orientations() {
    // A gluing permutation is odd exactly when both tetrahedra can carry the
    // reference orientation, so propagate o(t2) = -o(t) * sign(p).
    tet_orientation_.assign(size_t(tet_count_), 0);
    for (int start = 0; start < tet_count_; ++start) {
        if (tet_orientation_[size_t(start)] != 0) continue;
        tet_orientation_[size_t(start)] = 1;
        std::vector<int> stack = {start};
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = glu_[size_t(t)][size_t(f)];
                int want = -tet_orientation_[size_t(t)] * g.perm.sign();
                int& o2 = tet_orientation_[size_t(g.tet)];
                if (o2 == 0) {
                    o2 = want;
                    stack.push_back(g.tet);
                } else if (o2 != want) {
                    throw DomainError("triangulation is not orientable");
                }
            }
        }
    }
}

void Triangulation::build_face_classes() {
    face_class_of_.assign(size_t(tet_count_), {-1, -1, -1, -1});
    for (int t = 0; t < tet_count_; ++t)
        for (int f = 0; f < 4; ++f) {
            if (face_class_of_[size_t(t)][size_t(f)] != -1) continue;
            const Gluing& g = glu_[size_t(t)][size_t(f)];
            int f2 = g.perm[f];
            FaceClass fc;
            fc.index = int(faces_.size());
            fc.canonical = {t, f};
            fc.partner = {g.tet, f2};
            face_class_of_[size_t(t)][size_t(f)] = fc.index;
            face_class_of_[size_t(g.tet)][size_t(f2)] = fc.index;
            faces_.push_back(fc);
        }
}

void Triangulation::build_edge_classes() {
    edge_class_of_.assign(size_t(tet_count_), {-1, -1, -1, -1, -1, -1});
    edge_dir_.assign(size_t(tet_count_),
                     std::array<std::pair<int, int>, 6>{});
    for (int t0 = 0; t0 < tet_count_; ++t0)
        for (int ei0 = 0; ei0 < 6; ++ei0) {
            if (edge_class_of_[size_t(t0)][size_t(ei0)] != -1) continue;
            int a0 = kEdges[size_t(ei0)].first, b0 = kEdges[size_t(ei0)].second;
            EdgeClass ec;
            ec.index = int(edges_.size());
            int t = t0, a = a0, b = b0;
            while (true) {
                int ei = edge_index(a, b);
                bool same_direction_start = (t == t0 && a == a0 && b == b0);
                if (!same_direction_start || ec.embeddings.empty()) {
                    if (edge_class_of_[size_t(t)][size_t(ei)] != -1) {
                        // Back at the start slot with reversed direction: the
                        // link transport does not orient the edge. Impossible
                        // once global orientability has passed, kept as a
                        // defensive diagnostic.
                        if (t == t0 && ei == ei0) {
                            ec.orientable_flag = false;
                            break;
                        }
                        throw DomainError("edge orbit collision at tetrahedron " +
                                          std::to_string(t));
                    }
                    edge_class_of_[size_t(t)][size_t(ei)] = ec.index;
                    edge_dir_[size_t(t)][size_t(ei)] = {a, b};
                    ec.embeddings.push_back({t, a, b});
                } else {
                    break;
                }
                int x = -1, y = -1;
                for (int v = 0; v < 4; ++v) {
                    if (v == a || v == b) continue;
                    if (x == -1)
                        x = v;
                    else
                        y = v;
                }
                int c = tuple_sign(a, b, x, y) == tet_orientation_[size_t(t)] ? x : y;
                ec.link_cycle.push_back({t, c});
                const Gluing& g = glu_[size_t(t)][size_t(c)];
                int na = g.perm[a], nb = g.perm[b];
                t = g.tet;
                a = na;
                b = nb;
            }
            edges_.push_back(std::move(ec));
        }
}

void Triangulation::build_vertex_classes() {
    vertex_class_of_.assign(size_t(tet_count_), {-1, -1, -1, -1});
    for (int t0 = 0; t0 < tet_count_; ++t0)
        for (int v0 = 0; v0 < 4; ++v0) {
            if (vertex_class_of_[size_t(t0)][size_t(v0)] != -1) continue;
            VertexClass vc;
            vc.index = int(vertices_.size());
            std::vector<std::pair<int, int>> stack = {{t0, v0}};
            vertex_class_of_[size_t(t0)][size_t(v0)] = vc.index;
            while (!stack.empty()) {
                auto [t, v] = stack.back();
                stack.pop_back();
                vc.corners.push_back({t, v});
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const Gluing& g = glu_[size_t(t)][size_t(f)];
                    int t2 = g.tet, v2 = g.perm[v];
                    if (vertex_class_of_[size_t(t2)][size_t(v2)] == -1) {
                        vertex_class_of_[size_t(t2)][size_t(v2)] = vc.index;
                        stack.push_back({t2, v2});
                    }
                }
            }
            std::sort(vc.corners.begin(), vc.corners.end());
            vertices_.push_back(std::move(vc));
        }

    // Vertex link Euler characteristic by corner counting: link vertices are
    // edge-end orbits, link edges are glued corner-triangle sides (3F/2),
    // link faces are the F corner triangles.
    std::map<std::tuple<int, int, int>, int> end_index;
    int n_end = 0;
    for (int t = 0; t < tet_count_; ++t)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                if (a == b || end_index.count({t, a, b})) continue;
                std::vector<std::tuple<int, int, int>> stack = {{t, a, b}};
                end_index[{t, a, b}] = n_end;
                while (!stack.empty()) {
                    auto [ct, ca, cb] = stack.back();
                    stack.pop_back();
                    for (int f = 0; f < 4; ++f) {
                        if (f == ca || f == cb) continue;
                        const Gluing& g = glu_[size_t(ct)][size_t(f)];
                        std::tuple<int, int, int> nxt = {g.tet, g.perm[ca], g.perm[cb]};
                        if (!end_index.count(nxt)) {
                            end_index[nxt] = n_end;
                            stack.push_back(nxt);
                        }
                    }
                }
                ++n_end;
            }
    std::vector<std::vector<bool>> ends_at(vertices_.size(),
                                           std::vector<bool>(size_t(n_end), false));
    for (const auto& [end, e] : end_index) {
        auto [t, a, b] = end;
        ends_at[size_t(vertex_class_of_[size_t(t)][size_t(a)])][size_t(e)] = true;
    }
    bool any_sphere = false, any_torus = false;
    for (VertexClass& vc : vertices_) {
        long long f_count = (long long)(vc.corners.size());
        if ((3 * f_count) % 2 != 0)
            throw DomainError("vertex link is not a closed surface at class " +
                              std::to_string(vc.index));
        long long ends = 0;
        for (bool hit : ends_at[size_t(vc.index)])
            if (hit) ++ends;
        vc.link_chi = ends - (3 * f_count) / 2 + f_count;
        if (vc.link_chi == 2) {
            vc.link = LinkType::sphere;
            any_sphere = true;
        } else if (vc.link_chi == 0) {
            vc.link = LinkType::torus;
            any_torus = true;
        } else {
            throw DomainError("vertex link is neither a sphere nor a torus (chi=" +
                              std::to_string(vc.link_chi) + " at class " +
                              std::to_string(vc.index) + ")");
        }
    }
    if (any_sphere && any_torus)
        throw DomainError("mixed sphere and torus vertex links");
    kind_ = any_torus ? Kind::ideal : Kind::closed;
}

void Triangulation::build_dual_complex() {
    size_t n_t = size_t(tet_count_);
    size_t n_f = faces_.size();
    size_t n_e = edges_.size();
    IntMatrix d1(n_t, n_f);
    for (const FaceClass& fc : faces_) {
        d1.at(size_t(fc.partner.tet), size_t(fc.index)) += 1;
        d1.at(size_t(fc.canonical.tet), size_t(fc.index)) -= 1;
    }
    IntMatrix d2(n_f, n_e);
    for (const EdgeClass& ec : edges_)
        for (const FaceEmbedding& cr : ec.link_cycle) {
            const FaceClass& fc = faces_[size_t(face_class_of_[size_t(cr.tet)][size_t(cr.face)])];
            d2.at(size_t(fc.index), size_t(ec.index)) += fc.canonical == cr ? 1 : -1;
        }
    if (kind_ == Kind::closed) {
        size_t n_v = vertices_.size();
        IntMatrix d3(n_e, n_v);
        for (const EdgeClass& ec : edges_) {
            const EdgeEmbedding& can = ec.canonical();
            d3.at(size_t(ec.index),
                  size_t(vertex_class_of_[size_t(can.tet)][size_t(can.b)])) += 1;
            d3.at(size_t(ec.index),
                  size_t(vertex_class_of_[size_t(can.tet)][size_t(can.a)])) -= 1;
        }
        dual_ = std::make_shared<ChainComplex>(
            std::vector<size_t>{n_t, n_f, n_e, n_v},
            std::vector<IntMatrix>{d1, d2, d3});
    } else {
        dual_ = std::make_shared<ChainComplex>(std::vector<size_t>{n_t, n_f, n_e},
                                               std::vector<IntMatrix>{d1, d2});
    }
}

int Triangulation::edge_class_of(int tet, int a, int b) const {
    if (tet < 0 || tet >= tet_count_)
        throw DomainError("tetrahedron index out of range");
    return edge_class_of_[size_t(tet)][size_t(edge_index(a, b))];
}

int Triangulation::face_class_of(int tet, int face) const {
    if (tet < 0 || tet >= tet_count_ || face < 0 || face > 3)
        throw DomainError("tetrahedron or face index out of range");
    return face_class_of_[size_t(tet)][size_t(face)];
}

int Triangulation::vertex_class_of(int tet, int v) const {
    if (tet < 0 || tet >= tet_count_ || v < 0 || v > 3)
        throw DomainError("tetrahedron or vertex index out of range");
    return vertex_class_of_[size_t(tet)][size_t(v)];
}

std::pair<int, int> Triangulation::edge_direction(int tet, int a, int b) const {
    if (tet < 0 || tet >= tet_count_)
        throw DomainError("tetrahedron index out of range");
    return edge_dir_[size_t(tet)][size_t(edge_index(a, b))];
}

bool Triangulation::all_edges_orientable() const {
    for (const EdgeClass& ec : edges_)
        if (!ec.orientable_flag) return false;
    return true;
}

const ChainComplex& Triangulation::dual_complex() const { return *dual_; }

namespace {

int parse_nonneg(const std::string& s, const char* what, int line) {
    if (s.empty() || s.size() > 9)
        throw InputError(std::string("bad ") + what + " '" + s + "' (line " +
                         std::to_string(line) + ")");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw InputError(std::string("bad ") + what + " '" + s + "' (line " +
                             std::to_string(line) + ")");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Triangulation parse_triangulation(std::istream& in) {
    std::vector<std::pair<std::vector<std::string>, int>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::vector<std::string> toks;
        std::string w;
        while (ss >> w) toks.push_back(w);
        if (!toks.empty()) rows.push_back({std::move(toks), lineno});
    }
    if (rows.empty()) throw InputError("empty triangulation input");

    const auto& [head, head_line] = rows.front();
    if (head[0] != "tri" || head.size() != 2)
        throw InputError("expected 'tri <N>' header (line " +
                         std::to_string(head_line) + ")");
    int n = parse_nonneg(head[1], "tetrahedron count", head_line);
    if (n <= 0)
        throw InputError("tetrahedron count must be positive (line " +
                         std::to_string(head_line) + ")");
    if (rows.size() - 1 != size_t(2 * n))
        throw InputError("expected " + std::to_string(2 * n) + " glue lines, got " +
                         std::to_string(rows.size() - 1));

    std::vector<std::array<Gluing, 4>> glu(static_cast<size_t>(n));
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& [toks, ln] = rows[r];
        if (toks[0] != "glue" || toks.size() != 6 || toks[3] != "->")
            throw InputError("expected 'glue <t> <f> -> <t2> <perm>' (line " +
                             std::to_string(ln) + ")");
        int t = parse_nonneg(toks[1], "tetrahedron index", ln);
        int f = parse_nonneg(toks[2], "face index", ln);
        int t2 = parse_nonneg(toks[4], "tetrahedron index", ln);
        Perm4 p;
        try {
            p = Perm4::from_digits(toks[5]);
        } catch (const InputError& e) {
            throw InputError(std::string(e.what()) + " (line " + std::to_string(ln) +
                             ")");
        }
        if (t >= n || t2 >= n)
            throw InputError("tetrahedron index out of range (line " +
                             std::to_string(ln) + ")");
        if (f > 3)
            throw InputError("face index out of range (line " + std::to_string(ln) +
                             ")");
        int f2 = p[f];
        if (t2 == t && f2 == f)
            throw DomainError("face glued to itself (line " + std::to_string(ln) +
                              ")");
        if (glu[size_t(t)][size_t(f)].tet != -1 ||
            glu[size_t(t2)][size_t(f2)].tet != -1)
            throw DomainError("duplicate or conflicting gluing for tetrahedron " +
                              std::to_string(t) + " face " + std::to_string(f) +
                              " (line " + std::to_string(ln) + ")");
        glu[size_t(t)][size_t(f)] = {t2, p};
        glu[size_t(t2)][size_t(f2)] = {t, p.inverse()};
    }
    return Triangulation(n, std::move(glu));
}

Triangulation parse_triangulation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    return parse_triangulation(in);
}

Triangulation parse_triangulation_text(const std::string& text) {
    std::istringstream in(text);
    return parse_triangulation(in);
}

}  // namespace eulergraph
