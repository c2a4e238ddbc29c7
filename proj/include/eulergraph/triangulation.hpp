#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "eulergraph/chain_complex.hpp"
#include "eulergraph/perm.hpp"

namespace eulergraph {

// Face i of a tetrahedron is the face opposite vertex i.
// The six edges of a tetrahedron in index order:
//   (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
inline constexpr std::array<std::pair<int, int>, 6> kEdges = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

int edge_index(int a, int b);  // unordered lookup into kEdges

struct Gluing {
    int tet = -1;  // target tetrahedron
    Perm4 perm;    // acts on vertex labels; face f maps to face perm[f]
};

struct FaceEmbedding {
    int tet = -1;
    int face = -1;
    bool operator==(const FaceEmbedding&) const = default;
    auto operator<=>(const FaceEmbedding&) const = default;
};

struct EdgeEmbedding {
    int tet = -1;
    // Ordered endpoints: the direction transported around the link from the
    // canonical embedding. For a class with orientable_flag false this is the
    // direction at first visit only.
    int a = -1, b = -1;
};

struct EdgeClass {
    int index = -1;
    std::vector<EdgeEmbedding> embeddings;  // in link walk order, canonical first
    std::vector<FaceEmbedding> link_cycle;  // face crossed leaving embedding i
    bool orientable_flag = true;
    size_t degree() const { return embeddings.size(); }
    const EdgeEmbedding& canonical() const { return embeddings.front(); }
};

struct FaceClass {
    int index = -1;
    FaceEmbedding canonical;  // lexicographically least of the two
    FaceEmbedding partner;
};

enum class LinkType { sphere, torus };

struct VertexClass {
    int index = -1;
    std::vector<std::pair<int, int>> corners;  // (tet, vertex)
    long long link_chi = 0;
    LinkType link = LinkType::sphere;
};

enum class Kind { closed, ideal };

class Triangulation {
public:
    // Builds all derived structure and validates. Throws InputError for
    // malformed tables and DomainError for semantic violations
    // (duplicate or missing gluings, degenerate self-gluings,
    // non-orientability, bad vertex links).
    Triangulation(int tet_count, std::vector<std::array<Gluing, 4>> gluings);

    int tet_count() const { return tet_count_; }
    Kind kind() const { return kind_; }
    const Gluing& gluing(int tet, int face) const;
    int orientation(int tet) const { return tet_orientation_[size_t(tet)]; }

    const std::vector<EdgeClass>& edge_classes() const { return edges_; }
    const std::vector<FaceClass>& face_classes() const { return faces_; }
    const std::vector<VertexClass>& vertex_classes() const { return vertices_; }

    int edge_class_of(int tet, int a, int b) const;
    int face_class_of(int tet, int face) const;
    int vertex_class_of(int tet, int v) const;
    // Transported direction of edge {a,b} of tet under the positive class sign.
    std::pair<int, int> edge_direction(int tet, int a, int b) const;

    bool all_edges_orientable() const;

    // Dual cell chain complex: C0 on tetrahedra, C1 on face classes,
    // C2 on edge classes, and for closed kind C3 on vertex classes.
    const ChainComplex& dual_complex() const;

private:
    void build_orientations();
    void build_face_classes();
    void build_edge_classes();
    void build_vertex_classes();
    void build_dual_complex();

    int tet_count_;
    std::vector<std::array<Gluing, 4>> glu_;
    std::vector<int> tet_orientation_;
    Kind kind_ = Kind::closed;
    std::vector<EdgeClass> edges_;
    std::vector<FaceClass> faces_;
    std::vector<VertexClass> vertices_;
    std::vector<std::array<int, 6>> edge_class_of_;       // by tet, edge index
    std::vector<std::array<std::pair<int, int>, 6>> edge_dir_;  // transported (a,b)
    std::vector<std::array<int, 4>> face_class_of_;
    std::vector<std::array<int, 4>> vertex_class_of_;
    std::shared_ptr<ChainComplex> dual_;
};

// Text format:
//   tri <N>
//   glue <t> <f> -> <t'> <p>     (2N lines, one per unordered face pair)
// '#' starts a comment. Throws InputError with line numbers for syntax
// problems; DomainError for semantic violations.
Triangulation parse_triangulation(std::istream& in);
Triangulation parse_triangulation_file(const std::string& path);
Triangulation parse_triangulation_text(const std::string& text);

}  // namespace eulergraph
