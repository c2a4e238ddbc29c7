#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulergraph/chain_complex.hpp"
#include "eulergraph/triangulation.hpp"

namespace eulergraph {

// Sign per edge class: +1 keeps the canonical direction, -1 reverses it.
// Only defined when every edge class transports its direction consistently
// around its link.
struct EdgeOrientation {
    std::vector<int> signs;

    std::string literal() const;  // "+-+..." in edge class index order
    static EdgeOrientation from_literal(const std::string& s, size_t edge_count);
};

// Direction of edge {a,b} of a tetrahedron under the orientation.
std::pair<int, int> directed_edge(const Triangulation& tri, const EdgeOrientation& o,
                                  int tet, int a, int b);

// A face is cyclic when its three directed edges form a directed triangle.
bool face_is_cyclic(const Triangulation& tri, const EdgeOrientation& o,
                    const FaceEmbedding& f);
bool is_acyclic(const Triangulation& tri, const EdgeOrientation& o);

// The unique source-to-sink edge of an acyclic face, as local endpoints.
std::pair<int, int> long_edge(const Triangulation& tri, const EdgeOrientation& o,
                              const FaceEmbedding& f);

// Number of edge embeddings of the class that are the long edge of exactly
// one of the two incident faces of their tetrahedron.
long long mixed_count(const Triangulation& tri, const EdgeOrientation& o,
                      int edge_class);

// phi(e) = 1 - mixed(e)/2 per edge class.
// Throws DomainError("non-integral cochain") if some count is odd.
std::vector<Int> euler_cochain(const Triangulation& tri, const EdgeOrientation& o);

struct EulerClassResult {
    std::vector<Int> cochain;
    bool cocycle_ok = false;
    std::vector<Int> defect;  // coboundary of the cochain, one entry per dual 3-cell
    HomologyClass cls;        // degree 2 cohomology of the dual complex; valid iff cocycle_ok
    bool is_zero = false;
    std::optional<std::vector<Int>> witness;  // primitive if the class vanishes
};

// Closed triangulations only. Checks the cocycle condition against the dual
// complex (vacuous for one-vertex triangulations) and locates the class.
EulerClassResult euler_class(const Triangulation& tri, const EdgeOrientation& o);

// Lexicographic backtracking over sign vectors, '+' before '-', pruning a
// prefix as soon as some fully assigned face is cyclic. Calls fn for each
// acyclic orientation; stops after limit hits (0 = no limit). Returns the
// number of orientations produced and whether the stream was exhausted.
struct EnumerationResult {
    long long count = 0;
    bool complete = true;
};
EnumerationResult enumerate_acyclic_orientations(
    const Triangulation& tri, long long limit,
    const std::function<void(const EdgeOrientation&)>& fn);

}  // namespace eulergraph
