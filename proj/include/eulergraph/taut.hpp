#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "eulergraph/branched.hpp"
#include "eulergraph/triangulation.hpp"

namespace eulergraph {

// Per tetrahedron: the unordered pair of faces whose coorientation points out
// of the tetrahedron. The other two point inward. Angles follow: pi on the
// edge shared by the two outward faces and on the edge shared by the two
// inward faces, 0 on the other four.
struct TautStructure {
    std::vector<std::array<int, 2>> up;  // sorted pairs, one per tetrahedron

    std::string literal() const;  // "01 23 ..." two digits per tetrahedron
    static TautStructure from_literal(const std::string& s, int tet_count);
};

// Edge of the tetrahedron carrying angle pi between the two outward faces.
// This is the complement of the up pair.
std::pair<int, int> up_pi_edge(const TautStructure& ts, int tet);
// Edge carrying angle pi between the two inward faces: the up pair itself.
std::pair<int, int> down_pi_edge(const TautStructure& ts, int tet);

struct TautViolation {
    std::string what;  // "face coorientation" or "edge angle"
    int index = -1;    // face class or edge class
};

struct TautReport {
    bool ok = false;
    std::vector<TautViolation> violations;
};

// Ideal triangulations only. Checks face coorientation consistency across
// every gluing and angle sum 2 pi (exactly two pi corners) per edge class.
TautReport check_taut(const Triangulation& tri, const TautStructure& ts);

// Exhaustive lexicographic enumeration over per-tet up pairs with
// constraint propagation. Returns all taut structures in literal order.
std::vector<TautStructure> find_taut_structures(const Triangulation& tri);

// Signed sum of dual edges, one per face class, oriented by the coorientation
// (from the tetrahedron the face points out of, into the other). Checks two
// in, two out at every dual vertex and that the chain is a cycle.
std::vector<Int> dual_graph_G(const Triangulation& tri, const TautStructure& ts);

enum class FanSide { canonical, alternate };

// Branched complex of the flattened taut structure: one hexagon sector per
// face class, one rectangle sector per edge class, one product ball region
// per tetrahedron. Corner counts depend on the boundary coorientation:
//   outward: hexagons dc 0, rectangles dc 4
//   inward:  hexagons dc 6, rectangles dc 0
// Rectangle arcs run along one side of the edge's link fan between the two
// pi-corner tetrahedra; side is the one whose first crossed face embedding
// is lexicographically least (FanSide::alternate picks the other side).
BranchedComplex flatten(const Triangulation& tri, const TautStructure& ts,
                        BoundaryCoorientation co = BoundaryCoorientation::outward,
                        FanSide side = FanSide::canonical);

struct LackenbyResult {
    std::vector<Int> gamma_plus, gamma_minus, g, beta;  // chains on dual edges
    HomologyClass gamma_plus_class, gamma_minus_class, g_class, beta_class;
    bool chain_identity_plus = false;   // gamma_plus = g + beta exactly
    bool chain_identity_minus = false;  // gamma_minus = -2 g - beta exactly
    bool difference_bounds = false;     // gamma_plus - gamma_minus is a boundary
    bool double_class_relation = false; // 2 [gamma_plus] + [g] = 0
    bool cycle_law = false;             // conservation value 1 on the outward complex
    bool ok = false;
};

// Runs the whole pipeline for one taut structure and verifies every relation
// exactly; chain identities as chains, class relations in homology.
LackenbyResult lackenby_classes(const Triangulation& tri, const TautStructure& ts,
                                FanSide side = FanSide::canonical);

}  // namespace eulergraph
