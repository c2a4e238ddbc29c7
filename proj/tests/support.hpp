#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// recompute values by different algorithms than the library (subset-DP
// determinants, gcd-of-minors invariant factors, exhaustive scans) so the
// two routes only agree when both are right.

#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eulergraph/matrix.hpp"
#include "eulergraph/orientations.hpp"
#include "eulergraph/triangulation.hpp"

namespace testsupport {

using eulergraph::Int;
using eulergraph::IntMatrix;
using eulergraph::Triangulation;

std::string fixture_dir();
std::string fixture_path(const std::string& name);
Triangulation load_fixture(const std::string& file);
const nlohmann::json& manifest();

// Uniform random matrix with dims in [1, max_dim] and entries in
// [-max_entry, max_entry].
IntMatrix random_matrix(std::mt19937_64& rng, int max_dim, int max_entry);

// Exact determinant by dynamic programming over column subsets (Laplace
// expansion with memoization); no elimination, no divisions.
Int det_subset_dp(const IntMatrix& m);

// Rank over Q by fraction-free cross-multiplication echelon (no divisions).
size_t rank_crossmult(const IntMatrix& m);

// Invariant factors (including 1s, excluding zeros) via gcd of k x k minors:
// s_k = d_k / d_(k-1) with d_k the gcd of all k x k minors.
std::vector<Int> invariant_factors_by_minors(const IntMatrix& m);

struct H1Oracle {
    size_t rank = 0;
    std::vector<Int> torsion;  // factors > 1
};

// H1 of the dual complex from first principles: rank = dim ker d1 - rank d2
// with ranks by cross-multiplication echelon; torsion = invariant factors of
// d2 by gcd-of-minors (the torsion of coker d2 equals the torsion of H1
// because C0 is torsion free).
H1Oracle h1_by_minors(const Triangulation& tri);

// All acyclic orientation literals by exhaustive scan of the 2^E sign
// vectors, testing every face embedding with a direct in/out degree count.
std::vector<std::string> brute_acyclic_literals(const Triangulation& tri);

// All taut structure literals by exhaustive scan of the 6^T up-pair
// assignments, checking coorientation consistency at every face class and
// exactly two pi corners at every edge class.
std::vector<std::string> brute_taut_literals(const Triangulation& tri);

// Mixed incidences of one edge class recounted from scratch: per embedding,
// decide for each of the two incident faces whether the edge is its long
// edge by in/out degrees at the three face vertices.
long long mixed_recount(const Triangulation& tri, const eulergraph::EdgeOrientation& o,
                        int edge_class);

}  // namespace testsupport
