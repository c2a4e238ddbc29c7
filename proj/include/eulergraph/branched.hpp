#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulergraph/chain_complex.hpp"
#include "eulergraph/matrix.hpp"

namespace eulergraph {

enum class BoundaryCoorientation { outward, inward };

// One sector of a cooriented branched surface. dc counts the double corners
// of the boundary: corners where the maw field points inward on one incident
// arc and outward on the other. Always even for consistent corner data.
struct Sector {
    long long chi = 0;
    long long dc = 0;
    int region_pos = -1;  // complementary region on the positive side
    int region_neg = -1;
    // Optional arc of the sector in an ambient complex, as a sparse degree-1
    // chain oriented from region_neg to region_pos.
    std::optional<std::vector<std::pair<int, Int>>> chain;
};

// Complementary region with product structure: r_plus_chi = chi(R+),
// r_minus_chi = chi(R-); equal for product balls.
struct Region {
    long long r_plus_chi = 1;
    long long r_minus_chi = 1;
};

struct BranchedComplex {
    BoundaryCoorientation boundary_coorientation = BoundaryCoorientation::outward;
    std::vector<Sector> sectors;
    std::vector<Region> regions;
};

struct MawArc {
    int sector = -1;
    int from = -1;  // region_neg
    int to = -1;    // region_pos
    Int weight;     // maw Euler characteristic of the sector
};

struct MawGraph {
    std::vector<MawArc> arcs;
    size_t region_count = 0;
};

struct RegionBalance {
    int region = -1;
    Int in, out, expected;
    bool ok = false;
};

struct CycleReport {
    std::vector<RegionBalance> regions;
    bool ok = false;
};

// chi - dc/2. Throws DomainError("inconsistent corner data") for odd dc.
Int maw_euler_characteristic(const Sector& s);

// One arc per sector, oriented by the coorientation, weighted by the maw
// Euler characteristic.
MawGraph maw_dual_graph(const BranchedComplex& bc);

// Conservation at every region: in-weight = out-weight = r_plus_chi.
CycleReport check_cycle(const MawGraph& g, const BranchedComplex& bc);

// Swaps region_pos/region_neg of one sector. The corner count of the flipped
// sector cannot be derived from the old one, so the caller supplies it.
BranchedComplex flip_sector_coorientation(const BranchedComplex& bc, int sector,
                                          std::optional<long long> new_dc);

// (2 - k) * delta. k must be even and >= 2. k = 2 gives the zero class.
HomologyClass swap_difference_class(long long k, const HomologyClass& delta);

// Weighted arc sum as a 1-cycle in the ambient complex, then its class.
// Every sector needs a chain embedding; the sum must be a cycle.
HomologyClass graph_class(const MawGraph& g, const BranchedComplex& bc,
                          const ChainComplex& complex);

// Dense weighted chain of the graph in the ambient complex.
std::vector<Int> graph_chain(const MawGraph& g, const BranchedComplex& bc,
                             const ChainComplex& complex);

// Bit-exact JSON round trip, stable key order.
std::string branched_to_json(const BranchedComplex& bc);
BranchedComplex branched_from_json(const std::string& text);

}  // namespace eulergraph
