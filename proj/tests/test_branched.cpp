#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "eulergraph/branched.hpp"
#include "eulergraph/error.hpp"
#include "eulergraph/taut.hpp"
#include "eulergraph/triangulation.hpp"
#include "support.hpp"

using namespace eulergraph;
using testsupport::fixture_path;
using testsupport::load_fixture;

namespace {

Sector sector(long long chi, long long dc, int pos, int neg) {
    Sector s;
    s.chi = chi;
    s.dc = dc;
    s.region_pos = pos;
    s.region_neg = neg;
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("branched") {

TEST_CASE("maw Euler characteristic values") {
    CHECK(maw_euler_characteristic(sector(1, 0, 0, 0)) == 1);   // outward hexagon
    CHECK(maw_euler_characteristic(sector(1, 4, 0, 0)) == -1);  // outward rectangle
    CHECK(maw_euler_characteristic(sector(1, 6, 0, 0)) == -2);  // inward hexagon
    CHECK(maw_euler_characteristic(sector(2, 0, 0, 0)) == 2);   // sphere sector
    CHECK_THROWS_WITH_AS(maw_euler_characteristic(sector(1, 3, 0, 0)),
                         doctest::Contains("inconsistent corner data"), DomainError);
    CHECK_THROWS_AS(maw_euler_characteristic(sector(1, -2, 0, 0)), DomainError);
}

TEST_CASE("maw dual graph arcs follow the coorientation") {
    BranchedComplex bc;
    bc.regions = {Region{}, Region{}};
    bc.sectors = {sector(2, 0, 1, 0)};
    MawGraph g = maw_dual_graph(bc);
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0].from == 0);
    CHECK(g.arcs[0].to == 1);
    CHECK(g.arcs[0].weight == 2);
    CHECK(g.region_count == 2);
}

TEST_CASE("empty complex passes vacuously") {
    BranchedComplex bc;
    MawGraph g = maw_dual_graph(bc);
    CHECK(g.arcs.empty());
    CHECK(check_cycle(g, bc).ok);
}

TEST_CASE("single weight-two sector violates conservation at both regions") {
    BranchedComplex bc;
    bc.regions = {Region{}, Region{}};
    bc.sectors = {sector(2, 0, 1, 0)};
    CycleReport r = check_cycle(maw_dual_graph(bc), bc);
    CHECK(!r.ok);
    REQUIRE(r.regions.size() == 2);
    CHECK(!r.regions[0].ok);
    CHECK(!r.regions[1].ok);
    // region 0 sees out 2, in 0; region 1 the reverse; both expect 1
    CHECK(r.regions[0].out == 2);
    CHECK(r.regions[0].in == 0);
    CHECK(r.regions[1].in == 2);
    CHECK(r.regions[1].expected == 1);
}

TEST_CASE("flattened fixture satisfies the cycle law") {
    BranchedComplex bc = branched_from_json(slurp(fixture_path("fig8_branched_outward.json")));
    CycleReport r = check_cycle(maw_dual_graph(bc), bc);
    CHECK(r.ok);
    for (const auto& reg : r.regions) {
        CHECK(reg.in == 1);
        CHECK(reg.out == 1);
        CHECK(reg.expected == 1);
    }
}

TEST_CASE("flip is an involution and reverses the arc") {
    BranchedComplex bc = branched_from_json(slurp(fixture_path("fig8_branched_outward.json")));
    int rect = int(bc.sectors.size()) - 1;
    long long old_dc = bc.sectors[size_t(rect)].dc;
    BranchedComplex once = flip_sector_coorientation(bc, rect, 0);
    CHECK(once.sectors[size_t(rect)].region_pos == bc.sectors[size_t(rect)].region_neg);
    CHECK(once.sectors[size_t(rect)].region_neg == bc.sectors[size_t(rect)].region_pos);
    CHECK(once.sectors[size_t(rect)].dc == 0);
    BranchedComplex twice = flip_sector_coorientation(once, rect, old_dc);
    CHECK(branched_to_json(twice) == branched_to_json(bc));
    // a flipped rectangle breaks conservation
    CHECK(!check_cycle(maw_dual_graph(once), once).ok);
    CHECK_THROWS_WITH_AS(flip_sector_coorientation(bc, rect, std::nullopt),
                         doctest::Contains("missing flipped-corner data"), DomainError);
    CHECK_THROWS_AS(flip_sector_coorientation(bc, 99, 0), DomainError);
}

TEST_CASE("swap difference class") {
    HomologyClass delta;
    delta.basis = "b";
    delta.degree = 1;
    delta.free_coords = {Int(1)};
    // product disks never change the class
    CHECK(swap_difference_class(2, delta).is_zero());
    HomologyClass four = swap_difference_class(4, delta);
    REQUIRE(four.free_coords.size() == 1);
    CHECK(four.free_coords[0] == -2);
    // torsion residue 1 mod 5 under k=6: (2-6)*1 = -4 = 1 mod 5
    HomologyClass t;
    t.basis = "b";
    t.degree = 1;
    t.torsion_coords = {{Int(5), Int(1)}};
    HomologyClass six = swap_difference_class(6, t);
    REQUIRE(six.torsion_coords.size() == 1);
    CHECK(six.torsion_coords[0].second == 1);
    CHECK_THROWS_AS(swap_difference_class(3, delta), DomainError);
    CHECK_THROWS_AS(swap_difference_class(0, delta), DomainError);
}

TEST_CASE("swap difference is linear and scalar-consistent") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> modpick(0, 2);
    const long long mods[3] = {2, 5, 12};
    for (int n = 0; n < 100; ++n) {
        HomologyClass d;
        d.basis = "b";
        d.degree = 1;
        d.free_coords = {Int(entry(rng)), Int(entry(rng))};
        long long m = mods[modpick(rng)];
        Int residue = ((entry(rng) % m) + m) % m;
        d.torsion_coords = {{Int(m), residue}};
        CHECK(swap_difference_class(2, d).is_zero());
        for (long long k : {2ll, 4ll, 6ll, 8ll}) {
            HomologyClass got = swap_difference_class(k, d);
            HomologyClass want = d * Int(2 - k);
            CHECK(got == want);
        }
        // linearity in delta
        HomologyClass e;
        e.basis = "b";
        e.degree = 1;
        e.free_coords = {Int(entry(rng)), Int(entry(rng))};
        Int er = ((entry(rng) % m) + m) % m;
        e.torsion_coords = {{Int(m), er}};
        CHECK(swap_difference_class(6, d + e) ==
              swap_difference_class(6, d) + swap_difference_class(6, e));
    }
}

TEST_CASE("graph chain and class live in the ambient dual complex") {
    Triangulation tri = load_fixture("fig8.tri");
    BranchedComplex bc = branched_from_json(slurp(fixture_path("fig8_branched_outward.json")));
    const ChainComplex& dual = tri.dual_complex();
    MawGraph g = maw_dual_graph(bc);
    std::vector<Int> chain = graph_chain(g, bc, dual);
    CHECK(chain.size() == dual.dim(1));
    CHECK(dual.is_cycle(chain, 1));
    HomologyClass cls = graph_class(g, bc, dual);
    CHECK(cls.basis == dual.fingerprint() + "/h1");
    // a complex with no chain embeddings cannot be located
    BranchedComplex bare;
    bare.regions = {Region{}};
    bare.sectors = {sector(1, 0, 0, 0)};
    CHECK_THROWS_WITH_AS(graph_class(maw_dual_graph(bare), bare, dual),
                         doctest::Contains("chain embedding"), DomainError);
}

TEST_CASE("json round trip is bit exact") {
    for (const char* name : {"fig8_branched_outward.json", "fig8_branched_inward.json"}) {
        CAPTURE(name);
        std::string text = slurp(fixture_path(name));
        BranchedComplex bc = branched_from_json(text);
        CHECK(branched_to_json(bc) == text);
    }
}

TEST_CASE("json validation") {
    CHECK_THROWS_AS(branched_from_json("{"), InputError);
    CHECK_THROWS_AS(branched_from_json(R"({"boundary_coorientation":"sideways","sectors":[],"regions":[]})"),
                    InputError);
    CHECK_THROWS_AS(branched_from_json(R"({"boundary_coorientation":"outward","sectors":[],"regions":[],"extra":1})"),
                    InputError);
    // non-product region
    CHECK_THROWS_WITH_AS(
        branched_from_json(
            R"({"boundary_coorientation":"outward","sectors":[],"regions":[{"r_plus_chi":1,"r_minus_chi":2}]})"),
        doctest::Contains("not a product"), DomainError);
    // sector region out of range
    CHECK_THROWS_AS(
        branched_from_json(
            R"({"boundary_coorientation":"outward","sectors":[{"chi":1,"dc":0,"region_pos":3,"region_neg":0}],"regions":[{"r_plus_chi":1,"r_minus_chi":1}]})"),
        DomainError);
}

}  // TEST_SUITE
