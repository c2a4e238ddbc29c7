#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "eulergraph/branched.hpp"
#include "eulergraph/error.hpp"
#include "eulergraph/orientations.hpp"
#include "support.hpp"

using namespace eulergraph;
using testsupport::brute_acyclic_literals;
using testsupport::load_fixture;
using testsupport::manifest;
using testsupport::mixed_recount;

namespace {

std::vector<std::string> enumerate_literals(const Triangulation& tri, long long limit = 0) {
    std::vector<std::string> out;
    enumerate_acyclic_orientations(tri, limit,
                                   [&](const EdgeOrientation& o) { out.push_back(o.literal()); });
    return out;
}

}  // namespace

TEST_SUITE("orientations") {

TEST_CASE("enumeration matches the manifest on every fixture") {
    for (const auto& [name, m] : manifest().items()) {
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        auto expected = m["acyclic_orientations"].get<std::vector<std::string>>();
        CHECK(enumerate_literals(tri) == expected);
    }
}

TEST_CASE("enumeration equals the exhaustive two-power scan") {
    for (const auto& [name, m] : manifest().items()) {
        if (m["edge_classes"].get<int>() > 12) continue;
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        CHECK(enumerate_literals(tri) == brute_acyclic_literals(tri));
    }
}

TEST_CASE("global edge reversal is an involution on the output") {
    for (const auto& [name, m] : manifest().items()) {
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        auto lits = enumerate_literals(tri);
        CHECK(lits.size() % 2 == 0);
        std::set<std::string> all(lits.begin(), lits.end());
        for (const auto& lit : lits) {
            std::string flipped = lit;
            for (char& c : flipped) c = c == '+' ? '-' : '+';
            CHECK(all.count(flipped) == 1);
        }
    }
}

TEST_CASE("limit semantics") {
    Triangulation tri = load_fixture("fig8.tri");  // four acyclic orientations
    auto two = enumerate_literals(tri, 2);
    CHECK(two.size() == 2);
    EnumerationResult r2 = enumerate_acyclic_orientations(tri, 2, {});
    CHECK(r2.count == 2);
    CHECK(!r2.complete);
    // a limit equal to the true count is exhausted, not truncated
    EnumerationResult r4 = enumerate_acyclic_orientations(tri, 4, {});
    CHECK(r4.count == 4);
    CHECK(r4.complete);
    EnumerationResult all = enumerate_acyclic_orientations(tri, 0, {});
    CHECK(all.count == 4);
    CHECK(all.complete);
}

TEST_CASE("a fixture whose face is always cyclic has no orientations") {
    Triangulation tri = load_fixture("closed_cyclic_face.tri");
    CHECK(manifest()["closed_cyclic_face"]["always_cyclic_face"] == true);
    EnumerationResult r = enumerate_acyclic_orientations(tri, 0, {});
    CHECK(r.count == 0);
    CHECK(r.complete);
}

TEST_CASE("literal round trip and validation") {
    Triangulation tri = load_fixture("fig8.tri");
    EdgeOrientation o = EdgeOrientation::from_literal("+-", 2);
    CHECK(o.literal() == "+-");
    CHECK(EdgeOrientation::from_literal("orient +-", 2).literal() == "+-");
    CHECK_THROWS_AS(EdgeOrientation::from_literal("+", 2), InputError);
    CHECK_THROWS_AS(EdgeOrientation::from_literal("+x", 2), InputError);
}

TEST_CASE("long edges exist exactly for acyclic faces") {
    Triangulation tri = load_fixture("fig8.tri");
    for (const auto& lit : manifest()["fig8"]["acyclic_orientations"]) {
        EdgeOrientation o = EdgeOrientation::from_literal(lit, 2);
        REQUIRE(is_acyclic(tri, o));
        for (const auto& fc : tri.face_classes()) {
            CHECK(!face_is_cyclic(tri, o, fc.canonical));
            auto [src, snk] = long_edge(tri, o, fc.canonical);
            CHECK(src != snk);
            // the long edge direction agrees with the orientation
            auto [a, b] = directed_edge(tri, o, fc.canonical.tet, src, snk);
            CHECK(a == src);
            CHECK(b == snk);
        }
    }
}

TEST_CASE("mixed counts match the manifest and the independent recount") {
    for (const auto& [name, m] : manifest().items()) {
        if (!m.contains("mixed_counts")) continue;
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        size_t e = tri.edge_classes().size();
        for (const auto& [lit, counts] : m["mixed_counts"].items()) {
            EdgeOrientation o = EdgeOrientation::from_literal(lit, e);
            auto expected = counts.get<std::vector<long long>>();
            for (size_t i = 0; i < e; ++i) {
                CHECK(mixed_count(tri, o, int(i)) == expected[i]);
                CHECK(mixed_recount(tri, o, int(i)) == expected[i]);
            }
        }
    }
}

TEST_CASE("euler cochain values follow the half-mixed formula") {
    for (const auto& [name, m] : manifest().items()) {
        if (!m.contains("mixed_counts")) continue;
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        size_t e = tri.edge_classes().size();
        for (const auto& [lit, counts] : m["mixed_counts"].items()) {
            EdgeOrientation o = EdgeOrientation::from_literal(lit, e);
            std::vector<Int> phi = euler_cochain(tri, o);
            auto mixed = counts.get<std::vector<long long>>();
            REQUIRE(phi.size() == e);
            for (size_t i = 0; i < e; ++i) {
                CHECK(mixed[i] % 2 == 0);
                CHECK(phi[i] == 1 - mixed[i] / 2);
            }
        }
    }
}

TEST_CASE("cochain values equal maw Euler characteristics of dual sectors") {
    // same number through two code paths: phi(e) from the orientation module,
    // chi - dc/2 with dc = mixed(e) from the branched module
    for (const auto& [name, m] : manifest().items()) {
        if (!m.contains("mixed_counts")) continue;
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        size_t e = tri.edge_classes().size();
        for (const auto& [lit, counts] : m["mixed_counts"].items()) {
            EdgeOrientation o = EdgeOrientation::from_literal(lit, e);
            std::vector<Int> phi = euler_cochain(tri, o);
            for (size_t i = 0; i < e; ++i) {
                Sector s;
                s.chi = 1;
                s.dc = mixed_count(tri, o, int(i));
                s.region_pos = s.region_neg = 0;
                CHECK(maw_euler_characteristic(s) == phi[i]);
            }
        }
    }
}

TEST_CASE("cocycle verdicts match the manifest") {
    for (const auto& [name, m] : manifest().items()) {
        if (!m.contains("cocycle")) continue;
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        size_t e = tri.edge_classes().size();
        for (const auto& [lit, ok] : m["cocycle"].items()) {
            EdgeOrientation o = EdgeOrientation::from_literal(lit, e);
            EulerClassResult r = euler_class(tri, o);
            CAPTURE(lit);
            CHECK(r.cocycle_ok == ok.get<bool>());
            if (!r.cocycle_ok) {
                bool nonzero = false;
                for (const Int& v : r.defect) nonzero = nonzero || v != 0;
                CHECK(nonzero);
            } else {
                for (const Int& v : r.defect) CHECK(v == 0);
                if (r.is_zero) {
                    REQUIRE(r.witness.has_value());
                    CHECK(tri.dual_complex().apply_coboundary(*r.witness, 1) == r.cochain);
                }
            }
        }
    }
}

TEST_CASE("euler class on the one-vertex sphere fixture") {
    // H^2(S^3) = 0: every acyclic orientation gives the zero class with witness
    Triangulation tri = load_fixture("s3_onevertex.tri");
    for (const auto& lit : manifest()["s3_onevertex"]["acyclic_orientations"]) {
        EdgeOrientation o =
            EdgeOrientation::from_literal(lit, tri.edge_classes().size());
        EulerClassResult r = euler_class(tri, o);
        REQUIRE(r.cocycle_ok);
        CHECK(r.is_zero);
        REQUIRE(r.witness.has_value());
        CHECK(tri.dual_complex().apply_coboundary(*r.witness, 1) == r.cochain);
    }
}

TEST_CASE("euler class requires a closed triangulation") {
    Triangulation tri = load_fixture("fig8.tri");
    EdgeOrientation o = EdgeOrientation::from_literal("++", 2);
    CHECK_THROWS_WITH_AS(euler_class(tri, o), doctest::Contains("no dual 3-cells"),
                         DomainError);
}

TEST_CASE("non-acyclic orientations are detected") {
    for (const auto& [name, m] : manifest().items()) {
        if (m["edge_classes"].get<int>() > 10) continue;
        CAPTURE(name);
        Triangulation tri = load_fixture(m["file"]);
        size_t e = tri.edge_classes().size();
        auto good = m["acyclic_orientations"].get<std::set<std::string>>();
        for (unsigned long long bits = 0; bits < (1ull << e); ++bits) {
            std::string lit;
            for (size_t i = 0; i < e; ++i)
                lit += ((bits >> (e - 1 - i)) & 1) ? '-' : '+';
            EdgeOrientation o = EdgeOrientation::from_literal(lit, e);
            CHECK(is_acyclic(tri, o) == (good.count(lit) == 1));
        }
    }
}

}  // TEST_SUITE
