#pragma once

#include <optional>

#include "eulergraph/branched.hpp"
#include "eulergraph/json_util.hpp"
#include "eulergraph/orientations.hpp"
#include "eulergraph/taut.hpp"
#include "eulergraph/triangulation.hpp"

namespace eulergraph::reports {

// Command-specific report bodies shared by the CLI and the python module.
// Every body carries an "ok" flag; callers wrap it in their own envelope.
json validate_report(const Triangulation& tri);
json homology_report(const Triangulation& tri, std::optional<int> k);
json orient_enum_report(const Triangulation& tri, long long limit, bool count_only);
json euler_dunfield_report(const Triangulation& tri, const EdgeOrientation& o);
json taut_find_report(const Triangulation& tri);
json taut_euler_report(const Triangulation& tri, const TautStructure& ts);
json maw_graph_report(const BranchedComplex& bc);
json swap_report(long long k, const HomologyClass& delta);

}  // namespace eulergraph::reports
