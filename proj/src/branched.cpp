#include "eulergraph/branched.hpp"

#include <utility>

#include "eulergraph/error.hpp"
#include "eulergraph/json_util.hpp"

namespace eulergraph {

Int maw_euler_characteristic(const Sector& s) {
    if (s.dc < 0 || s.dc % 2 != 0) throw DomainError("inconsistent corner data");
    return Int(s.chi) - Int(s.dc / 2);
}

MawGraph maw_dual_graph(const BranchedComplex& bc) {
    MawGraph g;
    g.region_count = bc.regions.size();
    for (size_t i = 0; i < bc.sectors.size(); ++i) {
        const Sector& s = bc.sectors[i];
        if (s.region_pos < 0 || size_t(s.region_pos) >= g.region_count ||
            s.region_neg < 0 || size_t(s.region_neg) >= g.region_count)
            throw DomainError("sector region out of range at sector " +
                              std::to_string(i));
        g.arcs.push_back({int(i), s.region_neg, s.region_pos,
                          maw_euler_characteristic(s)});
    }
    return g;
}

CycleReport check_cycle(const MawGraph& g, const BranchedComplex& bc) {
    CycleReport report;
    report.ok = true;
    std::vector<Int> in(g.region_count), out(g.region_count);
    for (const MawArc& a : g.arcs) {
        out[size_t(a.from)] += a.weight;
        in[size_t(a.to)] += a.weight;
    }
    for (size_t r = 0; r < g.region_count; ++r) {
        RegionBalance b;
        b.region = int(r);
        b.in = in[r];
        b.out = out[r];
        b.expected = Int(bc.regions[r].r_plus_chi);
        b.ok = (b.in == b.expected && b.out == b.expected);
        if (!b.ok) report.ok = false;
        report.regions.push_back(std::move(b));
    }
    return report;
}

BranchedComplex flip_sector_coorientation(const BranchedComplex& bc, int sector,
                                          std::optional<long long> new_dc) {
    if (sector < 0 || size_t(sector) >= bc.sectors.size())
        throw DomainError("sector index out of range");
    if (!new_dc) throw DomainError("missing flipped-corner data");
    if (*new_dc < 0 || *new_dc % 2 != 0) throw DomainError("inconsistent corner data");
    BranchedComplex out = bc;
    Sector& s = out.sectors[size_t(sector)];
    std::swap(s.region_pos, s.region_neg);
    s.dc = *new_dc;
    if (s.chain)
        for (auto& [cell, coeff] : *s.chain) coeff = -coeff;
    return out;
}

HomologyClass swap_difference_class(long long k, const HomologyClass& delta) {
    if (k < 2 || k % 2 != 0)
        throw DomainError("intersection count must be even and at least 2");
    return delta * Int(2 - k);
}

std::vector<Int> graph_chain(const MawGraph& g, const BranchedComplex& bc,
                             const ChainComplex& complex) {
    std::vector<Int> chain(complex.dim(1));
    for (const MawArc& a : g.arcs) {
        const Sector& s = bc.sectors[size_t(a.sector)];
        if (!s.chain)
            throw DomainError("sector has no chain embedding: sector " +
                              std::to_string(a.sector));
        for (const auto& [cell, coeff] : *s.chain) {
            if (cell < 0 || size_t(cell) >= chain.size())
                throw DomainError("chain cell out of range: sector " +
                                  std::to_string(a.sector));
            chain[size_t(cell)] += a.weight * coeff;
        }
    }
    return chain;
}

HomologyClass graph_class(const MawGraph& g, const BranchedComplex& bc,
                          const ChainComplex& complex) {
    return complex.cycle_class(graph_chain(g, bc, complex), 1);
}

namespace {

long long int64_field(const json& j, const char* key) {
    if (!j.contains(key))
        throw InputError(std::string("missing key '") + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw InputError(std::string("key '") + key + "' must be an integer");
    return v.get<long long>();
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const char* where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok)
            throw InputError(std::string("unknown key '") + key + "' in " + where);
    }
}

}  // namespace

std::string branched_to_json(const BranchedComplex& bc) {
    json j = json::object();
    j["boundary_coorientation"] =
        bc.boundary_coorientation == BoundaryCoorientation::outward ? "outward"
                                                                    : "inward";
    json sectors = json::array();
    for (const Sector& s : bc.sectors) {
        json js = json::object();
        js["chi"] = s.chi;
        js["dc"] = s.dc;
        js["region_pos"] = s.region_pos;
        js["region_neg"] = s.region_neg;
        if (s.chain) {
            json jc = json::array();
            for (const auto& [cell, coeff] : *s.chain)
                jc.push_back(json::array({json(cell), int_to_json(coeff)}));
            js["chain"] = jc;
        }
        sectors.push_back(js);
    }
    j["sectors"] = sectors;
    json regions = json::array();
    for (const Region& r : bc.regions) {
        json jr = json::object();
        jr["r_plus_chi"] = r.r_plus_chi;
        jr["r_minus_chi"] = r.r_minus_chi;
        regions.push_back(jr);
    }
    j["regions"] = regions;
    return dump_report(j);
}

BranchedComplex branched_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("branched complex must be a JSON object");
    reject_unknown_keys(j, {"boundary_coorientation", "sectors", "regions"},
                        "branched complex");
    BranchedComplex bc;
    if (!j.contains("boundary_coorientation"))
        throw InputError("missing key 'boundary_coorientation'");
    const json& co = j.at("boundary_coorientation");
    if (co == "outward")
        bc.boundary_coorientation = BoundaryCoorientation::outward;
    else if (co == "inward")
        bc.boundary_coorientation = BoundaryCoorientation::inward;
    else
        throw InputError("boundary_coorientation must be 'outward' or 'inward'");
    if (!j.contains("sectors") || !j.at("sectors").is_array())
        throw InputError("missing or non-array 'sectors'");
    if (!j.contains("regions") || !j.at("regions").is_array())
        throw InputError("missing or non-array 'regions'");
    for (const json& jr : j.at("regions")) {
        if (!jr.is_object()) throw InputError("region must be an object");
        reject_unknown_keys(jr, {"r_plus_chi", "r_minus_chi"}, "region");
        Region r;
        r.r_plus_chi = int64_field(jr, "r_plus_chi");
        r.r_minus_chi = int64_field(jr, "r_minus_chi");
        if (r.r_plus_chi != r.r_minus_chi)
            throw DomainError("region is not a product: r_plus_chi != r_minus_chi");
        bc.regions.push_back(r);
    }
    for (const json& js : j.at("sectors")) {
        if (!js.is_object()) throw InputError("sector must be an object");
        reject_unknown_keys(js, {"chi", "dc", "region_pos", "region_neg", "chain"},
                            "sector");
        Sector s;
        s.chi = int64_field(js, "chi");
        s.dc = int64_field(js, "dc");
        s.region_pos = int(int64_field(js, "region_pos"));
        s.region_neg = int(int64_field(js, "region_neg"));
        if (s.region_pos < 0 || size_t(s.region_pos) >= bc.regions.size() ||
            s.region_neg < 0 || size_t(s.region_neg) >= bc.regions.size())
            throw DomainError("sector region out of range");
        if (js.contains("chain")) {
            if (!js.at("chain").is_array())
                throw InputError("sector chain must be an array");
            std::vector<std::pair<int, Int>> chain;
            for (const json& e : js.at("chain")) {
                if (!e.is_array() || e.size() != 2)
                    throw InputError("chain entry must be a [cell, coefficient] pair");
                if (!e.at(0).is_number_integer() && !e.at(0).is_number_unsigned())
                    throw InputError("chain cell must be an integer");
                chain.emplace_back(e.at(0).get<int>(), int_from_json(e.at(1)));
            }
            s.chain = std::move(chain);
        }
        bc.sectors.push_back(std::move(s));
    }
    return bc;
}

}  // namespace eulergraph
