#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "eulergraph/chain_complex.hpp"
#include "eulergraph/digest.hpp"
#include "eulergraph/error.hpp"
#include "eulergraph/matrix.hpp"

namespace eulergraph {

// Reports preserve insertion order so output bytes are stable.
using json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so no report ever goes through floating point.
inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() &&
        v <= std::numeric_limits<int64_t>::max())
        return json(int64_t(v));
    return json(v.str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<uint64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty()) throw InputError("empty integer literal");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw InputError("bad integer literal: " + s);
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw InputError("bad integer literal: " + s);
        return Int(s);
    }
    throw InputError("expected integer or decimal string");
}

inline json chain_to_json(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

inline std::vector<Int> chain_from_json(const json& j) {
    if (!j.is_array()) throw InputError("expected array of integers");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const json& x : j) v.push_back(int_from_json(x));
    return v;
}

inline json homology_class_to_json(const HomologyClass& c) {
    json j = json::object();
    j["basis"] = c.basis;
    j["cohomology"] = c.cohomology;
    j["degree"] = c.degree;
    j["free"] = chain_to_json(c.free_coords);
    json tors = json::array();
    for (const auto& [m, r] : c.torsion_coords)
        tors.push_back(json{{"modulus", int_to_json(m)}, {"residue", int_to_json(r)}});
    j["torsion"] = tors;
    return j;
}

inline HomologyClass homology_class_from_json(const json& j) {
    if (!j.is_object()) throw InputError("expected homology class object");
    HomologyClass c;
    if (j.contains("basis")) c.basis = j.at("basis").get<std::string>();
    if (j.contains("cohomology")) c.cohomology = j.at("cohomology").get<bool>();
    if (j.contains("degree")) c.degree = j.at("degree").get<int>();
    if (j.contains("free")) c.free_coords = chain_from_json(j.at("free"));
    if (j.contains("torsion")) {
        if (!j.at("torsion").is_array()) throw InputError("torsion must be an array");
        for (const json& t : j.at("torsion")) {
            Int m = int_from_json(t.at("modulus"));
            Int r = int_from_json(t.at("residue"));
            if (m < 2) throw InputError("torsion modulus must be >= 2");
            if (r < 0 || r >= m) throw InputError("torsion residue out of range");
            c.torsion_coords.emplace_back(std::move(m), std::move(r));
        }
    }
    return c;
}

// Canonical report rendering: two-space indent, trailing newline.
inline std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace eulergraph
