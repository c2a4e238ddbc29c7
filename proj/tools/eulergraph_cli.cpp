#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eulergraph/digest.hpp"
#include "eulergraph/error.hpp"
#include "eulergraph/reports.hpp"

using namespace eulergraph;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json file_input(const std::string& path, const std::string& text) {
    return json{{"path", path}, {"fnv1a64", fnv1a64_hex(text)}};
}

long long threads_requested() {
    const char* env = std::getenv("EULERGRAPH_THREADS");
    if (!env) return 0;
    std::string s(env);
    if (s.empty() || s.size() > 9)
        throw InputError("EULERGRAPH_THREADS must be a nonnegative integer");
    long long v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw InputError("EULERGRAPH_THREADS must be a nonnegative integer");
        v = v * 10 + (c - '0');
    }
    return v;
}

json envelope(const std::string& command, const json& inputs, const json& body,
              long long threads) {
    json j = json::object();
    j["command"] = command;
    j["inputs"] = inputs;
    // Verification passes are sequential; the cap is parsed, validated and
    // echoed so callers relying on it get an honest effective value.
    j["threads"] = json{{"requested", threads}, {"effective", 1}};
    for (const auto& [k, v] : body.items()) j[k] = v;
    j["exit"] = body.at("ok").get<bool>() ? 0 : 1;
    return j;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_human(const json& j, const std::string& prefix) {
    for (const auto& [key, value] : j.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            render_human(value, name);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            std::cout << name << ":\n";
            std::vector<std::string> cols;
            for (const auto& [ck, cv] : value.front().items()) cols.push_back(ck);
            std::vector<size_t> width(cols.size());
            for (size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
            std::vector<std::vector<std::string>> rows;
            for (const json& row : value) {
                std::vector<std::string> cells;
                for (size_t c = 0; c < cols.size(); ++c) {
                    std::string cell = row.contains(cols[c])
                                           ? scalar_text(row.at(cols[c]))
                                           : "";
                    width[c] = std::max(width[c], cell.size());
                    cells.push_back(std::move(cell));
                }
                rows.push_back(std::move(cells));
            }
            std::cout << " ";
            for (size_t c = 0; c < cols.size(); ++c)
                std::cout << " " << cols[c]
                          << std::string(width[c] - cols[c].size(), ' ');
            std::cout << "\n";
            for (const auto& cells : rows) {
                std::cout << " ";
                for (size_t c = 0; c < cols.size(); ++c)
                    std::cout << " " << cells[c]
                              << std::string(width[c] - cells[c].size(), ' ');
                std::cout << "\n";
            }
        } else {
            std::cout << name << ": " << scalar_text(value) << "\n";
        }
    }
}

int emit(const json& report, bool human) {
    if (human)
        render_human(report, "");
    else
        std::cout << dump_report(report);
    return report.at("exit").get<int>();
}

int fail(const char* type, const std::string& message, bool human, int code) {
    json err = json{{"error", json{{"type", type}, {"message", message}}},
                    {"exit", code}};
    return emit(err, human);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"taut structures, branched surfaces and Euler classes of "
                 "triangulated 3-manifolds"};
    app.require_subcommand(1);

    struct {
        std::string tri, branched, orient, taut, delta;
        std::optional<int> k_hom;
        long long k_swap = 0, limit = 0;
        bool count_only = false, human = false;
    } args;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_flag("--human", args.human, "render tables instead of JSON");
        cmd->add_flag("--json", "emit JSON (the default)");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a triangulation");
    validate->add_option("tri", args.tri, "triangulation file")->required();
    add_format(validate);

    CLI::App* homology = app.add_subcommand("homology", "homology of the dual complex");
    homology->add_option("tri", args.tri, "triangulation file")->required();
    int k_value = 0;
    CLI::Option* k_opt = homology->add_option("--k", k_value, "single degree to report");
    add_format(homology);

    CLI::App* orient = app.add_subcommand("orient", "edge orientation operations");
    orient->require_subcommand(1);
    CLI::App* orient_enum = orient->add_subcommand("enum", "enumerate acyclic orientations");
    orient_enum->add_option("tri", args.tri, "triangulation file")->required();
    orient_enum->add_option("--limit", args.limit, "stop after N orientations (0 = no limit)")
        ->check(CLI::NonNegativeNumber);
    orient_enum->add_flag("--count-only", args.count_only, "omit the literal list");
    add_format(orient_enum);

    CLI::App* euler = app.add_subcommand("euler", "Euler class computations");
    euler->require_subcommand(1);
    CLI::App* dunfield = euler->add_subcommand(
        "dunfield", "Euler cochain and class of an acyclic edge orientation");
    dunfield->add_option("tri", args.tri, "triangulation file")->required();
    dunfield->add_option("--orient", args.orient, "orientation literal, one +/- per edge class")
        ->required();
    add_format(dunfield);

    CLI::App* taut = app.add_subcommand("taut", "taut structure operations");
    taut->require_subcommand(1);
    CLI::App* taut_find = taut->add_subcommand("find", "enumerate taut structures");
    taut_find->add_option("tri", args.tri, "triangulation file")->required();
    add_format(taut_find);
    CLI::App* taut_euler = taut->add_subcommand(
        "euler", "flatten a taut structure and verify the dual-graph relations");
    taut_euler->add_option("tri", args.tri, "triangulation file")->required();
    taut_euler->add_option("--taut", args.taut, "taut structure literal, e.g. \"01 23\"")
        ->required();
    add_format(taut_euler);

    CLI::App* maw = app.add_subcommand("maw", "branched complex operations");
    maw->require_subcommand(1);
    CLI::App* maw_graph = maw->add_subcommand("graph", "maw dual graph and cycle check");
    maw_graph->add_option("branched", args.branched, "branched complex JSON file")
        ->required();
    add_format(maw_graph);

    CLI::App* swap = app.add_subcommand("swap", "difference class of a suture swap");
    swap->add_option("--k", args.k_swap, "intersection count, even and >= 2")->required();
    swap->add_option("--delta", args.delta,
                     "difference class: JSON class object or array of free coordinates")
        ->required();
    add_format(swap);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("input", e.what(), false, 2);
    }

    try {
        long long threads = threads_requested();
        if (validate->parsed()) {
            std::string text = read_file(args.tri);
            Triangulation tri = parse_triangulation_text(text);
            json inputs = json{{"tri", file_input(args.tri, text)}};
            return emit(envelope("validate", inputs, reports::validate_report(tri), threads),
                        args.human);
        }
        if (homology->parsed()) {
            std::string text = read_file(args.tri);
            Triangulation tri = parse_triangulation_text(text);
            json inputs = json{{"tri", file_input(args.tri, text)}};
            std::optional<int> k;
            if (k_opt->count() > 0) k = k_value;
            return emit(envelope("homology", inputs, reports::homology_report(tri, k), threads),
                        args.human);
        }
        if (orient_enum->parsed()) {
            std::string text = read_file(args.tri);
            Triangulation tri = parse_triangulation_text(text);
            json inputs = json{{"tri", file_input(args.tri, text)}};
            return emit(envelope("orient enum", inputs, reports::orient_enum_report(tri, args.limit,
                                                             args.count_only), threads),
                        args.human);
        }
        if (dunfield->parsed()) {
            std::string text = read_file(args.tri);
            Triangulation tri = parse_triangulation_text(text);
            json inputs = json{{"tri", file_input(args.tri, text)}};
            EdgeOrientation o =
                EdgeOrientation::from_literal(args.orient, tri.edge_classes().size());
            return emit(envelope("euler dunfield", inputs, reports::euler_dunfield_report(tri, o), threads),
                        args.human);
        }
        if (taut_find->parsed()) {
            std::string text = read_file(args.tri);
            Triangulation tri = parse_triangulation_text(text);
            json inputs = json{{"tri", file_input(args.tri, text)}};
            return emit(envelope("taut find", inputs, reports::taut_find_report(tri), threads),
                        args.human);
        }
        if (taut_euler->parsed()) {
            std::string text = read_file(args.tri);
            Triangulation tri = parse_triangulation_text(text);
            json inputs = json{{"tri", file_input(args.tri, text)}};
            TautStructure ts = TautStructure::from_literal(args.taut, tri.tet_count());
            return emit(envelope("taut euler", inputs, reports::taut_euler_report(tri, ts), threads),
                        args.human);
        }
        if (maw_graph->parsed()) {
            std::string text = read_file(args.branched);
            BranchedComplex bc = branched_from_json(text);
            json inputs = json{{"branched", file_input(args.branched, text)}};
            return emit(envelope("maw graph", inputs, reports::maw_graph_report(bc), threads),
                        args.human);
        }
        if (swap->parsed()) {
            json dj;
            try {
                dj = json::parse(args.delta);
            } catch (const nlohmann::json::exception& e) {
                throw InputError(std::string("bad --delta JSON: ") + e.what());
            }
            HomologyClass delta;
            if (dj.is_array())
                delta.free_coords = chain_from_json(dj);
            else
                delta = homology_class_from_json(dj);
            return emit(envelope("swap", json::object(),
                                 reports::swap_report(args.k_swap, delta), threads),
                        args.human);
        }
    } catch (const InputError& e) {
        return fail("input", e.what(), args.human, 2);
    } catch (const DomainError& e) {
        return fail("domain", e.what(), args.human, 1);
    }
    return 2;
}
