#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hmc/cli.hpp"

namespace {

std::optional<std::string> opt(const std::string& s) { return s.empty() ? std::nullopt : std::optional(s); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypermap-homology codes: construction, CNOT basis changes and surface-code conversion"};
    app.require_subcommand(1);

    std::string hypermap, special, basis_change, out, out_graph, dot, intermediate_dot, matrix, stabilizer, graph,
        first, second;
    bool reduce = false;
    bool distance = false;

    auto* info = app.add_subcommand("info", "Orbit counts, genus and default special darts of a hypermap");
    info->add_option("hypermap", hypermap, "Hypermap JSON file")->required();

    auto* build = app.add_subcommand("build", "Build the stabilizer matrices of a hypermap code");
    build->add_option("hypermap", hypermap, "Hypermap JSON file")->required();
    build->add_option("--special", special, "Comma separated special darts, e.g. 3,7");
    build->add_option("--basis-change", basis_change, "Invertible matrix T; basis B' = T B");
    build->add_flag("--reduce", reduce, "Drop dependent generator rows");
    build->add_flag("--distance", distance, "Run the brute-force distance oracle");
    build->add_option("--out", out, "Stabilizer output file (default: stdout)");

    auto* to_surface = app.add_subcommand("to-surface", "Convert a canonical hypermap code to a surface graph");
    to_surface->add_option("hypermap", hypermap, "Hypermap JSON file")->required();
    to_surface->add_option("--special", special, "Comma separated special darts");
    to_surface->add_option("--out-graph", out_graph, "Surface graph JSON output (default: stdout)");
    to_surface->add_option("--dot", dot, "DOT rendering of the surface graph");
    to_surface->add_option("--intermediate-dot", intermediate_dot,
                           "DOT rendering of the graph before special edges are removed");

    auto* from_graph = app.add_subcommand("from-graph", "Turn a rotation graph into a hypermap with special darts");
    from_graph->add_option("graph", graph, "Rotation graph JSON file")->required();
    from_graph->add_option("--out", out, "Hypermap JSON output (default: stdout)");
    from_graph->add_option("--dot", dot, "DOT rendering of the input graph");

    auto* verify = app.add_subcommand("verify", "Check the hypermap code against its surface code");
    verify->add_option("hypermap", hypermap, "Hypermap JSON file")->required();
    verify->add_option("--special", special, "Comma separated special darts");
    verify->add_flag("--distance", distance, "Also report distances");

    auto* decompose = app.add_subcommand("decompose", "CNOT circuit for an invertible basis change");
    decompose->add_option("matrix", matrix, "Matrix text file")->required();

    auto* dist = app.add_subcommand("distance", "Brute-force distance of a stabilizer file");
    dist->add_option("stabilizer", stabilizer, "Stabilizer block file")->required();

    auto* compare = app.add_subcommand("compare", "Compare the stabilizers of two code sources");
    compare->add_option("first", first, "Stabilizer, hypermap, surface graph or rotation graph file")->required();
    compare->add_option("second", second, "Stabilizer, hypermap, surface graph or rotation graph file")->required();
    compare->add_option("--special", special, "Special darts for hypermap inputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    namespace cli = hmc::cli;
    cli::CommandOutcome outcome;
    if (*info) {
        outcome = cli::cmd_info(hypermap);
    } else if (*build) {
        outcome = cli::cmd_build({hypermap, opt(special), opt(basis_change), reduce, distance, opt(out)});
    } else if (*to_surface) {
        outcome = cli::cmd_to_surface({hypermap, opt(special), opt(out_graph), opt(dot), opt(intermediate_dot)});
    } else if (*from_graph) {
        outcome = cli::cmd_from_graph({graph, opt(out), opt(dot)});
    } else if (*verify) {
        outcome = cli::cmd_verify({hypermap, opt(special), distance});
    } else if (*decompose) {
        outcome = cli::cmd_decompose(matrix);
    } else if (*dist) {
        outcome = cli::cmd_distance(stabilizer);
    } else if (*compare) {
        outcome = cli::cmd_compare({first, second, opt(special)});
    }
    (outcome.exit_code == 2 ? std::cerr : std::cout) << outcome.report;
    return outcome.exit_code;
}
