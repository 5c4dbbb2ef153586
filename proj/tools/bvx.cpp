#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bvx/bench.hpp"
#include "bvx/dispatch.hpp"
#include "bvx/error.hpp"
#include "bvx/fixed.hpp"
#include "bvx/generators.hpp"
#include "bvx/hardness.hpp"
#include "bvx/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitPreconditionError = 2;

struct InstanceArgs {
    std::string graph_path;
    std::optional<std::string> costs_path, sites_path, td_path;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args) {
    cmd->add_option("--graph", args.graph_path, "instance file (p/e/c/s records)")->required();
    cmd->add_option("--costs", args.costs_path, "extra cost file (c records)");
    cmd->add_option("--sites", args.sites_path, "extra site file (s record)");
    cmd->add_option("--td", args.td_path, "tree decomposition file (PACE-style)");
}

void print_result_text(const bvx::SolveOutcome& outcome) {
    std::cout << "best_vertex=" << outcome.result.best_vertex
              << " best_load=" << bvx::fixed_to_decimal(outcome.result.best_load)
              << " algorithm=" << outcome.algorithm
              << " certified=" << (outcome.certified ? "yes" : "no") << "\n";
    for (const auto& [site, load] : outcome.result.site_loads) {
        std::cout << "  site " << site << " load " << bvx::fixed_to_decimal(load) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prioritized graph Voronoi diagrams and balanced new-site placement"};
    app.require_subcommand(1);

    InstanceArgs solve_args;
    std::string algorithm = "auto";
    bool assume_diam2 = false;
    bool as_json = false;
    auto* solve_cmd = app.add_subcommand("solve", "place one new site minimizing the max load");
    add_instance_options(solve_cmd, solve_args);
    solve_cmd->add_option("--algorithm", algorithm,
                          "auto|brute|clique|diam2|path|cycle|tree|treewidth|proper-interval");
    solve_cmd->add_flag("--assume-diam2", assume_diam2,
                        "trust the diameter-2 precondition when the check is over budget");
    solve_cmd->add_flag("--json", as_json, "emit JSON");

    InstanceArgs voronoi_args;
    bool voronoi_json = false;
    auto* voronoi_cmd = app.add_subcommand("voronoi", "print the prioritized Voronoi diagram");
    add_instance_options(voronoi_cmd, voronoi_args);
    voronoi_cmd->add_flag("--json", voronoi_json, "emit JSON");

    InstanceArgs validate_args;
    bool validate_json = false;
    int validate_budget = 600;
    auto* validate_cmd = app.add_subcommand("validate", "run structural diagnostics");
    add_instance_options(validate_cmd, validate_args);
    validate_cmd->add_flag("--json", validate_json, "emit JSON");
    validate_cmd->add_option("--all-pairs-budget", validate_budget,
                             "max n for the all-pairs checks");

    std::optional<std::string> hs_in;
    int gen_sets = 8;
    int gen_universe = 6;
    double gen_density = 0.3;
    std::uint64_t gen_seed = 1;
    std::optional<std::string> out_graph, out_hs;
    bool gen_json = false;
    auto* gen_cmd = app.add_subcommand(
        "gen-hs", "build a benchmark graph from a hitting-set instance (given or random)");
    gen_cmd->add_option("--hs", hs_in, "input instance JSON; omit to generate randomly");
    gen_cmd->add_option("--sets", gen_sets, "random instance: sets per list");
    gen_cmd->add_option("--universe", gen_universe, "random instance: universe size");
    gen_cmd->add_option("--density", gen_density, "random instance: element probability");
    gen_cmd->add_option("--seed", gen_seed, "random instance seed");
    gen_cmd->add_option("--out-graph", out_graph, "write the generated graph here");
    gen_cmd->add_option("--out-hs", out_hs, "write the generating instance JSON here");
    gen_cmd->add_flag("--json", gen_json, "emit a JSON summary");

    std::string bench_suites = "tree,brute-tree,cycle,proper-interval,partial-ktree,hardness";
    std::uint64_t bench_seed = 1;
    int bench_reps = 3;
    std::optional<std::string> bench_csv;
    auto* bench_cmd = app.add_subcommand("bench", "run the instance-ladder benchmark table");
    bench_cmd->add_option("--suites", bench_suites, "comma list of suites; empty for none");
    bench_cmd->add_option("--seed", bench_seed, "generator seed");
    bench_cmd->add_option("--reps", bench_reps, "repetitions per size");
    bench_cmd->add_option("--csv", bench_csv, "write CSV here (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            auto inst = bvx::load_instance(solve_args.graph_path, solve_args.costs_path,
                                           solve_args.sites_path, solve_args.td_path);
            bvx::SolveOptions options;
            options.algorithm = bvx::algorithm_from_name(algorithm);
            options.assume_diameter_two = assume_diam2;
            auto outcome = bvx::solve_instance(inst, options);
            if (as_json) {
                std::cout << bvx::solve_outcome_to_json(outcome) << "\n";
            } else {
                print_result_text(outcome);
            }
        } else if (voronoi_cmd->parsed()) {
            auto inst = bvx::load_instance(voronoi_args.graph_path, voronoi_args.costs_path,
                                           voronoi_args.sites_path, voronoi_args.td_path);
            auto diagram = bvx::prioritized_voronoi(inst.graph, inst.costs, inst.sites);
            if (voronoi_json) {
                std::cout << bvx::voronoi_to_json(inst.graph, inst.sites, diagram) << "\n";
            } else {
                for (bvx::Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
                    std::cout << v << " -> site " << inst.sites.at(diagram.owner[v]) << " (dist "
                              << diagram.dist[v] << ")\n";
                }
                std::cout << "max_load " << bvx::fixed_to_decimal(diagram.max_load) << "\n";
            }
        } else if (validate_cmd->parsed()) {
            auto inst = bvx::load_instance(validate_args.graph_path, validate_args.costs_path,
                                           validate_args.sites_path, validate_args.td_path);
            auto report = bvx::validate_instance(inst, validate_budget);
            if (validate_json) {
                std::cout << bvx::report_to_json(report) << "\n";
            } else {
                for (const auto& entry : report.entries) {
                    std::cout << (entry.pass ? "PASS " : "FAIL ") << entry.name;
                    if (!entry.detail.empty()) std::cout << " (" << entry.detail << ")";
                    std::cout << "\n";
                }
            }
            if (!report.all_pass) return kExitPreconditionError;
        } else if (gen_cmd->parsed()) {
            bvx::HSInstance inst;
            if (hs_in) {
                inst = bvx::hs_from_json(bvx::read_text_file(*hs_in));
            } else {
                std::mt19937_64 rng(gen_seed);
                inst = bvx::random_hs_instance(rng, gen_sets, gen_universe, gen_density);
            }
            auto hard = bvx::build_hardness_graph(inst);
            if (out_graph) {
                bvx::write_text_file(
                    *out_graph, bvx::instance_to_text(hard.graph, hard.costs, hard.sites,
                                                      hard.labels));
            }
            if (out_hs) bvx::write_text_file(*out_hs, bvx::hs_to_json(inst));
            std::ostringstream summary;
            if (gen_json) {
                summary << "{\n  \"vertices\": " << hard.graph.vertex_count()
                        << ",\n  \"edges\": " << hard.graph.edge_count()
                        << ",\n  \"sets\": " << hard.set_count << ",\n  \"t\": " << hard.t
                        << ",\n  \"threshold\": \"" << bvx::fixed_to_decimal(hard.threshold)
                        << "\",\n  \"thresholds_valid\": "
                        << (hard.thresholds_valid ? "true" : "false") << "\n}";
            } else {
                summary << "vertices=" << hard.graph.vertex_count()
                        << " edges=" << hard.graph.edge_count() << " sets=" << hard.set_count
                        << " t=" << hard.t << " threshold="
                        << bvx::fixed_to_decimal(hard.threshold)
                        << " thresholds_valid=" << (hard.thresholds_valid ? "yes" : "no");
            }
            std::cout << summary.str() << "\n";
        } else if (bench_cmd->parsed()) {
            bvx::BenchConfig config;
            config.seed = bench_seed;
            config.reps = bench_reps;
            std::string token;
            std::istringstream list(bench_suites);
            while (std::getline(list, token, ',')) {
                if (!token.empty()) config.suites.push_back(token);
            }
            auto rows = bvx::run_bench(config);
            auto csv = bvx::bench_to_csv(rows);
            if (bench_csv) {
                bvx::write_text_file(*bench_csv, csv);
            } else {
                std::cout << csv;
            }
        }
    } catch (const bvx::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPreconditionError;
    } catch (const bvx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
