// ehp - edge-Hosoya polynomials and Wiener-type edge indices of benzenoid
// chains, computed by brute-force line-graph distances, by the annelation
// recurrence, or by the polyacene closed formula.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehp/cli.hpp"
#include "ehp/poly.hpp"

namespace {

// Exit codes: 0 ok, 1 verification mismatch, 2 usage/parse, 3 overflow.
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;

int run(int argc, char** argv) {
    CLI::App app{"edge-Hosoya polynomial toolkit for benzenoid chains"};
    app.require_subcommand(1);

    std::string spec_text;
    std::string method_name = "recurrence";
    std::string format = "text";
    std::string emit_graph;
    int index_width = 128;

    CLI::App* compute = app.add_subcommand(
        "compute", "Polynomial and indices of one chain, e.g. ehp compute 4:SS");
    compute->add_option("spec", spec_text, "chain spec, h[:turns] with turns over {L,S,R}")
        ->required();
    compute->add_option("--method", method_name, "oracle | recurrence | closed-form")
        ->check(CLI::IsMember({"oracle", "recurrence", "closed-form"}));
    compute->add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    compute->add_option("--emit-graph", emit_graph, "write the chain's edge list to this path");
    compute->add_option("--index-width", index_width,
                        "index accumulator width in bits (64 exercises the overflow contract)")
        ->check(CLI::IsMember({64, 128}));

    int max_h = ehp::kDefaultVerifyMaxH;
    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check oracle, recurrence and closed form on every chain up to max-h");
    verify->add_option("--max-h", max_h, "largest hexagon count to check (default 7)");

    std::vector<int> bench_h;
    std::string bench_method;
    int oracle_cap = 60;
    CLI::App* bench = app.add_subcommand("bench", "Time the three methods on linear chains");
    bench->add_option("hexagons", bench_h, "hexagon counts")->required();
    bench->add_option("--method", bench_method, "restrict to one method")
        ->check(CLI::IsMember({"oracle", "recurrence", "closed-form"}));
    bench->add_option("--oracle-cap", oracle_cap, "skip the oracle above this h (default 60)");
    bench->add_option("--index-width", index_width, "index accumulator width in bits")
        ->check(CLI::IsMember({64, 128}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (compute->parsed()) {
        ehp::ComputeOptions options;
        options.spec_text = spec_text;
        options.method = *ehp::parse_method(method_name);
        options.narrow_indices = index_width == 64;
        options.emit_graph_path = emit_graph;
        ehp::Report report = ehp::run_compute(options);
        std::cout << (format == "json" ? ehp::render_json(report) : ehp::render_text(report));
        return kExitOk;
    }

    if (verify->parsed()) {
        ehp::VerifySummary summary = ehp::run_verify(max_h, ehp::verify_cap());
        std::cout << "chains checked: " << summary.chains_checked << "\n"
                  << "failures:       " << summary.failures << "\n";
        for (const std::string& witness : summary.witnesses) {
            std::cout << "mismatch at:    " << witness << "\n";
        }
        return summary.failures == 0 ? kExitOk : kExitMismatch;
    }

    ehp::BenchOptions options;
    options.h_values = bench_h;
    if (!bench_method.empty()) options.only_method = ehp::parse_method(bench_method);
    options.oracle_cap = oracle_cap;
    options.narrow_indices = index_width == 64;
    std::cout << ehp::render_bench_table(ehp::run_bench(options));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ehp::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
}
