#include "ehp/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ehp/oracle.hpp"
#include "ehp/polyacene.hpp"
#include "ehp/recurrence.hpp"

namespace ehp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Polynomial compute_polynomial(const ChainSpec& spec, Method method,
                              const BenzenoidGraph* graph) {
    switch (method) {
        case Method::kOracle: return oracle::edge_hosoya(graph->graph);
        case Method::kRecurrence: return chain_edge_hosoya(spec);
        case Method::kClosedForm: return polyacene::edge_hosoya(spec.hexagons);
    }
    throw std::logic_error("compute_polynomial: bad method");
}

std::uint64_t fnv1a(const Polynomial& p) {
    std::uint64_t hash = 14695981039346656037ULL;
    auto mix = [&hash](std::uint64_t value) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (value >> (8 * byte)) & 0xff;
            hash *= 1099511628211ULL;
        }
    };
    mix(p.coeffs().size());
    for (std::uint64_t c : p.coeffs()) mix(c);
    return hash;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::kOracle: return "oracle";
        case Method::kRecurrence: return "recurrence";
        case Method::kClosedForm: return "closed-form";
    }
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "oracle") return Method::kOracle;
    if (name == "recurrence") return Method::kRecurrence;
    if (name == "closed-form") return Method::kClosedForm;
    return std::nullopt;
}

Report run_compute(const ComputeOptions& options) {
    auto start = Clock::now();
    Report report;
    report.spec_text = options.spec_text;
    report.spec = parse_spec(options.spec_text);
    report.method = options.method;

    if (options.method == Method::kClosedForm && !report.spec.is_linear()) {
        throw std::invalid_argument("closed-form method requires a linear (all-S) chain");
    }

    BenzenoidGraph graph = build_graph(report.spec);
    if (graph.overlapping) {
        report.warnings.push_back(
            "geometric self-overlap: distinct vertices share lattice coordinates "
            "(helicene-like chain); the abstract graph is still a valid chain");
    }
    if (!options.emit_graph_path.empty()) {
        std::ofstream out(options.emit_graph_path);
        if (!out) {
            throw std::invalid_argument("cannot open graph output file: " +
                                        options.emit_graph_path);
        }
        write_edge_list(out, graph.graph);
    }

    Polynomial poly = compute_polynomial(report.spec, options.method, &graph);
    report.indices =
        options.narrow_indices ? analyze<std::uint64_t>(std::move(poly)) : analyze<>(std::move(poly));
    report.elapsed_ms = ms_since(start);
    return report;
}

std::string render_text(const Report& report) {
    const IndexReport& ix = report.indices;
    std::ostringstream out;
    out << "spec:              " << report.spec_text << "\n";
    out << "hexagons:          " << report.spec.hexagons << "\n";
    out << "method:            " << method_name(report.method) << "\n";
    out << "edge count:        " << ix.edge_count << "\n";
    out << "degree:            " << ix.degree << "\n";
    out << "polynomial:        " << ix.polynomial.to_string() << "\n";
    out << "edge-Wiener:       " << to_decimal(ix.edge_wiener) << "\n";
    out << "edge-hyper-Wiener: " << to_decimal(ix.edge_hyper_wiener) << "\n";
    for (const std::string& w : report.warnings) out << "warning:           " << w << "\n";
    out << "elapsed:           " << report.elapsed_ms << " ms\n";
    return out.str();
}

std::string render_json(const Report& report) {
    const IndexReport& ix = report.indices;
    nlohmann::ordered_json j;
    j["spec"] = report.spec_text;
    j["hexagons"] = std::to_string(report.spec.hexagons);
    j["method"] = std::string(method_name(report.method));
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (std::uint64_t c : ix.polynomial.coeffs()) coeffs.push_back(std::to_string(c));
    j["coefficients"] = std::move(coeffs);
    j["edge_count"] = std::to_string(ix.edge_count);
    j["degree"] = std::to_string(ix.degree);
    j["edge_wiener"] = to_decimal(ix.edge_wiener);
    j["edge_hyper_wiener"] = to_decimal(ix.edge_hyper_wiener);
    j["warnings"] = report.warnings;
    j["elapsed_ms"] = std::to_string(report.elapsed_ms);
    return j.dump(2) + "\n";
}

int verify_cap() {
    if (const char* env = std::getenv("EHP_VERIFY_CAP")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("EHP_VERIFY_CAP is not an integer");
        }
    }
    return kDefaultVerifyMaxH;
}

VerifySummary run_verify(int max_h, int cap) {
    if (max_h < 1) throw std::invalid_argument("verify: max_h must be >= 1");
    if (max_h > cap) {
        throw std::invalid_argument("verify: max_h " + std::to_string(max_h) +
                                    " exceeds the cap " + std::to_string(cap) +
                                    " (raise it with EHP_VERIFY_CAP)");
    }
    VerifySummary summary;
    for (int h = 1; h <= max_h; ++h) {
        for (const ChainSpec& spec : enumerate_chains(h, cap)) {
            ++summary.chains_checked;
            bool ok = true;
            BenzenoidGraph graph = build_graph(spec);
            std::uint64_t m = graph.graph.edge_count();

            Polynomial brute = oracle::edge_hosoya(graph.graph);
            Polynomial recur = chain_edge_hosoya(spec);
            ok = ok && brute == recur;

            // Conversion between the two edge-distance conventions must
            // reproduce its own brute force and round-trip.
            Polynomial hat = to_hat(brute, m);
            ok = ok && hat == oracle::hat_edge_hosoya(graph.graph);
            ok = ok && from_hat(hat, m) == brute;

            // Conservation: all unordered pairs accounted for.
            ok = ok && static_cast<Wide>(brute.eval_at_one()) ==
                           static_cast<Wide>(m) * (static_cast<Wide>(m) + 1) / 2;

            if (spec.is_linear()) {
                ok = ok && polyacene::edge_hosoya(spec.hexagons) == recur;
            }

            if (!ok) {
                ++summary.failures;
                summary.witnesses.push_back(to_string(spec));
            }
        }
    }
    return summary;
}

std::vector<BenchEntry> run_bench(const BenchOptions& options) {
    std::vector<BenchEntry> entries;
    for (int h : options.h_values) {
        if (h < 1) throw std::invalid_argument("bench: h must be >= 1");
        ChainSpec spec = linear_chain(h);
        for (Method method : {Method::kOracle, Method::kRecurrence, Method::kClosedForm}) {
            if (options.only_method && *options.only_method != method) continue;
            BenchEntry entry;
            entry.hexagons = h;
            entry.method = method;
            if (method == Method::kOracle && h > options.oracle_cap) {
                entry.skipped = true;
                entries.push_back(entry);
                continue;
            }
            auto start = Clock::now();
            Polynomial poly;
            if (method == Method::kOracle) {
                BenzenoidGraph graph = build_graph(spec);
                poly = oracle::edge_hosoya(graph.graph);
            } else {
                poly = compute_polynomial(spec, method, nullptr);
            }
            // Index extraction is part of the measured pipeline.
            IndexReport report = options.narrow_indices ? analyze<std::uint64_t>(std::move(poly))
                                                        : analyze<>(std::move(poly));
            entry.elapsed_ms = ms_since(start);
            entry.degree = report.degree;
            entry.digest = fnv1a(report.polynomial);
            entries.push_back(entry);
        }
    }
    return entries;
}

std::string render_bench_table(const std::vector<BenchEntry>& entries) {
    std::ostringstream out;
    out << "h       method       ms        degree    digest\n";
    for (const BenchEntry& e : entries) {
        std::ostringstream row;
        row << e.hexagons;
        out << row.str() << std::string(row.str().size() < 8 ? 8 - row.str().size() : 1, ' ');
        std::string name(method_name(e.method));
        out << name << std::string(name.size() < 13 ? 13 - name.size() : 1, ' ');
        if (e.skipped) {
            out << "skipped (above oracle cap)\n";
            continue;
        }
        std::string ms = std::to_string(e.elapsed_ms);
        out << ms << std::string(ms.size() < 10 ? 10 - ms.size() : 1, ' ');
        std::string deg = std::to_string(e.degree);
        out << deg << std::string(deg.size() < 10 ? 10 - deg.size() : 1, ' ');
        char digest[32];
        std::snprintf(digest, sizeof digest, "%016llx",
                      static_cast<unsigned long long>(e.digest));
        out << digest << "\n";
    }
    // Agreement check across methods benched at the same h.
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            if (entries[i].hexagons != entries[j].hexagons) continue;
            if (entries[i].skipped || entries[j].skipped) continue;
            bool agree = entries[i].digest == entries[j].digest;
            out << "h=" << entries[i].hexagons << " " << method_name(entries[i].method)
                << " vs " << method_name(entries[j].method) << ": "
                << (agree ? "agree" : "MISMATCH") << "\n";
        }
    }
    return out.str();
}

}  // namespace ehp
