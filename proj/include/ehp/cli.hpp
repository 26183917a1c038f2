#ifndef EHP_CLI_HPP
#define EHP_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ehp/chain.hpp"
#include "ehp/indices.hpp"

namespace ehp {

enum class Method { kOracle, kRecurrence, kClosedForm };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct ComputeOptions {
    std::string spec_text;
    Method method = Method::kRecurrence;
    bool narrow_indices = false;       // 64-bit index accumulators instead of 128-bit
    std::string emit_graph_path;       // empty = do not write the edge list
};

/// Everything the compute command reports. All numbers cross the JSON
/// boundary as decimal strings, so nothing is squeezed through a float.
struct Report {
    std::string spec_text;
    ChainSpec spec;
    Method method = Method::kRecurrence;
    IndexReport indices;
    std::vector<std::string> warnings;
    std::int64_t elapsed_ms = 0;
};

Report run_compute(const ComputeOptions& options);

std::string render_text(const Report& report);
/// Canonical JSON: fixed key order, two-space indent, trailing newline.
/// Parsing and re-serializing the output is byte-identical.
std::string render_json(const Report& report);

/// Cross-checks every chain with up to max_h hexagons: recurrence against
/// the brute-force oracle, the hat-polynomial conversion against its own
/// brute force, the conservation law, and the closed form on linear chains.
struct VerifySummary {
    int chains_checked = 0;
    int failures = 0;
    std::vector<std::string> witnesses;  // specs of failing chains
};

inline constexpr int kDefaultVerifyMaxH = 7;

/// Cap on max_h, overridable with the EHP_VERIFY_CAP environment variable.
int verify_cap();

VerifySummary run_verify(int max_h, int cap);

struct BenchOptions {
    std::vector<int> h_values;
    std::optional<Method> only_method;  // unset = run all applicable
    int oracle_cap = 60;                // skip the oracle above this h
    bool narrow_indices = false;
};

struct BenchEntry {
    int hexagons = 0;
    Method method = Method::kRecurrence;
    std::int64_t elapsed_ms = 0;
    std::size_t degree = 0;
    std::uint64_t digest = 0;  // FNV-1a over the coefficient array
    bool skipped = false;
};

std::vector<BenchEntry> run_bench(const BenchOptions& options);
std::string render_bench_table(const std::vector<BenchEntry>& entries);

}  // namespace ehp

#endif  // EHP_CLI_HPP
