#ifndef TRIDEC_REPORT_HPP
#define TRIDEC_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tridec {

enum class RunMode { decompose, unmixed_only, bounds_only, verify };

/// Parses "decompose", "unmixed-only", "bounds-only", "verify".
std::optional<RunMode> parse_run_mode(std::string_view name);
std::string run_mode_name(RunMode mode);

struct RunConfig {
    RunMode mode = RunMode::decompose;
    /// Variable names, lowest first. Empty: x1..xn by index.
    std::vector<std::string> order;
    /// Codimension used in the bound block; defaults to n (or the chain
    /// length in unmixed-only mode).
    std::optional<unsigned> m;
    std::uint64_t seed = 1;
    /// Adds the oracle section in decompose mode.
    bool verify = false;
    /// Chain-family file: blank-line separated groups, one chain per group.
    std::optional<std::string> bypass_text;
    /// bounds-only parameters.
    unsigned n = 0;
    unsigned d = 0;
    unsigned r = 0;
};

/// status: 0 success, 1 parse or validation error, 2 internal-consistency fault.
/// report is always a JSON document; on failure it carries an "error" object.
struct RunOutcome {
    int status = 0;
    std::string report;
    std::string message;
    /// 1-based line of a parse error, 0 otherwise.
    std::size_t line = 0;
};

/// Input formats by mode:
///   decompose / verify: one polynomial per line.
///   unmixed-only: first group is the chain (leaders x_{n-m+1}..x_n), an
///                 optional second group holds f, an optional third holds h.
///   bounds-only: input is ignored.
RunOutcome run_report(const RunConfig& config, std::string_view input);

}  // namespace tridec

#endif
