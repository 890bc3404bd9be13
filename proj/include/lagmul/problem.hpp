#ifndef LAGMUL_PROBLEM_HPP
#define LAGMUL_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lagmul/critical.hpp"

namespace lagmul {

using Json = nlohmann::ordered_json;

/// Parsed problem file. Polynomials are kept as text plus their source line
/// so later parse errors still point into the file.
struct ProblemSpec {
    std::uint64_t characteristic = 0;
    std::vector<std::string> vars;
    std::string objective_text;
    int objective_line = 0;
    std::vector<std::string> constraint_texts;
    std::vector<int> constraint_lines;
    OrderKind order = OrderKind::degrevlex;
    std::optional<std::uint32_t> truncation;
};

/// Line-oriented format: `field <p>`, `vars <id...>`, `objective <poly>`,
/// `constraint <poly>` (repeatable), optional `order <name>` and
/// `truncate <D>`; `#` comments and blank lines ignored.
ProblemSpec parse_problem(const std::string& text);

ConstrainedSystem build_system(const ProblemSpec& spec,
                               std::optional<OrderKind> order_override = {});

/// method: one of "grobner", "jacobian", "formula", "all".
/// field_confirm reruns the requested computations over Q and compares.
Json run_milnor(const ProblemSpec& spec, const std::string& method,
                std::optional<OrderKind> order_override = {},
                bool field_confirm = false, bool include_timings = false);

/// Hypothesis report only (the `check` subcommand).
Json run_check(const ProblemSpec& spec,
               std::optional<OrderKind> order_override = {});

/// Complex construction and graded verification; truncation defaults to
/// default_truncation of the system.
Json run_complex_verification(const ProblemSpec& spec,
                              std::optional<std::uint32_t> truncation,
                              std::optional<OrderKind> order_override = {});

struct HarnessConfig {
    std::size_t n_max = 3;
    std::size_t r_max = 2;
    std::uint32_t d_max = 3;
    std::uint64_t characteristic = 32003;
    std::size_t count = 50;  // hypothesis-passing systems to collect
    std::uint64_t seed = 42;
};

/// Seeded random three-way agreement harness; deterministic for fixed config.
Json run_random_harness(const HarnessConfig& cfg);

/// True iff the report records a mathematical disagreement that should map
/// to the reserved CLI exit code.
bool report_has_disagreement(const Json& report);

}  // namespace lagmul

#endif
