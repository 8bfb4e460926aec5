#pragma once

#include "monointerp/diagram.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace monointerp {

enum class Check {
    nesting,    ///< nesting lemmas for every node, plus geometric nesting of child walls
    purity,     ///< rank-zero nodes are pure; purity agrees with the Hilbert polynomial criterion
    duality,    ///< derived dual of rank minus one objects
    chern,      ///< additivity, wall agreement, central charge, orthogonality, resolutions
    theorem14,  ///< root wall of I_Z sits at center -mu(Z) - 3/2 and its sub matches the argmax slope
    ci,         ///< complete intersection closed forms, a <= b <= bound
    triviality, ///< nonempty walls and the inequalities forced by trivial children
};

std::string_view to_string(Check check);
std::optional<Check> check_from_string(std::string_view name);
const std::vector<Check>& all_checks();

struct Failure {
    std::size_t ordinal = 0; ///< shard index of the instance
    std::string instance;    ///< diagram or rectangle
    std::string node;        ///< path in the tree, e.g. "root.quotient.sub"
    std::string message;
    std::vector<std::pair<std::string, std::string>> values; ///< exact fractions as strings

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    static constexpr std::size_t max_failures = 100;

    Check check = Check::nesting;
    int bound = 0;
    std::size_t instances = 0;       ///< assertions groups examined (nodes, diagrams or rectangles)
    std::size_t failure_count = 0;   ///< all failures, including those past the cap
    std::vector<Failure> failures;   ///< the first max_failures by ordinal
    std::chrono::milliseconds duration{0};

    bool passed() const noexcept { return failure_count == 0; }
};

/// Equality ignoring duration.
bool same_outcome(const VerificationReport& a, const VerificationReport& b);

struct OracleOptions {
    unsigned threads = 1;
};

/// Number of shardable items for the check: diagrams of degree 1..bound, or
/// rectangles a x b with a <= b <= bound for the complete intersection check.
std::size_t shard_space(Check check, int bound);

/// Run the check on items [first, last) of the shard space.
VerificationReport verify_shard(Check check, int bound, std::size_t first, std::size_t last);

/// Combine shard reports of one check in order. The result equals the report
/// of the whole range.
VerificationReport merge(const std::vector<VerificationReport>& shards);

/// Whole shard space, split over options.threads workers. Throws
/// std::invalid_argument on a negative bound.
VerificationReport verify(Check check, int bound, OracleOptions options = {});

VerificationReport verify_nesting(int max_degree, OracleOptions options = {});
VerificationReport verify_purity(int max_degree, OracleOptions options = {});
VerificationReport verify_duality(int max_degree, OracleOptions options = {});
VerificationReport verify_chern(int max_degree, OracleOptions options = {});
VerificationReport verify_theorem14(int max_degree, OracleOptions options = {});
VerificationReport verify_ci(int max_side, OracleOptions options = {});
VerificationReport verify_triviality_inequalities(int max_degree, OracleOptions options = {});

/// JSON report. Durations are written only when include_timing is set, so
/// reports without timing are byte-identical across runs.
std::string to_json(const VerificationReport& report, bool include_timing = true);
std::string to_json(const std::vector<VerificationReport>& reports, bool include_timing = true);

} // namespace monointerp
