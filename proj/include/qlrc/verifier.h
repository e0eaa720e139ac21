#pragma once

#include "qlrc/bounds.h"
#include "qlrc/css.h"
#include "qlrc/grid_code.h"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qlrc::verifier {

/// Claims checked over the staircase family.
enum class Check {
    impurity,              // V odd, b = 0: the CSS code is impure
    singleton_violation,   // V odd, b = 0: pure quantum Singleton-like bound fails
    griesmer_violation,    // V = 3, b = 0, H = q odd: Griesmer-like bound fails
    plotkin_violation,     // V = 3, H = q odd, a = b = 0: Plotkin-like bound fails
    single_erasure_holds,  // H, V odd, b = 0: GG, Luo and sphere-packing bounds hold
    formula_agreement,     // any valid instance: brute force matches the closed forms
};

inline constexpr Check kAllChecks[] = {Check::impurity, Check::singleton_violation, Check::griesmer_violation,
                                       Check::plotkin_violation, Check::single_erasure_holds,
                                       Check::formula_agreement};

const char* to_string(Check c) noexcept;
/// Accepts the names above plus the aliases thm3, thm4, thm5, prop_impure,
/// rem_valid and oracle.
std::optional<Check> parse_check(std::string_view name) noexcept;

struct Instance {
    grid::Params params;
    unsigned long long q = 0;

    bool operator==(const Instance&) const = default;
};

/// Whether the instance satisfies the hypotheses of the check.
bool hypotheses_hold(Check c, const Instance& inst) noexcept;

struct VerdictRow {
    Instance instance;
    css::CssRecord css;  // closed forms
    std::size_t classical_k = 0;
    std::vector<bounds::BoundReport> bounds;
    bool impure = false;
    std::optional<bounds::Rational> slack_lower_bound;  // singleton_violation rows

    // present whenever brute force ran
    std::optional<css::CssRecord> css_bruteforce;
    std::optional<bool> distance_agrees;
    std::optional<bool> coset_distance_agrees;

    std::vector<Check> checks;
    std::vector<std::string> failures;

    const bounds::BoundReport* bound(bounds::BoundId id) const noexcept;
    bool ok() const noexcept { return failures.empty(); }
};

/// Every bound on the CSS parameters, except the classical Singleton-like
/// bound, which is evaluated on the classical code [n, classical_k, d_H(C)].
std::vector<bounds::BoundReport> evaluate_bounds(const css::CssRecord& css, std::size_t classical_k);

/// Closed-form row with all bounds evaluated; brute force runs when
/// q^|delta| <= budget (budget 0 disables it).
VerdictRow evaluate_instance(const Instance& inst, std::uint64_t budget = 0);

/// Run one check on a row, appending any contradiction to row.failures.
/// Throws HypothesisViolated when the instance is outside the check's scope.
void apply_check(VerdictRow& row, Check c);

// Single-instance entry points; a contradiction throws AssertionFailed.
bool check_impurity(const Instance& inst);
VerdictRow check_singleton_violation(const Instance& inst);
VerdictRow check_griesmer_violation(const Instance& inst);
VerdictRow check_plotkin_violation(const Instance& inst);
VerdictRow check_single_erasure_bounds(const Instance& inst);

struct SweepSpec {
    std::vector<unsigned long long> qs;
    // Unset ranges mean "every valid value".
    std::optional<std::vector<int>> Hs;
    std::optional<std::vector<int>> Vs;
    std::optional<std::vector<int>> as;
    std::optional<std::vector<int>> bs;
    bool h_equals_q = false;
    std::vector<Check> checks;  // empty: all checks
    std::uint64_t budget = 0;
    unsigned jobs = 1;
    bool collect = false;  // gather failures instead of aborting on the first
};

struct SweepResult {
    std::vector<VerdictRow> rows;
    std::size_t skipped = 0;  // (q, H, V) triples failing divisibility
    std::size_t failures = 0;
};

/// One row per valid instance meeting the hypotheses of at least one
/// selected check, in (q, H, V, a, b) order. Without `collect` the first
/// contradiction throws AssertionFailed naming the instance.
SweepResult run_sweep(const SweepSpec& spec);

std::string describe(const Instance& inst);

}  // namespace qlrc::verifier
