#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mdc {

// One verification sweep: a self-contained correctness check with a
// wall-clock budget.  `pass` reports correctness only; callers that also
// care about the budget use ok().
struct SweepOutcome {
    std::string name;
    bool pass = false;
    std::size_t checked = 0;  // individual comparisons performed
    std::string detail;       // first failure, empty when passing
    double seconds = 0.0;
    double budget_seconds = 0.0;

    bool within_budget() const { return seconds < budget_seconds; }
    bool ok() const { return pass && within_budget(); }
};

// Heavy sweeps fan out over independent instances.  The parallel driver
// must produce results identical to the serial reference: instances are
// generated up front, evaluated independently, and merged in index order.
struct SweepConfig {
    bool parallel = true;
    unsigned seed = 20260814u;
};

SweepOutcome smith_example_check();
SweepOutcome adam_canonical_example_check();
SweepOutcome two_jump_characterization_sweep(const SweepConfig& cfg = {});
SweepOutcome unit_jump_entry_formula_sweep(const SweepConfig& cfg = {});
SweepOutcome exceptional_family_check();
SweepOutcome prime_square_dimension_check();
SweepOutcome cube_dimension_check();
SweepOutcome element_order_sweep(const SweepConfig& cfg = {});
SweepOutcome component_structure_sweep(const SweepConfig& cfg = {});
SweepOutcome direction_recovery_check();
SweepOutcome normal_form_property_sweep(const SweepConfig& cfg = {});

// All eleven sweeps in a fixed order.
std::vector<SweepOutcome> run_verification(const SweepConfig& cfg = {});

// "[PASS] 3/11 two-jump-characterization: 118234 checks in 42.10s (budget 600s)"
std::string format_outcome(const SweepOutcome& o, std::size_t index, std::size_t total);

}  // namespace mdc
