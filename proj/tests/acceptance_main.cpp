// Acceptance gate: runs every verification sweep at its stated budget and
// prints one line per check.  Exit status 0 iff all pass within budget.
#include <functional>
#include <iostream>
#include <vector>

#include "mdc/sweeps.hpp"

int main() {
    using namespace mdc;
    const SweepConfig cfg;
    const std::vector<std::function<SweepOutcome()>> sweeps = {
        [&] { return smith_example_check(); },
        [&] { return adam_canonical_example_check(); },
        [&] { return two_jump_characterization_sweep(cfg); },
        [&] { return unit_jump_entry_formula_sweep(cfg); },
        [&] { return exceptional_family_check(); },
        [&] { return prime_square_dimension_check(); },
        [&] { return cube_dimension_check(); },
        [&] { return element_order_sweep(cfg); },
        [&] { return component_structure_sweep(cfg); },
        [&] { return direction_recovery_check(); },
        [&] { return normal_form_property_sweep(cfg); },
    };
    bool all = true;
    for (std::size_t i = 0; i < sweeps.size(); ++i) {
        const SweepOutcome o = sweeps[i]();
        std::cout << format_outcome(o, i + 1, sweeps.size()) << std::endl;
        all = all && o.ok();
    }
    return all ? 0 : 1;
}
