#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdc/circulant.hpp"
#include "mdc/integer.hpp"
#include "mdc/matrix.hpp"
#include "mdc/quotient.hpp"

namespace mdc {

enum class TwoStepMode { Digraph, Graph };

struct TwoStepVerdict {
    bool is_circulant = false;
    std::string rule;  // decision rule that settled the verdict
};

enum class ExactSource { ClosedForm, BruteForce };

// Everything known about the dimension of an instance: where not pinned
// down exactly, the three upper bounds still hold individually.
struct DimensionReport {
    Int m = 0;
    std::vector<std::pair<Int, unsigned long>> prime_factorization;
    std::size_t snf_rank_bound = 0;
    unsigned long prime_exponent_bound = 0;
    std::size_t generator_bound = 0;
    std::optional<TwoStepVerdict> circulant;
    std::optional<Int> exceptional_eta;
    std::optional<std::size_t> exact_dimension;
    std::optional<ExactSource> exact_source;
};

// Prime factorization by trial division, ascending primes.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& m);

// The three upper bounds: the number of nontrivial invariant factors of the
// group, the largest exponent in the prime factorization of its order, and
// the size of a smallest subset of `jumps` generating the same subgroup.  A
// bound of one (or a trivial group) already decides the instance, and the
// verdict fields are filled in accordingly.
DimensionReport dimension_bounds(const QuotientGroup& g, const std::vector<Vec>& jumps);

// Exact circulant decision for a generating pair of jumps: the instance is a
// circulant iff the quotient by the largest cyclic factor is trivial, or it
// has order two and the difference of the jumps (for graphs, alternatively
// the sum) has order two.
TwoStepVerdict is_circulant_2step(const QuotientGroup& g, const std::vector<Vec>& jumps, TwoStepMode mode);

// The same decision for G(M; e_1, e_2) over a 2x2 matrix, evaluated as a
// literal gcd formula on the entries.
bool commutative_2step_is_circulant(const IntMatrix& m);

// Detects the one family where isomorphic two-jump instances need not be
// Adam isomorphic: groups Z_2eta x Z_2 with the jumps mapping to (1,0) and
// (1,1), recognized through the defining relations 2eta*a1 = 0 and
// o(a1 - a2) = 2 (for graphs also o(a1 + a2) = 2).  Returns eta.
std::optional<Int> exceptional_case(const QuotientGroup& g, const std::vector<Vec>& jumps,
                                    TwoStepMode mode);

// Bounds plus every exact decision available in closed form: trivial groups,
// instances pinned by a bound of one, and generating pairs via the two-jump
// characterization (whose failure also pins the dimension to exactly two).
DimensionReport dimension_report(const QuotientGroup& g, const std::vector<Vec>& jumps,
                                 TwoStepMode mode);

struct PrimeProductInstance {
    std::size_t dimension = 0;
    IntMatrix matrix;  // diag(p, ..., p)
    JumpSet jumps;     // factor jumps embedded on the coordinate axes
};

// Dimension of a cartesian product of n connected circulants on p vertices,
// p an odd prime: always exactly n.  Builds the product presentation for
// independent cross-checking.
PrimeProductInstance prime_product_dimension(unsigned long p, const std::vector<JumpSet>& factors);

}  // namespace mdc
