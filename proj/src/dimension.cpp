#include "mdc/dimension.hpp"

#include <algorithm>

#include "mdc/errors.hpp"
#include "mdc/normal_form.hpp"

namespace mdc {

namespace {

// Canonical distinct nonzero pair of jump classes.
std::pair<Vec, Vec> jump_pair(const QuotientGroup& g, const std::vector<Vec>& jumps) {
    if (jumps.size() != 2) throw WrongJumpCount("exactly two jumps required");
    Vec a1 = g.canonicalize(jumps[0]);
    Vec a2 = g.canonicalize(jumps[1]);
    if (vec_is_zero(a1) || vec_is_zero(a2)) throw IdentityJump("zero jump classes are not allowed");
    if (a1 == a2) throw WrongJumpCount("the two jumps must be distinct classes");
    return {std::move(a1), std::move(a2)};
}

// Smallest subset of `jumps` generating the same subgroup, by exhaustive
// search in ascending subset size.
std::size_t minimal_generating_subset(const QuotientGroup& g, const std::vector<Vec>& jumps) {
    const Int target = g.subgroup_index(jumps);
    for (std::size_t k = 0; k <= jumps.size(); ++k) {
        std::vector<Vec> pick;
        auto rec = [&](auto&& self, std::size_t from) -> bool {
            if (pick.size() == k) return g.subgroup_index(pick) == target;
            for (std::size_t i = from; i + (k - pick.size()) <= jumps.size(); ++i) {
                pick.push_back(jumps[i]);
                if (self(self, i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(rec, 0)) return k;
    }
    return jumps.size();  // unreachable: the full set always qualifies
}

}  // namespace

std::vector<std::pair<Int, unsigned long>> factorize(const Int& m) {
    std::vector<std::pair<Int, unsigned long>> factors;
    Int rest = abs(m);
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        unsigned long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    return factors;
}

DimensionReport dimension_bounds(const QuotientGroup& g, const std::vector<Vec>& jumps) {
    DimensionReport report;
    report.m = g.order();
    report.prime_factorization = factorize(report.m);
    report.snf_rank_bound = g.rank();
    report.prime_exponent_bound = 0;
    for (const auto& [p, e] : report.prime_factorization)
        report.prime_exponent_bound = std::max(report.prime_exponent_bound, e);
    report.generator_bound = minimal_generating_subset(g, jumps);

    if (report.m == 1) {
        report.exact_dimension = 0;
        report.exact_source = ExactSource::ClosedForm;
        return report;
    }
    // Any bound of one pins the instance: it is a circulant.
    std::string rule;
    if (report.prime_exponent_bound == 1)
        rule = "square-free-order";
    else if (report.snf_rank_bound == 1)
        rule = "cyclic-quotient";
    else if (report.generator_bound == 1)
        rule = "single-generator";
    if (!rule.empty()) {
        report.circulant = TwoStepVerdict{true, rule};
        report.exact_dimension = 1;
        report.exact_source = ExactSource::ClosedForm;
    }
    return report;
}

TwoStepVerdict is_circulant_2step(const QuotientGroup& g, const std::vector<Vec>& jumps,
                                  TwoStepMode mode) {
    const auto [a1, a2] = jump_pair(g, jumps);
    if (!g.generates({a1, a2})) throw NotGenerating("the two jumps do not generate the group");
    // Product of all invariant factors but the largest: one exactly when the
    // group is cyclic.
    const Int copenultimate = g.order() / g.cyclic_factors().back();
    if (copenultimate == 1) return {true, "cyclic-quotient"};
    if (copenultimate == 2) {
        if (g.element_order(g.sub(a1, a2)) == 2) return {true, "difference-order-two"};
        if (mode == TwoStepMode::Graph && g.element_order(g.add(a1, a2)) == 2)
            return {true, "sum-order-two"};
    }
    return {false, "two-jump-characterization"};
}

bool commutative_2step_is_circulant(const IntMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("a 2x2 matrix is required");
    const Int d = det(m);
    if (d == 0) throw SingularMatrix("the quotient group must be finite");
    const Int order = abs(d);
    const Int d1 = gcd(gcd(m(0, 0), m(0, 1)), gcd(m(1, 0), m(1, 1)));
    if (d1 == 1) return true;
    if (d1 != 2) return false;
    return order == 2 * gcd(order, gcd(m(1, 1) + m(0, 1), m(0, 0) + m(1, 0)));
}

std::optional<Int> exceptional_case(const QuotientGroup& g, const std::vector<Vec>& jumps,
                                    TwoStepMode mode) {
    const auto [a1, a2] = jump_pair(g, jumps);
    if (!g.generates({a1, a2})) throw NotGenerating("the two jumps do not generate the group");
    const Vec& factors = g.cyclic_factors();
    if (factors.size() != 2 || factors.front() != 2) return std::nullopt;
    const bool difference = g.element_order(g.sub(a1, a2)) == 2;
    const bool sum = mode == TwoStepMode::Graph && g.element_order(g.add(a1, a2)) == 2;
    if (!difference && !sum) return std::nullopt;
    return factors.back() / 2;
}

DimensionReport dimension_report(const QuotientGroup& g, const std::vector<Vec>& jumps,
                                 TwoStepMode mode) {
    DimensionReport report = dimension_bounds(g, jumps);
    if (report.exact_dimension) return report;

    // Distinct nonzero jump classes; a generating pair is decided exactly.
    std::vector<Vec> classes;
    for (const Vec& a : jumps) {
        Vec c = g.canonicalize(a);
        if (!vec_is_zero(c) && std::find(classes.begin(), classes.end(), c) == classes.end())
            classes.push_back(std::move(c));
    }
    if (classes.size() != 2 || !g.generates(classes)) return report;

    const TwoStepVerdict verdict = is_circulant_2step(g, classes, mode);
    report.circulant = verdict;
    report.exceptional_eta = exceptional_case(g, classes, mode);
    // Not a circulant but generated by two jumps: the dimension is two.
    report.exact_dimension = verdict.is_circulant ? 1 : 2;
    report.exact_source = ExactSource::ClosedForm;
    return report;
}

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeProductInstance prime_product_dimension(unsigned long p, const std::vector<JumpSet>& factors) {
    if (p == 2) throw EvenPrime("factors of order two are excluded");
    if (!is_prime(p)) throw NotPrime("the factor order must be prime");
    if (factors.empty()) throw FactorNotConnected("at least one factor is required");
    for (const JumpSet& a : factors) {
        if (a.jumps.empty()) throw FactorNotConnected("every factor needs a nonempty jump set");
        if (a.symmetric != factors.front().symmetric)
            throw MixedDirectedness("all factors must share one mode");
        for (const Vec& v : a.jumps) {
            if (v.size() != 1) throw DimensionMismatch("factor jumps must be one-dimensional");
            if (floor_mod(v[0], Int(p)) == 0) throw IdentityJump("zero jump classes are not allowed");
        }
    }

    PrimeProductInstance out;
    out.dimension = factors.size();
    const std::size_t n = factors.size();
    out.matrix = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) out.matrix(i, i) = Int(p);
    QuotientGroup g(out.matrix);
    std::vector<Vec> embedded;
    for (std::size_t i = 0; i < n; ++i)
        for (const Vec& v : factors[i].jumps) {
            Vec e(n, Int(0));
            e[i] = v[0];
            embedded.push_back(std::move(e));
        }
    out.jumps = make_jump_set(g, embedded, factors.front().symmetric);
    return out;
}

}  // namespace mdc
