#include "mdc/sweeps.hpp"

#include <array>
#include <chrono>
#include <random>
#include <sstream>
#include <utility>

#include "mdc/circulant.hpp"
#include "mdc/dimension.hpp"
#include "mdc/directions.hpp"
#include "mdc/errors.hpp"
#include "mdc/normal_form.hpp"
#include "mdc/oracle.hpp"

namespace mdc {
namespace {

using Rng = std::mt19937_64;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// Per-instance verdict; an empty failure string means the item passed.
struct ItemResult {
    std::string failure;
    std::size_t checks = 0;
};

// Evaluates `kernel` on items 0..count-1.  The parallel driver writes into
// a pre-sized slot per item, so its merged output is identical to the
// serial reference loop no matter how the iterations are scheduled.
template <typename Kernel>
std::vector<ItemResult> run_items(std::size_t count, bool parallel, Kernel&& kernel) {
    std::vector<ItemResult> results(count);
    auto guarded = [&](std::size_t i) {
        try {
            results[i] = kernel(i);
        } catch (const Error& e) {
            results[i].failure = e.code() + ": " + e.what();
        } catch (const std::exception& e) {
            results[i].failure = e.what();
        }
    };
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(count); ++i) guarded(static_cast<std::size_t>(i));
        return results;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < count; ++i) guarded(i);
    return results;
}

SweepOutcome finish(std::string name, double budget, const Timer& t,
                    const std::vector<ItemResult>& items) {
    SweepOutcome o;
    o.name = std::move(name);
    o.budget_seconds = budget;
    o.pass = true;
    for (const ItemResult& item : items) {
        o.checked += item.checks;
        if (!item.failure.empty() && o.pass) {
            o.pass = false;
            o.detail = item.failure;
        }
    }
    o.seconds = t.elapsed();
    return o;
}

IntMatrix random_matrix(Rng& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Int(dist(rng));
    return m;
}

IntMatrix random_nonsingular(Rng& rng, std::size_t n, long lo, long hi) {
    for (;;) {
        IntMatrix m = random_matrix(rng, n, lo, hi);
        if (det(m) != 0) return m;
    }
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, int ops = 12) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int k = 0; k < ops; ++k) {
        const std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        switch (rng() % 3) {
            case 0: u.add_row_multiple(i, j, Int(coeff(rng))); break;
            case 1: u.add_col_multiple(i, j, Int(coeff(rng))); break;
            default: u.swap_rows(i, j); break;
        }
        if (rng() % 4 == 0) u.negate_row(i);
    }
    return u;
}

Vec random_vector(Rng& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Int(dist(rng));
    return v;
}

Graph induced_subgraph(const Graph& g, const std::vector<std::size_t>& verts) {
    std::vector<std::size_t> index(g.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    Graph h(verts.size(), g.directed());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t w : g.neighbors(verts[i]))
            if (index[w] != static_cast<std::size_t>(-1)) h.add_edge(i, index[w]);
    return h;
}

std::string describe_matrix(const IntMatrix& m) { return "[" + m.to_text() + "]"; }

}  // namespace

SweepOutcome smith_example_check() {
    Timer t;
    auto items = run_items(1, false, [&](std::size_t) {
        ItemResult r;
        r.checks = 6;
        const IntMatrix m = IntMatrix::diagonal({2, 2, 3});
        const SmithDecomposition s = smith_normal_form(m);
        if (s.S != IntMatrix::diagonal({1, 2, 6}))
            r.failure = "smith form is " + describe_matrix(s.S);
        else if (s.factors != Vec{1, 2, 6})
            r.failure = "invariant factors are " + vec_to_string(s.factors);
        else if (s.divisors != Vec{1, 2, 12})
            r.failure = "determinantal divisors are " + vec_to_string(s.divisors);
        else if (mat_mul(mat_mul(s.U, m), s.V) != s.S)
            r.failure = "U*M*V does not reproduce the smith form";
        else if (abs(det(s.U)) != 1 || abs(det(s.V)) != 1)
            r.failure = "transform matrices are not unimodular";
        return r;
    });
    return finish("smith-example", 0.001, t, items);
}

SweepOutcome adam_canonical_example_check() {
    Timer t;
    auto items = run_items(1, false, [&](std::size_t) {
        ItemResult r;
        r.checks = 2;
        const QuotientGroup g(IntMatrix::diagonal({2, 2, 3}));
        const JumpSet a = make_jump_set(g, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, false);
        const AdamCanonicalForm form = adam_canonical(g, a);
        if (form.sprime != IntMatrix::diagonal({2, 6})) {
            r.failure = "canonical group is " + describe_matrix(form.sprime);
            return r;
        }
        const CirculantGraph built = build_canonical(form);
        const QuotientGroup tg(IntMatrix::diagonal({2, 6}));
        const CirculantGraph target(tg, make_jump_set(tg, {{0, 3}, {1, 0}, {0, 4}}, false));
        if (!graphs_isomorphic(built.graph(), target.graph()))
            r.failure = "canonical digraph is not isomorphic to the reference presentation";
        return r;
    });
    return finish("adam-canonical-example", 1.0, t, items);
}

SweepOutcome two_jump_characterization_sweep(const SweepConfig& cfg) {
    Timer t;
    std::vector<std::array<long, 4>> mats;
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4; c <= 4; ++c)
                for (long d = -4; d <= 4; ++d) {
                    const long dt = a * d - b * c;
                    if (dt == 0 || dt > 12 || dt < -12) continue;
                    mats.push_back({a, b, c, d});
                }
    auto items = run_items(mats.size(), cfg.parallel, [&](std::size_t idx) {
        ItemResult r;
        const auto& e = mats[idx];
        const IntMatrix m{{e[0], e[1]}, {e[2], e[3]}};
        const QuotientGroup g(m);
        std::vector<Vec> classes;
        for (const Vec& v : g.elements())
            if (!vec_is_zero(v)) classes.push_back(v);
        for (std::size_t i = 0; i < classes.size() && r.failure.empty(); ++i)
            for (std::size_t j = i + 1; j < classes.size() && r.failure.empty(); ++j) {
                const std::vector<Vec> pair{classes[i], classes[j]};
                if (!g.generates(pair)) continue;
                for (const bool symmetric : {false, true}) {
                    const TwoStepVerdict v = is_circulant_2step(
                        g, pair, symmetric ? TwoStepMode::Graph : TwoStepMode::Digraph);
                    const CirculantGraph cg(g, make_jump_set(g, pair, symmetric));
                    const bool oracle = has_regular_cyclic_subgroup(cg.graph());
                    ++r.checks;
                    if (v.is_circulant != oracle) {
                        r.failure = "matrix " + describe_matrix(m) + " jumps " +
                                    vec_to_string(classes[i]) + " " + vec_to_string(classes[j]) +
                                    (symmetric ? " graph" : " digraph") + ": rule '" + v.rule +
                                    "' says " + (v.is_circulant ? "true" : "false") +
                                    ", search says " + (oracle ? "true" : "false");
                        break;
                    }
                }
            }
        return r;
    });
    return finish("two-jump-characterization", 600.0, t, items);
}

SweepOutcome unit_jump_entry_formula_sweep(const SweepConfig& cfg) {
    Timer t;
    std::vector<std::array<long, 4>> mats;
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b)
            for (long c = -5; c <= 5; ++c)
                for (long d = -5; d <= 5; ++d) {
                    const long dt = a * d - b * c;
                    if (dt == 0 || dt > 20 || dt < -20) continue;
                    mats.push_back({a, b, c, d});
                }
    auto items = run_items(mats.size(), cfg.parallel, [&](std::size_t idx) {
        ItemResult r;
        const auto& e = mats[idx];
        const IntMatrix m{{e[0], e[1]}, {e[2], e[3]}};
        const QuotientGroup g(m);
        const Vec u1 = g.canonicalize({1, 0});
        const Vec u2 = g.canonicalize({0, 1});
        if (vec_is_zero(u1) || vec_is_zero(u2) || u1 == u2) return r;  // no two-jump instance
        const bool formula = commutative_2step_is_circulant(m);
        const bool rule =
            is_circulant_2step(g, {u1, u2}, TwoStepMode::Digraph).is_circulant;
        ++r.checks;
        if (formula != rule)
            r.failure = "matrix " + describe_matrix(m) + ": entry formula says " +
                        (formula ? "true" : "false") + ", characterization says " +
                        (rule ? "true" : "false");
        return r;
    });
    return finish("unit-jump-entry-formula", 60.0, t, items);
}

SweepOutcome exceptional_family_check() {
    Timer t;
    auto items = run_items(3, false, [&](std::size_t idx) {
        ItemResult r;
        r.checks = 2;
        const long eta = static_cast<long>(idx) + 1;
        const QuotientGroup g(IntMatrix::diagonal({2 * eta, 2}));
        const JumpSet a = make_jump_set(g, {{1, 0}, {1, 1}}, false);
        const CirculantGraph lhs(g, a);
        const QuotientGroup c(IntMatrix::diagonal({4 * eta}));
        const JumpSet b = make_jump_set(c, {{1}, {2 * eta + 1}}, false);
        const CirculantGraph rhs(c, b);
        if (!graphs_isomorphic(lhs.graph(), rhs.graph()))
            r.failure = "eta=" + std::to_string(eta) + ": digraphs are not isomorphic";
        else if (adam_isomorphic(g, a, c, b))
            r.failure = "eta=" + std::to_string(eta) + ": unexpectedly related by a group map";
        return r;
    });
    return finish("exceptional-family", 60.0, t, items);
}

SweepOutcome prime_square_dimension_check() {
    Timer t;
    auto items = run_items(2, false, [&](std::size_t idx) {
        ItemResult r;
        r.checks = 2;
        const QuotientGroup z3(IntMatrix::diagonal({3}));
        const JumpSet factor = idx == 0 ? make_jump_set(z3, {{1}}, true)
                                        : make_jump_set(z3, {{1}, {2}}, true);
        const char* name = idx == 0 ? "cycle" : "complete";
        const PrimeProductInstance inst = prime_product_dimension(3, {factor, factor});
        if (inst.dimension != 2) {
            r.failure = std::string(name) + " square: closed-form dimension is " +
                        std::to_string(inst.dimension);
            return r;
        }
        const QuotientGroup gp(inst.matrix);
        const CirculantGraph cg(gp, inst.jumps);
        const std::size_t exact = dimension_bruteforce(cg.graph());
        if (exact != 2)
            r.failure = std::string(name) + " square: search found dimension " +
                        std::to_string(exact);
        return r;
    });
    return finish("prime-square-dimension", 300.0, t, items);
}

SweepOutcome cube_dimension_check() {
    Timer t;
    auto items = run_items(1, false, [&](std::size_t) {
        ItemResult r;
        r.checks = 1;
        const QuotientGroup z2(IntMatrix::diagonal({2}));
        const CirculantGraph k2(z2, make_jump_set(z2, {{1}}, true));
        const CirculantGraph q3 = cartesian_product(cartesian_product(k2, k2), k2);
        const std::size_t exact = dimension_bruteforce(q3.graph());
        if (exact != 2) r.failure = "3-cube: search found dimension " + std::to_string(exact);
        return r;
    });
    return finish("cube-dimension", 300.0, t, items);
}

SweepOutcome element_order_sweep(const SweepConfig& cfg) {
    Timer t;
    Rng rng(cfg.seed);
    std::vector<IntMatrix> mats;
    while (mats.size() < 200) {
        const std::size_t n = 1 + rng() % 3;
        IntMatrix m = random_matrix(rng, n, -6, 6);
        const Int d = abs(det(m));
        if (d < 1 || d > 60) continue;
        mats.push_back(std::move(m));
    }
    auto items = run_items(mats.size(), cfg.parallel, [&](std::size_t idx) {
        ItemResult r;
        const QuotientGroup g(mats[idx]);
        for (const Vec& a : g.elements()) {
            const Int slow = element_order_bruteforce(g, a);
            ++r.checks;
            if (g.element_order(a) != slow) {
                r.failure = "matrix " + describe_matrix(mats[idx]) + " element " +
                            vec_to_string(a) + ": formula disagrees with iteration";
                return r;
            }
            if (g.dim() == 2) {
                ++r.checks;
                if (element_order_2x2(g, a) != slow) {
                    r.failure = "matrix " + describe_matrix(mats[idx]) + " element " +
                                vec_to_string(a) + ": adjugate form disagrees with iteration";
                    return r;
                }
            }
        }
        return r;
    });
    return finish("element-order-formula", 60.0, t, items);
}

SweepOutcome component_structure_sweep(const SweepConfig& cfg) {
    Timer t;
    struct Instance {
        IntMatrix m;
        std::vector<Vec> jumps;
        bool symmetric = false;
    };
    Rng rng(cfg.seed + 1);
    std::vector<Instance> insts;
    while (insts.size() < 100) {
        const std::size_t n = 1 + rng() % 2;
        IntMatrix m = random_matrix(rng, n, -5, 5);
        const Int d = abs(det(m));
        if (d < 2 || d > 24) continue;
        const QuotientGroup g(m);
        std::vector<Vec> jumps;
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t k = 0; k < count; ++k) {
            Vec v = random_vector(rng, n, 6);
            if (rng() % 2 == 0) v = vec_scale(Int(2), v);  // bias toward proper subgroups
            if (!vec_is_zero(g.canonicalize(v))) jumps.push_back(std::move(v));
        }
        if (jumps.empty()) continue;
        insts.push_back({std::move(m), std::move(jumps), insts.size() % 2 == 1});
    }
    auto items = run_items(insts.size(), cfg.parallel, [&](std::size_t idx) {
        ItemResult r;
        const Instance& inst = insts[idx];
        const QuotientGroup g(inst.m);
        const JumpSet a = make_jump_set(g, inst.jumps, inst.symmetric);
        const CirculantGraph cg(g, a);
        const Int alpha = g.subgroup_index(a.jumps);
        const auto bfs = cg.graph().components();
        ++r.checks;
        if (Int(bfs.size()) != alpha) {
            r.failure = "matrix " + describe_matrix(inst.m) + ": subgroup index " +
                        alpha.get_str() + " but " + std::to_string(bfs.size()) + " components";
            return r;
        }
        const CirculantComponents cc = components(cg);
        ++r.checks;
        if (cc.alpha != alpha || cc.vertex_sets.size() != bfs.size()) {
            r.failure = "matrix " + describe_matrix(inst.m) + ": component report disagrees";
            return r;
        }
        const Graph first = induced_subgraph(cg.graph(), cc.vertex_sets.front());
        for (std::size_t k = 1; k < cc.vertex_sets.size(); ++k) {
            ++r.checks;
            if (!graphs_isomorphic(first, induced_subgraph(cg.graph(), cc.vertex_sets[k]))) {
                r.failure = "matrix " + describe_matrix(inst.m) + ": component " +
                            std::to_string(k) + " differs from the first";
                return r;
            }
        }
        return r;
    });
    return finish("component-structure", 120.0, t, items);
}

SweepOutcome direction_recovery_check() {
    Timer t;
    struct Shape {
        unsigned long p;
        std::size_t n;
        bool complete;
    };
    std::vector<Shape> shapes;
    for (unsigned long p : {3ul, 5ul})
        for (std::size_t n : {std::size_t(2), std::size_t(3)})
            for (bool complete : {false, true}) shapes.push_back({p, n, complete});
    auto items = run_items(shapes.size(), false, [&](std::size_t idx) {
        ItemResult r;
        const Shape s = shapes[idx];
        const QuotientGroup zp(IntMatrix::diagonal(Vec{Int(s.p)}));
        std::vector<Vec> gens;
        if (s.complete)
            for (unsigned long v = 1; v < s.p; ++v) gens.push_back(Vec{Int(v)});
        else
            gens.push_back(Vec{Int(1)});
        const CirculantGraph factor(zp, make_jump_set(zp, gens, true));
        CirculantGraph prod = factor;
        for (std::size_t i = 1; i < s.n; ++i) prod = cartesian_product(prod, factor);

        const DirectionPartition dp = detect_directions(prod.graph(), s.p);
        ++r.checks;
        if (dp.direction_count != s.n) {
            r.failure = "p=" + std::to_string(s.p) + " n=" + std::to_string(s.n) +
                        (s.complete ? " complete" : " cycle") + ": found " +
                        std::to_string(dp.direction_count) + " directions";
            return r;
        }
        ++r.checks;
        if (dp.direction_of_edge.size() != prod.graph().edge_count()) {
            r.failure = "direction map does not cover every edge";
            return r;
        }
        // Each detected direction must map onto one ground-truth coordinate.
        std::vector<std::size_t> rename(s.n, static_cast<std::size_t>(-1));
        for (const auto& [edge, d] : dp.direction_of_edge) {
            const Vec& u = prod.vertices()[edge.first];
            const Vec& v = prod.vertices()[edge.second];
            std::size_t coord = s.n, differing = 0;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (u[i] != v[i]) {
                    coord = i;
                    ++differing;
                }
            ++r.checks;
            if (differing != 1) {
                r.failure = "edge endpoints differ in " + std::to_string(differing) +
                            " coordinates";
                return r;
            }
            if (rename[d] == static_cast<std::size_t>(-1)) rename[d] = coord;
            if (rename[d] != coord) {
                r.failure = "direction " + std::to_string(d) + " mixes coordinates";
                return r;
            }
        }
        std::vector<bool> hit(s.n, false);
        for (std::size_t d = 0; d < s.n; ++d) {
            if (rename[d] == static_cast<std::size_t>(-1) || hit[rename[d]]) {
                r.failure = "directions do not biject onto coordinates";
                return r;
            }
            hit[rename[d]] = true;
        }
        return r;
    });
    return finish("direction-recovery", 120.0, t, items);
}

SweepOutcome normal_form_property_sweep(const SweepConfig& cfg) {
    Timer t;
    struct Instance {
        IntMatrix m, rpre, rpost;
    };
    Rng rng(cfg.seed + 2);
    std::vector<Instance> insts;
    while (insts.size() < 500) {
        const std::size_t n = 1 + rng() % 5;
        IntMatrix m = random_nonsingular(rng, n, -9, 9);
        IntMatrix rpre = random_unimodular(rng, n);
        IntMatrix rpost = random_unimodular(rng, n);
        insts.push_back({std::move(m), std::move(rpre), std::move(rpost)});
    }
    auto items = run_items(insts.size(), cfg.parallel, [&](std::size_t idx) {
        ItemResult r;
        const Instance& inst = insts[idx];
        const IntMatrix& m = inst.m;
        const std::size_t n = m.rows();
        auto fail = [&](const std::string& what) {
            r.failure = "matrix " + describe_matrix(m) + ": " + what;
        };

        const HermiteDecomposition h = hermite_normal_form(m);
        r.checks += 4;
        if (mat_mul(m, h.V) != h.H) {
            fail("M*V does not reproduce the hermite form");
            return r;
        }
        if (abs(det(h.V)) != 1) {
            fail("hermite transform is not unimodular");
            return r;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (h.H(i, i) <= 0) {
                fail("hermite diagonal is not positive");
                return r;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (j < i && h.H(i, j) != 0) {
                    fail("hermite form is not upper triangular");
                    return r;
                }
                if (j > i && (h.H(i, j) < 0 || h.H(i, j) >= h.H(i, i))) {
                    fail("hermite residues out of range");
                    return r;
                }
            }
        }

        const SmithDecomposition s = smith_normal_form(m);
        r.checks += 6;
        if (mat_mul(mat_mul(s.U, m), s.V) != s.S) {
            fail("U*M*V does not reproduce the smith form");
            return r;
        }
        if (abs(det(s.U)) != 1 || abs(det(s.V)) != 1) {
            fail("smith transforms are not unimodular");
            return r;
        }
        Int running(1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && s.S(i, j) != 0) {
                    fail("smith form is not diagonal");
                    return r;
                }
            if (s.S(i, i) <= 0 || s.factors[i] != s.S(i, i)) {
                fail("invariant factors do not match the diagonal");
                return r;
            }
            if (i + 1 < n && s.factors[i + 1] % s.factors[i] != 0) {
                fail("divisibility chain broken");
                return r;
            }
            running *= s.factors[i];
            if (s.divisors[i] != running) {
                fail("determinantal divisors are not running products");
                return r;
            }
        }
        if (s.divisors.back() != abs(det(m))) {
            fail("last divisor is not |det|");
            return r;
        }
        if (invariant_factors(m) != s.factors || determinantal_divisors(m) != s.divisors) {
            fail("helper accessors disagree with the decomposition");
            return r;
        }
        if (n <= 4) {
            ++r.checks;
            if (determinantal_divisors_by_minors(m) != s.divisors) {
                fail("minor enumeration disagrees with the divisors");
                return r;
            }
        }

        r.checks += 2;
        if (hermite_normal_form(mat_mul(m, inst.rpost)).H != h.H) {
            fail("hermite form changed under column transformation");
            return r;
        }
        if (smith_normal_form(mat_mul(mat_mul(inst.rpre, m), inst.rpost)).S != s.S) {
            fail("smith form changed under equivalence transformation");
            return r;
        }
        return r;
    });
    return finish("normal-form-properties", 60.0, t, items);
}

std::vector<SweepOutcome> run_verification(const SweepConfig& cfg) {
    std::vector<SweepOutcome> out;
    out.push_back(smith_example_check());
    out.push_back(adam_canonical_example_check());
    out.push_back(two_jump_characterization_sweep(cfg));
    out.push_back(unit_jump_entry_formula_sweep(cfg));
    out.push_back(exceptional_family_check());
    out.push_back(prime_square_dimension_check());
    out.push_back(cube_dimension_check());
    out.push_back(element_order_sweep(cfg));
    out.push_back(component_structure_sweep(cfg));
    out.push_back(direction_recovery_check());
    out.push_back(normal_form_property_sweep(cfg));
    return out;
}

std::string format_outcome(const SweepOutcome& o, std::size_t index, std::size_t total) {
    std::ostringstream ss;
    ss << (o.ok() ? "[PASS] " : "[FAIL] ") << index << "/" << total << " " << o.name << ": "
       << o.checked << " checks in " << o.seconds << "s (budget " << o.budget_seconds << "s)";
    if (!o.pass)
        ss << "; " << o.detail;
    else if (!o.within_budget())
        ss << "; exceeded the time budget";
    return ss.str();
}

}  // namespace mdc
