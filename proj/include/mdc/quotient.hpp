#pragma once

#include <optional>
#include <vector>

#include "mdc/normal_form.hpp"

namespace mdc {

// The group of integral vectors modulo M, i.e. Z^n / M Z^n for a
// nonsingular integer matrix M.  Elements are represented by their unique
// canonical coordinates inside the Hermite box: 0 <= a_i < h_ii.
//
// The group is finite of order m = |det M| and isomorphic to
// Z_{s'_1} x ... x Z_{s'_r}, where s'_1..s'_r are the invariant factors of
// M that exceed 1 and r is the rank.
class QuotientGroup {
public:
    explicit QuotientGroup(IntMatrix m);

    const IntMatrix& matrix() const { return m_; }
    std::size_t dim() const { return m_.rows(); }
    const Int& order() const { return order_; }
    std::size_t rank() const { return rank_; }
    const HermiteDecomposition& hermite() const { return hnf_; }
    const SmithDecomposition& smith() const { return snf_; }
    // Invariant factors greater than one, ascending under divisibility.
    const Vec& cyclic_factors() const { return sprime_; }

    // Unique representative of a's congruence class inside the Hermite box.
    Vec canonicalize(const Vec& a) const;
    bool is_canonical(const Vec& a) const;
    bool congruent(const Vec& a, const Vec& b) const;

    Vec zero() const { return Vec(dim(), Int(0)); }
    Vec add(const Vec& a, const Vec& b) const { return canonicalize(vec_add(a, b)); }
    Vec sub(const Vec& a, const Vec& b) const { return canonicalize(vec_sub(a, b)); }
    Vec neg(const Vec& a) const { return canonicalize(vec_neg(a)); }
    Vec mul(const Int& k, const Vec& a) const { return canonicalize(vec_scale(k, a)); }

    // Order of a in the group: m / gcd(m, gcd(|det M| * M^-1 * a)).
    Int element_order(const Vec& a) const;

    // All m canonical elements in lexicographic order.
    std::vector<Vec> elements() const;

    // Isomorphism onto Z_{s'_1} x ... x Z_{s'_r} given by the last r rows of
    // the Smith left transform, and its inverse from the last r columns of
    // U^-1.
    Vec to_snf_coords(const Vec& a) const;
    Vec from_snf_coords(const Vec& c) const;

    // Index of the subgroup generated by `gens` (order of the quotient by
    // it); 1 iff `gens` generates the whole group.
    Int subgroup_index(const std::vector<Vec>& gens) const;
    bool generates(const std::vector<Vec>& gens) const;

    // Integer coefficients x with sum x_i * gens_i congruent to `target`,
    // when such exist.
    std::optional<Vec> solve_membership(const std::vector<Vec>& gens, const Vec& target) const;

    // Upper-triangular relation matrix T of the subgroup generated by
    // `gens` (T is the presentation of that subgroup on those generators):
    // t_jj is the least mu > 0 with mu * g_j in <g_1..g_{j-1}>, column j
    // records one relation sum_i t_ij g_i = 0, and 0 <= t_ij < t_ii for
    // i < j.  |det T| is the subgroup order.
    IntMatrix presentation_from_generators(const std::vector<Vec>& gens) const;

private:
    IntMatrix m_;
    HermiteDecomposition hnf_;
    SmithDecomposition snf_;
    Int order_;
    std::size_t rank_ = 0;
    Vec sprime_;
    IntMatrix uprime_;     // last r rows of U
    IntMatrix uinv_cols_;  // last r columns of U^-1
};

// Closed form for the order of an element when n = 2, written directly on
// the matrix entries; must agree with QuotientGroup::element_order.
Int element_order_2x2(const QuotientGroup& g, const Vec& a);

// An automorphism of the invariant-factor group Z_{s'_1} x ... x Z_{s'_r},
// stored as the images of the r unit generators (in those coordinates).
struct GroupAutomorphism {
    std::vector<Vec> images;
};

Vec apply_automorphism(const QuotientGroup& g, const GroupAutomorphism& f, const Vec& snf_coords);

// Enumerates all automorphisms of the invariant-factor group by assigning
// generator images of matching order and keeping the bijective ones.
// Feasible only for small group orders; throws TooLarge beyond `max_order`.
std::vector<GroupAutomorphism> group_automorphisms(const QuotientGroup& g, const Int& max_order = Int(5000));

}  // namespace mdc
