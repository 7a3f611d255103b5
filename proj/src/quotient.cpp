#include "mdc/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "mdc/errors.hpp"

namespace mdc {

QuotientGroup::QuotientGroup(IntMatrix m)
    : m_(std::move(m)), hnf_(hermite_normal_form(m_)), snf_(smith_normal_form(m_)) {
    const std::size_t n = m_.rows();
    order_ = 1;
    for (std::size_t i = 0; i < n; ++i) order_ *= snf_.factors[i];
    while (rank_ < n && snf_.factors[n - 1 - rank_] > 1) ++rank_;
    sprime_.assign(snf_.factors.end() - static_cast<std::ptrdiff_t>(rank_), snf_.factors.end());
    uprime_ = IntMatrix(rank_, n);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < n; ++j) uprime_(i, j) = snf_.U(n - rank_ + i, j);
    const IntMatrix uinv = unimodular_inverse(snf_.U);
    uinv_cols_ = IntMatrix(n, rank_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < rank_; ++j) uinv_cols_(i, j) = uinv(i, n - rank_ + j);
}

Vec QuotientGroup::canonicalize(const Vec& a) const {
    const std::size_t n = dim();
    if (a.size() != n) throw DimensionMismatch("vector length does not match group dimension");
    Vec r = a;
    const IntMatrix& h = hnf_.H;
    for (std::size_t ii = n; ii-- > 0;) {
        const Int q = floor_div(r[ii], h(ii, ii));
        if (q == 0) continue;
        for (std::size_t k = 0; k <= ii; ++k) r[k] -= q * h(k, ii);
    }
    return r;
}

bool QuotientGroup::is_canonical(const Vec& a) const {
    if (a.size() != dim()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= hnf_.H(i, i)) return false;
    return true;
}

bool QuotientGroup::congruent(const Vec& a, const Vec& b) const {
    return canonicalize(a) == canonicalize(b);
}

Int QuotientGroup::element_order(const Vec& a) const {
    if (a.size() != dim()) throw DimensionMismatch("vector length does not match group dimension");
    const Vec w = scaled_inverse_apply(m_, a);
    Int g = order_;
    for (const Int& x : w) g = gcd(g, x);
    return order_ / g;
}

std::vector<Vec> QuotientGroup::elements() const {
    if (order_ > 1000000) throw TooLarge("group too large to enumerate");
    const std::size_t n = dim();
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(order_.get_ui()));
    Vec cur(n, Int(0));
    while (true) {
        out.push_back(cur);
        std::size_t i = n;
        while (i-- > 0) {
            ++cur[i];
            if (cur[i] < hnf_.H(i, i)) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
    }
}

Vec QuotientGroup::to_snf_coords(const Vec& a) const {
    if (a.size() != dim()) throw DimensionMismatch("vector length does not match group dimension");
    Vec c = mat_vec(uprime_, a);
    for (std::size_t i = 0; i < rank_; ++i) c[i] = floor_mod(c[i], sprime_[i]);
    return c;
}

Vec QuotientGroup::from_snf_coords(const Vec& c) const {
    if (c.size() != rank_) throw DimensionMismatch("coordinate length does not match group rank");
    return canonicalize(mat_vec(uinv_cols_, c));
}

Int QuotientGroup::subgroup_index(const std::vector<Vec>& gens) const {
    const std::size_t n = dim();
    for (const Vec& g : gens)
        if (g.size() != n) throw DimensionMismatch("generator length does not match group dimension");
    IntMatrix w(n, n + gens.size());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = m_(i, j);
        for (std::size_t j = 0; j < gens.size(); ++j) w(i, n + j) = gens[j][i];
    }
    const LatticeHermite lh = lattice_hermite(w);
    Int idx = 1;
    for (std::size_t i = 0; i < n; ++i) idx *= lh.H(i, i);
    return idx;
}

bool QuotientGroup::generates(const std::vector<Vec>& gens) const {
    return subgroup_index(gens) == 1;
}

std::optional<Vec> QuotientGroup::solve_membership(const std::vector<Vec>& gens, const Vec& target) const {
    const std::size_t n = dim();
    const std::size_t d = gens.size();
    if (target.size() != n) throw DimensionMismatch("target length does not match group dimension");
    for (const Vec& g : gens)
        if (g.size() != n) throw DimensionMismatch("generator length does not match group dimension");
    // Columns [gens | M] span the lattice of vectors congruent to combinations
    // of the generators; target is reachable iff it lies in that lattice.
    IntMatrix w(n, d + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) w(i, j) = gens[j][i];
        for (std::size_t j = 0; j < n; ++j) w(i, d + j) = m_(i, j);
    }
    const LatticeHermite lh = lattice_hermite(w);
    // Back-substitute H t = target, then map t through V to coefficients of
    // the original columns; the first d entries belong to the generators.
    Vec t(n, Int(0));
    for (std::size_t ii = n; ii-- > 0;) {
        Int num = target[ii];
        for (std::size_t j = ii + 1; j < n; ++j) num -= lh.H(ii, j) * t[j];
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), lh.H(ii, ii).get_mpz_t());
        if (rem != 0) return std::nullopt;
        t[ii] = q;
    }
    Vec full(d + n, Int(0));
    for (std::size_t i = 0; i < n; ++i) full[d + i] = t[i];
    const Vec z = mat_vec(lh.V, full);
    return Vec(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(d));
}

IntMatrix QuotientGroup::presentation_from_generators(const std::vector<Vec>& gens) const {
    const std::size_t n = dim();
    const std::size_t d = gens.size();
    for (const Vec& g : gens)
        if (g.size() != n) throw DimensionMismatch("generator length does not match group dimension");
    IntMatrix t(d, d);
    if (d == 0) return t;
    if (order_ > 1000000) throw TooLarge("group too large for subgroup closure");

    // Grow the subgroup one generator at a time, remembering for every
    // element one expression in the generators seen so far.
    std::map<Vec, Vec> expr;
    expr.emplace(zero(), Vec(d, Int(0)));
    for (std::size_t j = 0; j < d; ++j) {
        const Vec gj = canonicalize(gens[j]);
        Vec cur = gj;
        Int mu = 1;
        while (!expr.count(cur)) {
            cur = add(cur, gj);
            ++mu;
        }
        t(j, j) = mu;
        const Vec& w = expr.at(cur);
        for (std::size_t i = 0; i < j; ++i) t(i, j) = -w[i];

        std::vector<std::pair<Vec, Vec>> base(expr.begin(), expr.end());
        Vec shift = zero();
        for (Int k = 1; k < mu; ++k) {
            shift = add(shift, gj);
            for (const auto& [elem, coeff] : base) {
                Vec ne = add(elem, shift);
                Vec nc = coeff;
                nc[j] = k;
                expr.emplace(std::move(ne), std::move(nc));
            }
        }
    }
    // Reduce the off-diagonal entries to canonical residues.
    for (std::size_t j = 1; j < d; ++j)
        for (std::size_t ii = j; ii-- > 0;) {
            const Int q = floor_div(t(ii, j), t(ii, ii));
            if (q != 0) t.add_col_multiple(j, ii, -q);
        }
    return t;
}

Vec apply_automorphism(const QuotientGroup& g, const GroupAutomorphism& f, const Vec& snf_coords) {
    const std::size_t r = g.rank();
    if (snf_coords.size() != r || f.images.size() != r)
        throw DimensionMismatch("coordinate length does not match group rank");
    Vec out(r, Int(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k)
            out[k] = floor_mod(out[k] + snf_coords[i] * f.images[i][k], g.cyclic_factors()[k]);
    return out;
}

namespace {

Int snf_coord_order(const Vec& sprime, const Vec& c) {
    Int o = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Int oi = sprime[i] / gcd(sprime[i], c[i]);
        o = o / gcd(o, oi) * oi;
    }
    return o;
}

}  // namespace

std::vector<GroupAutomorphism> group_automorphisms(const QuotientGroup& g, const Int& max_order) {
    if (g.order() > max_order) throw TooLarge("group too large to enumerate automorphisms");
    const std::size_t r = g.rank();
    if (r == 0) return {GroupAutomorphism{}};
    const Vec& sp = g.cyclic_factors();

    std::vector<Vec> all;
    {
        Vec cur(r, Int(0));
        while (true) {
            all.push_back(cur);
            std::size_t i = r;
            bool done = false;
            while (i-- > 0) {
                ++cur[i];
                if (cur[i] < sp[i]) break;
                cur[i] = 0;
                if (i == 0) done = true;
            }
            if (done) break;
        }
    }
    std::vector<std::vector<Vec>> candidates(r);
    for (const Vec& c : all)
        for (std::size_t i = 0; i < r; ++i)
            if (snf_coord_order(sp, c) == sp[i]) candidates[i].push_back(c);

    std::vector<GroupAutomorphism> result;
    GroupAutomorphism f;
    f.images.resize(r);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == r) {
            std::set<Vec> seen;
            for (const Vec& c : all) seen.insert(apply_automorphism(g, f, c));
            if (seen.size() == all.size()) result.push_back(f);
            return;
        }
        for (const Vec& c : candidates[i]) {
            f.images[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return result;
}

Int element_order_2x2(const QuotientGroup& g, const Vec& a) {
    if (g.dim() != 2 || a.size() != 2) throw DimensionMismatch("closed form requires a 2x2 matrix");
    const IntMatrix& m = g.matrix();
    const Int u = a[0] * m(1, 1) - a[1] * m(0, 1);
    const Int v = a[1] * m(0, 0) - a[0] * m(1, 0);
    return g.order() / gcd(gcd(g.order(), u), v);
}

}  // namespace mdc
