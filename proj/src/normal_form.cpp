#include "mdc/normal_form.hpp"

#include <cstdlib>
#include <vector>

namespace mdc {

namespace {

// Core column reduction shared by the square and rectangular entry points.
// Processes pivot rows bottom-up; row i gets its pivot in column c - n + i.
// Throws SingularMatrix when a pivot row vanishes (rank < n).
void column_reduce(IntMatrix& w, IntMatrix& v) {
    const std::size_t n = w.rows(), c = w.cols();
    for (std::size_t ii = n; ii-- > 0;) {
        const std::size_t p = c - n + ii;
        // Concentrate the gcd of row ii over columns 0..p into column p.
        while (true) {
            std::size_t best = c;  // column with smallest nonzero |entry|
            std::size_t nonzero = 0;
            for (std::size_t j = 0; j <= p; ++j) {
                if (w(ii, j) == 0) continue;
                ++nonzero;
                if (best == c || cmp_abs(w(ii, j), w(ii, best)) < 0) best = j;
            }
            if (nonzero == 0) throw SingularMatrix("matrix columns do not span full rank");
            if (nonzero == 1) {
                if (best != p) {
                    w.swap_cols(best, p);
                    v.swap_cols(best, p);
                }
                break;
            }
            for (std::size_t j = 0; j <= p; ++j) {
                if (j == best || w(ii, j) == 0) continue;
                Int t = -trunc_div(w(ii, j), w(ii, best));
                w.add_col_multiple(j, best, t);
                v.add_col_multiple(j, best, t);
            }
        }
        if (w(ii, p) < 0) {
            w.negate_col(p);
            v.negate_col(p);
        }
        // Canonical residues to the right of the pivot: 0 <= w(ii, j) < w(ii, p).
        for (std::size_t j = p + 1; j < c; ++j) {
            Int q = -floor_div(w(ii, j), w(ii, p));
            w.add_col_multiple(j, p, q);
            v.add_col_multiple(j, p, q);
        }
    }
}

}  // namespace

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("Hermite form requires a square matrix");
    IntMatrix h = m;
    IntMatrix v = IntMatrix::identity(m.cols());
    column_reduce(h, v);
    return {h, v};
}

LatticeHermite lattice_hermite(const IntMatrix& w) {
    if (w.cols() < w.rows()) throw DimensionMismatch("lattice form requires cols >= rows");
    IntMatrix t = w;
    IntMatrix v = IntMatrix::identity(w.cols());
    column_reduce(t, v);
    const std::size_t n = t.rows(), c = t.cols();
    IntMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = t(i, c - n + j);
    return {t, v, h};
}

namespace {

// One full clearing pass on row/column k of s, mirroring the row operations
// into u and the column operations into v.
void clear_cross(IntMatrix& s, IntMatrix& u, IntMatrix& v, std::size_t k) {
    const std::size_t n = s.rows();
    while (true) {
        for (std::size_t i = k + 1; i < n; ++i) {
            while (s(i, k) != 0) {
                Int q = trunc_div(s(i, k), s(k, k));
                s.add_row_multiple(i, k, -q);
                u.add_row_multiple(i, k, -q);
                if (s(i, k) != 0) {  // pivot does not divide: shrink it
                    s.swap_rows(i, k);
                    u.swap_rows(i, k);
                }
            }
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            while (s(k, j) != 0) {
                Int q = trunc_div(s(k, j), s(k, k));
                s.add_col_multiple(j, k, -q);
                v.add_col_multiple(j, k, -q);
                if (s(k, j) != 0) {
                    s.swap_cols(j, k);
                    v.swap_cols(j, k);
                }
            }
        }
        // Column swaps may have re-dirtied the pivot column; repeat until
        // both the row and the column are clean.  Each swap strictly shrinks
        // |s(k,k)|, so this terminates.
        bool clean = true;
        for (std::size_t i = k + 1; i < n && clean; ++i)
            if (s(i, k) != 0) clean = false;
        if (clean) return;
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("Smith form requires a square matrix");
    const std::size_t n = m.rows();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Pivot: smallest nonzero |entry| of the trailing submatrix.
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (s(i, j) == 0) continue;
                if (pi == n || cmp_abs(s(i, j), s(pi, pj)) < 0) { pi = i; pj = j; }
            }
        if (pi == n) throw SingularMatrix("matrix is singular");
        s.swap_rows(k, pi);
        u.swap_rows(k, pi);
        s.swap_cols(k, pj);
        v.swap_cols(k, pj);
        while (true) {
            clear_cross(s, u, v, k);
            // Divisibility repair: the pivot must divide the whole trailing block.
            bool repaired = false;
            for (std::size_t i = k + 1; i < n && !repaired; ++i)
                for (std::size_t j = k + 1; j < n && !repaired; ++j)
                    if (floor_mod(s(i, j), s(k, k)) != 0) {
                        s.add_row_multiple(k, i, Int(1));
                        u.add_row_multiple(k, i, Int(1));
                        repaired = true;
                    }
            if (!repaired) break;
        }
        if (s(k, k) < 0) {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithDecomposition r{u, s, v, Vec(n), Vec(n)};
    Int running = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r.factors[i] = s(i, i);
        running *= s(i, i);
        r.divisors[i] = running;
    }
    return r;
}

Vec invariant_factors(const IntMatrix& m) { return smith_normal_form(m).factors; }

Vec determinantal_divisors(const IntMatrix& m) { return smith_normal_form(m).divisors; }

namespace {

void subsets_of_size(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur(k);
    auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

Vec determinantal_divisors_by_minors(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("divisors of non-square matrix");
    const std::size_t n = m.rows();
    if (n > 4) throw TooLarge("minor enumeration is limited to n <= 4");
    Vec d(n);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<std::size_t>> row_sets, col_sets;
        subsets_of_size(n, k, row_sets);
        subsets_of_size(n, k, col_sets);
        Int g = 0;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
                g = gcd(g, det(sub));
            }
        d[k - 1] = g;
    }
    return d;
}

}  // namespace mdc
