#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mdc/errors.hpp"

namespace mdc {

// Arbitrary-precision integer.  All arithmetic in the library is exact.
using Int = mpz_class;
using Vec = std::vector<Int>;

// Floor division / remainder: floor_mod(a, b) lies in [0, |b|) for b != 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Truncating division (C semantics), exact remainder guaranteed smaller in
// absolute value than the divisor.
inline Int trunc_div(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Comparison of absolute values (|a| vs |b|): <0, 0, >0.
inline int cmp_abs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw TooLarge("integer does not fit a machine long: " + v.get_str());
    return v.get_si();
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec vec_scale(const Int& k, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

inline bool vec_is_zero(const Vec& a) {
    for (const Int& v : a)
        if (v != 0) return false;
    return true;
}

// gcd of all entries (0 for an empty or all-zero vector).
inline Int vec_gcd(const Vec& a) {
    Int g = 0;
    for (const Int& v : a) g = gcd(g, v);
    return g;
}

inline std::string vec_to_string(const Vec& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += a[i].get_str();
    }
    return s;
}

}  // namespace mdc
