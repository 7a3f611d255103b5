#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mdc/integer.hpp"

namespace mdc {

// Dense integer matrix with exact arithmetic, row-major storage.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const Vec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t j, std::size_t k);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row i += t * row k  /  col j += t * col k
    void add_row_multiple(std::size_t i, std::size_t k, const Int& t);
    void add_col_multiple(std::size_t j, std::size_t k, const Int& t);

    // Drops row i and column j (used by cofactor expansion).
    IntMatrix minor_matrix(std::size_t i, std::size_t j) const;

    std::string to_text() const;  // rows ';'-separated, entries ','-separated

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Vec mat_vec(const IntMatrix& a, const Vec& x);
IntMatrix mat_neg(const IntMatrix& a);
IntMatrix transpose(const IntMatrix& a);
// Block-diagonal concatenation diag(a, b).
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);
// Horizontal concatenation [a | b].
IntMatrix concat_cols(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& m);

// Adjugate matrix: m * adjugate(m) = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

// Exact inverse of a unimodular matrix (|det| = 1); throws NotUnimodular.
IntMatrix unimodular_inverse(const IntMatrix& u);

// Returns |det m| * m^-1 * a as an integer vector; throws SingularMatrix.
Vec scaled_inverse_apply(const IntMatrix& m, const Vec& a);

// Parses the matrix text format ("1,2;3,4") or a JSON array of arrays.
// Throws ParseError with the offending position.
IntMatrix parse_matrix(const std::string& text);

// Parses a '|'-separated list of vectors ("1,0|0,1"), or a JSON array.
std::vector<Vec> parse_vector_list(const std::string& text);
Vec parse_vector(const std::string& text);

}  // namespace mdc
