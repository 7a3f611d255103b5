#include "mdc/matrix.hpp"

#include <cctype>
#include <utility>

namespace mdc {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : rows_(rows.size()), cols_(0) {
    for (const auto& r : rows) {
        if (cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer");
        for (long v : r) a_.emplace_back(v);
    }
    if (rows_ == 0) cols_ = 0;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const Vec& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Vec IntMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Vec IntMatrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t k, const Int& t) {
    if (t == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += t * (*this)(k, j);
}

void IntMatrix::add_col_multiple(std::size_t j, std::size_t k, const Int& t) {
    if (t == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += t * (*this)(i, k);
}

IntMatrix IntMatrix::minor_matrix(std::size_t i, std::size_t j) const {
    IntMatrix m(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < cols_; ++c) {
            if (c == j) continue;
            m(mr, mc) = (*this)(r, c);
            ++mc;
        }
        ++mr;
    }
    return m;
}

std::string IntMatrix::to_text() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ',';
            s += (*this)(i, j).get_str();
        }
    }
    return s;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vec mat_vec(const IntMatrix& a, const Vec& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vec y(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

IntMatrix mat_neg(const IntMatrix& a) {
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = -a(i, j);
    return r;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix r(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
    return r;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

IntMatrix concat_cols(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("column concatenation needs equal row counts");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        // Bareiss step: every division below is exact.
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return IntMatrix(0, 0);
    if (n == 1) return IntMatrix::identity(1);
    IntMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int c = det(m.minor_matrix(i, j));
            adj(j, i) = ((i + j) % 2 == 0) ? c : Int(-c);
        }
    return adj;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    Int d = det(u);
    if (d != 1 && d != -1) throw NotUnimodular("matrix has determinant " + d.get_str());
    IntMatrix inv = adjugate(u);
    if (d == -1)
        for (std::size_t i = 0; i < inv.rows(); ++i)
            for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) = -inv(i, j);
    return inv;
}

Vec scaled_inverse_apply(const IntMatrix& m, const Vec& a) {
    if (!m.is_square()) throw DimensionMismatch("scaled inverse of non-square matrix");
    if (m.rows() != a.size()) throw DimensionMismatch("vector size does not match matrix");
    Int d = det(m);
    if (d == 0) throw SingularMatrix("matrix is singular");
    Vec r = mat_vec(adjugate(m), a);
    if (d < 0)
        for (Int& v : r) v = -v;
    return r;
}

namespace {

// Splits on `sep` at depth zero, keeping empty fields (reported as errors by
// the caller with a meaningful position).
std::vector<std::pair<std::string, std::size_t>> split_with_pos(const std::string& s, char sep) {
    std::vector<std::pair<std::string, std::size_t>> parts;
    std::string cur;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.emplace_back(cur, start);
            cur.clear();
            start = i + 1;
        } else {
            cur += s[i];
        }
    }
    return parts;
}

std::string strip_ws(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Int parse_int_field(const std::string& field, std::size_t pos) {
    std::string t = strip_ws(field);
    if (t.empty()) throw ParseError("empty entry at position " + std::to_string(pos));
    for (std::size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+') && i == 0)))
            throw ParseError("invalid character '" + std::string(1, c) + "' at position " + std::to_string(pos + i));
    }
    if (t == "-" || t == "+") throw ParseError("lone sign at position " + std::to_string(pos));
    return Int(t);
}

// Minimal JSON array-of-arrays reader; full JSON handling lives in the CLI.
bool looks_like_json(const std::string& s) {
    std::string t = strip_ws(s);
    return !t.empty() && t.front() == '[';
}

std::vector<Vec> parse_json_rows(const std::string& s) {
    std::vector<Vec> rows;
    std::size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    auto expect = [&](char c) {
        skip();
        if (i >= s.size() || s[i] != c)
            throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i));
        ++i;
    };
    skip();
    std::size_t outer = i;
    expect('[');
    skip();
    bool nested = i < s.size() && s[i] == '[';
    auto read_number = [&]() -> Int {
        skip();
        std::size_t b = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == b) throw ParseError("expected integer at position " + std::to_string(b));
        return parse_int_field(s.substr(b, i - b), b);
    };
    auto read_row = [&]() -> Vec {
        Vec row;
        expect('[');
        skip();
        if (i < s.size() && s[i] == ']') { ++i; return row; }
        while (true) {
            row.push_back(read_number());
            skip();
            if (i < s.size() && s[i] == ',') { ++i; continue; }
            expect(']');
            break;
        }
        return row;
    };
    if (!nested) {
        // flat array: a single vector
        i = outer;
        rows.push_back(read_row());
        skip();
        if (i != s.size()) throw ParseError("trailing characters at position " + std::to_string(i));
        return rows;
    }
    while (true) {
        rows.push_back(read_row());
        skip();
        if (i < s.size() && s[i] == ',') { ++i; skip(); continue; }
        expect(']');
        break;
    }
    skip();
    if (i != s.size()) throw ParseError("trailing characters at position " + std::to_string(i));
    return rows;
}

}  // namespace

IntMatrix parse_matrix(const std::string& text) {
    std::vector<Vec> rows;
    if (looks_like_json(text)) {
        rows = parse_json_rows(text);
    } else {
        for (const auto& [row_text, row_pos] : split_with_pos(text, ';')) {
            Vec row;
            for (const auto& [field, pos] : split_with_pos(row_text, ','))
                row.push_back(parse_int_field(field, row_pos + pos));
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) throw ParseError("empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                             " entries, expected " + std::to_string(rows[0].size()));
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec parse_vector(const std::string& text) {
    if (looks_like_json(text)) {
        auto rows = parse_json_rows(text);
        if (rows.size() != 1) throw ParseError("expected a single vector");
        return rows[0];
    }
    Vec v;
    for (const auto& [field, pos] : split_with_pos(text, ',')) v.push_back(parse_int_field(field, pos));
    return v;
}

std::vector<Vec> parse_vector_list(const std::string& text) {
    if (looks_like_json(text)) return parse_json_rows(text);
    std::vector<Vec> vs;
    for (const auto& [part, pos] : split_with_pos(text, '|')) {
        Vec v;
        for (const auto& [field, fpos] : split_with_pos(part, ',')) v.push_back(parse_int_field(field, pos + fpos));
        vs.push_back(std::move(v));
    }
    return vs;
}

}  // namespace mdc
