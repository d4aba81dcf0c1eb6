#include "cerf/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <utility>

#include "cerf/error.hpp"

namespace cerf {

Integer checked_add(Integer a, Integer b) {
    Integer out;
    if (__builtin_add_overflow(a, b, &out)) throw Error("INTEGER_OVERFLOW", "addition overflow");
    return out;
}

Integer checked_sub(Integer a, Integer b) {
    Integer out;
    if (__builtin_sub_overflow(a, b, &out)) throw Error("INTEGER_OVERFLOW", "subtraction overflow");
    return out;
}

Integer checked_mul(Integer a, Integer b) {
    Integer out;
    if (__builtin_mul_overflow(a, b, &out)) throw Error("INTEGER_OVERFLOW", "multiplication overflow");
    return out;
}

namespace {

Integer abs_value(Integer x) {
    if (x == INT64_MIN) throw Error("INTEGER_OVERFLOW", "abs of INT64_MIN");
    return x < 0 ? -x : x;
}

} // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error("DIMENSION_MISMATCH", "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error("DIMENSION_MISMATCH", "row length differs from column count");
        std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
}

std::vector<Integer> IntMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Integer x) { return x == 0; });
}

Integer IntMatrix::max_abs() const {
    Integer best = 0;
    for (Integer x : data_) best = std::max(best, abs_value(x));
    return best;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, Integer factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(target, c) = checked_add((*this)(target, c), checked_mul(factor, (*this)(source, c)));
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, Integer factor) {
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, target) = checked_add((*this)(r, target), checked_mul(factor, (*this)(r, source)));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked_sub(0, (*this)(r, c));
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = checked_sub(0, (*this)(r, c));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("DIMENSION_MISMATCH", "matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
        }
    return out;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
        if (D(i, i) != 0) out.push_back(D(i, i));
    return out;
}

namespace {

// Elimination runs on arbitrary precision integers; only inputs and results
// have to fit in Integer.
using Big = boost::multiprecision::cpp_int;

struct BigMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Big> data;

    BigMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    explicit BigMatrix(const IntMatrix& m) : BigMatrix(m.rows(), m.cols()) {
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) at(i, j) = m(i, j);
    }
    static BigMatrix identity(std::size_t n) {
        BigMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
        return out;
    }

    Big& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Big& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(a, c), at(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, a), at(r, b));
    }
    void add_row_multiple(std::size_t target, std::size_t source, const Big& f) {
        for (std::size_t c = 0; c < cols; ++c) at(target, c) += f * at(source, c);
    }
    void add_col_multiple(std::size_t target, std::size_t source, const Big& f) {
        for (std::size_t r = 0; r < rows; ++r) at(r, target) += f * at(r, source);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols; ++c) at(r, c) = -at(r, c);
    }

    IntMatrix narrow(std::size_t keep_rows) const {
        static const Big lo = std::numeric_limits<Integer>::min(), hi = std::numeric_limits<Integer>::max();
        IntMatrix out(keep_rows, cols);
        for (std::size_t i = 0; i < keep_rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (at(i, j) < lo || at(i, j) > hi) throw Error("INTEGER_OVERFLOW", "result entry exceeds 64 bits");
                out(i, j) = static_cast<Integer>(at(i, j));
            }
        return out;
    }
    IntMatrix narrow() const { return narrow(rows); }
};

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
    BigMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

// Quotient rounded to nearest, so |a - q*b| <= |b|/2.
Big nearest_quotient(const Big& a, const Big& b) {
    Big q = a / b; // truncates
    const Big r = a - q * b;
    if (2 * abs(r) > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

Big floor_quotient(const Big& a, const Big& b) {
    Big q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

// Diagonalises a in place; u and v, when given, collect the row and column
// operations so that u * a0 * v = a.
void smith_reduce(BigMatrix& a, BigMatrix* u, BigMatrix* v) {
    const std::size_t rows = a.rows, cols = a.cols;
    const std::size_t diag = std::min(rows, cols);
    for (std::size_t t = 0; t < diag; ++t) {
        for (;;) {
            // Pivot on the smallest nonzero magnitude in the trailing block.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a.at(i, j) != 0 && (pr == rows || abs(a.at(i, j)) < abs(a.at(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return;
            a.swap_rows(t, pr);
            a.swap_cols(t, pc);
            if (u) u->swap_rows(t, pr);
            if (v) v->swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a.at(i, t) == 0) continue;
                const Big q = -nearest_quotient(a.at(i, t), a.at(t, t));
                a.add_row_multiple(i, t, q);
                if (u) u->add_row_multiple(i, t, q);
                clean = clean && a.at(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a.at(t, j) == 0) continue;
                const Big q = -nearest_quotient(a.at(t, j), a.at(t, t));
                a.add_col_multiple(j, t, q);
                if (v) v->add_col_multiple(j, t, q);
                clean = clean && a.at(t, j) == 0;
            }
            if (!clean) continue;

            // The pivot has to divide the whole trailing block.
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == rows) break;
            a.add_row_multiple(t, bad_row, 1);
            if (u) u->add_row_multiple(t, bad_row, 1);
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            if (u) u->negate_row(t);
        }
    }
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    BigMatrix a(m);
    BigMatrix u = BigMatrix::identity(m.rows());
    BigMatrix v = BigMatrix::identity(m.cols());
    smith_reduce(a, &u, &v);
    if ((u * BigMatrix(m) * v).data != a.data) throw Error("INTERNAL", "Smith normal form verification failed");
    const std::size_t diag = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i + 1 < diag; ++i)
        if (a.at(i, i) != 0 && a.at(i + 1, i + 1) % a.at(i, i) != 0)
            throw Error("INTERNAL", "Smith normal form divisibility chain broken");
    return {a.narrow(), u.narrow(), v.narrow()};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
    BigMatrix a(m);
    smith_reduce(a, nullptr, nullptr);
    const auto d = a.narrow();
    std::vector<Integer> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        if (d(i, i) != 0) out.push_back(d(i, i));
    return out;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    BigMatrix a(m);
    const std::size_t rows = a.rows;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < a.cols && pivot_row < rows; ++c) {
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = pivot_row; i < rows; ++i)
                if (a.at(i, c) != 0 && (best == rows || abs(a.at(i, c)) < abs(a.at(best, c)))) best = i;
            if (best == rows) break;
            a.swap_rows(pivot_row, best);
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < rows; ++i) {
                if (a.at(i, c) == 0) continue;
                a.add_row_multiple(i, pivot_row, -nearest_quotient(a.at(i, c), a.at(pivot_row, c)));
                clean = clean && a.at(i, c) == 0;
            }
            if (clean) break;
        }
        if (a.at(pivot_row, c) == 0) continue;
        if (a.at(pivot_row, c) < 0) a.negate_row(pivot_row);
        for (std::size_t i = 0; i < pivot_row; ++i)
            a.add_row_multiple(i, pivot_row, -floor_quotient(a.at(i, c), a.at(pivot_row, c)));
        ++pivot_row;
    }
    return a.narrow(pivot_row);
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw Error("DIMENSION_MISMATCH", "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return static_cast<Integer>(boost::multiprecision::numerator(det));
}

bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    const Integer d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!is_unimodular(m)) throw Error("NOT_UNIMODULAR", "matrix is not invertible over the integers");
    // Gauss-Jordan over Q; the inverse of a unimodular matrix is integral.
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (a[p][k] == 0) ++p;
        std::swap(a[p], a[k]);
        const Rational inv = 1 / a[k][k];
        for (auto& x : a[k]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Rational f = a[i][k];
            for (std::size_t j = k; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = a[i][n + j];
            if (boost::multiprecision::denominator(x) != 1) throw Error("INTERNAL", "inverse is not integral");
            const auto num = boost::multiprecision::numerator(x);
            if (num < std::numeric_limits<Integer>::min() || num > std::numeric_limits<Integer>::max())
                throw Error("INTEGER_OVERFLOW", "inverse entry exceeds 64 bits");
            out(i, j) = static_cast<Integer>(num);
        }
    if (out * m != IntMatrix::identity(n)) throw Error("INTERNAL", "unimodular inverse check failed");
    return out;
}

RationalMatrix rational_left_kernel(const IntMatrix& m) {
    // Null space of m^T, by reduced row echelon form.
    const std::size_t n = m.rows();  // unknowns
    const std::size_t eqs = m.cols();
    RationalMatrix a(eqs, std::vector<Rational>(n));
    for (std::size_t i = 0; i < eqs; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(j, i);

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < eqs; ++c) {
        std::size_t p = r;
        while (p < eqs && a[p][c] == 0) ++p;
        if (p == eqs) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < eqs; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    RationalMatrix basis;
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Inertia symmetric_inertia(RationalMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("DIMENSION_MISMATCH", "form matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) throw Error("NOT_SYMMETRIC", "form matrix is not symmetric");

    Inertia inertia;
    auto swap_index = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        for (auto& row : m) std::swap(row[a], row[b]);
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && m[j][j] == 0) ++j;
            if (j < n) {
                swap_index(k, j);
            } else {
                j = k + 1;
                while (j < n && m[k][j] == 0) ++j;
                if (j == n) {
                    ++inertia.zero;
                    continue;
                }
                // Congruence by e_k -> e_k + e_j makes the pivot 2*m[k][j].
                for (std::size_t c = 0; c < n; ++c) m[k][c] += m[j][c];
                for (std::size_t r = 0; r < n; ++r) m[r][k] += m[r][j];
            }
        }
        const Rational pivot = m[k][k];
        if (pivot > 0) ++inertia.positive; else ++inertia.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rational f = m[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            m[k][i] = 0;
            m[i][k] = 0;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) m[j][i] = m[i][j];
    }
    return inertia;
}

} // namespace cerf
