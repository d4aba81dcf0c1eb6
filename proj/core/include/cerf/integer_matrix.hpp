#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cerf {

using Integer = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;

// Overflow-checked arithmetic; throws Error("INTEGER_OVERFLOW").
Integer checked_add(Integer a, Integer b);
Integer checked_sub(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Integer operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Integer> row_vector(std::size_t r) const;

    IntMatrix transpose() const;
    bool is_zero() const;
    Integer max_abs() const;

    // Elementary operations used by the normal-form routines.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t target, std::size_t source, Integer factor); // row_t += f * row_s
    void add_col_multiple(std::size_t target, std::size_t source, Integer factor); // col_t += f * col_s
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    bool operator==(const IntMatrix&) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// U * M * V = D with U, V unimodular and D diagonal (non-negative,
/// each diagonal entry dividing the next).
struct SmithDecomposition {
    IntMatrix D;
    IntMatrix U;
    IntMatrix V;

    std::vector<Integer> invariant_factors() const; // nonzero diagonal entries
    std::size_t rank() const { return invariant_factors().size(); }
};

/// Elimination is carried out in arbitrary precision; throws INTEGER_OVERFLOW
/// only when an entry of D, U or V does not fit in Integer.
SmithDecomposition smith_normal_form(const IntMatrix& m);
/// Nonzero diagonal of the Smith form, without the transforms.
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice of `m`; zero rows dropped.
/// Pivots are positive, entries above a pivot lie in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
IntMatrix unimodular_inverse(const IntMatrix& m);

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis (over Q) of { x : x * m = 0 }.
RationalMatrix rational_left_kernel(const IntMatrix& m);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    int signature() const { return positive - negative; }
};

/// Inertia of a symmetric rational matrix by exact congruence diagonalisation.
Inertia symmetric_inertia(RationalMatrix m);

} // namespace cerf
