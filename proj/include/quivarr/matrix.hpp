#pragma once

#include "quivarr/rational.hpp"

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quivarr {

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<Rational>;

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(size_t n);
    static Matrix scalar(size_t n, const Rational& s);
    static Matrix from_rows(const std::vector<Vector>& rows, size_t cols);
    static Matrix column(const Vector& v);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<Rational>& entries() const { return a_; }

    Vector row(size_t i) const;
    Vector col(size_t j) const;

    Matrix transpose() const;
    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const Matrix& m);
    void add_block(size_t r0, size_t c0, const Matrix& m);
    Matrix select_columns(const std::vector<size_t>& cols) const;
    Matrix select_rows(const std::vector<size_t>& rows) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const = default;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix direct_sum(const std::vector<Matrix>& blocks);

struct RowEchelon {
    Matrix form;
    std::vector<size_t> pivots;
};

RowEchelon rref(const Matrix& m);
size_t rank(const Matrix& m);
Rational det(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// Row space of `basis` inside Q^ambient_dim.
struct Subspace {
    size_t ambient_dim = 0;
    Matrix basis;  // rows are independent

    size_t dim() const { return basis.rows(); }
    // Basis vectors as columns.
    Matrix columns() const { return basis.transpose(); }
    bool contains(const Vector& v) const;
};

Subspace kernel_basis(const Matrix& m);
// Column space of m, spanned by the pivot columns of m.
Subspace image_basis(const Matrix& m);
std::vector<size_t> independent_columns(const Matrix& m);

std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
// X with m X = rhs.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);
// X with X m = rhs.
std::optional<Matrix> solve_left(const Matrix& m, const Matrix& rhs);

// Sparse row: (column, value) pairs with increasing columns and nonzero values.
using SparseRow = std::vector<std::pair<size_t, Rational>>;

// Null space of a sparse system in `ncols` unknowns.
Subspace sparse_kernel(size_t ncols, const std::vector<SparseRow>& rows);

// Rows spanning the annihilator of the column space of c: P c = 0, ker P = col(c).
Matrix annihilator(const Matrix& c);

}  // namespace quivarr
