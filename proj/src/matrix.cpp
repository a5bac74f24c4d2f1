#include "quivarr/matrix.hpp"

#include <string>
#include <utility>

namespace quivarr {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ShapeError(what);
}

// In-place Gauss-Jordan elimination restricted to the first `ncols` columns.
// Returns pivot columns; rows beyond the rank are zero afterwards.
std::vector<size_t> eliminate(Matrix& m, size_t ncols, bool reduce_above) {
    std::vector<size_t> pivots;
    const size_t R = m.rows(), C = m.cols();
    size_t r = 0;
    std::vector<size_t> nz;
    for (size_t c = 0; c < ncols && r < R; ++c) {
        size_t p = r;
        while (p < R && is_zero(m(p, c))) ++p;
        if (p == R) continue;
        if (p != r)
            for (size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        nz.clear();
        for (size_t j = c; j < C; ++j)
            if (!is_zero(m(r, j))) {
                m(r, j) *= inv;
                nz.push_back(j);
            }
        Rational f;
        for (size_t i = reduce_above ? 0 : r + 1; i < R; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            f = m(i, c);
            for (size_t j : nz) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(size_t n) { return scalar(n, 1); }

Matrix Matrix::scalar(size_t n, const Rational& s) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == cols, "row length mismatch");
        for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::column(const Vector& v) {
    Matrix m(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Vector Matrix::row(size_t i) const { return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vector Matrix::col(size_t j) const {
    Vector v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    Matrix b(nr, nc);
    for (size_t i = 0; i < nr; ++i)
        for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(size_t r0, size_t c0, const Matrix& m) {
    require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "block out of range");
    for (size_t i = 0; i < m.rows_; ++i)
        for (size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

void Matrix::add_block(size_t r0, size_t c0, const Matrix& m) {
    require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "block out of range");
    for (size_t i = 0; i < m.rows_; ++i)
        for (size_t j = 0; j < m.cols_; ++j)
            if (!quivarr::is_zero(m(i, j))) (*this)(r0 + i, c0 + j) += m(i, j);
}

Matrix Matrix::select_columns(const std::vector<size_t>& cols) const {
    Matrix m(rows_, cols.size());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<size_t>& rows) const {
    Matrix m(rows.size(), cols_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!quivarr::is_zero(x)) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!quivarr::is_zero(o.a_[k])) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape mismatch");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!quivarr::is_zero(o.a_[k])) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    Rational t;
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (is_zero(x)) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (is_zero(y)) continue;
                t = x * y;
                c(i, j) += t;
            }
        }
    return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
    require(a.cols_ == v.size(), "matrix-vector shape mismatch");
    Vector r(a.rows_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j)
            if (!is_zero(a(i, j)) && !is_zero(v[j])) r[i] += a(i, j) * v[j];
    return r;
}

Matrix hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) return {};
    size_t R = parts.front().rows(), C = 0;
    for (const auto& p : parts) {
        require(p.rows() == R, "hstack row mismatch");
        C += p.cols();
    }
    Matrix m(R, C);
    size_t c = 0;
    for (const auto& p : parts) {
        m.set_block(0, c, p);
        c += p.cols();
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) return {};
    size_t C = parts.front().cols(), R = 0;
    for (const auto& p : parts) {
        require(p.cols() == C, "vstack column mismatch");
        R += p.rows();
    }
    Matrix m(R, C);
    size_t r = 0;
    for (const auto& p : parts) {
        m.set_block(r, 0, p);
        r += p.rows();
    }
    return m;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
    size_t R = 0, C = 0;
    for (const auto& b : blocks) R += b.rows(), C += b.cols();
    Matrix m(R, C);
    size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

RowEchelon rref(const Matrix& m) {
    RowEchelon e{m, {}};
    e.pivots = eliminate(e.form, m.cols(), true);
    return e;
}

size_t rank(const Matrix& m) {
    Matrix w = m.rows() > m.cols() ? m.transpose() : m;
    return eliminate(w, w.cols(), false).size();
}

Rational det(const Matrix& m) {
    require(m.square(), "det of non-square matrix");
    Matrix w = m;
    const size_t n = w.rows();
    Rational d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && is_zero(w(p, c))) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (size_t j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
            d = -d;
        }
        d *= w(c, c);
        Rational inv = 1 / w(c, c);
        for (size_t i = c + 1; i < n; ++i) {
            if (is_zero(w(i, c))) continue;
            Rational f = w(i, c) * inv;
            for (size_t j = c; j < n; ++j)
                if (!is_zero(w(c, j))) w(i, j) -= f * w(c, j);
        }
    }
    return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
    require(m.square(), "inverse of non-square matrix");
    auto x = solve(m, Matrix::identity(m.rows()));
    if (!x || !(m * *x == Matrix::identity(m.rows()))) return std::nullopt;
    return x;
}

bool Subspace::contains(const Vector& v) const {
    require(v.size() == ambient_dim, "vector not in ambient space");
    if (dim() == 0) {
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }
    Matrix ext = vstack({basis, Matrix::from_rows({v}, ambient_dim)});
    return rank(ext) == dim();
}

Subspace kernel_basis(const Matrix& m) {
    auto e = rref(m);
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> rows;
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (size_t r = 0; r < e.pivots.size(); ++r)
            if (!is_zero(e.form(r, f))) v[e.pivots[r]] = -e.form(r, f);
        rows.push_back(std::move(v));
    }
    return Subspace{n, Matrix::from_rows(rows, n)};
}

std::vector<size_t> independent_columns(const Matrix& m) {
    Matrix w = m;
    return eliminate(w, w.cols(), false);
}

Subspace image_basis(const Matrix& m) {
    return Subspace{m.rows(), m.select_columns(independent_columns(m)).transpose()};
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
    require(m.rows() == rhs.rows(), "solve: right-hand side has wrong height");
    Matrix aug = hstack({m, rhs});
    if (m.cols() == 0 && aug.cols() == 0) return Matrix(0, 0);
    if (m.rows() == 0) return Matrix(m.cols(), rhs.cols());
    auto piv = eliminate(aug, m.cols(), true);
    const size_t r = piv.size();
    for (size_t i = r; i < aug.rows(); ++i)
        for (size_t j = m.cols(); j < aug.cols(); ++j)
            if (!is_zero(aug(i, j))) return std::nullopt;
    Matrix x(m.cols(), rhs.cols());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < rhs.cols(); ++j) x(piv[i], j) = aug(i, m.cols() + j);
    return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
    require(m.rows() == rhs.size(), "solve: right-hand side has wrong length");
    auto x = solve(m, Matrix::column(rhs));
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Matrix> solve_left(const Matrix& m, const Matrix& rhs) {
    require(m.cols() == rhs.cols(), "solve_left: right-hand side has wrong width");
    auto x = solve(m.transpose(), rhs.transpose());
    if (!x) return std::nullopt;
    return x->transpose();
}

Matrix annihilator(const Matrix& c) {
    if (c.cols() == 0) return Matrix::identity(c.rows());
    return kernel_basis(c.transpose()).basis;
}

namespace {

// a -= f * b, both sorted sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -f * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second - f * b[j].second;
            if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Subspace sparse_kernel(size_t ncols, const std::vector<SparseRow>& rows) {
    std::vector<SparseRow> pivot_row(ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (SparseRow r : rows) {
        while (!r.empty() && is_pivot[r.front().first]) {
            Rational f = r.front().second;
            r = axpy(r, f, pivot_row[r.front().first]);
        }
        if (r.empty()) continue;
        Rational inv = 1 / r.front().second;
        for (auto& e : r) e.second *= inv;
        size_t c = r.front().first;
        is_pivot[c] = true;
        pivot_row[c] = std::move(r);
    }
    // Back-substitute so that pivot rows only involve free columns.
    for (size_t c = ncols; c-- > 0;) {
        if (!is_pivot[c]) continue;
        SparseRow& r = pivot_row[c];
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t k = 1; k < r.size(); ++k)
                if (is_pivot[r[k].first]) {
                    Rational f = r[k].second;
                    r = axpy(r, f, pivot_row[r[k].first]);
                    changed = true;
                    break;
                }
        }
    }
    std::vector<size_t> free_cols;
    std::vector<long> free_pos(ncols, -1);
    for (size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) {
            free_pos[c] = static_cast<long>(free_cols.size());
            free_cols.push_back(c);
        }
    Matrix basis(free_cols.size(), ncols);
    for (size_t k = 0; k < free_cols.size(); ++k) basis(k, free_cols[k]) = 1;
    for (size_t c = 0; c < ncols; ++c) {
        if (!is_pivot[c]) continue;
        const SparseRow& r = pivot_row[c];
        for (size_t k = 1; k < r.size(); ++k) basis(free_pos[r[k].first], c) = -r[k].second;
    }
    return Subspace{ncols, basis};
}

}  // namespace quivarr
