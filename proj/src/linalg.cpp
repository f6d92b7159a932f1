#include "lei/linalg.hpp"

#include <algorithm>

namespace lei {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vector>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw DimensionMismatch("ragged row list");
        for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    Vector v;
    v.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vector Matrix::col(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("matrix product across fields");
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector r(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::operator<(const Matrix& o) const {
    return std::lexicographical_compare(e_.begin(), e_.end(), o.e_.begin(), o.e_.end());
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    Matrix a = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(piv, c), a.at(rank, c));
        Scalar inv = a.at(rank, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c)
            a.at(rank, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            Scalar factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a.at(rank, c);
        }
        ++rank;
    }
    return {a, rank};
}

Matrix invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    auto [r, rank] = rref(hstack(m, Matrix::identity(m.field(), m.rows())));
    std::size_t n = m.rows();
    // The left block must have reduced to the identity.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i == j ? !r.at(i, j).is_one() : !r.at(i, j).is_zero())
                throw SingularMatrix("matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("vstack across fields");
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack width mismatch");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("hstack across fields");
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack height mismatch");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Subspace::Subspace(const FieldSpec& f, std::size_t ambient)
    : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
    Subspace s(f, ambient);
    s.basis_ = Matrix::identity(f, ambient);
    return s;
}

Subspace Subspace::row_space(const Matrix& m) {
    auto [r, rank] = rref(m);
    Subspace s(m.field(), m.cols());
    Matrix b(m.field(), rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b.at(i, j) = r.at(i, j);
    s.basis_ = b;
    return s;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient,
                        const std::vector<Vector>& vectors) {
    if (vectors.empty()) return Subspace(f, ambient);
    for (const auto& v : vectors)
        if (v.size() != ambient) throw DimensionMismatch("span vector length mismatch");
    return row_space(Matrix::from_rows(f, vectors));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector/ambient mismatch");
    // Reduce v against the echelon basis.
    Vector w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t piv = 0;
        while (piv < ambient_ && basis_.at(i, piv).is_zero()) ++piv;
        if (piv == ambient_) continue;
        if (!w[piv].is_zero()) {
            Scalar factor = w[piv];
            for (std::size_t j = 0; j < ambient_; ++j)
                w[j] -= factor * basis_.at(i, j);
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return field_ == o.field_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw DimensionMismatch("subspace sum: ambient/field mismatch");
    return Subspace::row_space(vstack(a.basis(), b.basis()));
}

// Zassenhaus: rref of [[A A],[B 0]]; rows with zero left half carry an
// intersection basis in the right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient() || !(a.field() == b.field()))
        throw DimensionMismatch("subspace intersect: ambient/field mismatch");
    const std::size_t n = a.ambient();
    const FieldSpec& f = a.field();
    Matrix top = hstack(a.basis(), a.basis());
    Matrix bot = hstack(b.basis(), Matrix(f, b.dim(), n));
    auto [r, rank] = rref(vstack(top, bot));
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (!r.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vector v;
        for (std::size_t j = 0; j < n; ++j) v.push_back(r.at(i, n + j));
        rows.push_back(std::move(v));
    }
    return Subspace::span(f, n, rows);
}

Subspace right_kernel(const Matrix& m) {
    auto [r, rank] = rref(m);
    const std::size_t n = m.cols();
    const FieldSpec& f = m.field();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t c = 0;
        while (c < n && r.at(i, c).is_zero()) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < rank; ++i)
            v[pivot_col[i]] = -r.at(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, n, basis);
}

Matrix kernel_conditions(const Subspace& s) {
    // Double annihilator under the standard form recovers s exactly.
    Subspace ann = right_kernel(s.basis());
    return ann.basis();
}

}  // namespace lei
