#ifndef LEI_LINALG_HPP
#define LEI_LINALG_HPP

#include "lei/field.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace lei {

using Vector = std::vector<Scalar>;

/// Dense matrix over an exact field. Entry (r,c) is the coefficient of
/// basis vector e_r in the image of e_c when the matrix represents a
/// linear map (column convention).
class Matrix {
public:
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& f, std::size_t n);
    static Matrix from_rows(const FieldSpec& f, const std::vector<Vector>& rows);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;

    Matrix operator*(const Matrix& o) const;
    Vector apply(const Vector& v) const;  // matrix * column vector
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool operator<(const Matrix& o) const;  // entry-wise lexicographic

    bool is_identity() const;

private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

/// Reduced row-echelon form; returns (rref, rank). Row space is preserved.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

Matrix invert(const Matrix& m);  // throws SingularMatrix

Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);

/// Linear subspace of F^n in canonical form: basis rows are a RREF matrix
/// with no zero rows, so equality of subspaces is equality of representations.
class Subspace {
public:
    /// The zero subspace of F^n.
    Subspace(const FieldSpec& f, std::size_t ambient);

    static Subspace full(const FieldSpec& f, std::size_t ambient);
    static Subspace span(const FieldSpec& f, std::size_t ambient,
                         const std::vector<Vector>& vectors);
    /// Canonicalize the row space of an arbitrary matrix.
    static Subspace row_space(const Matrix& m);

    const FieldSpec& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// dim() x ambient() RREF matrix, no zero rows.
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    FieldSpec field_;
    std::size_t ambient_;
    Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {x : m x = 0} as a canonical subspace of F^cols.
Subspace right_kernel(const Matrix& m);

/// A matrix whose right kernel is exactly s (the annihilator of s under
/// the standard bilinear form); used to express membership in s as a
/// linear condition.
Matrix kernel_conditions(const Subspace& s);

}  // namespace lei

#endif
