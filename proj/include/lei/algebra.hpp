#ifndef LEI_ALGEBRA_HPP
#define LEI_ALGEBRA_HPP

#include "lei/linalg.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace lei {

/// Finite-dimensional algebra given by its structure-constant tensor:
/// c(i,j,k) is the coefficient of e_k in [e_i, e_j] (0-based indices).
/// The bracket extends bilinearly; no identity is assumed at this level.
class Algebra {
public:
    Algebra(const FieldSpec& f, std::size_t dim);

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    Scalar& c(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    /// [e_i, e_j] as a coordinate vector.
    Vector basis_bracket(std::size_t i, std::size_t j) const;

    bool operator==(const Algebra& o) const {
        return field_ == o.field_ && dim_ == o.dim_ && c_ == o.c_;
    }

private:
    FieldSpec field_;
    std::size_t dim_;
    std::vector<Scalar> c_;
};

Vector bracket(const Algebra& alg, const Vector& x, const Vector& y);

bool is_left_leibniz(const Algebra& alg);

struct LeibnizViolation {
    std::size_t i, j, k;  // 0-based basis triple
    Vector lhs;           // [[e_i,e_j],e_k]
    Vector rhs;           // [e_i,[e_j,e_k]] - [e_j,[e_i,e_k]]
};

/// First basis triple violating the left Leibniz identity, if any.
std::optional<LeibnizViolation> first_leibniz_violation(const Algebra& alg);

bool is_lie(const Algebra& alg);

/// Span of all squares [a,a], via the polarization generators
/// [e_i,e_i] and [e_i,e_j]+[e_j,e_i]; exact in every characteristic.
Subspace leibniz_kernel(const Algebra& alg);

Subspace left_center(const Algebra& alg);
Subspace right_center(const Algebra& alg);
Subspace center(const Algebra& alg);

Subspace derived_subalgebra(const Algebra& alg);

/// Span of [u,v] over basis vectors u of a, v of b.
Subspace product_subspace(const Algebra& alg, const Subspace& a, const Subspace& b);

/// gamma_1 = L, gamma_{k+1} = [L, gamma_k]; terms until stabilization.
std::vector<Subspace> lower_central_series(const Algebra& alg);

/// zeta_0 = 0, zeta_{k+1} = {x : [x,L] and [L,x] inside zeta_k};
/// terms until stabilization.
std::vector<Subspace> upper_central_series(const Algebra& alg);

/// Least c with gamma_{c+1} = 0, or nullopt if the series stabilizes
/// above zero.
std::optional<std::size_t> nilpotency_class(const Algebra& alg);

Subspace annihilator_left(const Algebra& alg, const Subspace& m, const Subspace& h);
Subspace annihilator_right(const Algebra& alg, const Subspace& m, const Subspace& h);
Subspace annihilator(const Algebra& alg, const Subspace& m, const Subspace& h);

bool is_subalgebra(const Algebra& alg, const Subspace& a);
bool is_left_ideal(const Algebra& alg, const Subspace& a);
bool is_right_ideal(const Algebra& alg, const Subspace& a);
bool is_ideal(const Algebra& alg, const Subspace& a);

}  // namespace lei

#endif
