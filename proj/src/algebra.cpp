#include "lei/algebra.hpp"

namespace lei {

namespace {

Vector zero_vec(const FieldSpec& f, std::size_t n) {
    return Vector(n, Scalar::zero(f));
}

bool is_zero_vec(const Vector& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector sub(const Vector& a, const Vector& b) {
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// Matrix of x -> [x, e_j]: entry (k, i) = c(i, j, k).
Matrix left_mult_by_basis(const Algebra& alg, std::size_t j) {
    Matrix m(alg.field(), alg.dim(), alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k)
            m.at(k, i) = alg.c(i, j, k);
    return m;
}

// Matrix of x -> [e_j, x]: entry (k, i) = c(j, i, k).
Matrix right_mult_by_basis(const Algebra& alg, std::size_t j) {
    Matrix m(alg.field(), alg.dim(), alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k)
            m.at(k, i) = alg.c(j, i, k);
    return m;
}

// Matrix of x -> [x, v] for a fixed vector v.
Matrix left_mult_by_vector(const Algebra& alg, const Vector& v) {
    Matrix m(alg.field(), alg.dim(), alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            Scalar s = Scalar::zero(alg.field());
            for (std::size_t j = 0; j < alg.dim(); ++j)
                s += v[j] * alg.c(i, j, k);
            m.at(k, i) = s;
        }
    return m;
}

// Matrix of x -> [v, x].
Matrix right_mult_by_vector(const Algebra& alg, const Vector& v) {
    Matrix m(alg.field(), alg.dim(), alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            Scalar s = Scalar::zero(alg.field());
            for (std::size_t j = 0; j < alg.dim(); ++j)
                s += v[j] * alg.c(j, i, k);
            m.at(k, i) = s;
        }
    return m;
}

}  // namespace

Algebra::Algebra(const FieldSpec& f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, Scalar::zero(f)) {
    if (dim < 1) throw DimensionMismatch("algebra dimension must be >= 1");
}

Vector Algebra::basis_bracket(std::size_t i, std::size_t j) const {
    Vector v = zero_vec(field_, dim_);
    for (std::size_t k = 0; k < dim_; ++k) v[k] = c(i, j, k);
    return v;
}

Vector bracket(const Algebra& alg, const Vector& x, const Vector& y) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch("bracket operand length mismatch");
    Vector r = zero_vec(alg.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                r[k] += xy * alg.c(i, j, k);
        }
    }
    return r;
}

std::optional<LeibnizViolation> first_leibniz_violation(const Algebra& alg) {
    const std::size_t n = alg.dim();
    // Trilinearity: checking all basis triples suffices.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector ei = zero_vec(alg.field(), n), ej = ei, ek = ei;
                ei[i] = Scalar::one(alg.field());
                ej[j] = Scalar::one(alg.field());
                ek[k] = Scalar::one(alg.field());
                Vector lhs = bracket(alg, alg.basis_bracket(i, j), ek);
                Vector rhs = sub(bracket(alg, ei, alg.basis_bracket(j, k)),
                                 bracket(alg, ej, alg.basis_bracket(i, k)));
                if (lhs != rhs)
                    return LeibnizViolation{i, j, k, std::move(lhs), std::move(rhs)};
            }
    return std::nullopt;
}

bool is_left_leibniz(const Algebra& alg) {
    return !first_leibniz_violation(alg).has_value();
}

bool is_lie(const Algebra& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (!alg.c(i, i, k).is_zero()) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(alg.c(i, j, k) + alg.c(j, i, k)).is_zero()) return false;
    return true;
}

Subspace leibniz_kernel(const Algebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(alg.basis_bracket(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            gens.push_back(add(alg.basis_bracket(i, j), alg.basis_bracket(j, i)));
    return Subspace::span(alg.field(), n, gens);
}

Subspace left_center(const Algebra& alg) {
    Matrix stacked(alg.field(), 0, alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j)
        stacked = vstack(stacked, left_mult_by_basis(alg, j));
    return right_kernel(stacked);
}

Subspace right_center(const Algebra& alg) {
    Matrix stacked(alg.field(), 0, alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j)
        stacked = vstack(stacked, right_mult_by_basis(alg, j));
    return right_kernel(stacked);
}

Subspace center(const Algebra& alg) {
    return intersect(left_center(alg), right_center(alg));
}

Subspace derived_subalgebra(const Algebra& alg) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            gens.push_back(alg.basis_bracket(i, j));
    return Subspace::span(alg.field(), alg.dim(), gens);
}

Subspace product_subspace(const Algebra& alg, const Subspace& a, const Subspace& b) {
    if (a.ambient() != alg.dim() || b.ambient() != alg.dim())
        throw DimensionMismatch("product_subspace ambient mismatch");
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            gens.push_back(bracket(alg, a.basis_vector(i), b.basis_vector(j)));
    return Subspace::span(alg.field(), alg.dim(), gens);
}

std::vector<Subspace> lower_central_series(const Algebra& alg) {
    Subspace full = Subspace::full(alg.field(), alg.dim());
    std::vector<Subspace> series{full};
    while (true) {
        Subspace next = product_subspace(alg, full, series.back());
        if (next == series.back()) break;
        series.push_back(next);
    }
    return series;
}

std::vector<Subspace> upper_central_series(const Algebra& alg) {
    std::vector<Subspace> series{Subspace(alg.field(), alg.dim())};
    while (true) {
        // Membership of [x, e_j] and [e_j, x] in the current term becomes a
        // linear condition through its kernel-condition matrix.
        Matrix cond = kernel_conditions(series.back());
        Matrix stacked(alg.field(), 0, alg.dim());
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            stacked = vstack(stacked, cond * left_mult_by_basis(alg, j));
            stacked = vstack(stacked, cond * right_mult_by_basis(alg, j));
        }
        Subspace next = right_kernel(stacked);
        if (next == series.back()) break;
        series.push_back(next);
    }
    return series;
}

std::optional<std::size_t> nilpotency_class(const Algebra& alg) {
    std::vector<Subspace> series = lower_central_series(alg);
    if (!series.back().is_zero()) return std::nullopt;
    return series.size() - 1;
}

Subspace annihilator_left(const Algebra& alg, const Subspace& m, const Subspace& h) {
    if (m.ambient() != alg.dim() || h.ambient() != alg.dim())
        throw DimensionMismatch("annihilator ambient mismatch");
    Subspace result = h;
    for (std::size_t j = 0; j < m.dim(); ++j)
        result = intersect(result, right_kernel(left_mult_by_vector(alg, m.basis_vector(j))));
    return result;
}

Subspace annihilator_right(const Algebra& alg, const Subspace& m, const Subspace& h) {
    if (m.ambient() != alg.dim() || h.ambient() != alg.dim())
        throw DimensionMismatch("annihilator ambient mismatch");
    Subspace result = h;
    for (std::size_t j = 0; j < m.dim(); ++j)
        result = intersect(result, right_kernel(right_mult_by_vector(alg, m.basis_vector(j))));
    return result;
}

Subspace annihilator(const Algebra& alg, const Subspace& m, const Subspace& h) {
    return intersect(annihilator_left(alg, m, h), annihilator_right(alg, m, h));
}

bool is_subalgebra(const Algebra& alg, const Subspace& a) {
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!a.contains(bracket(alg, a.basis_vector(i), a.basis_vector(j))))
                return false;
    return true;
}

bool is_left_ideal(const Algebra& alg, const Subspace& a) {
    // [L, A] <= A; implies closure of A under the bracket.
    for (std::size_t j = 0; j < alg.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vector ej = Vector(alg.dim(), Scalar::zero(alg.field()));
            ej[j] = Scalar::one(alg.field());
            if (!a.contains(bracket(alg, ej, a.basis_vector(i)))) return false;
        }
    return true;
}

bool is_right_ideal(const Algebra& alg, const Subspace& a) {
    for (std::size_t j = 0; j < alg.dim(); ++j)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vector ej = Vector(alg.dim(), Scalar::zero(alg.field()));
            ej[j] = Scalar::one(alg.field());
            if (!a.contains(bracket(alg, a.basis_vector(i), ej))) return false;
        }
    return true;
}

bool is_ideal(const Algebra& alg, const Subspace& a) {
    return is_left_ideal(alg, a) && is_right_ideal(alg, a);
}

}  // namespace lei
