#include "lei/groups.hpp"

#include <algorithm>

namespace lei {

namespace {

struct TensorEntry {
    std::size_t i, j, k;
    std::int64_t v;
};

std::vector<TensorEntry> nonzero_tensor_entries(const Algebra& alg) {
    std::vector<TensorEntry> entries;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j)
            for (std::size_t k = 0; k < alg.dim(); ++k)
                if (!alg.c(i, j, k).is_zero())
                    entries.push_back({i, j, k, alg.c(i, j, k).fp_value()});
    return entries;
}

bool invertible_mod_p(std::vector<std::int64_t> m, std::size_t n, std::int64_t p) {
    // Gaussian elimination without division: row-reduce using modular inverses.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv * n + col] % p == 0) ++piv;
        if (piv == n) return false;
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m[piv * n + c], m[col * n + c]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r * n + col] % p == 0) continue;
            // r <- pivot * r - entry * pivot_row, still singular-equivalent.
            std::int64_t a = m[col * n + col] % p;
            std::int64_t b = m[r * n + col] % p;
            for (std::size_t c = 0; c < n; ++c)
                m[r * n + c] = ((a * m[r * n + c] - b * m[col * n + c]) % p + p) % p;
        }
    }
    return true;
}

}  // namespace

MatrixGroup::MatrixGroup(const FieldSpec& f, std::size_t n, std::vector<LinearMap> elements)
    : field_(f), n_(n), elems_(std::move(elements)) {
    for (const auto& m : elems_)
        if (!(m.field() == f) || m.rows() != n || m.cols() != n)
            throw DimensionMismatch("group element shape/field mismatch");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

MatrixGroup MatrixGroup::trivial(const FieldSpec& f, std::size_t n) {
    return MatrixGroup(f, n, {Matrix::identity(f, n)});
}

bool MatrixGroup::contains(const LinearMap& m) const {
    return std::binary_search(elems_.begin(), elems_.end(), m);
}

bool is_endomorphism(const Algebra& alg, const LinearMap& f) {
    if (!(alg.field() == f.field())) throw FieldMismatch("endomorphism field mismatch");
    if (f.rows() != alg.dim() || f.cols() != alg.dim())
        throw DimensionMismatch("endomorphism shape mismatch");
    // Bilinearity: the basis pairs decide it.
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            Vector lhs = f.apply(alg.basis_bracket(i, j));
            Vector rhs = bracket(alg, f.col(i), f.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_automorphism(const Algebra& alg, const LinearMap& f) {
    if (!is_endomorphism(alg, f)) return false;
    try {
        invert(f);
    } catch (const SingularMatrix&) {
        return false;
    }
    return true;
}

MatrixGroup enumerate_automorphisms(const Algebra& alg, std::uint64_t budget) {
    if (!alg.field().is_finite())
        throw NotFiniteField("automorphism enumeration needs a prime field");
    const std::int64_t p = alg.field().p();
    const std::size_t n = alg.dim();
    const std::size_t cells = n * n;

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (total > budget / static_cast<std::uint64_t>(p))
            throw BudgetExceeded("candidate count q^(n^2) exceeds budget");
        total *= static_cast<std::uint64_t>(p);
    }
    if (total > budget)
        throw BudgetExceeded("candidate count q^(n^2) exceeds budget");

    const auto entries = nonzero_tensor_entries(alg);

    // Candidate matrix in raw residues; digit order is row-major.
    std::vector<std::int64_t> m(cells, 0);
    std::vector<LinearMap> found;
    std::vector<std::int64_t> lhs(n), rhs(n);

    for (std::uint64_t count = 0;; ++count) {
        // Endomorphism check on all basis pairs, early exit on mismatch.
        bool endo = true;
        for (std::size_t i = 0; i < n && endo; ++i)
            for (std::size_t j = 0; j < n && endo; ++j) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (const auto& e : entries) {
                    if (e.i == i && e.j == j)
                        for (std::size_t r = 0; r < n; ++r)
                            lhs[r] += e.v * m[r * n + e.k];
                    rhs[e.k] += e.v * m[e.i * n + i] * m[e.j * n + j];
                }
                for (std::size_t r = 0; r < n; ++r)
                    if ((lhs[r] - rhs[r]) % p != 0) { endo = false; break; }
            }
        if (endo && invertible_mod_p(m, n, p)) {
            Matrix mat(alg.field(), n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    mat.at(r, c) = Scalar::from_int(alg.field(), m[r * n + c]);
            found.push_back(std::move(mat));
        }
        if (count + 1 == total) break;
        // Odometer step.
        for (std::size_t d = 0; d < cells; ++d) {
            if (++m[d] < p) break;
            m[d] = 0;
        }
    }
    return MatrixGroup(alg.field(), n, std::move(found));
}

bool is_group(const MatrixGroup& g) {
    if (g.order() == 0) return false;
    if (!g.contains(Matrix::identity(g.field(), g.map_dim()))) return false;
    for (const auto& a : g.elements()) {
        try {
            if (!g.contains(invert(a))) return false;
        } catch (const SingularMatrix&) {
            return false;
        }
        for (const auto& b : g.elements())
            if (!g.contains(a * b)) return false;
    }
    return true;
}

bool is_subgroup(const MatrixGroup& h, const MatrixGroup& g) {
    if (!(h.field() == g.field()) || h.map_dim() != g.map_dim())
        throw FieldMismatch("subgroup check across fields/dimensions");
    for (const auto& m : h.elements())
        if (!g.contains(m)) return false;
    return is_group(h);
}

bool is_normal(const MatrixGroup& n, const MatrixGroup& g) {
    if (!is_subgroup(n, g)) return false;
    for (const auto& x : g.elements()) {
        Matrix xi = invert(x);
        for (const auto& m : n.elements())
            if (!n.contains(xi * m * x)) return false;
    }
    return true;
}

bool is_internal_semidirect(const MatrixGroup& g, const MatrixGroup& n,
                            const MatrixGroup& h) {
    if (!is_normal(n, g) || !is_subgroup(h, g)) return false;
    std::vector<LinearMap> inter;
    for (const auto& m : n.elements())
        if (h.contains(m)) inter.push_back(m);
    if (inter.size() != 1 || !inter.front().is_identity()) return false;
    std::vector<LinearMap> products;
    for (const auto& x : n.elements())
        for (const auto& y : h.elements())
            products.push_back(x * y);
    return MatrixGroup(g.field(), g.map_dim(), std::move(products)) == g;
}

MatrixGroup centralizer_of_subalgebra(const MatrixGroup& g, const Subspace& a) {
    if (a.ambient() != g.map_dim())
        throw DimensionMismatch("centralizer ambient mismatch");
    std::vector<LinearMap> kept;
    for (const auto& m : g.elements()) {
        bool fixes = true;
        for (std::size_t i = 0; i < a.dim() && fixes; ++i) {
            Vector v = a.basis_vector(i);
            fixes = m.apply(v) == v;
        }
        if (fixes) kept.push_back(m);
    }
    return MatrixGroup(g.field(), g.map_dim(), std::move(kept));
}

MatrixGroup centralizer_of_quotient(const MatrixGroup& g, const Subspace& a) {
    if (a.ambient() != g.map_dim())
        throw DimensionMismatch("centralizer ambient mismatch");
    for (const auto& m : g.elements())
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!a.contains(m.apply(a.basis_vector(i))))
                throw NotInvariant("subspace is not invariant under the group");
    std::vector<LinearMap> kept;
    for (const auto& m : g.elements()) {
        bool trivial_mod_a = true;
        for (std::size_t i = 0; i < g.map_dim() && trivial_mod_a; ++i) {
            Vector diff = m.col(i);
            diff[i] -= Scalar::one(g.field());
            trivial_mod_a = a.contains(diff);
        }
        if (trivial_mod_a) kept.push_back(m);
    }
    return MatrixGroup(g.field(), g.map_dim(), std::move(kept));
}

Invariance invariance_check(const LinearMap& f, const Subspace& s) {
    if (f.cols() != s.ambient())
        throw DimensionMismatch("invariance check ambient mismatch");
    std::vector<Vector> images;
    for (std::size_t i = 0; i < s.dim(); ++i)
        images.push_back(f.apply(s.basis_vector(i)));
    Subspace image = Subspace::span(f.field(), s.ambient(), images);
    if (image == s) return Invariance::Equal;
    if (s.contains(image)) return Invariance::MappedInto;
    return Invariance::Neither;
}

bool is_additive_pairs_iso(
    const MatrixGroup& t,
    const std::function<LinearMap(const Scalar&, const Scalar&)>& build) {
    if (!t.field().is_finite())
        throw NotFiniteField("additive-pairs witness needs a finite field");
    const std::int64_t q = t.field().p();
    if (t.order() != static_cast<std::size_t>(q) * static_cast<std::size_t>(q))
        return false;
    std::vector<std::pair<Scalar, Scalar>> pairs;
    std::vector<LinearMap> images;
    for (std::int64_t x = 0; x < q; ++x)
        for (std::int64_t y = 0; y < q; ++y) {
            Scalar sx = Scalar::from_int(t.field(), x);
            Scalar sy = Scalar::from_int(t.field(), y);
            LinearMap m = build(sx, sy);
            if (!t.contains(m)) return false;
            pairs.emplace_back(sx, sy);
            images.push_back(std::move(m));
        }
    // Bijectivity: q^2 distinct images into a group of order q^2.
    std::vector<LinearMap> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    // Homomorphism: addition of parameters maps to the product.
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            LinearMap expected =
                build(pairs[a].first + pairs[b].first, pairs[a].second + pairs[b].second);
            if (images[a] * images[b] != expected) return false;
        }
    return true;
}

bool is_multiplicative_iso(const MatrixGroup& h,
                           const std::function<LinearMap(const Scalar&)>& build) {
    if (!h.field().is_finite())
        throw NotFiniteField("multiplicative witness needs a finite field");
    const std::int64_t q = h.field().p();
    if (h.order() != static_cast<std::size_t>(q) - 1) return false;
    std::vector<Scalar> units;
    std::vector<LinearMap> images;
    for (std::int64_t x = 1; x < q; ++x) {
        Scalar s = Scalar::from_int(h.field(), x);
        LinearMap m = build(s);
        if (!h.contains(m)) return false;
        units.push_back(s);
        images.push_back(std::move(m));
    }
    std::vector<LinearMap> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t a = 0; a < units.size(); ++a)
        for (std::size_t b = 0; b < units.size(); ++b)
            if (images[a] * images[b] != build(units[a] * units[b])) return false;
    return true;
}

}  // namespace lei
