#ifndef LEI_GROUPS_HPP
#define LEI_GROUPS_HPP

#include "lei/algebra.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace lei {

/// A linear map is identified with its matrix: column j holds the
/// coordinates of the image of e_j.
using LinearMap = Matrix;

/// Finite set of invertible linear maps, deduplicated and kept sorted so
/// membership is a binary search. Group axioms are checked by is_group,
/// not enforced at construction.
class MatrixGroup {
public:
    MatrixGroup(const FieldSpec& f, std::size_t n, std::vector<LinearMap> elements);

    static MatrixGroup trivial(const FieldSpec& f, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t map_dim() const { return n_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<LinearMap>& elements() const { return elems_; }

    bool contains(const LinearMap& m) const;

    bool operator==(const MatrixGroup& o) const {
        return field_ == o.field_ && n_ == o.n_ && elems_ == o.elems_;
    }

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<LinearMap> elems_;
};

bool is_endomorphism(const Algebra& alg, const LinearMap& f);
bool is_automorphism(const Algebra& alg, const LinearMap& f);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

/// All automorphisms of alg over its (finite) field, by exhaustive scan of
/// the q^(n^2) candidate matrices. Throws NotFiniteField over Q and
/// BudgetExceeded when the candidate count exceeds the budget.
MatrixGroup enumerate_automorphisms(const Algebra& alg,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

bool is_group(const MatrixGroup& g);
bool is_subgroup(const MatrixGroup& h, const MatrixGroup& g);
bool is_normal(const MatrixGroup& n, const MatrixGroup& g);

/// g = n x| h: n normal in g, h a subgroup, trivial intersection, n h = g.
bool is_internal_semidirect(const MatrixGroup& g, const MatrixGroup& n,
                            const MatrixGroup& h);

/// C_G(A): elements of g fixing every vector of a pointwise.
MatrixGroup centralizer_of_subalgebra(const MatrixGroup& g, const Subspace& a);

/// C_G(L/A): elements of g acting trivially modulo a. Requires a to be
/// invariant under every element of g (throws NotInvariant otherwise).
MatrixGroup centralizer_of_quotient(const MatrixGroup& g, const Subspace& a);

enum class Invariance { Equal, MappedInto, Neither };

/// Classifies f(s) = s, f(s) proper subset of s, or neither.
Invariance invariance_check(const LinearMap& f, const Subspace& s);

/// True iff build is a bijective homomorphism (F_q,+)^2 -> t, verified
/// over every pair.
bool is_additive_pairs_iso(const MatrixGroup& t,
                           const std::function<LinearMap(const Scalar&, const Scalar&)>& build);

/// True iff build is a bijective homomorphism F_q^x -> h, verified over
/// every nonzero element.
bool is_multiplicative_iso(const MatrixGroup& h,
                           const std::function<LinearMap(const Scalar&)>& build);

}  // namespace lei

#endif
