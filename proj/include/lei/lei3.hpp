#ifndef LEI_LEI3_HPP
#define LEI_LEI3_HPP

#include "lei/groups.hpp"

#include <string>
#include <vector>

namespace lei {

/// The three nilpotent dim-3 catalog algebras. Only the listed brackets
/// are nonzero:
///   lei1: [a1,a1]=a2, [a1,a2]=a3
///   lei2: [a1,a1]=a3
///   lei3: [a1,a1]=[a1,a2]=a3
Algebra make_lei1(const FieldSpec& f);
Algebra make_lei2(const FieldSpec& f);
Algebra make_lei3(const FieldSpec& f);

/// Parameters of a general automorphism of lei3. The second diagonal
/// entry is determined: beta2 = alpha1 + alpha2.
struct AutParams {
    Scalar alpha1, alpha2, alpha3, beta3;

    /// Throws InadmissibleParams unless alpha1 != 0 and alpha1+alpha2 != 0.
    static AutParams make(Scalar alpha1, Scalar alpha2, Scalar alpha3, Scalar beta3);
};

/// The general automorphism matrix of lei3:
///   [ a1        0        0          ]
///   [ a2        a1+a2    0          ]
///   [ a3        b3       a1^2+a1*a2 ]
LinearMap general_aut_matrix(const AutParams& p);

/// Reads the parameters back off a matrix in the family; throws
/// NotInFamily on any deviation from the exact pattern.
AutParams params_from_matrix(const LinearMap& g);

LinearMap s_matrix(const Scalar& alpha2, const Scalar& alpha3, const Scalar& beta3);
LinearMap t_matrix(const Scalar& alpha3, const Scalar& beta3);
LinearMap j_matrix(const Scalar& lambda);
LinearMap d_matrix(const Scalar& sigma);

/// The proof's explicit transformations; they coincide with the S- and
/// T-family matrices.
LinearMap make_v(const Scalar& lambda, const Scalar& mu, const Scalar& nu);
LinearMap make_z(const Scalar& lambda, const Scalar& mu);

enum class FamilyKind { G, S, T, J, D };

/// The full finite family over all admissible parameters, validated as a
/// group. Throws NotFiniteField over Q.
MatrixGroup family(FamilyKind kind, const FieldSpec& f);

/// g = s * d with d diagonal from alpha1; exact by construction.
std::pair<LinearMap, LinearMap> factor_sd(const LinearMap& g);

/// s = t * j; parameters solved from the family form.
std::pair<LinearMap, LinearMap> factor_tj(const LinearMap& s);

struct TheoremReport {
    std::size_t g_order = 0, s_order = 0, t_order = 0, j_order = 0, d_order = 0;
    // (claim label, passed) in the documented order.
    std::vector<std::pair<std::string, bool>> claims;

    bool all_pass() const;
};

/// Machine-checks every claim of the main structure theorem for
/// Aut(lei3) over F_q: the parametric family equals the brute-force
/// automorphism set, the four subgroup families and both semidirect
/// decompositions, the isomorphism witnesses, and the factorizations.
TheoremReport verify_theorem(const FieldSpec& f,
                             std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace lei

#endif
