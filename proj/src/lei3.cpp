#include "lei/lei3.hpp"

namespace lei {

Algebra make_lei1(const FieldSpec& f) {
    Algebra a(f, 3);
    a.c(0, 0, 1) = Scalar::one(f);  // [a1,a1] = a2
    a.c(0, 1, 2) = Scalar::one(f);  // [a1,a2] = a3
    return a;
}

Algebra make_lei2(const FieldSpec& f) {
    Algebra a(f, 3);
    a.c(0, 0, 2) = Scalar::one(f);  // [a1,a1] = a3
    return a;
}

Algebra make_lei3(const FieldSpec& f) {
    Algebra a(f, 3);
    a.c(0, 0, 2) = Scalar::one(f);  // [a1,a1] = a3
    a.c(0, 1, 2) = Scalar::one(f);  // [a1,a2] = a3
    return a;
}

AutParams AutParams::make(Scalar alpha1, Scalar alpha2, Scalar alpha3, Scalar beta3) {
    if (alpha1.is_zero())
        throw InadmissibleParams("alpha1 must be nonzero");
    if ((alpha1 + alpha2).is_zero())
        throw InadmissibleParams("alpha1 + alpha2 must be nonzero");
    return AutParams{std::move(alpha1), std::move(alpha2), std::move(alpha3),
                     std::move(beta3)};
}

LinearMap general_aut_matrix(const AutParams& p) {
    const FieldSpec& f = p.alpha1.field();
    Matrix m(f, 3, 3);
    m.at(0, 0) = p.alpha1;
    m.at(1, 0) = p.alpha2;
    m.at(2, 0) = p.alpha3;
    m.at(1, 1) = p.alpha1 + p.alpha2;
    m.at(2, 1) = p.beta3;
    m.at(2, 2) = p.alpha1 * p.alpha1 + p.alpha1 * p.alpha2;
    return m;
}

AutParams params_from_matrix(const LinearMap& g) {
    if (g.rows() != 3 || g.cols() != 3)
        throw NotInFamily("expected a 3x3 matrix");
    if (!g.at(0, 1).is_zero() || !g.at(0, 2).is_zero() || !g.at(1, 2).is_zero())
        throw NotInFamily("upper entries must vanish");
    Scalar a1 = g.at(0, 0), a2 = g.at(1, 0), a3 = g.at(2, 0), b3 = g.at(2, 1);
    if (a1.is_zero() || (a1 + a2).is_zero())
        throw NotInFamily("inadmissible diagonal parameters");
    if (g.at(1, 1) != a1 + a2)
        throw NotInFamily("second diagonal entry must equal alpha1+alpha2");
    if (g.at(2, 2) != a1 * a1 + a1 * a2)
        throw NotInFamily("third diagonal entry must equal alpha1^2+alpha1*alpha2");
    return AutParams{a1, a2, a3, b3};
}

LinearMap s_matrix(const Scalar& alpha2, const Scalar& alpha3, const Scalar& beta3) {
    const FieldSpec& f = alpha2.field();
    Scalar one = Scalar::one(f);
    if ((one + alpha2).is_zero())
        throw InadmissibleParams("1 + alpha2 must be nonzero");
    Matrix m(f, 3, 3);
    m.at(0, 0) = one;
    m.at(1, 0) = alpha2;
    m.at(2, 0) = alpha3;
    m.at(1, 1) = one + alpha2;
    m.at(2, 1) = beta3;
    m.at(2, 2) = one + alpha2;
    return m;
}

LinearMap t_matrix(const Scalar& alpha3, const Scalar& beta3) {
    const FieldSpec& f = alpha3.field();
    Matrix m = Matrix::identity(f, 3);
    m.at(2, 0) = alpha3;
    m.at(2, 1) = beta3;
    return m;
}

LinearMap j_matrix(const Scalar& lambda) {
    const FieldSpec& f = lambda.field();
    Scalar one = Scalar::one(f);
    if ((one + lambda).is_zero())
        throw InadmissibleParams("1 + lambda must be nonzero");
    Matrix m(f, 3, 3);
    m.at(0, 0) = one;
    m.at(1, 0) = lambda;
    m.at(1, 1) = one + lambda;
    m.at(2, 2) = one + lambda;
    return m;
}

LinearMap d_matrix(const Scalar& sigma) {
    const FieldSpec& f = sigma.field();
    if (sigma.is_zero())
        throw InadmissibleParams("sigma must be nonzero");
    Matrix m(f, 3, 3);
    m.at(0, 0) = sigma;
    m.at(1, 1) = sigma;
    m.at(2, 2) = sigma * sigma;
    return m;
}

LinearMap make_v(const Scalar& lambda, const Scalar& mu, const Scalar& nu) {
    return s_matrix(lambda, mu, nu);
}

LinearMap make_z(const Scalar& lambda, const Scalar& mu) {
    return t_matrix(lambda, mu);
}

MatrixGroup family(FamilyKind kind, const FieldSpec& f) {
    if (!f.is_finite())
        throw NotFiniteField("family construction needs a finite field");
    const std::int64_t q = f.p();
    auto s = [&](std::int64_t v) { return Scalar::from_int(f, v); };
    std::vector<LinearMap> out;
    switch (kind) {
        case FamilyKind::G:
            for (std::int64_t a1 = 1; a1 < q; ++a1)
                for (std::int64_t a2 = 0; a2 < q; ++a2) {
                    if ((a1 + a2) % q == 0) continue;
                    for (std::int64_t a3 = 0; a3 < q; ++a3)
                        for (std::int64_t b3 = 0; b3 < q; ++b3)
                            out.push_back(general_aut_matrix(
                                AutParams::make(s(a1), s(a2), s(a3), s(b3))));
                }
            break;
        case FamilyKind::S:
            for (std::int64_t a2 = 0; a2 < q; ++a2) {
                if ((1 + a2) % q == 0) continue;
                for (std::int64_t a3 = 0; a3 < q; ++a3)
                    for (std::int64_t b3 = 0; b3 < q; ++b3)
                        out.push_back(s_matrix(s(a2), s(a3), s(b3)));
            }
            break;
        case FamilyKind::T:
            for (std::int64_t a3 = 0; a3 < q; ++a3)
                for (std::int64_t b3 = 0; b3 < q; ++b3)
                    out.push_back(t_matrix(s(a3), s(b3)));
            break;
        case FamilyKind::J:
            for (std::int64_t l = 0; l < q; ++l) {
                if ((1 + l) % q == 0) continue;
                out.push_back(j_matrix(s(l)));
            }
            break;
        case FamilyKind::D:
            for (std::int64_t sig = 1; sig < q; ++sig)
                out.push_back(d_matrix(s(sig)));
            break;
    }
    return MatrixGroup(f, 3, std::move(out));
}

std::pair<LinearMap, LinearMap> factor_sd(const LinearMap& g) {
    AutParams p = params_from_matrix(g);
    Scalar inv = p.alpha1.inverse();
    LinearMap s = s_matrix(p.alpha2 * inv, p.alpha3 * inv, p.beta3 * inv);
    LinearMap d = d_matrix(p.alpha1);
    if (s * d != g) throw NotInFamily("factorization does not reproduce input");
    return {s, d};
}

std::pair<LinearMap, LinearMap> factor_tj(const LinearMap& sm) {
    AutParams p = params_from_matrix(sm);
    if (!p.alpha1.is_one())
        throw NotInFamily("not an S-family matrix (alpha1 != 1)");
    Scalar one = Scalar::one(sm.field());
    Scalar z = p.alpha2;
    Scalar y = p.beta3 * (one + z).inverse();
    Scalar x = p.alpha3 - y * z;
    LinearMap t = t_matrix(x, y);
    LinearMap j = j_matrix(z);
    if (t * j != sm) throw NotInFamily("factorization does not reproduce input");
    return {t, j};
}

bool TheoremReport::all_pass() const {
    for (const auto& [name, ok] : claims)
        if (!ok) return false;
    return true;
}

TheoremReport verify_theorem(const FieldSpec& f, std::uint64_t budget) {
    if (!f.is_finite())
        throw NotFiniteField("theorem verification needs a finite field");
    Algebra alg = make_lei3(f);

    MatrixGroup aut = enumerate_automorphisms(alg, budget);
    MatrixGroup g = family(FamilyKind::G, f);
    MatrixGroup s = family(FamilyKind::S, f);
    MatrixGroup t = family(FamilyKind::T, f);
    MatrixGroup j = family(FamilyKind::J, f);
    MatrixGroup d = family(FamilyKind::D, f);

    TheoremReport report;
    report.g_order = g.order();
    report.s_order = s.order();
    report.t_order = t.order();
    report.j_order = j.order();
    report.d_order = d.order();

    // 1. Brute-force automorphism set equals the parametric family.
    report.claims.emplace_back("aut_equals_family", aut == g);

    // 2. S is the automorphisms acting trivially on L modulo the left
    //    center, and is normal in G.
    bool s_char = false;
    try {
        s_char = centralizer_of_quotient(g, left_center(alg)) == s;
    } catch (const NotInvariant&) {
        s_char = false;
    }
    report.claims.emplace_back("s_is_quotient_centralizer_and_normal",
                               s_char && is_normal(s, g));

    // 3, 4. The two semidirect decompositions.
    report.claims.emplace_back("g_semidirect_s_d", is_internal_semidirect(g, s, d));
    report.claims.emplace_back("s_semidirect_t_j", is_internal_semidirect(s, t, j));

    // 5. T is normal in the whole group.
    report.claims.emplace_back("t_normal_in_g", is_normal(t, g));

    // 6. Trivial intersections.
    auto trivial_meet = [&](const MatrixGroup& a, const MatrixGroup& b) {
        std::vector<LinearMap> inter;
        for (const auto& m : a.elements())
            if (b.contains(m)) inter.push_back(m);
        return inter.size() == 1 && inter.front().is_identity();
    };
    report.claims.emplace_back("trivial_intersections",
                               trivial_meet(t, j) && trivial_meet(s, d));

    // 7. Isomorphism witnesses: T to (F,+)^2, J and D to F^x.
    bool wit_t = is_additive_pairs_iso(
        t, [](const Scalar& a, const Scalar& b) { return t_matrix(a, b); });
    bool wit_j = is_multiplicative_iso(j, [&](const Scalar& sigma) {
        return j_matrix(sigma - Scalar::one(f));
    });
    bool wit_d = is_multiplicative_iso(d, [](const Scalar& sigma) {
        return d_matrix(sigma);
    });
    report.claims.emplace_back("iso_witnesses", wit_t && wit_j && wit_d);

    // 8. Factorization round-trips over the whole group.
    bool factor_ok = true;
    for (const auto& m : g.elements()) {
        try {
            auto [fs, fd] = factor_sd(m);
            if (fs * fd != m || !s.contains(fs) || !d.contains(fd)) factor_ok = false;
        } catch (const LeiError&) {
            factor_ok = false;
        }
    }
    for (const auto& m : s.elements()) {
        try {
            auto [ft, fj] = factor_tj(m);
            if (ft * fj != m || !t.contains(ft) || !j.contains(fj)) factor_ok = false;
        } catch (const LeiError&) {
            factor_ok = false;
        }
    }
    report.claims.emplace_back("factorizations_roundtrip", factor_ok);

    return report;
}

}  // namespace lei
