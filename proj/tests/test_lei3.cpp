#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace lt;

TEST_CASE("catalog structure constants") {
    auto f5 = FieldSpec::prime(5);
    Algebra l3 = make_lei3(f5);
    CHECK(l3.c(0, 0, 2).is_one());
    CHECK(l3.c(0, 1, 2).is_one());
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                if (!l3.c(i, j, k).is_zero()) ++nonzero;
    CHECK(nonzero == 2);

    auto q = FieldSpec::rationals();
    Algebra l1 = make_lei1(q);
    CHECK(l1.c(0, 0, 1).is_one());
    CHECK(l1.c(0, 1, 2).is_one());

    auto f2 = FieldSpec::prime(2);
    Algebra l2 = make_lei2(f2);
    CHECK(l2.c(0, 0, 2).is_one());
    CHECK(l2.c(0, 1, 2).is_zero());
}

TEST_CASE("general automorphism matrix") {
    auto f5 = FieldSpec::prime(5);
    CHECK(general_aut_matrix(AutParams::make(sc(f5, 1), sc(f5, 0), sc(f5, 0),
                                             sc(f5, 0)))
              .is_identity());

    Matrix m = general_aut_matrix(
        AutParams::make(sc(f5, 2), sc(f5, 1), sc(f5, 3), sc(f5, 4)));
    CHECK(m == mat(f5, 3, 3, {2, 0, 0, 1, 3, 0, 3, 4, 1}));
    CHECK(is_automorphism(make_lei3(f5), m));

    CHECK_THROWS_AS(AutParams::make(sc(f5, 0), sc(f5, 1), sc(f5, 0), sc(f5, 0)),
                    InadmissibleParams);
    CHECK_THROWS_AS(AutParams::make(sc(f5, 2), sc(f5, 3), sc(f5, 0), sc(f5, 0)),
                    InadmissibleParams);
}

TEST_CASE("family member matrices") {
    auto f5 = FieldSpec::prime(5);
    CHECK(t_matrix(sc(f5, 0), sc(f5, 0)).is_identity());
    CHECK(d_matrix(sc(f5, 2)) == mat(f5, 3, 3, {2, 0, 0, 0, 2, 0, 0, 0, 4}));

    auto f3 = FieldSpec::prime(3);
    CHECK(j_matrix(sc(f3, 1)) == mat(f3, 3, 3, {1, 0, 0, 1, 2, 0, 0, 0, 2}));

    CHECK_THROWS_AS(d_matrix(sc(f5, 0)), InadmissibleParams);
    CHECK_THROWS_AS(j_matrix(sc(f3, 2)), InadmissibleParams);  // 1 + 2 = 0
    CHECK_THROWS_AS(s_matrix(sc(f3, 2), sc(f3, 0), sc(f3, 0)),
                    InadmissibleParams);
}

TEST_CASE("the proof's explicit transformations") {
    auto f5 = FieldSpec::prime(5);
    CHECK(make_z(sc(f5, 0), sc(f5, 0)).is_identity());
    CHECK(make_z(sc(f5, 2), sc(f5, 3)) == t_matrix(sc(f5, 2), sc(f5, 3)));

    auto f3 = FieldSpec::prime(3);
    // v_{1,2,3} over F_3 sends a2 to (1+1)a2 + 3a3 = 2a2.
    Matrix v = make_v(sc(f3, 1), sc(f3, 2), sc(f3, 3));
    CHECK(v.col(1) == vec(f3, {0, 2, 0}));

    // v preserves the bracket on seeded random inputs.
    Algebra l3 = make_lei3(f5);
    std::mt19937 rng(20240115);
    std::uniform_int_distribution<std::int64_t> val(0, 4);
    for (int trial = 0; trial < 20; ++trial) {
        std::int64_t lambda = val(rng);
        if ((1 + lambda) % 5 == 0) continue;
        Matrix vm = make_v(sc(f5, lambda), sc(f5, val(rng)), sc(f5, val(rng)));
        Vector x = vec(f5, {val(rng), val(rng), val(rng)});
        Vector y = vec(f5, {val(rng), val(rng), val(rng)});
        CHECK(vm.apply(bracket(l3, x, y)) ==
              bracket(l3, vm.apply(x), vm.apply(y)));
    }
}

TEST_CASE("family orders and containments") {
    auto f2 = FieldSpec::prime(2);
    auto f3 = FieldSpec::prime(3);
    auto f5 = FieldSpec::prime(5);

    CHECK(family(FamilyKind::T, f2).order() == 4);
    CHECK(family(FamilyKind::J, f2).order() == 1);
    CHECK(family(FamilyKind::G, f3).order() == 36);
    CHECK(family(FamilyKind::G, f5).order() == 400);
    CHECK(family(FamilyKind::S, f5).order() == 100);

    CHECK_THROWS_AS(family(FamilyKind::G, FieldSpec::rationals()), NotFiniteField);

    for (const auto& f : {f2, f3, f5}) {
        MatrixGroup g = family(FamilyKind::G, f);
        MatrixGroup s = family(FamilyKind::S, f);
        CHECK(is_subgroup(family(FamilyKind::T, f), s));
        CHECK(is_subgroup(family(FamilyKind::J, f), s));
        CHECK(is_subgroup(s, g));
        CHECK(is_subgroup(family(FamilyKind::D, f), g));
    }
}

TEST_CASE("parameter extraction validates the family pattern") {
    auto f5 = FieldSpec::prime(5);
    Matrix good = general_aut_matrix(
        AutParams::make(sc(f5, 2), sc(f5, 1), sc(f5, 3), sc(f5, 4)));
    AutParams p = params_from_matrix(good);
    CHECK(p.alpha1 == sc(f5, 2));
    CHECK(p.beta3 == sc(f5, 4));

    Matrix bad_corner = good;
    bad_corner.at(0, 2) = sc(f5, 1);
    CHECK_THROWS_AS(params_from_matrix(bad_corner), NotInFamily);

    Matrix bad_diag = good;
    bad_diag.at(1, 1) = sc(f5, 4);  // breaks beta2 = alpha1 + alpha2
    CHECK_THROWS_AS(params_from_matrix(bad_diag), NotInFamily);

    Matrix bad_33 = good;
    bad_33.at(2, 2) = sc(f5, 2);  // breaks alpha1^2 + alpha1 alpha2
    CHECK_THROWS_AS(params_from_matrix(bad_33), NotInFamily);

    CHECK_THROWS_AS(params_from_matrix(Matrix(f5, 3, 3)), NotInFamily);
}

TEST_CASE("factor_sd") {
    auto f5 = FieldSpec::prime(5);
    auto [si, di] = factor_sd(Matrix::identity(f5, 3));
    CHECK(si.is_identity());
    CHECK(di.is_identity());

    Matrix g = general_aut_matrix(
        AutParams::make(sc(f5, 2), sc(f5, 1), sc(f5, 3), sc(f5, 4)));
    auto [s, d] = factor_sd(g);
    CHECK(s == s_matrix(sc(f5, 3), sc(f5, 4), sc(f5, 2)));
    CHECK(d == d_matrix(sc(f5, 2)));
    CHECK(s * d == g);

    auto [s2, d2] = factor_sd(d_matrix(sc(f5, 3)));
    CHECK(s2.is_identity());
    CHECK(d2 == d_matrix(sc(f5, 3)));
}

TEST_CASE("factor_tj") {
    auto f5 = FieldSpec::prime(5);
    auto [ti, ji] = factor_tj(Matrix::identity(f5, 3));
    CHECK(ti.is_identity());
    CHECK(ji.is_identity());

    Matrix s = s_matrix(sc(f5, 3), sc(f5, 4), sc(f5, 2));
    auto [t, j] = factor_tj(s);
    CHECK(t == t_matrix(sc(f5, 0), sc(f5, 3)));
    CHECK(j == j_matrix(sc(f5, 3)));
    CHECK(t * j == s);

    Matrix pure_t = t_matrix(sc(f5, 2), sc(f5, 4));
    auto [t2, j2] = factor_tj(pure_t);
    CHECK(t2 == pure_t);
    CHECK(j2.is_identity());

    // A general matrix with alpha1 != 1 is outside the S family.
    CHECK_THROWS_AS(factor_tj(d_matrix(sc(f5, 2))), NotInFamily);
}

TEST_CASE("factorizations round-trip exhaustively over small fields") {
    for (std::int64_t p : {2, 3}) {
        auto f = FieldSpec::prime(p);
        MatrixGroup s_fam = family(FamilyKind::S, f);
        MatrixGroup g_fam = family(FamilyKind::G, f);
        for (const auto& g : g_fam.elements()) {
            auto [s, d] = factor_sd(g);
            CHECK(s * d == g);
            CHECK(s_fam.contains(s));
        }
        for (const auto& sm : s_fam.elements()) {
            auto [t, j] = factor_tj(sm);
            CHECK(t * j == sm);
        }
    }
}

TEST_CASE("factorizations round-trip on random rational parameters") {
    auto q = FieldSpec::rationals();
    std::mt19937 rng(20240619);
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 9);
    auto rand_scalar = [&] {
        return Scalar::from_rational(Rational(num(rng), den(rng)));
    };
    int found = 0;
    while (found < 100) {
        Scalar a1 = rand_scalar(), a2 = rand_scalar();
        if (a1.is_zero() || (a1 + a2).is_zero()) continue;
        ++found;
        Matrix g = general_aut_matrix(
            AutParams::make(a1, a2, rand_scalar(), rand_scalar()));
        auto [s, d] = factor_sd(g);
        CHECK(s * d == g);
        auto [t, j] = factor_tj(s);
        CHECK(t * j == s);
    }
}

TEST_CASE("derivation identity for admissible parameters") {
    // Exhaustive over F_q, q <= 5, plus seeded random rational parameters:
    // the image of a3 is (alpha1^2 + alpha1 alpha2) a3 and
    // alpha1 (alpha1 + alpha2) = alpha1 beta2 with beta2 read off the matrix.
    auto run = [](const FieldSpec& f, const AutParams& p) {
        Matrix m = general_aut_matrix(p);
        Vector a3 = {Scalar::zero(f), Scalar::zero(f), Scalar::one(f)};
        Vector image = m.apply(a3);
        Scalar expected = p.alpha1 * p.alpha1 + p.alpha1 * p.alpha2;
        CHECK(image == Vector{Scalar::zero(f), Scalar::zero(f), expected});
        Scalar beta2 = m.at(1, 1);
        CHECK(p.alpha1 * (p.alpha1 + p.alpha2) == p.alpha1 * beta2);
        CHECK(is_automorphism(make_lei3(f), m));
    };
    for (std::int64_t q : {2, 3, 5}) {
        auto f = FieldSpec::prime(q);
        for (std::int64_t a1 = 1; a1 < q; ++a1)
            for (std::int64_t a2 = 0; a2 < q; ++a2) {
                if ((a1 + a2) % q == 0) continue;
                for (std::int64_t a3 = 0; a3 < q; ++a3)
                    for (std::int64_t b3 = 0; b3 < q; ++b3)
                        run(f, AutParams::make(sc(f, a1), sc(f, a2), sc(f, a3),
                                               sc(f, b3)));
            }
    }
    auto fq = FieldSpec::rationals();
    std::mt19937 rng(20240710);
    std::uniform_int_distribution<long long> num(-12, 12);
    std::uniform_int_distribution<long long> den(1, 7);
    int found = 0;
    while (found < 100) {
        Scalar a1 = Scalar::from_rational(Rational(num(rng), den(rng)));
        Scalar a2 = Scalar::from_rational(Rational(num(rng), den(rng)));
        if (a1.is_zero() || (a1 + a2).is_zero()) continue;
        ++found;
        run(fq, AutParams::make(a1, a2,
                                Scalar::from_rational(Rational(num(rng), den(rng))),
                                Scalar::from_rational(Rational(num(rng), den(rng)))));
    }
}

TEST_CASE("membership characterizations inside the enumerated group") {
    for (std::int64_t p : {2, 3}) {
        auto f = FieldSpec::prime(p);
        Algebra l3 = make_lei3(f);
        MatrixGroup g = enumerate_automorphisms(l3);
        // alpha1 = 1 (trivial action modulo the left center) picks out S.
        std::vector<LinearMap> s_members, t_members;
        Subspace derived = derived_subalgebra(l3);
        for (const auto& m : g.elements()) {
            if (m.at(0, 0).is_one()) s_members.push_back(m);
            bool id_mod_derived = true;
            for (std::size_t i = 0; i < 3 && id_mod_derived; ++i) {
                Vector diff = m.col(i);
                diff[i] -= Scalar::one(f);
                id_mod_derived = derived.contains(diff);
            }
            if (id_mod_derived) t_members.push_back(m);
        }
        CHECK(MatrixGroup(f, 3, s_members) == family(FamilyKind::S, f));
        CHECK(MatrixGroup(f, 3, t_members) == family(FamilyKind::T, f));
    }
}

TEST_CASE("enumerated automorphisms equal the parametric family") {
    for (std::int64_t p : {2, 3}) {
        auto f = FieldSpec::prime(p);
        CHECK(enumerate_automorphisms(make_lei3(f)) == family(FamilyKind::G, f));
    }
}

TEST_CASE("verify_theorem over small fields") {
    for (std::int64_t p : {2, 3}) {
        TheoremReport r = verify_theorem(FieldSpec::prime(p));
        CHECK(r.claims.size() == 8);
        CHECK(r.all_pass());
        if (p == 2) CHECK(r.g_order == 4);
        if (p == 3) {
            CHECK(r.g_order == 36);
            CHECK(r.s_order == 18);
            CHECK(r.t_order == 9);
            CHECK(r.j_order == 2);
            CHECK(r.d_order == 2);
        }
    }
    CHECK_THROWS_AS(verify_theorem(FieldSpec::prime(3), 100), BudgetExceeded);
}
