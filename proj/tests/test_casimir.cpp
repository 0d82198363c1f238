#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2cas/casimir.hpp"
#include "test_util.hpp"

using namespace sl2cas;

namespace {

UniPoly poly(std::initializer_list<int> asc) {
    std::vector<Rational> c;
    for (int x : asc) c.emplace_back(x);
    return UniPoly(c);
}

// rho(L_1) for the rank-2 quotient by X^2 - zX - 1 w.r.t. the basis 1, X.
PolyMatrix companion_rank2() {
    return PolyMatrix(2, 2, {UniPoly(), UniPoly(1), UniPoly(1), UniPoly::z()});
}

}  // namespace

TEST_CASE("rep_from_phi derives the lowering matrix") {
    SUBCASE("rank one") {
        const CasimirRep rep = rep_from_phi(Rational(0), PolyMatrix(1, 1, {UniPoly(1)}));
        CHECK(rep.a_minus1() == PolyMatrix(1, 1, {poly({0, -1, 1})}));
    }
    SUBCASE("companion of rank two") {
        const CasimirRep rep = rep_from_phi(Rational(0), companion_rank2());
        const PolyMatrix am1 = rep.a_minus1();
        // pi_0(z) A1(z-1)^{-1} = [[-z^3+2z^2-z, z^2-z], [z^2-z, 0]]
        CHECK(am1 == PolyMatrix(2, 2,
                                {poly({0, -1, 2, -1}), poly({0, -1, 1}), poly({0, -1, 1}),
                                 UniPoly()}));
        CHECK(am1 * rep.a1().shift(-1) == pi_mu(Rational(0)) * PolyMatrix::identity(2));
    }
    SUBCASE("divisibility failure is rejected") {
        CHECK_THROWS_WITH_AS(
            rep_from_phi(Rational(0), PolyMatrix(1, 1, {UniPoly::z() * UniPoly::z()})),
            doctest::Contains("does not divide"), std::domain_error);
    }
    SUBCASE("singular raising matrix is rejected") {
        CHECK_THROWS_WITH_AS(rep_from_phi(Rational(0), PolyMatrix(2, 2)),
                             doctest::Contains("singular"), std::domain_error);
    }
}

TEST_CASE("verify_rep") {
    SUBCASE("rank-one catalog member") {
        const auto rep = rank1_catalog(Rational(0), Rational(1), Rank1Type::I);
        const auto report = verify_rep(rep);
        CHECK(report.all_ok());
        CHECK(report.casimirScalar == Rational(1));
        CHECK(report.level == Rational(0));
        REQUIRE(report.smithType.has_value());
        CHECK(*report.smithType == SmithType::zero(0, 1));
    }
    SUBCASE("rank-two companion") {
        const CasimirRep rep = rep_from_phi(Rational(0), companion_rank2());
        const auto report = verify_rep(rep);
        CHECK(report.all_ok());
        CHECK(report.casimirScalar == Rational(1));
        REQUIRE(report.smithType.has_value());
        CHECK(*report.smithType == SmithType::zero(2, 0));
        // T matrix solves S(z) T(z+1) = pi_mu(z+1) Id.
        for (int i = 0; i < 2; ++i)
            CHECK(rep.smith().S.at(i, i) * report.tMatrix.at(i, i).shift(1) ==
                  pi_mu(Rational(0)).shift(1));
    }
    SUBCASE("perturbed lowering matrix fails the left identity") {
        const CasimirRep rep = rep_from_phi(Rational(0), companion_rank2());
        PolyMatrix bad = rep.a_minus1();
        bad.at(0, 0) += UniPoly(1);
        const auto report = verify_matrices(rep.mu(), rep.a1(), bad);
        CHECK(!report.casimirLeft);
        CHECK(!report.all_ok());
    }
}

TEST_CASE("matrix identities hold for catalog and transformed reps") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) {
        const Rational mu = testutil::random_rational(rng);
        const Rational gamma = testutil::random_nonzero_rational(rng);
        for (const auto type : {Rank1Type::I, Rank1Type::II, Rank1Type::III, Rank1Type::IV}) {
            const auto rep = rank1_catalog(mu, gamma, type);
            const auto report = verify_rep(rep);
            CHECK(report.all_ok());
            CHECK(report.casimirScalar == (2 * mu + 1) * (2 * mu + 1));
        }
    }
}

TEST_CASE("rank-one catalog values") {
    const auto typeIV = rank1_catalog(Rational(0), Rational(1), Rank1Type::IV);
    CHECK(typeIV.a1() == PolyMatrix(1, 1, {UniPoly(1)}));
    CHECK(typeIV.a_minus1() == PolyMatrix(1, 1, {poly({0, -1, 1})}));

    const auto typeII = rank1_catalog(Rational(0), Rational(2), Rank1Type::II);
    CHECK(typeII.a1() == PolyMatrix(1, 1, {poly({2, 2})}));
    CHECK(typeII.a_minus1() ==
          PolyMatrix(1, 1, {UniPoly(std::vector<Rational>{make_rational(-1, 2),
                                                          make_rational(1, 2)})}));

    const auto typeIII = rank1_catalog(make_rational(1, 2), Rational(1), Rank1Type::III);
    CHECK(typeIII.a1() ==
          PolyMatrix(1, 1, {UniPoly(std::vector<Rational>{make_rational(-1, 2), Rational(1)})}));
    CHECK(typeIII.a_minus1() ==
          PolyMatrix(1, 1, {UniPoly(std::vector<Rational>{make_rational(1, 2), Rational(1)})}));

    CHECK_THROWS_AS(rank1_catalog(Rational(0), Rational(0), Rank1Type::I), std::domain_error);
}

TEST_CASE("smith type classification") {
    CHECK(smith_type(rank1_catalog(Rational(2), Rational(3), Rank1Type::I)) ==
          SmithType::zero(0, 1));
    CHECK(smith_type(rank1_catalog(Rational(2), Rational(3), Rank1Type::II)) ==
          SmithType::plus(0, 1, 0));
    CHECK(smith_type(rank1_catalog(Rational(2), Rational(3), Rank1Type::III)) ==
          SmithType::minus(0, 1, 0));
    CHECK(smith_type(rank1_catalog(Rational(2), Rational(3), Rank1Type::IV)) ==
          SmithType::zero(1, 0));
    CHECK(smith_type(rep_from_phi(Rational(0), companion_rank2())) == SmithType::zero(2, 0));
}

TEST_CASE("degenerate semi-level flags the collapsed pattern") {
    const Rational mu = make_rational(-1, 2);
    const auto rep = rank1_catalog(mu, Rational(1), Rank1Type::II);
    const SmithType t = smith_type(rep);
    CHECK(t == SmithType::plus(0, 1, 0));
    CHECK(t.degenerate);
    CHECK(!smith_type(rank1_catalog(Rational(0), Rational(1), Rank1Type::II)).degenerate);
}

TEST_CASE("stratification enumeration") {
    CHECK(enumerate_smith_types(1).size() == 4);
    CHECK(enumerate_smith_types(2).size() == 9);
    const auto n3 = enumerate_smith_types(3);
    CHECK(n3.size() == 16);
    int zeros = 0, pluses = 0, minuses = 0;
    for (const auto& t : n3) {
        zeros += t.kind == SmithKind::Zero;
        pluses += t.kind == SmithKind::Plus;
        minuses += t.kind == SmithKind::Minus;
    }
    CHECK(zeros == 4);
    CHECK(pluses == 6);
    CHECK(minuses == 6);
    for (int n = 1; n <= 6; ++n) {
        const auto types = enumerate_smith_types(n);
        CHECK(static_cast<int>(types.size()) == (n + 1) * (n + 1));
        for (std::size_t a = 0; a < types.size(); ++a) {
            CHECK(types[a].rank() == n);
            for (std::size_t b = a + 1; b < types.size(); ++b) CHECK(types[a] != types[b]);
        }
    }
}

TEST_CASE("every enumerated type is realized diagonally") {
    std::mt19937_64 rng(53);
    for (int n = 1; n <= 3; ++n) {
        Rational mu = testutil::random_rational(rng);
        // mu = -1/2 collapses the plus/minus patterns; the classifier then
        // reports the canonical variant, so keep this round-trip generic.
        while (mu == make_rational(-1, 2)) mu = testutil::random_rational(rng);
        for (const auto& t : enumerate_smith_types(n)) {
            const CasimirRep rep = realize_type(t, mu);
            CHECK(verify_rep(rep).all_ok());
            CHECK(smith_type(rep) == t);
        }
    }
}

TEST_CASE("endomorphism basis") {
    SUBCASE("rank-one representations have scalar endomorphisms only") {
        std::mt19937_64 rng(57);
        for (const auto type : {Rank1Type::I, Rank1Type::II, Rank1Type::III, Rank1Type::IV}) {
            const auto rep = rank1_catalog(testutil::random_rational(rng),
                                           testutil::random_nonzero_rational(rng), type);
            const auto basis = endomorphism_basis(rep, 5);
            REQUIRE(basis.size() == 1);
            CHECK(basis[0].at(0, 0).is_constant());
        }
    }
    SUBCASE("companion representation is scalar as well") {
        const auto basis = endomorphism_basis(rep_from_phi(Rational(0), companion_rank2()), 3);
        REQUIRE(basis.size() == 1);
        const Rational c = basis[0].at(0, 0).coeff(0);
        CHECK(basis[0] == UniPoly(c) * PolyMatrix::identity(2));
    }
    SUBCASE("direct sum of two shift copies has a 4-dimensional algebra") {
        const CasimirRep sum = rep_from_phi(Rational(0), PolyMatrix::identity(2));
        CHECK(endomorphism_basis(sum, 0).size() == 4);
    }
}

TEST_CASE("rank-one invariant ideal search") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 20; ++t) {
        const Rational mu = testutil::random_rational(rng);
        const Rational gamma = testutil::random_nonzero_rational(rng);
        CHECK(rank1_invariant_ideals(rank1_catalog(mu, gamma, Rank1Type::I)).ideals.empty());
        CHECK(rank1_invariant_ideals(rank1_catalog(mu, gamma, Rank1Type::IV)).ideals.empty());
    }
    // Type III at mu = 0 genuinely preserves the ideal (z):
    // rho(L_1)(z f) = gamma z (z+1) f(z+1) and rho(L_{-1})(z f) =
    // (z/gamma)(z-1) f(z-1) both land in (z).
    const auto iiiAtZero =
        rank1_invariant_ideals(rank1_catalog(Rational(0), Rational(1), Rank1Type::III));
    REQUIRE(iiiAtZero.ideals.size() == 1);
    CHECK(iiiAtZero.ideals[0] == UniPoly::z());

    // Types II and III at integral and generic semi-levels: the search
    // reports its verdict instead of asserting a fixed one.
    for (const Rational& mu : {Rational(0), make_rational(1, 3)}) {
        const auto ii = rank1_invariant_ideals(rank1_catalog(mu, Rational(1), Rank1Type::II));
        const auto iii = rank1_invariant_ideals(rank1_catalog(mu, Rational(1), Rank1Type::III));
        CHECK(ii.undecided.empty());
        CHECK(iii.undecided.empty());
        for (const auto& f : ii.ideals) {
            CHECK(divides(f, alpha_mu(mu).shift(1) * f.shift(1)));
            CHECK(divides(f, beta_mu(mu) * f.shift(-1)));
        }
    }
    CHECK_THROWS_AS(rank1_invariant_ideals(rep_from_phi(Rational(0), companion_rank2())),
                    std::domain_error);
}

TEST_CASE("weak equivalence action") {
    const CasimirRep rep = rep_from_phi(Rational(0), companion_rank2());
    SUBCASE("identity pair is the identity action") {
        const auto same = rep_transform(rep, PolyMatrix::identity(2), PolyMatrix::identity(2));
        CHECK(same.a1() == rep.a1());
    }
    SUBCASE("scalar conjugation is trivial in rank one") {
        const auto r1 = rank1_catalog(Rational(0), Rational(1), Rank1Type::IV);
        const PolyMatrix two(1, 1, {UniPoly(2)});
        CHECK(rep_transform(r1, two, two).a1() == r1.a1());
    }
    SUBCASE("shear keeps the Smith type") {
        const PolyMatrix g(2, 2, {UniPoly(1), UniPoly::z(), UniPoly(), UniPoly(1)});
        const auto moved = rep_transform(rep, g, PolyMatrix::identity(2));
        CHECK(moved.a1() ==
              PolyMatrix(2, 2, {UniPoly::z(), poly({1, 0, 1}), UniPoly(1), UniPoly::z()}));
        CHECK(smith_type(moved) == SmithType::zero(2, 0));
    }
    SUBCASE("non-unimodular transforms are rejected") {
        CHECK_THROWS_AS(rep_transform(rep, PolyMatrix::diagonal({UniPoly::z(), UniPoly(1)}),
                                      PolyMatrix::identity(2)),
                        std::domain_error);
    }
    SUBCASE("smith type is invariant under 100 random unimodular pairs") {
        std::mt19937_64 rng(67);
        const SmithType base = smith_type(rep);
        for (int t = 0; t < 100; ++t) {
            const PolyMatrix g = testutil::random_unimodular(rng, 2);
            const PolyMatrix h = testutil::random_unimodular(rng, 2);
            CHECK(smith_type(rep_transform(rep, g, h)) == base);
        }
    }
}

TEST_CASE("find_equivalence recovers a conjugator") {
    const CasimirRep rep = rep_from_phi(Rational(0), companion_rank2());
    std::mt19937_64 rng(71);
    const PolyMatrix g = testutil::random_unimodular(rng, 2);
    const CasimirRep conj = rep_transform(rep, g, g);
    const auto found = find_equivalence(rep, conj, 4);
    REQUIRE(found.has_value());
    CHECK(is_unimodular(*found));
    CHECK(*found * rep.a1() == conj.a1() * found->shift(1));
}

TEST_CASE("equivalence search fails across distinct Smith types") {
    const auto typeI = rank1_catalog(Rational(0), Rational(1), Rank1Type::I);
    const auto typeIV = rank1_catalog(Rational(0), Rational(1), Rank1Type::IV);
    CHECK(!find_equivalence(typeI, typeIV, 4).has_value());
    CHECK(!find_equivalence(typeIV, typeI, 4).has_value());
}
