#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2cas/json_io.hpp"
#include "test_util.hpp"

using namespace sl2cas;

TEST_CASE("rational wire format") {
    CHECK(rational_json(make_rational(-3, 2)) == json("-3/2"));
    CHECK(rational_json(Rational(4)) == json("4"));
    CHECK(rational_from_json(json("5/10")) == make_rational(1, 2));
    CHECK(rational_from_json(json(7)) == Rational(7));
    CHECK_THROWS_AS(rational_from_json(json::object()), std::invalid_argument);
}

TEST_CASE("polynomial wire format") {
    const UniPoly p(std::vector<Rational>{Rational(0), Rational(-1), Rational(1)});
    CHECK(poly_json(p) == json::parse(R"(["0","-1","1"])"));
    CHECK(poly_from_json(poly_json(p)) == p);
    CHECK(poly_from_json(json::array()).is_zero());
}

TEST_CASE("round trips on random values") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 30; ++t) {
        const UniPoly p = testutil::random_poly(rng, 5);
        CHECK(poly_from_json(poly_json(p)) == p);
        const RatFunc f = testutil::random_ratfunc(rng);
        CHECK(ratfunc_from_json(ratfunc_json(f)) == f);
        const SkewElement a = testutil::random_skew(rng, -3, 3);
        CHECK(skew_from_json(skew_json(a)) == a);
        const PolyMatrix m = testutil::random_matrix(rng, 1 + t % 3, 1 + (t / 2) % 3, 3);
        CHECK(matrix_from_json(matrix_json(m)) == m);
    }
}

TEST_CASE("representation and module round trips") {
    const QuotientModule q = build_family(2, UniPoly::z(), Rational(1), Rational(0));
    const CasimirRep back = rep_from_json(rep_json(q.rep));
    CHECK(back == q.rep);
    const QuotientModule qb = module_from_json(module_json(q));
    CHECK(qb.alpha == q.alpha);
    CHECK(qb.rep == q.rep);
    CHECK(qb.rank == 2);

    for (const auto& t : enumerate_smith_types(3))
        CHECK(smith_type_from_json(smith_type_json(t)) == t);
}

TEST_CASE("schema violations are rejected") {
    CHECK_THROWS_AS(matrix_from_json(json{{"rows", 2}, {"cols", 1}, {"entries", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rep_from_json(json{{"mu", "0"}}), std::invalid_argument);
    CHECK_THROWS_AS(skew_from_json(json{{"x", json{{"num", json::array()},
                                                   {"den", json::array({"1"})}}}}),
                    std::invalid_argument);
    // n disagreeing with the matrix is a schema error, not a math error.
    json bad = rep_json(rank1_catalog(Rational(0), Rational(1), Rank1Type::IV));
    bad["n"] = 5;
    CHECK_THROWS_AS(rep_from_json(bad), std::invalid_argument);
}

TEST_CASE("falsifier verdict serialisation") {
    const CasimirRep rep = rep_from_phi(
        Rational(0), PolyMatrix::diagonal({UniPoly(1), pi_mu(Rational(0)).shift(1)}));
    const FalsifierVerdict v = simplicity_falsifier(rep, 1, 3, 2, 42);
    const json j = verdict_json(v);
    CHECK(j.at("outcome") == "proper_submodule");
    CHECK(j.at("seed") == 42);
    CHECK(j.at("bounds").at("degBound") == 1);
    CHECK(j.at("witness").at("rank") == 1);
    const QuotientModule q = build_family(2, UniPoly::z(), Rational(1), Rational(0));
    const json clean = verdict_json(simplicity_falsifier(q.rep, 1, 3, 2, 42));
    CHECK(clean.at("outcome") == "no_counterexample");
    CHECK(clean.at("witness").is_null());
}
