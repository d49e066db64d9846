#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kohnert/closure.hpp"
#include "kohnert/polynomial.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kohnert;

namespace {

SparsePolynomial P(std::string_view text) { return parse_polynomial(text); }

WeakComposition A(std::vector<int> parts) { return WeakComposition(std::move(parts)); }

} // namespace

TEST(Weight, PlainCellsOnly) {
    EXPECT_EQ(wt(fixtures::key_1132()), Monomial({1, 1, 3, 2}));
    EXPECT_EQ(wt(Diagram{}), Monomial{});
    EXPECT_EQ(wt(fixtures::t_fixed()), Monomial({1, 1, 2}));
}

TEST(Weight, SignedCountsGhosts) {
    EXPECT_EQ(wt_plus(fixtures::t_fixed()), (SignedMonomial{1, Monomial({1, 2, 2, 1})}));
    EXPECT_EQ(wt_plus(fixtures::key_1132()), (SignedMonomial{1, wt(fixtures::key_1132())}));
    EXPECT_EQ(wt_plus(from_cells({{1, 1}}, {{2, 1}})), (SignedMonomial{-1, Monomial({1, 1})}));
}

TEST(Families, KeyPolynomials) {
    EXPECT_EQ(render(key_polynomial(A({0, 2}))), "x1^2 + x1*x2 + x2^2");
    EXPECT_EQ(render(key_polynomial(A({1}))), "x1");
    EXPECT_EQ(render(key_polynomial(A({0, 1}))), "x1 + x2");
    EXPECT_EQ(kohnert_polynomial(key_diagram(A({0, 2}))), key_polynomial(A({0, 2})));
    EXPECT_EQ(render(key_polynomial(A({}))), "1");
}

TEST(Families, LascouxPolynomials) {
    EXPECT_EQ(lascoux_polynomial(A({0, 1})), P("x1 + x2 - x1*x2"));
    EXPECT_EQ(lascoux_polynomial(A({1})), P("x1"));
    // Independent check by isobaric divided differences.
    EXPECT_EQ(support::as_poly(lascoux_polynomial(A({0, 2})), 2), oracle::lascoux({0, 2}));
    EXPECT_EQ(render(lascoux_polynomial(A({0, 2}))), "x1^2 + x1*x2 + x2^2 - x1^2*x2 - x1*x2^2");
}

TEST(Families, GhostPolynomials) {
    EXPECT_EQ(ghost_polynomial(from_cells({{2, 1}})), P("x2 - x1*x2"));
    EXPECT_EQ(ghost_polynomial(fixtures::t_fixed()), P("x1*x2^2*x3^2*x4"));
}

TEST(Families, AgreeWithDemazureOperators) {
    for (const auto& alpha : support::compositions(4, 3)) {
        const int n = static_cast<int>(alpha.size());
        const auto key = key_polynomial(A(alpha));
        const auto las = lascoux_polynomial(A(alpha));
        ASSERT_EQ(support::as_poly(key, n), oracle::key(alpha)) << render(key);
        ASSERT_EQ(support::as_poly(las, n), oracle::lascoux(alpha)) << render(las);
        ASSERT_EQ(lowest_degree_part(las), key);
    }
}

TEST(Families, SignMatchesDegreeExcess) {
    // Each ghost adds one to the degree and flips the sign.
    for (const auto& alpha : support::compositions(4, 3)) {
        const auto las = lascoux_polynomial(A(alpha));
        int size = 0;
        for (int v : alpha) size += v;
        for (const auto& [m, c] : las.terms()) {
            const int excess = m.degree() - size;
            ASSERT_GE(excess, 0);
            ASSERT_EQ(c > 0, excess % 2 == 0) << render(las);
        }
    }
}

TEST(Families, ClosureSumsMatchOracle) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Diagram seed = support::random_seed(rng, 4, 3, trial % 5);
        const int n = std::max(1, seed.max_row());
        EXPECT_EQ(support::as_poly(kohnert_polynomial(seed), n),
                  oracle::weight_sum(oracle::fixed_point(seed, true, false), n, false));
        EXPECT_EQ(support::as_poly(ghost_polynomial(seed), n),
                  oracle::weight_sum(oracle::fixed_point(seed, false, true), n, true));
    }
}

TEST(Render, OrderAndSigns) {
    SparsePolynomial p;
    p.add(Monomial({1, 2}), -1);
    p.add(Monomial({2}), 1);
    p.add(Monomial({1, 1}), 1);
    p.add(Monomial{}, -3);
    EXPECT_EQ(render(p), "-3 + x1^2 + x1*x2 - x1*x2^2");
    EXPECT_EQ(render(SparsePolynomial{}), "0");
    EXPECT_EQ(render(Monomial{}), "1");
    SparsePolynomial q;
    q.add(Monomial({0, 0, 2}), 12);
    EXPECT_EQ(render(q), "12*x3^2");
}

TEST(Render, ZeroCoefficientsVanish) {
    SparsePolynomial p;
    p.add(Monomial({1}), 2);
    p.add(Monomial({1}), -2);
    p.add(Monomial({0, 1}), 0);
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(Monomial({1, 0, 0}), Monomial({1}));
}

TEST(Render, ParseRoundTrip) {
    for (const auto& alpha : support::compositions(3, 3)) {
        const auto las = lascoux_polynomial(A(alpha));
        EXPECT_EQ(parse_polynomial(render(las)), las);
    }
    EXPECT_EQ(P("0"), SparsePolynomial{});
    EXPECT_EQ(P("-x1 + 2*x2"), P("2*x2 - x1"));
    EXPECT_THROW(P("x1 +"), ParseError);
    EXPECT_THROW(P("y1"), ParseError);
    EXPECT_THROW(P("x0"), ParseError);
}

TEST(Evaluate, Values) {
    EXPECT_EQ(evaluate(P("x1 + x2 - x1*x2"), {1, 1}), 1);
    EXPECT_EQ(evaluate(P("1"), {}), 1);
    EXPECT_EQ(evaluate(P("x1^2 + x1*x2 + x2^2"), {2, 3}), 19);
    EXPECT_THROW(evaluate(P("x1*x3"), {1, 2}), ArityError);
    // big values do not overflow
    EXPECT_EQ(evaluate(P("x1^5"), {1'000'000'000}), Integer("1000000000000000000000000000000000000000000000"));
}

TEST(Evaluate, KeyPolynomialCountsDiagrams) {
    // at x = 1 every closure element contributes 1
    for (const auto& alpha : support::compositions(4, 3)) {
        const auto key = key_polynomial(A(alpha));
        const std::vector<long long> ones(3, 1);
        EXPECT_EQ(evaluate(key, ones), generate(key_diagram(A(alpha)), MoveSet::KohnertOnly).size());
    }
}

TEST(Json, Terms) {
    EXPECT_EQ(to_json(P("x1 - x1*x2")).dump(), R"({"terms":[{"coef":1,"exp":[1]},{"coef":-1,"exp":[1,1]}]})");
    SparsePolynomial big;
    big.add(Monomial({1}), Integer("100000000000000000000000"));
    EXPECT_EQ(to_json(big)["terms"][0]["coef"], "100000000000000000000000");
}

TEST(Parts, Homogeneous) {
    const auto p = P("x1 + x2 - x1*x2");
    EXPECT_EQ(homogeneous_part(p, 1), P("x1 + x2"));
    EXPECT_EQ(homogeneous_part(p, 2), P("-x1*x2"));
    EXPECT_TRUE(homogeneous_part(p, 3).is_zero());
    EXPECT_EQ(lowest_degree_part(p), P("x1 + x2"));
}
