#include <doctest.h>

#include "support.hpp"
#include "valchain/polynomial.hpp"

using namespace valchain;
using testsupport::Rng;

namespace {

const PadicField Q2(2);

Polynomial<PadicField> P(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.push_back(Rational(x));
    return Polynomial<PadicField>(Q2, std::move(c));
}

} // namespace

TEST_CASE("divmod examples") {
    // (X^4+4) / (X^2+2) = (X^2-2, 8); oracle: reconstruct q*g + r
    auto f = P({4, 0, 0, 0, 1});
    auto g = P({2, 0, 1});
    auto [q, r] = poly_divmod(f, g);
    CHECK(q == P({-2, 0, 1}));
    CHECK(r == P({8}));
    CHECK(q * g + r == f);

    auto [q2, r2] = poly_divmod(f, f);
    CHECK(q2 == P({1}));
    CHECK(r2.is_zero());

    auto [q3, r3] = poly_divmod(P({0, 1}), g);
    CHECK(q3.is_zero());
    CHECK(r3 == P({0, 1}));

    CHECK_THROWS_AS(poly_divmod(f, Polynomial<PadicField>::zero(Q2)), Error);
}

TEST_CASE("divmod round trip on random pairs") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        auto f = testsupport::rand_poly(rng, Q2, 12);
        auto g = testsupport::rand_nonzero_poly(rng, Q2, 12);
        auto [q, r] = poly_divmod(f, g);
        CHECK(q * g + r == f);
        if (!r.is_zero()) CHECK(r.degree_strict() < g.degree_strict());
    }
}

TEST_CASE("taylor shift") {
    CHECK(taylor_shift(P({0, 0, 1}), Rational(1)) == P({1, 2, 1}));
    CHECK(taylor_shift(P({2, 0, 1}), Rational(0)) == P({2, 0, 1}));

    // X^3 shifted by -1 over F_2(t): signs collapse in characteristic 2
    RatFuncField r2(2);
    Polynomial<RatFuncField> x3(r2, {r2.zero(), r2.zero(), r2.zero(), r2.one()});
    auto shifted = taylor_shift(x3, r2.from_integer(-1));
    Polynomial<RatFuncField> expected(r2, {r2.one(), r2.one(), r2.one(), r2.one()});
    CHECK(shifted == expected);
}

TEST_CASE("taylor shift round trip") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        auto f = testsupport::rand_poly(rng, Q2, 10);
        auto a = testsupport::rand_rational(rng);
        CHECK(taylor_shift(taylor_shift(f, a), -a) == f);
    }
}

TEST_CASE("hasse derivative examples") {
    CHECK(hasse_derivative(P({0, 0, 0, 0, 1}), 2) == P({0, 0, 6}));
    CHECK(hasse_derivative(P({2, 0, 1}), 1) == P({0, 2}));

    RatFuncField r2(2);
    Polynomial<RatFuncField> x4(r2, {r2.zero(), r2.zero(), r2.zero(), r2.zero(), r2.one()});
    CHECK(hasse_derivative(x4, 2).is_zero()); // C(4,2) = 6 = 0 mod 2
}

TEST_CASE("hasse product rule on monomials") {
    // d_b(X^m * X^n) = sum_{i+j=b} d_i(X^m) d_j(X^n), with d_0 = identity
    auto hasse0 = [](const Polynomial<PadicField>& f, unsigned long b) {
        return b == 0 ? f : hasse_derivative(f, b);
    };
    for (int m = 0; m <= 10; ++m)
        for (int n = 0; m + n <= 10; ++n)
            for (unsigned long b = 1; b <= 6; ++b) {
                auto xm = Polynomial<PadicField>::monomial(Q2, Q2.one(), static_cast<std::size_t>(m));
                auto xn = Polynomial<PadicField>::monomial(Q2, Q2.one(), static_cast<std::size_t>(n));
                auto lhs = hasse_derivative(xm * xn, b);
                auto rhs = Polynomial<PadicField>::zero(Q2);
                for (unsigned long i = 0; i <= b; ++i) rhs = rhs + hasse0(xm, i) * hasse0(xn, b - i);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("resultant examples") {
    // Res(X^2-2, X) = -2: product-over-roots oracle g(sqrt2)*g(-sqrt2) = -2
    CHECK(resultant(P({-2, 0, 1}), P({0, 1})) == Rational(-2));
    // Res(X-a, X-b) = a-b
    CHECK(resultant(P({-5, 1}), P({-3, 1})) == Rational(-2) * Rational(-1));
    CHECK(resultant(P({-5, 1}), P({-3, 1})) == Rational(2));
    // Res(X^2-2, X^2+2) = (2+2)(2+2) = 16
    CHECK(resultant(P({-2, 0, 1}), P({2, 0, 1})) == Rational(16));
}

TEST_CASE("resultant agrees with product over roots for split polynomials") {
    Rng rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        // f = prod (X - a_i) exactly known roots; check Res(f,g) = prod g(a_i)
        std::vector<Rational> roots;
        auto f = Polynomial<PadicField>::constant(Q2, Q2.one());
        const int n = 1 + static_cast<int>(testsupport::rand_int(rng, 0, 3));
        for (int i = 0; i < n; ++i) {
            auto a = testsupport::rand_rational(rng, 6, 3);
            roots.push_back(a);
            f = f * Polynomial<PadicField>(Q2, {-a, Rational(1)});
        }
        auto g = testsupport::rand_nonzero_poly(rng, Q2, 4, 6);
        Rational expected(1);
        for (const auto& a : roots) expected = expected * g.eval(a);
        CHECK(resultant(f, g) == expected);
    }
}

TEST_CASE("resultant is multiplicative in the first argument") {
    Rng rng(14);
    for (int iter = 0; iter < 60; ++iter) {
        auto f1 = testsupport::rand_nonzero_poly(rng, Q2, 3, 8);
        auto f2 = testsupport::rand_nonzero_poly(rng, Q2, 3, 8);
        auto g = testsupport::rand_nonzero_poly(rng, Q2, 3, 8);
        CHECK(resultant(f1 * f2, g) == resultant(f1, g) * resultant(f2, g));
    }
}

TEST_CASE("newton polygon examples") {
    // X^2 - 2 over v_2: root valuations {1/2, 1/2}
    auto np = newton_polygon(Q2, P({-2, 0, 1}));
    REQUIRE(np.root_valuations.size() == 2);
    CHECK(np.root_valuations[0] == Value(1, 2));
    CHECK(np.root_valuations[1] == Value(1, 2));

    // X^2+X+2: one unit root, one root of valuation 1 (Hensel split oracle)
    auto np2 = newton_polygon(Q2, P({2, 1, 1}));
    REQUIRE(np2.root_valuations.size() == 2);
    CHECK(np2.root_valuations[0] == Value(1));
    CHECK(np2.root_valuations[1] == Value(0));

    // 2X + 4: root -2 explicitly
    auto np3 = newton_polygon(Q2, P({4, 0, 0, 0, 0, 2}));
    CHECK(np3.root_valuations.size() == 5);
    auto np4 = newton_polygon(Q2, P({4, 2}));
    REQUIRE(np4.root_valuations.size() == 1);
    CHECK(np4.root_valuations[0] == Value(1));

    // X-power factor reported as infinity entries
    auto np5 = newton_polygon(Q2, P({0, 0, 4, 1}));
    REQUIRE(np5.root_valuations.size() == 3);
    CHECK(np5.root_valuations[0] == Value::infinity());
    CHECK(np5.root_valuations[1] == Value::infinity());
    CHECK(np5.root_valuations[2] == Value(2));

    CHECK_THROWS_AS(newton_polygon(Q2, Polynomial<PadicField>::zero(Q2)), Error);
}

TEST_CASE("newton polygon multiset sum law") {
    Rng rng(15);
    int done = 0;
    while (done < 100) {
        auto f = testsupport::rand_nonzero_poly(rng, Q2, 8);
        if (f.coeff(0).is_zero() || f.is_constant()) continue;
        ++done;
        auto np = newton_polygon(Q2, f);
        CHECK(np.root_valuations.size() == static_cast<std::size_t>(f.degree_strict()));
        Value sum(0);
        for (const auto& v : np.root_valuations) {
            REQUIRE(v.is_finite());
            sum = sum + v;
        }
        CHECK(sum == Q2.valuation(f.coeff(0)) - Q2.valuation(f.lc()));
    }
}

TEST_CASE("gcd and squarefree") {
    auto f = P({-2, 0, 1});
    CHECK(poly_gcd(f * f, f) == f);
    CHECK(is_squarefree(f));
    CHECK(!is_squarefree(f * f));
    auto g = P({1, 2, 3});
    CHECK(poly_gcd(f, g).is_constant());
}

TEST_CASE("polynomial literals render canonically") {
    CHECK(P({4, 0, 0, 0, 1}).str() == "X^4+4");
    CHECK(P({-4, 0, -4, 0, 1}).str() == "X^4-4X^2-4");
    CHECK(Polynomial<PadicField>(Q2, {Rational(0), Rational(3, 2)}).str() == "3/2X");
    CHECK(Polynomial<PadicField>::zero(Q2).str() == "0");

    RatFuncField r2(2);
    Polynomial<RatFuncField> q(r2, {RatFunc(FpPoly::t(2)), r2.one(), r2.one()});
    CHECK(q.str() == "X^2+X+{0+1t}");
}
