#include <doctest.h>

#include "support.hpp"
#include "valchain/groundfield.hpp"

using namespace valchain;
using testsupport::Rng;

TEST_CASE("padic valuation basics") {
    PadicField f2(2);
    CHECK(f2.valuation(Rational(12)) == Value(2));
    CHECK(f2.valuation(Rational(3, 8)) == Value(-3));
    CHECK(f2.valuation(Rational(0)) == Value::infinity());
    PadicField f5(5);
    CHECK(f5.valuation(Rational(50)) == Value(2));
    CHECK_THROWS_AS(PadicField(6), Error);
}

TEST_CASE("rational function valuation basics") {
    RatFuncField f(2);
    // t^2/(t+1) has v_t = 2
    RatFunc e(FpPoly(2, {0, 0, 1}), FpPoly(2, {1, 1}));
    CHECK(f.valuation(e) == Value(2));
    CHECK(f.valuation(f.zero()) == Value::infinity());
    // 1/t has v_t = -1
    CHECK(f.valuation(RatFunc(FpPoly::constant(2, 1), FpPoly::t(2))) == Value(-1));
}

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -2).str() == "-3/2");
    CHECK(Rational::parse("-3/2") == Rational(3, -2));
}

TEST_CASE("ratfunc canonical form") {
    // (t^2+t)/(t+1) reduces to t
    RatFunc e(FpPoly(2, {0, 1, 1}), FpPoly(2, {1, 1}));
    CHECK(e == RatFunc(FpPoly::t(2)));
    CHECK(e.str() == "0+1t");
    // denominator is normalized monic over F_3: (1)/(2t) -> 2|t ... num 2, den t
    RatFunc g(FpPoly::constant(3, 1), FpPoly(3, {0, 2}));
    CHECK(g.den().lc() == 1);
    CHECK(g.str() == "2|0+1t");
    CHECK(RatFunc::parse(3, "2|0+1t") == g);
    CHECK(RatFunc::parse(2, "1+0t+1t^2").str() == "1+0t+1t^2");
}

TEST_CASE("ground valuation is multiplicative and ultrametric") {
    Rng rng(7);
    PadicField f2(2), f7(7);
    RatFuncField r3(3);
    auto check_axioms = [](const auto& field, const auto& a, const auto& b) {
        const Value va = field.valuation(a);
        const Value vb = field.valuation(b);
        CHECK(field.valuation(a * b) == va + vb);
        const Value vs = field.valuation(a + b);
        CHECK(vs >= min(va, vb));
        if (va != vb) CHECK(vs == min(va, vb));
    };
    for (int i = 0; i < 10000; ++i) {
        check_axioms(f2, testsupport::rand_rational(rng), testsupport::rand_rational(rng));
        check_axioms(f7, testsupport::rand_rational(rng), testsupport::rand_rational(rng));
    }
    for (int i = 0; i < 10000; ++i) {
        auto a = RatFunc(FpPoly(3, {static_cast<std::uint64_t>(testsupport::rand_int(rng, 0, 2)),
                                    static_cast<std::uint64_t>(testsupport::rand_int(rng, 0, 2)),
                                    static_cast<std::uint64_t>(testsupport::rand_int(rng, 0, 2))}),
                        FpPoly(3, {static_cast<std::uint64_t>(testsupport::rand_int(rng, 0, 2)),
                                   static_cast<std::uint64_t>(testsupport::rand_int(rng, 1, 2))}));
        auto b = RatFunc(FpPoly(3, {static_cast<std::uint64_t>(testsupport::rand_int(rng, 0, 2)),
                                    static_cast<std::uint64_t>(testsupport::rand_int(rng, 0, 2))}));
        check_axioms(r3, a, b);
    }
}

TEST_CASE("uniformizer powers hit the requested valuation") {
    PadicField f3(3);
    RatFuncField r2(2);
    for (long v = -4; v <= 4; ++v) {
        CHECK(f3.valuation(f3.uniformizer_power(v)) == Value(v));
        CHECK(r2.valuation(r2.uniformizer_power(v)) == Value(v));
    }
}

TEST_CASE("sample points are pairwise distinct") {
    PadicField f2(2);
    RatFuncField r2(2);
    for (std::size_t i = 0; i < 40; ++i)
        for (std::size_t j = i + 1; j < 40; ++j) {
            CHECK(f2.sample_point(i) != f2.sample_point(j));
            CHECK(r2.sample_point(i) != r2.sample_point(j));
        }
}
