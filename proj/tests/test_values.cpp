#include <doctest.h>

#include "support.hpp"
#include "valchain/value.hpp"

using namespace valchain;
using testsupport::Rng;

TEST_CASE("value addition") {
    CHECK(Value(1, 2) + Value(1) == Value(3, 2));
    CHECK(Value::infinity() + Value(-3) == Value::infinity());
    CHECK(Value(0) + Value(5, 7) == Value(5, 7));
}

TEST_CASE("value scaling") {
    CHECK(Value(1, 2).scale(3) == Value(3, 2));
    CHECK(Value(5, 7).scale(0) == Value(0));
    CHECK(Value::infinity().scale(2) == Value::infinity());
    CHECK_THROWS_AS(Value::infinity().scale(0), Error);
}

TEST_CASE("value comparison") {
    CHECK(compare(Value(1, 2), Value(1)) == ordering::LT);
    CHECK(compare(Value::infinity(), Value(1000000000L)) == ordering::GT);
    CHECK(compare(Value(2, 4), Value(1, 2)) == ordering::EQ);
    CHECK(Value::infinity() == Value::infinity());
}

TEST_CASE("lex value comparison") {
    LexValue a(0, Value(1, 2)), b(0, Value(1));
    CHECK(compare(a, b) == ordering::LT);
    LexValue c(-3, Value(100)), d(-2, Value(-100));
    CHECK(compare(c, d) == ordering::LT);
    CHECK(compare(LexValue::infinity(), LexValue(9, Value(1))) == ordering::GT);
}

TEST_CASE("group laws on random finite values") {
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        Value a = testsupport::rand_value(rng);
        Value b = testsupport::rand_value(rng);
        Value c = testsupport::rand_value(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        if (a < b) CHECK(a + c < b + c);
    }
}

TEST_CASE("lex embedding is additive and order preserving") {
    Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        Value a = testsupport::rand_value(rng);
        Value b = testsupport::rand_value(rng);
        CHECK(LexValue::embed(a) + LexValue::embed(b) == LexValue::embed(a + b));
        CHECK((a < b) == (LexValue::embed(a) < LexValue::embed(b)));
    }
}

TEST_CASE("min over finite sequences is attained") {
    Rng rng(44);
    for (int i = 0; i < 100; ++i) {
        std::vector<Value> vs;
        const int n = 1 + static_cast<int>(testsupport::rand_int(rng, 0, 8));
        for (int j = 0; j < n; ++j) vs.push_back(testsupport::rand_value(rng));
        Value m = min(vs);
        bool attained = false;
        for (const auto& v : vs) {
            CHECK(m <= v);
            if (v == m) attained = true;
        }
        CHECK(attained);
    }
}

TEST_CASE("value string round trip") {
    CHECK(Value(3, 2).str() == "3/2");
    CHECK(Value(3).str() == "3");
    CHECK(Value(-6, 4).str() == "-3/2");
    CHECK(Value::infinity().str() == "inf");
    CHECK(Value::parse("3/2") == Value(3, 2));
    CHECK(Value::parse("inf") == Value::infinity());
    CHECK(Value::parse("-3") == Value(-3));
    CHECK_THROWS_AS(Value::parse("x"), Error);
}

TEST_CASE("subtraction and division") {
    CHECK(Value(3, 2) - Value(1, 2) == Value(1));
    CHECK(Value::infinity() - Value(5) == Value::infinity());
    CHECK_THROWS_AS(Value(1) - Value::infinity(), Error);
    CHECK(Value(3, 2).div(3) == Value(1, 2));
}
