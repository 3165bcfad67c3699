#include "twr/rational.hpp"

#include "doctest.h"

using twr::Rat;

TEST_CASE("arithmetic stays exact and canonical") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK((Rat(2, 4)).to_string() == "1/2");
    CHECK((Rat(-6, 4)).to_string() == "-3/2");
    CHECK((Rat(-6, -4)).to_string() == "3/2");
    CHECK(Rat(0).to_string() == "0");

    // 1/3 repeated: no drift, unlike floating point
    Rat s(0);
    for (int i = 0; i < 300; ++i) s += Rat(1, 3);
    CHECK(s == Rat(100));
}

TEST_CASE("ordering, min, max") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-5) < Rat(0));
    CHECK(twr::min(Rat(3, 7), Rat(4, 9)) == Rat(3, 7));
    CHECK(twr::max(Rat(3, 7), Rat(4, 9)) == Rat(4, 9));
}

TEST_CASE("infinity is an absorbing top element") {
    Rat inf = Rat::infinity();
    CHECK(inf.is_infinite());
    CHECK(inf == Rat::infinity());
    CHECK(Rat(1000000) < inf);
    CHECK(inf > Rat(1000000));
    CHECK((inf + Rat(5)).is_infinite());
    CHECK((inf + inf).is_infinite());
    CHECK((inf * Rat(3)).is_infinite());
    CHECK(Rat(7) / inf == Rat(0));
    CHECK_THROWS_AS(inf - inf, std::domain_error);
    CHECK_THROWS_AS(Rat(1) - inf, std::domain_error);
    CHECK_THROWS_AS(inf * Rat(0), std::domain_error);
    CHECK_THROWS_AS(inf * Rat(-1), std::domain_error);
    CHECK_THROWS_AS(inf / inf, std::domain_error);
    CHECK_THROWS_AS(-inf, std::domain_error);
    CHECK_THROWS_AS(inf.floor(), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("floor and ceil handle negatives") {
    CHECK(Rat(7, 2).floor() == Rat(3));
    CHECK(Rat(7, 2).ceil() == Rat(4));
    CHECK(Rat(-7, 2).floor() == Rat(-4));
    CHECK(Rat(-7, 2).ceil() == Rat(-3));
    CHECK(Rat(6).floor() == Rat(6));
    CHECK(Rat(6).ceil() == Rat(6));
    CHECK(Rat(-9, 4).floor_ll() == -3);
}

TEST_CASE("parse accepts fractions, integers, decimals") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("12") == Rat(12));
    CHECK(Rat::parse("+12") == Rat(12));
    CHECK(Rat::parse("-0") == Rat(0));
    CHECK(Rat::parse("3.25") == Rat(13, 4));
    CHECK(Rat::parse("-0.5") == Rat(-1, 2));
    CHECK(Rat::parse("0.125") == Rat(1, 8));
    CHECK(Rat::parse("  7/3 ") == Rat(7, 3));
    CHECK(Rat::parse("inf").is_infinite());
    CHECK_THROWS(Rat::parse(""));
    CHECK_THROWS(Rat::parse("abc"));
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("1.2.3"));
    CHECK_THROWS(Rat::parse("1/2/3"));
    CHECK_THROWS(Rat::parse("1.5/2"));
    CHECK_THROWS(Rat::parse("--3"));
}

TEST_CASE("round trips through to_string") {
    const char* samples[] = {"0", "5", "-5", "1/2", "-22/7", "1000000007/3"};
    for (const char* s : samples) {
        CHECK(Rat::parse(s).to_string() == s);
    }
    CHECK(Rat::parse("inf").to_string() == "inf");
}
