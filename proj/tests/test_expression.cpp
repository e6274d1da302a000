#include "doctest.h"

#include "helpers.hpp"

using namespace jetob;
using testing::el;
using testing::kt;

TEST_CASE("expressions parse with precedence, signs and rationals") {
    const auto& c = kt();
    CHECK(format_element(el(c, "A*C + B*T")) == "A*C + B*T");
    CHECK(format_element(el(c, "-1/2*A*B")) == "-1/2*A*B");
    CHECK(format_element(el(c, "2*(A + B)*C")) == "2*A*C + 2*B*C");
    CHECK(format_element(el(c, "B*A")) == "-A*B");
    CHECK(format_element(el(c, "0")) == "0");
    CHECK(format_element(el(c, "1")) == "1");
    CHECK(format_element(el(c, "4/6*T")) == "2/3*T");
    CHECK(format_element(el(c, " - - A ")) == "A");
}

TEST_CASE("parse errors carry the column") {
    const auto& c = kt();
    try {
        (void)el(c, "A + *B");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
        CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
    try {
        (void)el(c, "A*Q");
        FAIL("expected an unknown generator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownGenerator);
    }
    CHECK_THROWS_AS(el(c, "1/0*A"), Error);
    CHECK_THROWS_AS(el(c, "(A"), Error);
    CHECK_THROWS_AS(el(c, ""), Error);
}

TEST_CASE("scalars render as p/q in lowest terms") {
    CHECK(format_scalar(Scalar(6, 4)) == "3/2");
    CHECK(format_scalar(Scalar(-3)) == "-3");
    CHECK(parse_scalar("-10/4") == Scalar(-5, 2));
    CHECK_THROWS_AS(parse_scalar("x"), Error);
}
