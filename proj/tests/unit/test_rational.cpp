#include "doctest.h"

#include "core/error.hpp"
#include "core/rational.hpp"

using margin_mcmc::Error;
using margin_mcmc::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic is exact") {
    Rational third{1, 3}, ninth{1, 9};
    CHECK(third + ninth == Rational(4, 9));
    CHECK(third - ninth == Rational(2, 9));
    CHECK(third * ninth == Rational(1, 27));
    CHECK(third / ninth == Rational(3));
    CHECK(-third == Rational(-1, 3));
    CHECK_THROWS_AS(third / Rational(0), Error);

    // 1/2 + 1/3 + 1/6 closes to exactly 1.
    CHECK(Rational(1, 2) + Rational(1, 3) + Rational(1, 6) == Rational(1));
}

TEST_CASE("rational ordering crosses denominators") {
    CHECK(Rational(1, 9) < Rational(1, 4));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(2, 3) > Rational(5, 9));
    CHECK(Rational(2, 6) <= Rational(1, 3));
}

TEST_CASE("rational formatting omits unit denominators") {
    CHECK(Rational(1, 9).to_string() == "1/9");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(9, 9).to_string() == "1");
    CHECK(Rational(-1, 3).to_string() == "-1/3");
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational big{INT64_MAX / 2, 1};
    CHECK_THROWS_AS(big * big, Error);
    // Reduction keeps representable results representable.
    Rational half_max{INT64_MAX - 1, 2};
    CHECK((half_max * Rational{2, INT64_MAX - 1}) == Rational(1));
}
