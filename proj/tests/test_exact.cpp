#include <genbinom/exact.hpp>

#include <doctest.h>

using namespace genbinom;

namespace {

// independent oracle: iterated multiplication
ExactInt factorial_oracle(long n)
{
    ExactInt r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

} // namespace

TEST_CASE("factorial")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == ExactInt("2432902008176640000"));
    for (long n = 0; n <= 40; ++n)
        CHECK(factorial(n) == factorial_oracle(n));
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("binomial values and conventions")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-1, -1) == 0);
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(0, 0) == 1);
}

TEST_CASE("raising and lowering factorials")
{
    CHECK(raising_factorial(2L, 3) == 24);
    CHECK(raising_factorial(ExactRat(7, 2), 0) == 1);
    CHECK(raising_factorial(-2L, 3) == 0);
    CHECK(lowering_factorial(5, 2) == 20);
    CHECK(lowering_factorial(3, 0) == 1);
    CHECK(lowering_factorial(2, 4) == 0);
    CHECK(raising_factorial(ExactRat(1, 2), 2) == ExactRat(3, 4));
}

TEST_CASE("combinatorial identities over a grid")
{
    for (long a = 0; a <= 20; ++a)
        for (long b = 0; b <= a; ++b) {
            CHECK(binomial(a, b) == binomial(a, a - b));
            CHECK(binomial(a, b) ==
                  exact_div(lowering_factorial(a, b), factorial(b)));
        }
    for (long a = -10; a <= 10; ++a)
        for (long k = 0; k <= 8; ++k)
            CHECK(raising_factorial(a, k) == lowering_factorial(a + k - 1, k));
    for (long a = 1; a <= 20; ++a)
        for (long b = -2; b <= a + 2; ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1));
}

TEST_CASE("exact division and rationals")
{
    CHECK(exact_div(ExactInt(84), ExactInt(7)) == 12);
    CHECK_THROWS_AS(exact_div(ExactInt(5), ExactInt(2)), std::domain_error);
    CHECK_THROWS_AS(exact_div(ExactInt(5), ExactInt(0)), std::domain_error);

    ExactRat q = make_rat(6, 4);
    CHECK(q.get_num() == 3);
    CHECK(q.get_den() == 2);
    CHECK(make_rat(3, -6) == make_rat(-1, 2));
    CHECK(is_integer(make_rat(8, 4)));
    CHECK(!is_integer(make_rat(8, 3)));
}
