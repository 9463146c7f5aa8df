#include <genbinom/genbinom.hpp>

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace genbinom;

namespace {

// Independent oracle, sharing nothing with the library evaluators:
// Pascal-triangle binomials and the plain double sum with a final
// rational rescale.
class Oracle {
public:
    explicit Oracle(long max) : tri_(max + 1)
    {
        for (long a = 0; a <= max; ++a) {
            tri_[a].resize(a + 1);
            tri_[a][0] = 1;
            for (long b = 1; b <= a; ++b)
                tri_[a][b] = tri_[a - 1][b - 1] +
                             (b <= a - 1 ? tri_[a - 1][b] : 0);
        }
    }

    ExactInt choose(long a, long b) const
    {
        if (a < 0 || b < 0 || b > a)
            return 0;
        return tri_[a][b];
    }

    ExactInt gb(long n, long p, long k) const
    {
        if (k > n)
            return 0;
        ExactInt s = 0;
        for (long r = 0; r <= k - 1; ++r)
            s += choose(p, r) * choose(n - p, r) * choose(n - r - 1, k - r - 1);
        ExactRat v(ExactInt(n) * s, k);
        v.canonicalize();
        REQUIRE(v.get_den() == 1);
        return v.get_num();
    }

private:
    std::vector<std::vector<ExactInt>> tri_;
};

const Oracle& oracle()
{
    static Oracle o(40);
    return o;
}

} // namespace

TEST_CASE("frozen example values")
{
    CHECK(gb_def(GBKey(4, 1, 2)) == 12);   // k * C(n,k)
    CHECK(gb_def(GBKey(5, 3, 5)) == 10);   // C(5,3)
    CHECK(gb_def(GBKey(5, 2, 3)) == 45);   // oracle value, frozen
    CHECK(oracle().gb(5, 2, 3) == 45);

    CHECK(gb_sum(GBKey(4, 2, 2)) == 14);
    CHECK(gb_sum(GBKey(7, 3, 1)) == 7);
    CHECK(gb_sum(GBKey(5, 2, 4)) == 35);

    CHECK(gb_alt(GBKey(5, 2, 3)) == 45);
    CHECK(gb_alt(GBKey(3, 1, 1)) == 3);
    CHECK(gb_alt(GBKey(4, 0, 3)) == 4);

    CHECK(gb_second(GBKey(4, 2, 2)) == 14);
    CHECK(gb_second(GBKey(5, 5, 2)) == 10);
    CHECK(gb_second(GBKey(5, 1, 3)) == 30);

    CHECK(gb_symmetric(GBKey(4, 2, 2)) == 14);
    CHECK(gb_symmetric(GBKey(6, 3, 6)) == 20);
    CHECK(gb_symmetric(GBKey(5, 2, 1)) == 5);
}

TEST_CASE("gb_canonical boundary conventions")
{
    CHECK(gb_canonical(GBKey(6, 3, 0)) == 0);
    CHECK(gb_canonical(GBKey(6, 0, 0)) == 1);
    CHECK(gb_canonical(GBKey(6, 6, 0)) == 1);
    CHECK(gb_canonical(GBKey(3, 1, 7)) == 0);
}

TEST_CASE("GBKey and evaluator preconditions")
{
    CHECK_THROWS_AS(GBKey(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(GBKey(3, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GBKey(3, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GBKey(3, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(gb_def(GBKey(4, 2, 0)), std::domain_error);
    CHECK_THROWS_AS(gb_def(GBKey(4, 2, 5)), std::domain_error);
    CHECK_THROWS_AS(gb_second(GBKey(4, 0, 2)), std::domain_error);
    CHECK_THROWS_AS(gb_sum(GBKey(4, 2, 0)), std::domain_error);
}

TEST_CASE("formula consensus against the independent oracle")
{
    for (long n = 1; n <= 12; ++n)
        for (long p = 0; p <= n; ++p)
            for (long k = 1; k <= n; ++k) {
                GBKey key(n, p, k);
                ExactInt expect = oracle().gb(n, p, k);
                CHECK(gb_def(key) == expect);
                CHECK(gb_sum(key) == expect);
                CHECK(gb_alt(key) == expect);
                CHECK(gb_symmetric(key) == expect);
                if (p >= 1)
                    CHECK(gb_second(key) == expect);
                CHECK(expect > 0);
            }
}

TEST_CASE("symmetry and boundary invariants")
{
    for (long n = 1; n <= 12; ++n)
        for (long p = 0; p <= n; ++p) {
            CHECK(gb_canonical(GBKey(n, p, n)) == binomial(n, p));
            for (long k = 0; k <= n + 2; ++k)
                CHECK(gb_canonical(GBKey(n, p, k)) ==
                      gb_canonical(GBKey(n, n - p, k)));
        }
    for (long n = 1; n <= 12; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(gb_canonical(GBKey(n, 0, k)) == binomial(n, k));
}

TEST_CASE("special_value oracle")
{
    CHECK(special_value(GBKey(6, 2, 2)) == ExactInt(39));
    CHECK(special_value(GBKey(6, 2, 4)) == ExactInt(114));
    CHECK(!special_value(GBKey(5, 3, 0)).has_value());

    for (long n = 1; n <= 12; ++n)
        for (long p = 0; p <= n; ++p)
            for (long k = 0; k <= n + 1; ++k)
                if (auto sv = special_value(GBKey(n, p, k)))
                    CHECK(*sv == gb_canonical(GBKey(n, p, k)));
}

TEST_CASE("gb_table")
{
    GBTable t1(1);
    CHECK(t1.at(0, 0) == 1);
    CHECK(t1.at(0, 1) == 1);
    CHECK(t1.at(1, 0) == 1);
    CHECK(t1.at(1, 1) == 1);

    GBTable t2(2);
    CHECK(t2.row(1) == std::vector<ExactInt>{0, 2, 2});

    GBTable t4(4);
    CHECK(t4.at(2, 3) == 16); // n [C(3,1)+C(2,2)] at k = n-1
    for (long p = 0; p <= 4; ++p)
        for (long k = 0; k <= 4; ++k)
            CHECK(t4.at(p, k) == gb_canonical(GBKey(4, p, k)));
}

TEST_CASE("recurrence identity")
{
    CHECK(check_recurrence(4, 2, 2));
    CHECK(check_recurrence(2, 1, 1));
    CHECK(check_recurrence(5, 3, 5));
    for (long n = 2; n <= 12; ++n)
        for (long p = 1; p <= n; ++p)
            for (long k = 1; k <= n; ++k)
                CHECK(check_recurrence(n, p, k));
}

TEST_CASE("alternating sum identity")
{
    CHECK(check_sum_identity(4, 2, 4));
    CHECK(check_sum_identity(3, 1, 1));
    CHECK(check_sum_identity(5, 3, 2));
    for (long n = 1; n <= 12; ++n)
        for (long p = 1; p <= n; ++p)
            for (long k = 1; k <= n; ++k)
                CHECK(check_sum_identity(n, p, k));
}

TEST_CASE("three-term lemma")
{
    CHECK(check_lemma(1, 1, 1));
    CHECK(check_lemma(0, 2, 2));
    CHECK(check_lemma(2, 1, 3));
    for (long r = 0; r <= 6; ++r)
        for (long s = 1; r + s <= 7; ++s)
            for (long k = 1; k <= r + s + 1; ++k)
                CHECK(check_lemma(r, s, k));
}

TEST_CASE("divisibility")
{
    CHECK(check_divisibility(GBKey(5, 2, 3)));
    CHECK(check_divisibility(GBKey(7, 3, 1)));
    CHECK(check_divisibility(GBKey(4, 0, 2)));
    for (long n = 1; n <= 12; ++n)
        for (long p = 0; p <= n; ++p)
            for (long k = 1; k <= n; ++k)
                CHECK(check_divisibility(GBKey(n, p, k)));
}

TEST_CASE("check result carries a witness")
{
    CheckResult r = check_recurrence(4, 2, 2);
    CHECK(r.ok);
    CHECK(r.lhs == "24"); // (n-1) * (3*12 - 2*14) = 3*8
    CHECK(r.rhs == "24");
    CHECK(r.what.find("n=4") != std::string::npos);
}
