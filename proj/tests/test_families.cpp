#include "fixtures.hpp"

#include "prat/errors.hpp"
#include "prat/families.hpp"

#include <doctest.h>

#include <cmath>

using namespace prat;
using namespace prat::testing;

namespace {

bool is_fundamental(std::int64_t D)
{
    if (D >= 0)
        return false;
    std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1)
        return squarefree_part(D) == D;
    if (r != 0)
        return false;
    std::int64_t m = D / 4;
    std::int64_t m4 = ((m % 4) + 4) % 4;
    return (m4 == 2 || m4 == 3) && squarefree_part(m) == m;
}

// h = -(w / (2|D|)) sum_{k=1}^{|D|-1} chi_D(k) k
std::uint64_t dirichlet_class_number(std::int64_t D)
{
    const std::int64_t n = -D;
    const mpz_class Dz(static_cast<long>(D));
    long sum = 0;
    for (std::int64_t k = 1; k < n; ++k)
        sum += mpz_kronecker(Dz.get_mpz_t(), mpz_class(static_cast<long>(k)).get_mpz_t()) * k;
    const long w = D == -4 ? 4 : D == -3 ? 6 : 2;
    const long num = -w * sum;
    REQUIRE(num % (2 * n) == 0);
    return static_cast<std::uint64_t>(num / (2 * n));
}

}  // namespace

TEST_CASE("pure cubic instances")
{
    auto inst = make_pure_cubic(7);
    CHECK(inst.field.poly() == IntPoly{-342, 0, 0, 1});
    CHECK(mul(inst.field, inst.unit, inst.field.from_power(std::vector<Integer>{7, -1, 0})) == inst.field.one());
    CHECK_THROWS_AS(make_pure_cubic(3), DomainError);
    CHECK_THROWS_AS(make_pure_cubic(9), DomainError);

    auto r = pure_cubic_scan(5, 7);
    REQUIRE(r.size() == 2);
    CHECK(r[0].p == 5);
    CHECK(r[0].shape == SplitShape::OneTwo);
    CHECK(r[0].condition2_holds);
    CHECK_FALSE(r[0].class_number);
    CHECK(r[1].shape == SplitShape::SplitCompletely);
    CHECK(r[1].condition2_holds);
}

TEST_CASE("pure cubic scan with class numbers")
{
    auto h = load_prime_values(data_path("pure_cubic_h.csv"));
    CHECK(h.at(2791) == Integer("31876011"));
    auto big = pure_cubic_scan(2791, 2791, h);
    REQUIRE(big.size() == 1);
    CHECK(big[0].condition2_holds);
    CHECK(*big[0].p_divides_h);

    auto all = pure_cubic_scan(5, 499, h);
    CHECK(all.size() == 93);
    for (const auto& r : all) {
        CAPTURE(r.p);
        CHECK(r.condition2_holds);
        CHECK(r.shape == (r.p % 3 == 1 ? SplitShape::SplitCompletely : SplitShape::OneTwo));
        REQUIRE(r.p_divides_h);
        CHECK_FALSE(*r.p_divides_h);
    }
    // the split-completely shortcut agrees with the prime-by-prime test
    for (auto p : primes_between(7, 200)) {
        if (p % 3 != 1)
            continue;
        auto inst = make_pure_cubic(p);
        CHECK(condition2_split_crt_check(inst.field, p, inst.unit));
    }
}

TEST_CASE("square divisors and squarefree parts")
{
    CHECK(largest_square_root_divisor(16) == 4);
    CHECK(largest_square_root_divisor(18) == 3);
    CHECK(largest_square_root_divisor(12) == 2);
    CHECK(largest_square_root_divisor(1) == 1);
    CHECK(squarefree_part(-24) == -6);
    CHECK(squarefree_part(-288) == -2);
    CHECK(squarefree_part(1) == 1);
    CHECK(field_discriminant(-6) == -24);
    CHECK(field_discriminant(-3) == -3);
    CHECK(field_discriminant(-1) == -4);
}

TEST_CASE("square-divisor scan")
{
    auto c = square_divisor_scan(100, 1);
    bool has17 = false;
    for (const auto& x : c) {
        if (x.p == 17) {
            has17 = true;
            CHECK(x.n == 4);
            CHECK(x.m == 3);
        }
        CHECK(x.p % 4 == 1);
        CHECK(x.n % 2 == 0);
        CHECK((x.p - 1) % (x.n * x.n) == 0);
        CHECK((x.p + 1) % (x.m * x.m) == 0);
        CHECK(static_cast<double>(x.n) > std::log(static_cast<double>(x.p)));
        CHECK(static_cast<double>(x.m) > std::log(static_cast<double>(x.p)));
    }
    CHECK(has17);
    for (const auto& x : c)
        CHECK(x.p != 13);
    // exhaustive recheck below 100
    std::size_t expected = 0;
    for (auto p : primes_between(5, 100)) {
        if (p % 4 != 1)
            continue;
        std::uint64_t n = 1, m = 1;
        for (std::uint64_t k = 1; k * k <= p + 1; ++k) {
            if ((p - 1) % (k * k) == 0)
                n = k;
            if ((p + 1) % (k * k) == 0)
                m = k;
        }
        double t = std::log(static_cast<double>(p));
        expected += (n > t && m > t);
    }
    CHECK(c.size() == expected);
    CHECK_THROWS_AS(square_divisor_scan(12, 1), InputError);
    CHECK_THROWS_AS(square_divisor_scan(20'000'000, 1), InputError);
}

TEST_CASE("square-divisor scan with a tiny exponent")
{
    for (const auto& x : square_divisor_scan(500, 1e-9)) {
        CHECK(x.n >= 2);
        CHECK(x.m >= 2);
    }
}

TEST_CASE("imaginary quadratic class numbers")
{
    CHECK(imag_quadratic_class_number(-1) == 1);
    CHECK(imag_quadratic_class_number(-3) == 1);
    CHECK(imag_quadratic_class_number(-6) == 2);
    CHECK(imag_quadratic_class_number(-163) == 1);
    CHECK(imag_quadratic_class_number(-5) == 2);
    CHECK(imag_quadratic_class_number(-23) == 3);
    CHECK_THROWS_AS(imag_quadratic_class_number(-8), InvariantViolation);
    CHECK_THROWS_AS(imag_quadratic_class_number(5), InvariantViolation);
}

TEST_CASE("reduced forms agree with the Dirichlet class number formula")
{
    int fundamentals = 0;
    for (std::int64_t D = -3; D >= -200; --D) {
        if (!is_fundamental(D))
            continue;
        ++fundamentals;
        CAPTURE(D);
        CHECK(class_number_of_discriminant(D) == dirichlet_class_number(D));
    }
    CHECK(fundamentals == 62);
}

TEST_CASE("class number bound")
{
    CHECK(class_number_bound(24, 2) == doctest::Approx(3.5914).epsilon(1e-3));
    CHECK(class_number_bound(3, 6) >= 1.0);
    CHECK(class_number_bound(4, 4) >= 1.0);
    CHECK_THROWS_AS(class_number_bound(2, 2), DomainError);
    for (std::int64_t r = -1; r >= -400; --r) {
        if (squarefree_part(r) != r)
            continue;
        std::int64_t D = field_discriminant(r);
        CHECK(static_cast<double>(imag_quadratic_class_number(r)) <=
              class_number_bound(static_cast<std::uint64_t>(-D), roots_of_unity_count(r)));
    }
}

TEST_CASE("kuroda check")
{
    auto a = kuroda_check(1, 2, 1, 1);
    CHECK(a.q == 1);
    CHECK(a.valid);
    auto b = kuroda_check(1, 1, 1, 1);
    CHECK(b.q == 2);
    CHECK(b.valid);
    auto c = kuroda_check(1, 3, 1, 1);
    CHECK(c.q == Rational(2, 3));
    CHECK_FALSE(c.valid);
    CHECK_THROWS_AS(kuroda_check(0, 1, 1, 1), DomainError);

    auto rows = load_kuroda_rows(data_path("kuroda_biquadratic.csv"));
    CHECK(rows.size() == 45);
    for (const auto& r : rows) {
        CAPTURE(r.p);
        CHECK(kuroda_check(r.h1, r.h2, r.h3, r.hL).valid);
        // h2 is the imaginary quadratic field Q(sqrt(1 - p^2))
        auto p = static_cast<std::int64_t>(r.p);
        CHECK(Integer(static_cast<unsigned long>(imag_quadratic_class_number(squarefree_part(1 - p * p)))) == r.h2);
    }
}

TEST_CASE("ggc scan")
{
    auto c = ggc_scan(1000, 1);
    REQUIRE_FALSE(c.empty());
    bool has17 = false;
    for (const auto& x : c) {
        if (x.p == 17) {
            has17 = true;
            CHECK(x.radicand == -2);
            CHECK(x.h_k2 == 1);
            CHECK(x.ggc_holds);
        }
        CHECK(x.ggc_holds == (x.h_k2 % x.p != 0));
        CHECK(x.bound_ok);
    }
    CHECK(has17);
}
