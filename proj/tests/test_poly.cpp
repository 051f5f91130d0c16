#include "prat/errors.hpp"
#include "prat/padic.hpp"
#include "prat/poly.hpp"

#include <doctest.h>

#include <random>

using namespace prat;

namespace {

IntPoly mul_all(const std::vector<ModFactor>& fs, const Integer& p)
{
    ModPoly prod = ModPoly::constant(1, p);
    for (const auto& [g, e] : fs)
        for (int i = 0; i < e; ++i)
            prod = prod * g;
    return prod.lift();
}

bool has_root_mod_p(const ModPoly& g)
{
    for (Integer r = 0; r < g.modulus(); ++r)
        if (g.eval(r) == 0)
            return true;
    return false;
}

bool has_quadratic_factor(const ModPoly& g)
{
    const Integer& p = g.modulus();
    for (Integer a = 0; a < p; ++a)
        for (Integer b = 0; b < p; ++b) {
            ModPoly q({b, a, 1}, p);
            if ((g % q).is_zero())
                return true;
        }
    return false;
}

// Exact rational partial sum of the log series, reduced mod p^k.
Integer log_oracle(const Integer& u, const Integer& p, int k)
{
    Rational x(u - 1);
    Rational sum = 0, power = 1;
    for (int m = 1; m <= 6 * k + 20; ++m) {
        power *= x;
        Rational term = power / m;
        sum += (m % 2 == 1) ? term : -term;
    }
    Integer mk = ipow(p, k);
    return mod(sum.get_num() * inverse_mod(sum.get_den(), mk), mk);
}

}  // namespace

TEST_CASE("discriminant of the worked examples")
{
    CHECK(discriminant(IntPoly{27, -4, 0, 1}) == -19427);
    const long p = 5;
    CHECK(discriminant(IntPoly{1 - p * p * p, 0, 0, 1}) == -27 * (1 - p * p * p) * (1 - p * p * p));
    CHECK(discriminant(IntPoly{0, 0, 0, 1}) == 0);
    CHECK(discriminant(IntPoly{-1, 0, 1}) == 4);
    CHECK_THROWS_AS(discriminant(IntPoly{1, 1}), DomainError);
}

TEST_CASE("resultant discriminant matches -4a^3 - 27b^2 on random depressed cubics")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        long a = dist(rng), b = dist(rng);
        Integer A = a, B = b;
        CHECK(discriminant(IntPoly{b, a, 0, 1}) == -4 * A * A * A - 27 * B * B);
    }
}

TEST_CASE("factor_mod_p examples")
{
    auto fs = factor_mod_p(IntPoly{27, -4, 0, 1}, 3);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].factor == ModPoly({0, 1}, 3));   // x
    CHECK(fs[1].factor == ModPoly({-1, 1}, 3));  // x - 1
    CHECK(fs[2].factor == ModPoly({1, 1}, 3));   // x + 1
    for (const auto& f : fs)
        CHECK(f.multiplicity == 1);

    auto quartic = factor_mod_p(IntPoly{3, 0, -2, 0, 1}, 5);
    REQUIRE(quartic.size() == 1);
    CHECK(quartic[0].factor.degree() == 4);

    auto lin = factor_mod_p(IntPoly{0, 1}, 7);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].factor == ModPoly({0, 1}, 7));

    // 2 in x^3 - 4x + 27: one linear and one quadratic factor
    auto two = factor_mod_p(IntPoly{27, -4, 0, 1}, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].factor == ModPoly({1, 1}, 2));
    CHECK(two[1].factor == ModPoly({1, 1, 1}, 2));

    CHECK_THROWS_AS(factor_mod_p(IntPoly{5, 10}, 5), DomainError);
}

TEST_CASE("factor_mod_p handles repeated and inseparable factors")
{
    // (x+1)^3 (x^2+1) over F_3: (x+1)^3 = x^3 + 1 has zero derivative
    IntPoly f = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{1, 0, 1};
    auto fs = factor_mod_p(f, 3);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == ModPoly({1, 1}, 3));
    CHECK(fs[0].multiplicity == 3);
    CHECK(fs[1].factor == ModPoly({1, 0, 1}, 3));
    CHECK(fs[1].multiplicity == 1);
}

TEST_CASE("factor_mod_p invariants on random polynomials")
{
    std::mt19937_64 rng(777);
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 101};
    for (int trial = 0; trial < 600; ++trial) {
        Integer p = primes[trial % 8];
        // build from random low-degree pieces so repeated factors occur
        IntPoly f{1};
        int pieces = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < pieces; ++k) {
            int d = 1 + static_cast<int>(rng() % 3);
            std::vector<Integer> cs;
            for (int i = 0; i < d; ++i)
                cs.emplace_back(static_cast<long>(rng() % 50) - 25);
            cs.emplace_back(1);
            f = f * IntPoly(cs);
        }
        auto fs = factor_mod_p(f, p);
        ModPoly fp = ModPoly::reduce(f, p).monic();
        CHECK(ModPoly::reduce(mul_all(fs, p), p) == fp);
        int total = 0;
        for (const auto& [g, e] : fs) {
            total += g.degree() * e;
            CHECK(g.leading() == 1);
            if (g.degree() >= 2 && g.degree() <= 3)
                CHECK_FALSE(has_root_mod_p(g));
            if (g.degree() == 4)
                CHECK_FALSE(has_quadratic_factor(g));
        }
        CHECK(total == fp.degree());
        // output order is deterministic
        auto again = factor_mod_p(f, p);
        REQUIRE(again.size() == fs.size());
        for (std::size_t i = 0; i < fs.size(); ++i)
            CHECK(again[i].factor == fs[i].factor);
    }
}

TEST_CASE("count_real_roots")
{
    CHECK(count_real_roots(IntPoly{27, -4, 0, 1}) == 1);
    CHECK(count_real_roots(IntPoly{3, 0, -2, 0, 1}) == 0);
    CHECK(count_real_roots(IntPoly{-1, 0, 1}) == 2);
    CHECK(count_real_roots(IntPoly{0, -1, 0, 1}) == 3);
    CHECK_THROWS_AS(count_real_roots(IntPoly{0, 0, -1, 1}), DomainError);

    // cubic oracle: sign of the discriminant decides 1 vs 3 real roots
    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        IntPoly f{static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 201) - 100,
                  static_cast<long>(rng() % 21) - 10, 1};
        Integer d = discriminant(f);
        if (d == 0)
            continue;
        CHECK(count_real_roots(f) == (d > 0 ? 3 : 1));
    }
}

TEST_CASE("hensel_lift_root")
{
    IntPoly f{27, -4, 0, 1};
    auto r = hensel_lift_root(f, 3, 1, 2);
    CHECK(r.value == 7);
    CHECK(r.precision == 2);
    CHECK(f.eval(7) == 342);

    CHECK(hensel_lift_root(IntPoly{-5, 1}, 3, 2, 4).value == 5);

    // brute force over the lifts {0, 3, 6} of r0 = 0
    Integer unique = -1;
    int hits = 0;
    for (long c : {0, 3, 6}) {
        if (mod(f.eval(c), 9) == 0) {
            unique = c;
            ++hits;
        }
    }
    REQUIRE(hits == 1);
    CHECK(hensel_lift_root(f, 3, 0, 2).value == unique);

    CHECK_THROWS_AS(hensel_lift_root(IntPoly{0, 0, 1}, 3, 0, 3), DomainError);
    CHECK_THROWS_AS(hensel_lift_root(f, 5, 1, 3), DomainError);  // f(1) = 24
}

TEST_CASE("hensel lifts reduce to r0 and are roots mod p^k")
{
    std::mt19937_64 rng(4242);
    int lifted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        IntPoly f{static_cast<long>(rng() % 101) - 50, static_cast<long>(rng() % 101) - 50,
                  static_cast<long>(rng() % 11) - 5, 1};
        Integer p = std::vector<long>{3, 5, 7, 11, 13}[trial % 5];
        for (Integer r0 = 0; r0 < p; ++r0) {
            if (mod(f.eval(r0), p) != 0 || mod(f.derivative().eval(r0), p) == 0)
                continue;
            int k = 1 + static_cast<int>(rng() % 8);
            auto r = hensel_lift_root(f, p, r0, k);
            CHECK(mod(r.value, p) == r0);
            CHECK(mod(f.eval(r.value), ipow(p, k)) == 0);
            ++lifted;
        }
    }
    CHECK(lifted > 100);
}

TEST_CASE("padic_log examples and errors")
{
    for (long p : {3, 5, 7, 13}) {
        auto l = padic_log({1 + p, 2, p});
        CHECK(l.value == p);
        CHECK(padic_log({1, 5, p}).value == 0);
    }
    CHECK(padic_log({4, 2, 3}).valuation() == 1);
    CHECK_THROWS_AS(padic_log({2, 3, 3}), DomainError);
    CHECK_THROWS_AS(padic_log({3, 3, 2}), DomainError);
    CHECK_THROWS_AS(padic_log({4, 1, 3}), DomainError);
}

TEST_CASE("padic_log agrees with the exact rational series")
{
    std::mt19937_64 rng(31337);
    for (long p : {3, 5, 7, 11}) {
        for (int k = 2; k <= 8; ++k) {
            Integer mk = ipow(p, k);
            for (int i = 0; i < 10; ++i) {
                Integer u = mod(1 + p * Integer(static_cast<long>(rng() % 100000)), mk);
                CHECK(padic_log({u, k, p}).value == log_oracle(u, p, k));
            }
        }
    }
}

TEST_CASE("padic_log is additive and preserves valuation")
{
    std::mt19937_64 rng(2024);
    const long primes[] = {3, 5, 7, 11, 13};
    for (int i = 0; i < 200; ++i) {
        long p = primes[i % 5];
        int k = 2 + static_cast<int>(rng() % 7);
        Integer mk = ipow(p, k);
        Integer u = mod(1 + p * Integer(static_cast<long>(rng())), mk);
        Integer v = mod(1 + p * Integer(static_cast<long>(rng())), mk);
        PadicApprox lu = padic_log({u, k, p});
        PadicApprox lv = padic_log({v, k, p});
        PadicApprox luv = padic_log({u * v, k, p});
        CHECK(luv == lu + lv);
    }
    for (int i = 0; i < 200; ++i) {
        long p = primes[i % 5];
        int t = 1 + static_cast<int>(rng() % 4);
        int k = t + 2 + static_cast<int>(rng() % 3);
        Integer w = 1 + static_cast<long>(rng() % 1000);
        if (w % p == 0)
            w += 1;
        Integer u = 1 + ipow(p, t) * w;
        CHECK(padic_log({u, k, p}).valuation() == t);
    }
}
