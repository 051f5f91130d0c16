#include "fixtures.hpp"

#include "prat/errors.hpp"
#include "prat/torsion.hpp"

#include <doctest.h>

using namespace prat;
using namespace prat::testing;

namespace {

struct Sample {
    IntPoly poly;
    std::vector<Integer> unit;
};

// fields with Z[alpha] = O_K away from 2, 3 and a fundamental unit in Z[alpha]
std::vector<Sample> samples()
{
    return {
        {split_cubic_poly(), split_cubic_unit()},
        {IntPoly{-9, 1, -1, 1}, {16, -7, 0}},      // x^3 - x^2 + x - 9
        {IntPoly{1, 5, -1, 1}, {0, -1, 0}},        // x^3 - x^2 + 5x + 1
        {IntPoly{5, 1, -1, 1}, {-2, 1, 2}},        // x^3 - x^2 + x + 5
        {IntPoly{-26, 0, 0, 1}, {-3, 1, 0}},       // x^3 - 26
        {inert_quartic_poly(), inert_quartic_unit()},
        {IntPoly{2, 0, 4, 0, 1}, {1, 0, 1, 0}},    // x^4 + 4x^2 + 2
    };
}

UnitData unit_of(const NumberField& K, const std::vector<Integer>& coeffs)
{
    return {K.from_power(coeffs), 2, std::nullopt};
}

}  // namespace

TEST_CASE("applicability_guard")
{
    auto z10 = make_field(IntPoly{1, -1, 1, -1, 1});
    auto g = applicability_guard(z10, 5, split_prime(z10, 5));
    CHECK_FALSE(g.ok);
    CHECK(g.reason == "5 is totally ramified");

    auto K = make_field(split_cubic_poly());
    CHECK(applicability_guard(K, 3, split_prime(K, 3)).ok);
    CHECK_FALSE(applicability_guard(K, 2, split_prime(K, 2)).ok);

    // x^3 - 3x + 3... ramified 3: Eisenstein at 3
    auto eis = make_field(IntPoly{3, -3, 0, 1});
    CHECK_FALSE(applicability_guard(eis, 3, split_prime(eis, 3)).ok);
}

TEST_CASE("validate_unit")
{
    auto K = make_field(split_cubic_poly());
    CHECK_NOTHROW(validate_unit(K, unit_of(K, split_cubic_unit())));
    CHECK_THROWS_AS(validate_unit(K, unit_of(K, {2, 0, 0})), InputError);
    CHECK_THROWS_AS(validate_unit(K, unit_of(K, {-1, 0, 0})), InputError);
    auto z8 = make_field(IntPoly{1, 0, 0, 0, 1});
    UnitData ok{z8.from_power(std::vector<Integer>{1, 1, 1, 0}), 8, z8.alpha_power(1)};
    CHECK_NOTHROW(validate_unit(z8, ok));
    UnitData not_primitive{ok.epsilon, 8, z8.alpha_power(2)};
    CHECK_THROWS_AS(validate_unit(z8, not_primitive), InputError);
    UnitData missing{ok.epsilon, 8, std::nullopt};
    CHECK_THROWS_AS(validate_unit(z8, missing), InputError);
}

TEST_CASE("condition2 reproduces the inert quartic example")
{
    auto L = make_field(inert_quartic_poly());
    auto rep = condition2(L, 5, unit_of(L, inert_quartic_unit()));
    REQUIRE(rep.per_prime.size() == 1);
    const auto& e = rep.per_prime[0];
    CHECK(e.prime.f == 4);
    CHECK(e.exponent == 624);
    CHECK(e.modulus == 25);
    CHECK(e.residue == FieldElement({1, 5, 0, 15}));
    CHECK_FALSE(e.congruent);
    CHECK(e.fermat_ok);
    CHECK(rep.holds);
    CHECK(rep.witness == 1);
}

TEST_CASE("condition2 on the split cubic example")
{
    auto K = make_field(split_cubic_poly());
    auto rep = condition2(K, 3, unit_of(K, split_cubic_unit()));
    REQUIRE(rep.per_prime.size() == 3);
    CHECK(rep.holds);
    // eps^2 = 1 + 3(a + 2) mod 9: a + 2 is a unit at P1 (a = 0) and P3 (a = -1), not at P2
    CHECK_FALSE(rep.per_prime[0].congruent);
    CHECK(rep.per_prime[1].congruent);
    CHECK_FALSE(rep.per_prime[2].congruent);
    CHECK(rep.witness == 1);
    CHECK(condition2_split_crt_check(K, 3, K.from_power(split_cubic_unit())));
}

TEST_CASE("condition2 fails on a tabulated exception")
{
    auto K = make_field(IntPoly{-9, 1, -1, 1});
    auto rep = condition2(K, 13, unit_of(K, {16, -7, 0}));
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(rep.witness.has_value());
    for (const auto& e : rep.per_prime)
        CHECK(e.congruent);
}

TEST_CASE("split CRT check negative branch")
{
    auto K = make_field(split_cubic_poly());
    // 1 + 9a is congruent to 1 mod 9
    CHECK_FALSE(condition2_split_crt_check(K, 3, K.from_power(std::vector<Integer>{1, 9, 0})));
    CHECK_THROWS_AS(condition2_split_crt_check(K, 2, K.from_power(split_cubic_unit())), DomainError);
    UnitData fake{K.from_power(std::vector<Integer>{1, 9, 0}), 2, std::nullopt};
    CHECK_FALSE(condition2(K, 3, fake).holds);
}

TEST_CASE("degree-one exponent check on the split example")
{
    auto K = make_field(split_cubic_poly());
    for (const auto& pf : split_prime(K, 3))
        CHECK(degree_one_exponent_check(K, 3, K.from_power(split_cubic_unit()), pf));
    auto two = split_prime(K, 2);
    CHECK_THROWS_AS(degree_one_exponent_check(K, 3, K.from_power(split_cubic_unit()), two[1]), DomainError);
}

TEST_CASE("condition2 invariants over sample fields")
{
    auto primes = primes_between(3, 200);
    int evaluated = 0, crt = 0, p24 = 0;
    for (const auto& s : samples()) {
        auto K = make_field(s.poly);
        UnitData u = unit_of(K, s.unit);
        validate_unit(K, u);
        UnitData inv{inverse(K, u.epsilon), 2, std::nullopt};
        UnitData neg{negate(u.epsilon), 2, std::nullopt};
        for (auto p64 : primes) {
            Integer p = p64;
            std::vector<PrimeFactor> fs;
            try {
                fs = split_prime(K, p);
            } catch (const SplittingUndetermined&) {
                continue;
            }
            if (!applicability_guard(K, p, fs).ok)
                continue;
            auto rep = condition2(K, p, u);
            ++evaluated;
            for (const auto& e : rep.per_prime)
                CHECK(e.fermat_ok);
            CHECK(rep.holds == rep.witness.has_value());
            CHECK(condition2(K, p, inv).holds == rep.holds);
            CHECK(condition2(K, p, neg).holds == rep.holds);
            auto again = condition2(K, p, u);
            REQUIRE(again.per_prime.size() == rep.per_prime.size());
            for (std::size_t i = 0; i < rep.per_prime.size(); ++i)
                CHECK(again.per_prime[i].residue == rep.per_prime[i].residue);
            if (K.degree() == 3 && classify_cubic(fs) == SplitShape::SplitCompletely) {
                CHECK(condition2_split_crt_check(K, p, u.epsilon) == rep.holds);
                ++crt;
            }
            for (const auto& pf : fs) {
                if (pf.e == 1 && pf.f == 1) {
                    CHECK(degree_one_exponent_check(K, p, u.epsilon, pf));
                    ++p24;
                }
            }
        }
    }
    CHECK(evaluated > 250);
    CHECK(crt > 10);
    CHECK(p24 > 100);
}
