#include "prat/torsion.hpp"

#include "prat/errors.hpp"

namespace prat {

namespace {

bool is_one(const NumberField& K, const FieldElement& a) { return a == K.one(); }

FieldElement power(const NumberField& K, const FieldElement& a, int k)
{
    FieldElement r = K.one();
    for (int i = 0; i < k; ++i)
        r = mul(K, r, a);
    return r;
}

// x - 1 in P^k, for x given with coordinates mod anything divisible by p^k.
bool congruent_to_one(const NumberField& K, const IdealHNF& Pk, const FieldElement& x)
{
    return ideal_contains(K, Pk, sub(K, x, K.one()));
}

}  // namespace

void validate_unit(const NumberField& K, const UnitData& unit)
{
    const FieldElement& eps = unit.epsilon;
    if (static_cast<int>(eps.coords.size()) != K.degree())
        throw InputError("unit has the wrong number of coordinates");
    if (!eps.is_integral())
        throw InputError("unit is not integral over the field's basis");
    Rational n = norm(K, eps);
    if (n != 1 && n != -1)
        throw InputError("unit has norm " + n.get_str() + ", expected +-1");
    // roots of unity in fields of degree <= 4 have order dividing 8, 10 or 12
    for (int k = 1; k <= 12; ++k) {
        if (is_one(K, power(K, eps, k)))
            throw InputError("unit is a root of unity");
    }
    if (unit.torsion_order < 2 || unit.torsion_order % 2 != 0)
        throw InputError("torsion order must be even and at least 2");
    if (unit.torsion_generator) {
        const FieldElement& z = *unit.torsion_generator;
        if (static_cast<int>(z.coords.size()) != K.degree() || !z.is_integral())
            throw InputError("torsion generator is not an integral element");
        const int w = unit.torsion_order;
        if (!is_one(K, power(K, z, w)))
            throw InputError("torsion generator does not have order dividing w");
        for (int d = 1; d < w; ++d) {
            if (w % d == 0 && is_one(K, power(K, z, d)))
                throw InputError("torsion generator is not primitive");
        }
    } else if (unit.torsion_order > 2) {
        throw InputError("torsion order > 2 requires a torsion generator");
    }
}

GuardResult applicability_guard(const NumberField& K, const Integer& p, const std::vector<PrimeFactor>& factors)
{
    if (p == 2)
        return {false, "p = 2 is not covered"};
    bool ramified = false;
    for (const auto& pf : factors)
        ramified = ramified || pf.e > 1;
    if (p == 3 && ramified)
        return {false, "p = 3 is ramified"};
    if (K.degree() == 4 && p == 5 && factors.size() == 1 && factors[0].e == 4)
        return {false, "5 is totally ramified"};
    if (K.degree() == 3 && p < 5 && factors.size() == 2) {
        for (const auto& pf : factors) {
            if (pf.e == 2)
                return {false, "shape P1^2 P2 needs p >= 5"};
        }
    }
    return {};
}

Condition2Report condition2(const NumberField& K, const Integer& p, const UnitData& unit)
{
    if (p == 2)
        throw DomainError("condition2: p must be odd");
    if (!unit.epsilon.is_integral())
        throw DomainError("condition2: unit must be integral");
    if (unit.torsion_order > 2 && !unit.torsion_generator)
        throw DomainError("condition2: torsion order > 2 requires a torsion generator");

    std::vector<FieldElement> twists{unit.epsilon};
    if (unit.torsion_order > 2) {
        FieldElement zj = K.one();
        for (int j = 1; j < unit.torsion_order; ++j) {
            zj = mul(K, zj, *unit.torsion_generator);
            twists.push_back(mul(K, unit.epsilon, zj));
        }
    }

    Condition2Report report;
    report.p = p;
    for (const auto& pf : split_prime(K, p)) {
        PrimeCongruence entry;
        entry.prime = pf;
        entry.exponent = ipow(p, static_cast<unsigned long>(pf.f)) - 1;
        entry.modulus = ipow(p, static_cast<unsigned long>(pf.e + 1));
        const IdealHNF P = ideal_from_two_generators(K, p, pf.generator);
        const IdealHNF Pk = ideal_power(K, P, pf.e + 1);

        entry.congruent = true;
        for (std::size_t j = 0; j < twists.size(); ++j) {
            FieldElement r = pow_mod(K, twists[j], entry.exponent, entry.modulus);
            if (j == 0) {
                entry.residue = r;
                entry.fermat_ok = congruent_to_one(K, P, r);
            }
            if (!congruent_to_one(K, Pk, r)) {
                entry.congruent = false;
                break;
            }
        }
        if (!entry.congruent && !report.witness)
            report.witness = pf.label;
        report.per_prime.push_back(std::move(entry));
    }
    report.holds = report.witness.has_value();
    return report;
}

bool condition2_split_crt_check(const NumberField& K, const Integer& p, const FieldElement& epsilon)
{
    if (K.degree() != 3)
        throw DomainError("condition2_split_crt_check: cubic fields only");
    auto factors = split_prime(K, p);
    if (classify_cubic(factors) != SplitShape::SplitCompletely)
        throw DomainError("condition2_split_crt_check: p does not split completely");
    const Integer p2 = p * p;
    FieldElement r = pow_mod(K, epsilon, p - 1, p2);
    return r != reduce_mod(K.one(), p2);
}

bool degree_one_exponent_check(const NumberField& K, const Integer& p, const FieldElement& epsilon,
                              const PrimeFactor& prime)
{
    if (prime.e != 1 || prime.f != 1)
        throw DomainError("degree_one_exponent_check: prime must have e = f = 1");
    const Integer p2 = p * p;
    const IdealHNF P2 = ideal_power(K, ideal_from_two_generators(K, p, prime.generator), 2);
    bool small = congruent_to_one(K, P2, pow_mod(K, epsilon, p - 1, p2));
    bool large = congruent_to_one(K, P2, pow_mod(K, epsilon, p2 - 1, p2));
    return small == large;
}

}  // namespace prat
