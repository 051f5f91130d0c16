#pragma once

#include "prat/numberfield.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prat {

/// Fundamental unit (integral coordinates over K's basis) and torsion data.
struct UnitData {
    FieldElement epsilon;
    int torsion_order = 2;
    std::optional<FieldElement> torsion_generator;
};

/// Checks that epsilon is an integral unit (norm +-1) and not a root of
/// unity, and that the torsion generator has exact order torsion_order.
/// Throws InputError with the failing condition.
void validate_unit(const NumberField& K, const UnitData& unit);

struct GuardResult {
    bool ok = true;
    std::string reason;  // empty when ok
};

/// Shapes the unit-congruence criterion does not cover: p = 2, ramified
/// p = 3, totally ramified 5 in a quartic field, and the cubic shape P1^2 P2
/// below p = 5.
GuardResult applicability_guard(const NumberField& K, const Integer& p, const std::vector<PrimeFactor>& factors);

struct PrimeCongruence {
    PrimeFactor prime;
    Integer exponent;     // p^f - 1
    Integer modulus;      // p^(e+1)
    FieldElement residue; // epsilon^exponent, coordinates in [0, p^(e+1))
    bool congruent = false;  // epsilon^exponent = 1 mod P^(e+1) (for every torsion twist)
    bool fermat_ok = false;  // epsilon^exponent = 1 mod P
};

struct Condition2Report {
    Integer p;
    std::vector<PrimeCongruence> per_prime;
    std::optional<int> witness;  // label of the first non-congruent prime
    bool holds = false;
};

/// Searches the primes over p for one with epsilon^(p^f - 1) != 1 mod P^(e+1).
/// For torsion order w > 2 a prime only counts as congruent when every
/// epsilon * zeta^j is congruent.
Condition2Report condition2(const NumberField& K, const Integer& p, const UnitData& unit);

/// epsilon^(p-1) != 1 mod p^2 O_K, for a cubic field in which p splits
/// completely. DomainError on any other shape.
bool condition2_split_crt_check(const NumberField& K, const Integer& p, const FieldElement& epsilon);

/// Whether epsilon^(p-1) = 1 mod P^2 and epsilon^(p^2-1) = 1 mod P^2 agree for
/// a degree-one unramified P.
bool degree_one_exponent_check(const NumberField& K, const Integer& p, const FieldElement& epsilon,
                              const PrimeFactor& prime);

}  // namespace prat
