#pragma once

#include "prat/numberfield.hpp"
#include "prat/torsion.hpp"

#include <optional>

namespace prat {

/// F_{n+3} = a2 F_{n+2} + a1 F_{n+1} + a0 F_n with F_0 = F_1 = 0, F_2 = 1.
struct RecurrenceSpec {
    Integer a2, a1, a0;

    /// x^3 - a2 x^2 - a1 x - a0
    IntPoly companion() const;
    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Spec of the minimal polynomial of a unit of a cubic field. DomainError
/// when the field is not cubic or the unit does not generate it.
RecurrenceSpec spec_from_unit(const NumberField& K, const FieldElement& epsilon);

/// F_n mod m by 3x3 companion-matrix powering.
Integer f_index_mod(const RecurrenceSpec& spec, const Integer& n, const Integer& m);

struct ScreenResult {
    bool applicable = false;  // false when p divides d(companion)
    Integer index;            // p - 1, p^2 - 1 or p^3 - 1
    Integer value;            // F_index mod p^2
    bool nonzero = false;
    bool implied_witness = false;
};

ScreenResult screen(const RecurrenceSpec& spec, const Integer& p, SplitShape shape);

struct ConsistencyReport {
    ScreenResult screen;
    SplitShape shape = SplitShape::Other;
    bool witness = false;    // condition2 holds for the unit at p
    bool violation = false;  // screen nonzero without a witness; never expected
};

/// Runs the screen and condition2 for the same (K, unit, p). InputError if
/// the spec is not the unit's minimal polynomial; DomainError if p is 2 or
/// divides the discriminant.
ConsistencyReport cross_check(const NumberField& K, const FieldElement& epsilon, const RecurrenceSpec& spec,
                              const Integer& p);

}  // namespace prat
