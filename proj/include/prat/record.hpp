#pragma once

#include "prat/numberfield.hpp"
#include "prat/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prat {

/// Auxiliary prime ideal Q = (q, generator_poly(alpha)) together with a
/// generator of Q^p in the power basis.
struct AuxIdealData {
    Integer q;
    IntPoly generator_poly;
    std::vector<Integer> power_generator;

    friend bool operator==(const AuxIdealData&, const AuxIdealData&) = default;
};

/// One field as stored in a fixture file. Coefficient vectors are low degree
/// first; unit and torsion generator are power-basis coordinates over a
/// common denominator.
struct FieldRecord {
    std::string label;
    IntPoly poly;
    std::optional<Integer> class_number;
    std::vector<Integer> unit;
    Integer unit_den = 1;
    int torsion_order = 2;
    std::optional<RatMatrix> basis;
    std::optional<AuxIdealData> aux;
    std::optional<std::vector<Integer>> torsion_gen;
    Integer torsion_gen_den = 1;

    friend bool operator==(const FieldRecord&, const FieldRecord&) = default;
};

/// A record with its field built and its unit validated.
struct PreparedField {
    FieldRecord record;
    NumberField field;
    UnitData unit;
};

/// Builds the field, converts the unit to basis coordinates and validates it.
/// Throws InputError on any inconsistency.
PreparedField prepare(const FieldRecord& record);

}  // namespace prat
