#include "prat/record.hpp"

#include "prat/errors.hpp"

namespace prat {

namespace {

FieldElement power_element(const NumberField& K, const std::vector<Integer>& coeffs, const Integer& den,
                           const std::string& what)
{
    if (static_cast<int>(coeffs.size()) != K.degree())
        throw InputError(what + " needs " + std::to_string(K.degree()) + " coefficients");
    if (den <= 0)
        throw InputError(what + " denominator must be positive");
    return K.from_power(coeffs, den);
}

}  // namespace

PreparedField prepare(const FieldRecord& record)
{
    NumberField K = [&] {
        try {
            return make_field(record.poly, record.basis);
        } catch (const DomainError& e) {
            throw InputError(e.what());
        }
    }();
    if (record.class_number && *record.class_number <= 0)
        throw InputError("class number must be positive");

    UnitData unit;
    unit.epsilon = power_element(K, record.unit, record.unit_den, "unit");
    unit.torsion_order = record.torsion_order;
    if (record.torsion_gen)
        unit.torsion_generator = power_element(K, *record.torsion_gen, record.torsion_gen_den, "torsion generator");
    validate_unit(K, unit);

    if (record.aux) {
        if (record.aux->q < 2 || !is_prime(record.aux->q))
            throw InputError("auxiliary q must be prime");
        power_element(K, record.aux->power_generator, 1, "auxiliary generator");
    }
    return PreparedField{record, std::move(K), std::move(unit)};
}

}  // namespace prat
