#pragma once

#include "prat/numberfield.hpp"

namespace prat::testing {

// x^3 - 4x + 27, h = 3, O_k = Z[alpha]
inline IntPoly split_cubic_poly() { return IntPoly{27, -4, 0, 1}; }
inline std::vector<Integer> split_cubic_unit() { return {-3280, -3462, -729}; }
// g = -835 + 265a - 77(a^2 - 3) = -604 + 265a - 77a^2, generator of (2, a+1)^3
inline std::vector<Integer> split_cubic_g() { return {-604, 265, -77}; }

// x^4 - 2x^2 + 3, h = 1
inline IntPoly inert_quartic_poly() { return IntPoly{3, 0, -2, 0, 1}; }
inline std::vector<Integer> inert_quartic_unit() { return {-2, -1, 1, 1}; }

inline FieldElement element(const NumberField& K, std::vector<Integer> power, Integer den = 1)
{
    return K.from_power(power, den);
}

}  // namespace prat::testing

#include "prat/harness.hpp"

#include <doctest.h>

#include <string>

namespace prat::testing {

inline std::string data_path(const std::string& name) { return std::string(PRAT_DATA_DIR) + "/" + name; }

inline std::vector<PreparedField> load_fields(const std::string& name)
{
    auto res = load_records(data_path(name), RecordFormat::Csv);
    REQUIRE(res.skipped.empty());
    return res.fields;
}

inline const PreparedField& by_label(const std::vector<PreparedField>& fs, const std::string& label)
{
    for (const auto& f : fs) {
        if (f.record.label == label)
            return f;
    }
    FAIL("no record " << label);
    return fs.front();
}

}  // namespace prat::testing
