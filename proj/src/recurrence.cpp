#include "prat/recurrence.hpp"

#include "prat/errors.hpp"

#include <array>

namespace prat {

namespace {

using Mat3 = std::array<std::array<Integer, 3>, 3>;

Mat3 mat_mul(const Mat3& a, const Mat3& b, const Integer& m)
{
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Integer s = 0;
            for (int k = 0; k < 3; ++k)
                s += a[i][k] * b[k][j];
            r[i][j] = mod(s, m);
        }
    return r;
}

}  // namespace

IntPoly RecurrenceSpec::companion() const { return IntPoly(std::vector<Integer>{-a0, -a1, -a2, 1}); }

RecurrenceSpec spec_from_unit(const NumberField& K, const FieldElement& epsilon)
{
    if (K.degree() != 3)
        throw DomainError("recurrence: cubic fields only");
    IntPoly c = characteristic_poly(K, epsilon);
    // a cubic field has no intermediate fields, so a degree drop means epsilon is rational
    if (discriminant(c) == 0)
        throw DomainError("recurrence: unit does not generate the field");
    return {-c.coeff(2), -c.coeff(1), -c.coeff(0)};
}

Integer f_index_mod(const RecurrenceSpec& spec, const Integer& n, const Integer& m)
{
    if (m <= 0)
        throw DomainError("f_index_mod: modulus must be positive");
    if (n < 0)
        throw DomainError("f_index_mod: index must be nonnegative");
    // state (F_{k+2}, F_{k+1}, F_k) -> (F_{k+3}, F_{k+2}, F_{k+1})
    Mat3 step{{{mod(spec.a2, m), mod(spec.a1, m), mod(spec.a0, m)}, {1, 0, 0}, {0, 1, 0}}};
    Mat3 acc{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (auto& row : acc)
        for (auto& x : row)
            x = mod(x, m);
    Integer e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            acc = mat_mul(acc, step, m);
        step = mat_mul(step, step, m);
        e >>= 1;
    }
    // (F_{n+2}, F_{n+1}, F_n) = acc * (1, 0, 0)
    return acc[2][0];
}

ScreenResult screen(const RecurrenceSpec& spec, const Integer& p, SplitShape shape)
{
    if (p < 3 || !is_prime(p))
        throw DomainError("screen: p must be an odd prime");
    ScreenResult r;
    if (discriminant(spec.companion()) % p == 0)
        return r;
    switch (shape) {
    case SplitShape::SplitCompletely: r.index = p - 1; break;
    case SplitShape::OneTwo: r.index = p * p - 1; break;
    case SplitShape::Inert: r.index = p * p * p - 1; break;
    default: throw DomainError("screen: splitting shape must be split, 1+2 or inert");
    }
    r.applicable = true;
    r.value = f_index_mod(spec, r.index, p * p);
    r.nonzero = r.value != 0;
    r.implied_witness = r.nonzero;
    return r;
}

ConsistencyReport cross_check(const NumberField& K, const FieldElement& epsilon, const RecurrenceSpec& spec,
                              const Integer& p)
{
    if (K.degree() != 3)
        throw DomainError("cross_check: cubic fields only");
    // f(epsilon) = 0, evaluated in K by Horner
    FieldElement acc(std::vector<Integer>(3, 0));
    for (int i = 3; i >= 0; --i)
        acc = add(K, mul(K, acc, epsilon), K.from_integer(spec.companion().coeff(i)));
    if (!acc.is_zero())
        throw InputError("cross_check: spec is not the unit's minimal polynomial");
    if (p == 2 || discriminant(spec.companion()) % p == 0)
        throw DomainError("cross_check: need p odd and prime to d(f)");
    ConsistencyReport rep;
    rep.shape = classify_cubic(split_prime(K, p));
    rep.screen = screen(spec, p, rep.shape);
    rep.witness = condition2(K, p, UnitData{epsilon, 2, std::nullopt}).holds;
    rep.violation = rep.screen.nonzero && !rep.witness;
    return rep;
}

}  // namespace prat
