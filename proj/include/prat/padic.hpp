#pragma once

#include "prat/integer.hpp"
#include "prat/poly.hpp"

namespace prat {

/// An element of Z_p known modulo p^precision, stored as its least
/// nonnegative residue.
struct PadicApprox {
    Integer value;
    int precision = 1;
    Integer prime;

    PadicApprox() = default;
    PadicApprox(Integer v, int k, Integer p);

    Integer modulus() const { return ipow(prime, static_cast<unsigned long>(precision)); }
    /// v_p(value), or `precision` when the value is 0 at this precision.
    int valuation() const;
    bool is_zero() const { return value == 0; }

    friend bool operator==(const PadicApprox&, const PadicApprox&) = default;
};

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);

/// Newton lift of a simple root r0 of f mod p to a root mod p^k.
PadicApprox hensel_lift_root(const IntPoly& f, const Integer& p, const Integer& r0, int k);

/// Truncated logarithm series of a principal unit u = 1 mod p, p odd,
/// precision >= 2. Every dropped term has valuation >= precision.
PadicApprox padic_log(const PadicApprox& u);

/// Number of series terms kept by padic_log at precision k.
long padic_log_terms(const Integer& p, int k);

}  // namespace prat
