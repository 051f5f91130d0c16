#pragma once

#include "prat/integer.hpp"

#include <string>
#include <vector>

namespace prat {

/// Dense univariate polynomial over Z, coefficients low degree first.
/// The zero polynomial has degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Integer>& coeffs() const { return c_; }

    /// Coefficient of x^i; zero outside [0, degree].
    Integer coeff(int i) const;
    const Integer& leading() const;

    Integer eval(const Integer& x) const;
    IntPoly derivative() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

    /// "x^3 - 4*x + 27"
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Integer> c_;
};

/// Polynomial with coefficients in Z/mZ, stored reduced into [0, m).
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(std::vector<Integer> coeffs, Integer modulus);
    static ModPoly reduce(const IntPoly& f, const Integer& modulus);
    static ModPoly x(const Integer& modulus);
    static ModPoly constant(const Integer& c, const Integer& modulus);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Integer& modulus() const { return m_; }
    const std::vector<Integer>& coeffs() const { return c_; }
    Integer coeff(int i) const;
    const Integer& leading() const;

    /// Integer polynomial with the canonical representatives in [0, m).
    IntPoly lift() const;
    Integer eval(const Integer& x) const;
    ModPoly derivative() const;
    /// Scales to leading coefficient 1; needs an invertible leading coefficient.
    ModPoly monic() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

    /// Division with remainder; the divisor's leading coefficient must be a unit.
    static void divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
    friend ModPoly operator/(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator%(const ModPoly& a, const ModPoly& b);

    /// a^e mod g.
    static ModPoly powmod(const ModPoly& a, const Integer& e, const ModPoly& g);
    /// Monic gcd; modulus must be prime.
    static ModPoly gcd(ModPoly a, ModPoly b);

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Integer> c_;
    Integer m_ = 1;
};

struct ModFactor {
    ModPoly factor;
    int multiplicity = 1;
};

/// d(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Degree < 2 is a DomainError.
Integer discriminant(const IntPoly& f);

/// Sylvester-matrix resultant.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// Monic irreducible factors of f mod p with multiplicities: squarefree
/// decomposition, distinct-degree, then equal-degree splitting with
/// deterministic shift candidates. Output sorted by degree, then by the
/// coefficient vector of (-1)^d g(-x) (so linear factors x - r come in
/// increasing r).
std::vector<ModFactor> factor_mod_p(const IntPoly& f, const Integer& p);

/// Distinct real roots via a Sturm sequence. Non-squarefree input is a DomainError.
int count_real_roots(const IntPoly& f);

/// Parses "c0;c1;...;cn" (low degree first).
IntPoly parse_poly(const std::string& text);
std::string format_coeffs(const std::vector<Integer>& coeffs);

}  // namespace prat
