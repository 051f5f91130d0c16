#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace prat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Least nonnegative residue of a mod m (m > 0).
Integer mod(const Integer& a, const Integer& m);

Integer ipow(const Integer& base, unsigned long exp);

/// Modular inverse; throws DomainError when gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

/// v_p(a); returns `cap` for a == 0.
int valuation(const Integer& a, const Integer& p, int cap = 1 << 20);

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi] by a segmented-free simple sieve (hi up to ~1e8).
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Trial-division factorization, ascending primes with multiplicity.
std::vector<std::pair<std::uint64_t, int>> factor_trial(std::uint64_t n);

/// Parses "123", "-7" or "3/4" (sign on numerator).
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

inline std::string str(const Integer& a) { return a.get_str(); }

}  // namespace prat
