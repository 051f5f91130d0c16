#include "prat/padic.hpp"

#include "prat/errors.hpp"

#include <algorithm>

namespace prat {

PadicApprox::PadicApprox(Integer v, int k, Integer p) : precision(k), prime(std::move(p))
{
    if (k < 1)
        throw DomainError("PadicApprox: precision must be positive");
    value = mod(v, modulus());
}

int PadicApprox::valuation() const { return prat::valuation(value, prime, precision); }

namespace {

void require_compatible(const PadicApprox& a, const PadicApprox& b)
{
    if (a.prime != b.prime)
        throw DomainError("p-adic operands over different primes");
}

}  // namespace

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b)
{
    require_compatible(a, b);
    return {a.value + b.value, std::min(a.precision, b.precision), a.prime};
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b)
{
    require_compatible(a, b);
    return {a.value - b.value, std::min(a.precision, b.precision), a.prime};
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b)
{
    require_compatible(a, b);
    return {a.value * b.value, std::min(a.precision, b.precision), a.prime};
}

PadicApprox hensel_lift_root(const IntPoly& f, const Integer& p, const Integer& r0, int k)
{
    if (k < 1)
        throw DomainError("hensel_lift_root: precision must be positive");
    if (mod(f.eval(r0), p) != 0)
        throw DomainError("hensel_lift_root: r0 is not a root mod p");
    const IntPoly df = f.derivative();
    if (mod(df.eval(r0), p) == 0)
        throw DomainError("hensel_lift_root: root is not simple (f'(r0) = 0 mod p)");

    Integer r = mod(r0, p);
    int prec = 1;
    while (prec < k) {
        prec = std::min(2 * prec, k);
        const Integer m = ipow(p, prec);
        Integer inv = inverse_mod(mod(df.eval(r), m), m);
        r = mod(r - f.eval(r) * inv, m);
    }
    return {r, k, p};
}

long padic_log_terms(const Integer& p, int k)
{
    // term m has valuation >= m - log_p(m); beyond k*p/(p-1) + p this is >= k
    const long pl = p.get_si();
    return static_cast<long>(k) * pl / (pl - 1) + pl;
}

PadicApprox padic_log(const PadicApprox& u)
{
    const Integer& p = u.prime;
    const int k = u.precision;
    if (p == 2)
        throw DomainError("padic_log: p = 2 is not supported");
    if (k < 2)
        throw DomainError("padic_log: precision must be at least 2");
    if (mod(u.value - 1, p) != 0)
        throw DomainError("padic_log: argument is not a principal unit");

    const Integer mk = u.modulus();
    const Integer x = mod(u.value - 1, mk);
    if (x == 0)
        return {0, k, p};

    const long terms = padic_log_terms(p, k);
    int max_vm = 0;
    for (long m = p.get_si(); m <= terms; m *= p.get_si())
        ++max_vm;
    // x^m / m needs x^m modulo p^(k + v_p(m)) before the exact division by p^v_p(m)
    const Integer wide = ipow(p, static_cast<unsigned long>(k + max_vm));

    Integer sum = 0;
    Integer power = 1;
    for (long m = 1; m <= terms; ++m) {
        power = mod(power * x, wide);
        Integer mm = m;
        int vm = 0;
        while (mpz_divisible_p(mm.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(mm.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t());
            ++vm;
        }
        Integer term = power;
        if (vm > 0) {
            Integer pv = ipow(p, static_cast<unsigned long>(vm));
            if (!mpz_divisible_p(term.get_mpz_t(), pv.get_mpz_t()))
                throw InvariantViolation("padic_log: term not divisible by p^v(m)");
            mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), pv.get_mpz_t());
        }
        term = mod(term * inverse_mod(mm, mk), mk);
        if (m % 2 == 1)
            sum += term;
        else
            sum -= term;
    }
    return {sum, k, p};
}

}  // namespace prat
