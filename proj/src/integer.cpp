#include "prat/integer.hpp"

#include "prat/errors.hpp"

#include <cctype>

namespace prat {

Integer mod(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer ipow(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("inverse_mod: " + a.get_str() + " is not invertible mod " + m.get_str());
    return r;
}

int valuation(const Integer& a, const Integer& p, int cap)
{
    if (a == 0)
        return cap;
    Integer t = a;
    int v = 0;
    while (v < cap && mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

bool is_prime(const Integer& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d : {2u, 3u, 5u, 7u}) {
        if (n % d == 0)
            return n == d;
    }
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
        if (n % d == 0)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    if (hi < 2 || lo > hi)
        return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i) {
        if (composite[i])
            continue;
        for (std::uint64_t j = i * i; j <= hi; j += i)
            composite[j] = true;
    }
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i) {
        if (!composite[i])
            out.push_back(i);
    }
    return out;
}

std::vector<std::pair<std::uint64_t, int>> factor_trial(std::uint64_t n)
{
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

namespace {

bool valid_integer_text(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    }
    return true;
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Integer parse_integer(const std::string& text)
{
    std::string s = trim(text);
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    if (!valid_integer_text(s))
        throw InputError("not an integer: '" + text + "'");
    return Integer(s);
}

Rational parse_rational(const std::string& text)
{
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den <= 0)
        throw InputError("bad denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace prat
