#include "prat/matrix.hpp"

#include "prat/errors.hpp"

#include <utility>

namespace prat {

IntMatrix identity_int(std::size_t n)
{
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

RatMatrix identity_rat(std::size_t n)
{
    RatMatrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

Integer determinant(IntMatrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = t;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational determinant(const RatMatrix& a)
{
    RatMatrix m = a;
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j)
                m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& a)
{
    const std::size_t n = a.size();
    RatMatrix m = a;
    RatMatrix inv = identity_rat(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0)
            ++piv;
        if (piv == n)
            throw DomainError("inverse: singular matrix");
        std::swap(m[piv], m[k]);
        std::swap(inv[piv], inv[k]);
        Rational d = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= d;
            inv[k][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0)
                continue;
            Rational f = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const auto& x : m[i])
            r[i].emplace_back(x);
    }
    return r;
}

}  // namespace prat
