#include "prat/numberfield.hpp"

#include "prat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prat {

// ---------------------------------------------------------------- elements

FieldElement::FieldElement(std::vector<Integer> c, Integer d) : coords(std::move(c)), den(std::move(d))
{
    if (den == 0)
        throw DomainError("FieldElement: zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& x : coords)
            x = -x;
    }
    Integer g = den;
    for (const auto& x : coords)
        g = gcd(g, x);
    if (g > 1) {
        den /= g;
        for (auto& x : coords)
            x /= g;
    }
}

bool FieldElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x == 0; });
}

namespace {

FieldElement from_rational_coords(const std::vector<Rational>& q)
{
    Integer den = 1;
    for (const auto& x : q)
        den = lcm(den, x.get_den());
    std::vector<Integer> c;
    c.reserve(q.size());
    for (const auto& x : q)
        c.push_back(x.get_num() * (den / x.get_den()));
    return FieldElement(std::move(c), den);
}

// Reduce a rational polynomial (low first) modulo the monic f.
std::vector<Rational> reduce_mod_poly(std::vector<Rational> a, const IntPoly& f)
{
    const int n = f.degree();
    for (int i = static_cast<int>(a.size()) - 1; i >= n; --i) {
        if (a[i] == 0)
            continue;
        Rational t = a[i];
        for (int j = 0; j <= n; ++j)
            a[i - n + j] -= t * Rational(f.coeff(j));
    }
    a.resize(n, Rational(0));
    return a;
}

std::vector<Integer> divisors(Integer n)
{
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    }
    return out;
}

bool is_perfect_square(const Integer& n, Integer& root)
{
    if (n < 0)
        return false;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root * root == n;
}

}  // namespace

bool is_irreducible_over_q(const IntPoly& f)
{
    const int n = f.degree();
    if (n < 1)
        return false;
    if (n == 1)
        return true;
    if (!f.is_monic())
        throw DomainError("is_irreducible_over_q: polynomial must be monic");
    if (n > 4)
        throw DomainError("is_irreducible_over_q: degree above 4 unsupported");
    const Integer& c0 = f.coeffs()[0];
    if (c0 == 0)
        return false;
    // linear factors: integer roots dividing c0
    for (const auto& d : divisors(c0)) {
        if (f.eval(d) == 0 || f.eval(-d) == 0)
            return false;
    }
    if (n <= 3)
        return true;
    // x^4 + a3 x^3 + a2 x^2 + a1 x + a0 = (x^2 + a x + b)(x^2 + c x + d)
    const Integer a3 = f.coeff(3), a2 = f.coeff(2), a1 = f.coeff(1);
    for (const auto& d0 : divisors(c0)) {
        for (int s : {1, -1}) {
            Integer b = d0 * s;
            Integer d = c0 / b;
            Integer ac = a2 - b - d;
            Integer disc = a3 * a3 - 4 * ac;
            Integer root;
            if (!is_perfect_square(disc, root))
                continue;
            for (int t : {1, -1}) {
                Integer num = a3 + t * root;
                if (num % 2 != 0)
                    continue;
                Integer a = num / 2;
                Integer c = a3 - a;
                if (a * d + b * c == a1)
                    return false;
            }
        }
    }
    return true;
}

NumberField make_field(const IntPoly& f, std::optional<RatMatrix> basis)
{
    const int n = f.degree();
    if (n < 2 || n > 4)
        throw DomainError("make_field: degree must be between 2 and 4");
    if (!f.is_monic())
        throw DomainError("make_field: defining polynomial must be monic");
    if (!is_irreducible_over_q(f))
        throw DomainError("make_field: " + f.to_string() + " is reducible over Q");

    NumberField K;
    K.poly_ = f;
    K.disc_ = discriminant(f);
    const int r1 = count_real_roots(f);
    K.sig_ = {r1, (n - r1) / 2};

    if (basis) {
        const RatMatrix& B = *basis;
        if (static_cast<int>(B.size()) != n)
            throw DomainError("make_field: basis must have n rows");
        for (const auto& row : B) {
            if (static_cast<int>(row.size()) != n)
                throw DomainError("make_field: basis must be n x n");
        }
        for (int j = 0; j < n; ++j) {
            if (B[0][j] != (j == 0 ? 1 : 0))
                throw DomainError("make_field: first basis element must be 1");
        }
        Rational det = determinant(B);
        if (det == 0)
            throw DomainError("make_field: basis matrix is singular");
        Rational idx = 1 / abs(det);
        if (idx.get_den() != 1)
            throw DomainError("make_field: basis does not contain Z[alpha]");
        if (K.disc_ % (idx.get_num() * idx.get_num()) != 0)
            throw DomainError("make_field: index^2 does not divide d(f)");
        K.basis_ = B;
        K.index_ = idx.get_num();
    } else {
        K.basis_ = identity_rat(n);
    }
    K.power_basis_ = (K.basis_ == identity_rat(n));
    K.basis_inv_ = inverse(K.basis_);

    K.table_.assign(n, std::vector<std::vector<Integer>>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> prod(2 * n - 1, Rational(0));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    prod[a + b] += K.basis_[i][a] * K.basis_[j][b];
            auto red = reduce_mod_poly(std::move(prod), f);
            std::vector<Integer> coords(n);
            for (int k = 0; k < n; ++k) {
                Rational s = 0;
                for (int m = 0; m < n; ++m)
                    s += red[m] * K.basis_inv_[m][k];
                if (s.get_den() != 1)
                    throw DomainError("make_field: basis is not closed under multiplication");
                coords[k] = s.get_num();
            }
            K.table_[i][j] = std::move(coords);
        }
    }
    return K;
}

bool NumberField::criterion_eligible() const
{
    const int n = degree();
    return (n == 3 && sig_ == Signature{1, 1}) || (n == 4 && sig_ == Signature{0, 2});
}

FieldElement NumberField::one() const { return from_integer(1); }

FieldElement NumberField::from_integer(const Integer& c) const
{
    std::vector<Integer> v(degree(), 0);
    v[0] = c;
    return FieldElement(std::move(v));
}

FieldElement NumberField::alpha_power(int k) const
{
    std::vector<Rational> q(degree(), Rational(0));
    q.at(k) = 1;
    return from_power(q);
}

FieldElement NumberField::from_power(const std::vector<Rational>& coeffs) const
{
    const int n = degree();
    std::vector<Rational> pc = reduce_mod_poly(coeffs, poly_);
    std::vector<Rational> out(n, Rational(0));
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
            out[k] += pc[m] * basis_inv_[m][k];
    return from_rational_coords(out);
}

FieldElement NumberField::from_power(const std::vector<Integer>& coeffs, const Integer& den) const
{
    std::vector<Rational> q;
    for (const auto& c : coeffs)
        q.emplace_back(c, den);
    for (auto& x : q)
        x.canonicalize();
    return from_power(q);
}

std::vector<Rational> NumberField::to_power(const FieldElement& a) const
{
    const int n = degree();
    std::vector<Rational> out(n, Rational(0));
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
            out[m] += Rational(a.coords[k]) * basis_[k][m];
    for (auto& x : out) {
        x /= Rational(a.den);
    }
    return out;
}

FieldElement NumberField::eval_poly(const IntPoly& g) const
{
    return from_power(std::vector<Rational>(g.coeffs().begin(), g.coeffs().end()));
}

IntMatrix NumberField::multiplication_matrix(const FieldElement& a) const
{
    const int n = degree();
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (a.coords[i] == 0)
            continue;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                m[k][j] += a.coords[i] * table_[i][j][k];
    }
    return m;
}

// ---------------------------------------------------------------- arithmetic

FieldElement add(const NumberField& K, const FieldElement& a, const FieldElement& b)
{
    std::vector<Integer> c(K.degree());
    for (int i = 0; i < K.degree(); ++i)
        c[i] = a.coords[i] * b.den + b.coords[i] * a.den;
    return FieldElement(std::move(c), a.den * b.den);
}

FieldElement negate(const FieldElement& a)
{
    FieldElement r = a;
    for (auto& x : r.coords)
        x = -x;
    return r;
}

FieldElement sub(const NumberField& K, const FieldElement& a, const FieldElement& b) { return add(K, a, negate(b)); }

namespace {

std::vector<Integer> raw_product(const NumberField& K, const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    const int n = K.degree();
    std::vector<Integer> c(n, 0);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0)
                continue;
            Integer ab = a[i] * b[j];
            const auto& t = K.product_coords(i, j);
            for (int k = 0; k < n; ++k)
                c[k] += ab * t[k];
        }
    }
    return c;
}

}  // namespace

FieldElement mul(const NumberField& K, const FieldElement& a, const FieldElement& b)
{
    return FieldElement(raw_product(K, a.coords, b.coords), a.den * b.den);
}

Rational norm(const NumberField& K, const FieldElement& a)
{
    Integer d = determinant(K.multiplication_matrix(a));
    Rational r(d, ipow(a.den, static_cast<unsigned long>(K.degree())));
    r.canonicalize();
    return r;
}

FieldElement inverse(const NumberField& K, const FieldElement& a)
{
    if (a.is_zero())
        throw DomainError("inverse of zero");
    RatMatrix inv = prat::inverse(to_rational(K.multiplication_matrix(a)));
    std::vector<Rational> col(K.degree());
    for (int k = 0; k < K.degree(); ++k)
        col[k] = inv[k][0] * Rational(a.den);
    return from_rational_coords(col);
}

IntPoly characteristic_poly(const NumberField& K, const FieldElement& a)
{
    if (!a.is_integral())
        throw DomainError("characteristic_poly: element must be integral");
    const int n = K.degree();
    const RatMatrix A = to_rational(K.multiplication_matrix(a));
    // Faddeev-LeVerrier
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RatMatrix M(n, std::vector<Rational>(n, Rational(0)));
    for (int k = 1; k <= n; ++k) {
        RatMatrix AM(n, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int l = 0; l < n; ++l)
                    s += A[i][l] * M[l][j];
                AM[i][j] = s;
            }
        for (int i = 0; i < n; ++i)
            AM[i][i] += c[n - k + 1];
        M = AM;
        Rational tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                tr += A[i][l] * M[l][i];
        c[n - k] = -tr / k;
    }
    std::vector<Integer> out;
    for (const auto& x : c) {
        if (x.get_den() != 1)
            throw InvariantViolation("characteristic_poly: non-integral coefficient");
        out.push_back(x.get_num());
    }
    return IntPoly(std::move(out));
}

FieldElement reduce_mod(const FieldElement& a, const Integer& m)
{
    if (!a.is_integral())
        throw DomainError("reduce_mod: element must be integral");
    std::vector<Integer> c = a.coords;
    for (auto& x : c)
        x = mod(x, m);
    FieldElement r;
    r.coords = std::move(c);
    return r;
}

FieldElement mul_mod(const NumberField& K, const FieldElement& a, const FieldElement& b, const Integer& m)
{
    FieldElement r;
    r.coords = raw_product(K, a.coords, b.coords);
    for (auto& x : r.coords)
        x = mod(x, m);
    return r;
}

FieldElement pow_mod(const NumberField& K, const FieldElement& a, const Integer& exponent, const Integer& m)
{
    if (!a.is_integral())
        throw DomainError("pow_mod: element must be integral");
    if (exponent < 0)
        throw DomainError("pow_mod: negative exponent");
    if (exponent == 0) {
        if (a.is_zero())
            throw DomainError("pow_mod: zero to the power zero");
        return reduce_mod(K.one(), m);
    }
    FieldElement base = reduce_mod(a, m);
    FieldElement result = reduce_mod(K.one(), m);
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mul_mod(K, result, result, m);
        if (mpz_tstbit(exponent.get_mpz_t(), i))
            result = mul_mod(K, result, base, m);
    }
    return result;
}

std::string format_element(const NumberField& K, const FieldElement& a, const std::string& var)
{
    auto pc = K.to_power(a);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < K.degree(); ++i) {
        const Rational& c = pc[i];
        if (c == 0)
            continue;
        Rational ac = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (i == 0 || ac != 1)
            os << ac.get_str() << (i > 0 ? "*" : "");
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << "^" << i;
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- primes

bool dedekind_p_maximal(const IntPoly& f, const Integer& p)
{
    if (!f.is_monic())
        throw DomainError("dedekind_p_maximal: polynomial must be monic");
    auto factors = factor_mod_p(f, p);
    IntPoly g{1}, h{1};
    bool squarefree = true;
    for (const auto& [fac, e] : factors) {
        IntPoly lift = fac.lift();
        g = g * lift;
        for (int i = 1; i < e; ++i)
            h = h * lift;
        if (e > 1)
            squarefree = false;
    }
    if (squarefree)
        return true;
    IntPoly diff = f - g * h;
    std::vector<Integer> quotient;
    for (const auto& c : diff.coeffs()) {
        if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t()))
            throw InvariantViolation("dedekind_p_maximal: f - gh not divisible by p");
        quotient.push_back(c / p);
    }
    ModPoly F(quotient, p);
    ModPoly d = ModPoly::gcd(ModPoly::gcd(F, ModPoly::reduce(g, p)), ModPoly::reduce(h, p));
    return d.degree() == 0;
}

bool dedekind_p_maximal(const NumberField& K, const Integer& p)
{
    if (!K.has_power_basis())
        throw DomainError("dedekind_p_maximal: field is not stored on the power basis");
    return dedekind_p_maximal(K.poly(), p);
}

std::vector<PrimeFactor> split_prime(const NumberField& K, const Integer& p)
{
    if (!is_prime(p))
        throw DomainError("split_prime: " + p.get_str() + " is not prime");
    bool certified = false;
    if (K.poly_disc() % p != 0)
        certified = true;
    else if (K.has_power_basis())
        certified = dedekind_p_maximal(K.poly(), p);
    else
        certified = (K.index() % p != 0);
    if (!certified)
        throw SplittingUndetermined("split_prime: " + p.get_str() + " may divide [O_K : Z[alpha]]");

    std::vector<PrimeFactor> out;
    int label = 1;
    for (const auto& [g, e] : factor_mod_p(K.poly(), p))
        out.push_back({p, g, e, g.degree(), label++});
    int total = 0;
    for (const auto& pf : out)
        total += pf.e * pf.f;
    if (total != K.degree())
        throw InvariantViolation("split_prime: sum of e*f differs from the degree");
    return out;
}

SplitShape classify_cubic(const std::vector<PrimeFactor>& factors)
{
    std::vector<std::pair<int, int>> ef;
    for (const auto& pf : factors)
        ef.emplace_back(pf.e, pf.f);
    std::sort(ef.begin(), ef.end());
    if (ef == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}})
        return SplitShape::SplitCompletely;
    if (ef == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}})
        return SplitShape::OneTwo;
    if (ef == std::vector<std::pair<int, int>>{{1, 3}})
        return SplitShape::Inert;
    return SplitShape::Other;
}

std::string shape_name(SplitShape s)
{
    switch (s) {
    case SplitShape::SplitCompletely: return "split-completely";
    case SplitShape::OneTwo: return "1+2";
    case SplitShape::Inert: return "inert";
    case SplitShape::Other: break;
    }
    return "other";
}

// ---------------------------------------------------------------- ideals

IdealHNF hnf_from_columns(const std::vector<std::vector<Integer>>& columns, int n)
{
    std::vector<std::vector<Integer>> active;
    for (const auto& c : columns) {
        if (static_cast<int>(c.size()) != n)
            throw DomainError("hnf_from_columns: column of wrong length");
        if (std::any_of(c.begin(), c.end(), [](const Integer& x) { return x != 0; }))
            active.push_back(c);
    }
    IdealHNF out;
    out.h.assign(n, std::vector<Integer>(n, 0));
    for (int r = n - 1; r >= 0; --r) {
        while (true) {
            std::size_t piv = active.size();
            for (std::size_t i = 0; i < active.size(); ++i) {
                if (active[i][r] != 0 && (piv == active.size() || abs(active[i][r]) < abs(active[piv][r])))
                    piv = i;
            }
            if (piv == active.size())
                throw DomainError("hnf_from_columns: lattice is not of full rank");
            bool reduced_all = true;
            for (std::size_t i = 0; i < active.size(); ++i) {
                if (i == piv || active[i][r] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), active[i][r].get_mpz_t(), active[piv][r].get_mpz_t());
                for (int k = 0; k <= r; ++k)
                    active[i][k] -= q * active[piv][k];
                if (active[i][r] != 0)
                    reduced_all = false;
            }
            if (reduced_all) {
                std::vector<Integer> col = active[piv];
                if (col[r] < 0)
                    for (auto& x : col)
                        x = -x;
                for (int k = 0; k < n; ++k)
                    out.h[k][r] = col[k];
                active.erase(active.begin() + static_cast<std::ptrdiff_t>(piv));
                break;
            }
        }
        std::erase_if(active, [](const std::vector<Integer>& c) {
            return std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; });
        });
    }
    for (int j = 0; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), out.h[i][j].get_mpz_t(), out.h[i][i].get_mpz_t());
            if (q == 0)
                continue;
            for (int k = 0; k <= i; ++k)
                out.h[k][j] -= q * out.h[k][i];
        }
    }
    out.norm = 1;
    for (int i = 0; i < n; ++i)
        out.norm *= out.h[i][i];
    return out;
}

IdealHNF unit_ideal(const NumberField& K)
{
    IdealHNF I;
    I.h = identity_int(K.degree());
    I.norm = 1;
    return I;
}

namespace {

std::vector<Integer> column(const IdealHNF& A, int j)
{
    std::vector<Integer> c(A.h.size());
    for (std::size_t i = 0; i < A.h.size(); ++i)
        c[i] = A.h[i][j];
    return c;
}

}  // namespace

IdealHNF principal_ideal(const NumberField& K, const FieldElement& a)
{
    if (!a.is_integral())
        throw DomainError("principal_ideal: element must be integral");
    const int n = K.degree();
    std::vector<std::vector<Integer>> cols;
    for (int j = 0; j < n; ++j) {
        std::vector<Integer> e(n, 0);
        e[j] = 1;
        cols.push_back(raw_product(K, a.coords, e));
    }
    return hnf_from_columns(cols, n);
}

IdealHNF ideal_from_two_generators(const NumberField& K, const Integer& p, const ModPoly& g)
{
    const int n = K.degree();
    if (g.modulus() != p)
        throw DomainError("ideal_from_two_generators: generator is not reduced mod p");
    if (g.degree() < 1 || g.degree() > n)
        throw DomainError("ideal_from_two_generators: inconsistent generator degree");
    FieldElement ga = K.eval_poly(g.lift());
    if (!ga.is_integral())
        throw InvariantViolation("ideal_from_two_generators: g(alpha) not integral");
    std::vector<std::vector<Integer>> cols;
    for (int j = 0; j < n; ++j) {
        std::vector<Integer> e(n, 0);
        e[j] = p;
        cols.push_back(e);
        e[j] = 1;
        cols.push_back(raw_product(K, ga.coords, e));
    }
    return hnf_from_columns(cols, n);
}

IdealHNF ideal_multiply(const NumberField& K, const IdealHNF& A, const IdealHNF& B)
{
    const int n = K.degree();
    std::vector<std::vector<Integer>> cols;
    cols.reserve(n * n);
    for (int i = 0; i < n; ++i) {
        auto a = column(A, i);
        for (int j = 0; j < n; ++j)
            cols.push_back(raw_product(K, a, column(B, j)));
    }
    return hnf_from_columns(cols, n);
}

IdealHNF ideal_power(const NumberField& K, const IdealHNF& A, int k)
{
    if (k < 0)
        throw DomainError("ideal_power: negative exponent");
    IdealHNF r = unit_ideal(K);
    for (int i = 0; i < k; ++i)
        r = ideal_multiply(K, r, A);
    return r;
}

bool ideal_contains(const NumberField& K, const IdealHNF& A, const FieldElement& x)
{
    if (!x.is_integral())
        throw DomainError("ideal_contains: element must be integral");
    const int n = K.degree();
    std::vector<Integer> v = x.coords;
    for (int r = n - 1; r >= 0; --r) {
        if (!mpz_divisible_p(v[r].get_mpz_t(), A.h[r][r].get_mpz_t()))
            return false;
        Integer q = v[r] / A.h[r][r];
        if (q == 0)
            continue;
        for (int k = 0; k <= r; ++k)
            v[k] -= q * A.h[k][r];
    }
    return true;
}

}  // namespace prat
