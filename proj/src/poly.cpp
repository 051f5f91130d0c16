#include "prat/poly.hpp"

#include "prat/errors.hpp"
#include "prat/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace prat {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        c_.emplace_back(c);
    trim();
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Integer IntPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[i];
}

const Integer& IntPoly::leading() const
{
    if (c_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

Integer IntPoly::eval(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const
{
    std::vector<Integer> d;
    for (int i = 1; i <= degree(); ++i)
        d.push_back(c_[i] * i);
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

namespace {

std::string render(const std::vector<Integer>& c, const std::string& var)
{
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (c[i] == 0)
            continue;
        Integer a = abs(c[i]);
        if (first)
            os << (c[i] < 0 ? "-" : "");
        else
            os << (c[i] < 0 ? " - " : " + ");
        if (i == 0 || a != 1) {
            os << a.get_str();
            if (i > 0)
                os << "*";
        }
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string IntPoly::to_string(const std::string& var) const { return render(c_, var); }

// ---------------------------------------------------------------- ModPoly

ModPoly::ModPoly(std::vector<Integer> coeffs, Integer modulus) : c_(std::move(coeffs)), m_(std::move(modulus))
{
    if (m_ <= 0)
        throw DomainError("ModPoly: modulus must be positive");
    for (auto& c : c_)
        c = prat::mod(c, m_);
    trim();
}

ModPoly ModPoly::reduce(const IntPoly& f, const Integer& modulus) { return ModPoly(f.coeffs(), modulus); }

ModPoly ModPoly::x(const Integer& modulus) { return ModPoly({0, 1}, modulus); }

ModPoly ModPoly::constant(const Integer& c, const Integer& modulus) { return ModPoly({c}, modulus); }

void ModPoly::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Integer ModPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return c_[i];
}

const Integer& ModPoly::leading() const
{
    if (c_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPoly ModPoly::lift() const { return IntPoly(c_); }

Integer ModPoly::eval(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = prat::mod(acc * x + *it, m_);
    return acc;
}

ModPoly ModPoly::derivative() const
{
    std::vector<Integer> d;
    for (int i = 1; i <= degree(); ++i)
        d.push_back(c_[i] * i);
    return ModPoly(std::move(d), m_);
}

ModPoly ModPoly::monic() const
{
    if (is_zero())
        return *this;
    Integer inv = inverse_mod(leading(), m_);
    std::vector<Integer> r = c_;
    for (auto& c : r)
        c *= inv;
    return ModPoly(std::move(r), m_);
}

ModPoly operator+(const ModPoly& a, const ModPoly& b)
{
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        r[i] += b.c_[i];
    return ModPoly(std::move(r), a.m_);
}

ModPoly operator-(const ModPoly& a, const ModPoly& b)
{
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        r[i] -= b.c_[i];
    return ModPoly(std::move(r), a.m_);
}

ModPoly operator*(const ModPoly& a, const ModPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return ModPoly({}, a.m_);
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return ModPoly(std::move(r), a.m_);
}

void ModPoly::divmod(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r)
{
    if (b.is_zero())
        throw DomainError("ModPoly division by zero");
    const Integer& m = a.m_;
    Integer inv = inverse_mod(b.leading(), m);
    std::vector<Integer> rem = a.c_;
    const int db = b.degree();
    std::vector<Integer> quo(std::max(0, a.degree() - db + 1), 0);
    for (int i = a.degree(); i >= db; --i) {
        Integer t = prat::mod(rem[i] * inv, m);
        quo[i - db] = t;
        if (t == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = prat::mod(rem[i - db + j] - t * b.c_[j], m);
    }
    rem.resize(std::max(0, db));
    q = ModPoly(std::move(quo), m);
    r = ModPoly(std::move(rem), m);
}

ModPoly operator/(const ModPoly& a, const ModPoly& b)
{
    ModPoly q, r;
    ModPoly::divmod(a, b, q, r);
    return q;
}

ModPoly operator%(const ModPoly& a, const ModPoly& b)
{
    ModPoly q, r;
    ModPoly::divmod(a, b, q, r);
    return r;
}

ModPoly ModPoly::powmod(const ModPoly& a, const Integer& e, const ModPoly& g)
{
    ModPoly result = ModPoly::constant(1, a.m_) % g;
    ModPoly base = a % g;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % g;
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = (result * base) % g;
    }
    return result;
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b)
{
    while (!b.is_zero()) {
        ModPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string ModPoly::to_string(const std::string& var) const { return render(c_, var); }

// ---------------------------------------------------------------- resultants

Integer resultant(const IntPoly& f, const IntPoly& g)
{
    const int m = f.degree();
    const int n = g.degree();
    if (m < 0 || n < 0)
        return 0;
    const int size = m + n;
    if (size == 0)
        return 1;
    IntMatrix s(size, std::vector<Integer>(size, 0));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            s[row][row + i] = f.coeff(m - i);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            s[n + row][row + i] = g.coeff(n - i);
    return determinant(std::move(s));
}

Integer discriminant(const IntPoly& f)
{
    const int n = f.degree();
    if (n < 2)
        throw DomainError("discriminant: degree must be at least 2");
    Integer res = resultant(f, f.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

// ---------------------------------------------------------------- factoring mod p

namespace {

std::vector<ModFactor> squarefree_decomposition(const ModPoly& f)
{
    const Integer& p = f.modulus();
    std::vector<ModFactor> out;
    if (f.degree() <= 0)
        return out;
    ModPoly c = ModPoly::gcd(f, f.derivative());
    ModPoly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        ModPoly y = ModPoly::gcd(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0)
            out.push_back({z.monic(), i});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        // c is a polynomial in x^p; take its p-th root coefficientwise.
        const unsigned long pu = p.get_ui();
        std::vector<Integer> root;
        for (int k = 0; k <= c.degree(); k += static_cast<int>(pu))
            root.push_back(c.coeff(k));
        for (auto& [g, mult] : squarefree_decomposition(ModPoly(root, p))) {
            out.push_back({g, mult * static_cast<int>(pu)});
        }
    }
    return out;
}

std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly g)
{
    const Integer& p = g.modulus();
    std::vector<std::pair<ModPoly, int>> out;
    const ModPoly x = ModPoly::x(p);
    ModPoly h = x % g;
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = ModPoly::powmod(h, p, g);
        ModPoly t = ModPoly::gcd(g, h - x);
        if (t.degree() > 0) {
            out.emplace_back(t, d);
            g = g / t;
            h = h % g;
        }
    }
    if (g.degree() > 0)
        out.emplace_back(g.monic(), g.degree());
    return out;
}

// Splitting polynomial for candidate a: a^((p^d-1)/2) - 1 for odd p, the
// absolute trace sum a^(2^i) for p = 2.
ModPoly splitter(const ModPoly& a, const ModPoly& t, int d)
{
    const Integer& p = t.modulus();
    if (p == 2) {
        ModPoly acc = a % t;
        ModPoly term = acc;
        for (int i = 1; i < d; ++i) {
            term = (term * term) % t;
            acc = acc + term;
        }
        return acc;
    }
    Integer e = (ipow(p, d) - 1) / 2;
    return ModPoly::powmod(a, e, t) - ModPoly::constant(1, p);
}

void equal_degree(const ModPoly& t, int d, std::vector<ModPoly>& out)
{
    if (t.degree() == d) {
        out.push_back(t.monic());
        return;
    }
    const Integer& p = t.modulus();
    const unsigned long pu = p.get_ui();
    const int max_power = std::max(2 * d, t.degree());
    for (int j = 1; j <= max_power; ++j) {
        for (unsigned long s = 0; s < pu; ++s) {
            std::vector<Integer> cs(j + 1, 0);
            cs[0] = s;
            cs[j] = 1;
            ModPoly g = ModPoly::gcd(t, splitter(ModPoly(cs, p), t, d));
            if (g.degree() > 0 && g.degree() < t.degree()) {
                equal_degree(g, d, out);
                equal_degree(t / g, d, out);
                return;
            }
        }
    }
    throw InvariantViolation("factor_mod_p: no deterministic splitting candidate found");
}

std::vector<Integer> order_key(const ModPoly& g)
{
    const int d = g.degree();
    std::vector<Integer> key(d + 1);
    for (int i = 0; i <= d; ++i)
        key[i] = ((d - i) % 2 == 0) ? g.coeff(i) : mod(-g.coeff(i), g.modulus());
    return key;
}

}  // namespace

std::vector<ModFactor> factor_mod_p(const IntPoly& f, const Integer& p)
{
    if (!is_prime(p))
        throw DomainError("factor_mod_p: modulus " + p.get_str() + " is not prime");
    if (p >= 1000000)
        throw DomainError("factor_mod_p: prime too large for deterministic splitting");
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.is_zero())
        throw DomainError("factor_mod_p: f is zero mod " + p.get_str());
    fp = fp.monic();
    std::vector<ModFactor> out;
    for (const auto& [sqf, mult] : squarefree_decomposition(fp)) {
        for (const auto& [block, d] : distinct_degree(sqf)) {
            std::vector<ModPoly> irreducibles;
            equal_degree(block, d, irreducibles);
            for (auto& g : irreducibles)
                out.push_back({std::move(g), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const ModFactor& a, const ModFactor& b) {
        if (a.factor.degree() != b.factor.degree())
            return a.factor.degree() < b.factor.degree();
        auto ka = order_key(a.factor);
        auto kb = order_key(b.factor);
        if (ka != kb)
            return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

// ---------------------------------------------------------------- Sturm

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b)
{
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0)
            continue;
        Rational t = a[i] / b.back();
        for (int j = 0; j <= db; ++j)
            a[i - db + j] -= t * b[j];
    }
    a.resize(std::max(0, std::min<int>(db, static_cast<int>(a.size()))));
    trim(a);
    return a;
}

int sign_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int count_real_roots(const IntPoly& f)
{
    if (f.is_zero())
        throw DomainError("count_real_roots: zero polynomial");
    if (f.degree() == 0)
        return 0;
    if (f.degree() == 1)
        return 1;
    if (discriminant(f) == 0)
        throw DomainError("count_real_roots: polynomial is not squarefree");

    std::vector<RatPoly> seq;
    RatPoly a(f.coeffs().begin(), f.coeffs().end());
    RatPoly da;
    for (std::size_t i = 1; i < a.size(); ++i)
        da.push_back(a[i] * static_cast<long>(i));
    seq.push_back(a);
    seq.push_back(da);
    while (seq.back().size() > 1) {
        RatPoly r = remainder(seq[seq.size() - 2], seq.back());
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        seq.push_back(std::move(r));
    }
    std::vector<int> at_neg, at_pos;
    for (const auto& s : seq) {
        int lc = sgn(s.back());
        int deg = static_cast<int>(s.size()) - 1;
        at_pos.push_back(lc);
        at_neg.push_back(deg % 2 == 0 ? lc : -lc);
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

// ---------------------------------------------------------------- text

IntPoly parse_poly(const std::string& text)
{
    std::vector<Integer> cs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        cs.push_back(parse_integer(item));
    if (cs.empty())
        throw InputError("empty coefficient list");
    return IntPoly(std::move(cs));
}

std::string format_coeffs(const std::vector<Integer>& coeffs)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += ';';
        out += coeffs[i].get_str();
    }
    return out;
}

}  // namespace prat
