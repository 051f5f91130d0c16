#include "prat/families.hpp"

#include "prat/errors.hpp"
#include "prat/harness.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>

namespace prat {

namespace {

constexpr std::uint64_t kTrialDivisionCap = 10'000'000;
constexpr double kEulerGamma = 0.5772156649015329;

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Data rows of a small numeric CSV: comments and a non-numeric header skipped.
std::vector<std::pair<int, std::vector<std::string>>> numeric_rows(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::vector<std::pair<int, std::vector<std::string>>> rows;
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        auto fields = split_csv_line(t);
        if (!header_seen) {
            header_seen = true;
            if (!fields.empty() && !fields[0].empty() && !std::isdigit(static_cast<unsigned char>(fields[0][0])))
                continue;
        }
        rows.emplace_back(lineno, fields);
    }
    return rows;
}

std::uint64_t to_u64(const Integer& x, const std::string& what)
{
    if (x < 0 || !x.fits_ulong_p())
        throw InputError(what + " out of range");
    return x.get_ui();
}

}  // namespace

PureCubicInstance make_pure_cubic(const Integer& p)
{
    if (p < 5 || !is_prime(p))
        throw DomainError("pure cubic: p must be a prime >= 5");
    NumberField K = make_field(IntPoly(std::vector<Integer>{1 - p * p * p, 0, 0, 1}));
    FieldElement eps = K.from_power(std::vector<Integer>{p * p, p, 1});
    FieldElement inv = K.from_power(std::vector<Integer>{p, -1, 0});
    if (mul(K, eps, inv) != K.one())
        throw InvariantViolation("pure cubic: (p^2 + p a + a^2)(p - a) != 1");
    return {p, std::move(K), std::move(eps)};
}

std::vector<PureCubicResult> pure_cubic_scan(std::uint64_t pmin, std::uint64_t pmax,
                                             const std::map<std::uint64_t, Integer>& h_data)
{
    if (pmin < 5 || pmin > pmax)
        throw InputError("pure-cubic: need 5 <= pmin <= pmax");
    const auto primes = primes_between(pmin, pmax);
    std::vector<PureCubicResult> out(primes.size());
    parallel_for(primes.size(), [&](std::size_t i) {
        const Integer p = primes[i];
        PureCubicInstance inst = make_pure_cubic(p);
        PureCubicResult r;
        r.p = primes[i];
        r.shape = classify_cubic(split_prime(inst.field, p));
        const SplitShape law = primes[i] % 3 == 1 ? SplitShape::SplitCompletely : SplitShape::OneTwo;
        if (r.shape != law)
            throw InvariantViolation("pure cubic: splitting of " + p.get_str() + " breaks the p mod 3 law");
        r.condition2_holds = condition2(inst.field, p, UnitData{inst.unit, 2, std::nullopt}).holds;
        if (auto it = h_data.find(primes[i]); it != h_data.end()) {
            r.class_number = it->second;
            r.p_divides_h = it->second % p == 0;
        }
        out[i] = std::move(r);
    });
    return out;
}

std::map<std::uint64_t, Integer> load_prime_values(const std::string& path)
{
    std::map<std::uint64_t, Integer> out;
    for (const auto& [line, f] : numeric_rows(path)) {
        try {
            if (f.size() != 2)
                throw InputError("expected 2 fields");
            out[to_u64(parse_integer(f[0]), "p")] = parse_integer(f[1]);
        } catch (const InputError& e) {
            throw InputError(path + ":" + std::to_string(line) + ": " + e.what());
        }
    }
    return out;
}

// ---------------------------------------------------------------- GGC

std::uint64_t largest_square_root_divisor(std::uint64_t m)
{
    if (m == 0)
        throw DomainError("largest_square_root_divisor: m must be positive");
    std::uint64_t n = 1;
    for (const auto& [q, e] : factor_trial(m))
        for (int i = 0; i < e / 2; ++i)
            n *= q;
    return n;
}

std::int64_t squarefree_part(std::int64_t m)
{
    if (m == 0)
        throw DomainError("squarefree_part: m must be nonzero");
    std::int64_t r = m < 0 ? -1 : 1;
    for (const auto& [q, e] : factor_trial(static_cast<std::uint64_t>(m < 0 ? -m : m)))
        if (e % 2 == 1)
            r *= static_cast<std::int64_t>(q);
    return r;
}

std::vector<GgcCandidate> square_divisor_scan(std::uint64_t xmax, double T)
{
    if (xmax < 13)
        throw InputError("ggc: xmax must be at least 13");
    if (xmax > kTrialDivisionCap)
        throw InputError("ggc: xmax above 10^7 is beyond the trial-division cap");
    if (!(T > 0))
        throw InputError("ggc: T must be positive");
    std::vector<GgcCandidate> out;
    for (auto p : primes_between(5, xmax)) {
        if (p % 4 != 1)
            continue;
        GgcCandidate c;
        c.p = p;
        c.n = largest_square_root_divisor(p - 1);
        c.m = largest_square_root_divisor(p + 1);
        c.threshold = std::pow(std::log(static_cast<double>(p)), T);
        if (static_cast<double>(c.n) > c.threshold && static_cast<double>(c.m) > c.threshold)
            out.push_back(c);
    }
    return out;
}

std::int64_t field_discriminant(std::int64_t radicand)
{
    std::int64_t r4 = ((radicand % 4) + 4) % 4;
    return r4 == 1 ? radicand : 4 * radicand;
}

int roots_of_unity_count(std::int64_t radicand)
{
    if (radicand == -1)
        return 4;
    if (radicand == -3)
        return 6;
    return 2;
}

std::uint64_t class_number_of_discriminant(std::int64_t D)
{
    if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
        throw DomainError("class number: D must be negative and 0 or 1 mod 4");
    const std::int64_t absD = -D;
    std::uint64_t h = 0;
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (((b - D) % 2 + 2) % 2 != 0)
                continue;
            const std::int64_t num = b * b - D;
            if (num % (4 * a) != 0)
                continue;
            const std::int64_t c = num / (4 * a);
            if (c < a || (c == a && b < 0))
                continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1)
                continue;
            ++h;
        }
    }
    return h;
}

std::uint64_t imag_quadratic_class_number(std::int64_t radicand)
{
    if (radicand >= 0 || squarefree_part(radicand) != radicand)
        throw InvariantViolation("class number: radicand must be negative and squarefree");
    return class_number_of_discriminant(field_discriminant(radicand));
}

double class_number_bound(std::uint64_t dK, int omega)
{
    if (dK < 3)
        throw DomainError("class_number_bound: dK must be at least 3");
    const double d = static_cast<double>(dK);
    return omega * std::sqrt(d) / (4 * std::numbers::pi) * (std::log(d) + 2 + kEulerGamma - std::log(std::numbers::pi));
}

KurodaResult kuroda_check(const Integer& h1, const Integer& h2, const Integer& h3, const Integer& hL)
{
    if (h1 <= 0 || h2 <= 0 || h3 <= 0 || hL <= 0)
        throw DomainError("kuroda_check: class numbers must be positive");
    KurodaResult r;
    r.q = Rational(2 * hL, h1 * h2 * h3);
    r.q.canonicalize();
    r.valid = r.q == 1 || r.q == 2;
    return r;
}

std::vector<KurodaRow> load_kuroda_rows(const std::string& path)
{
    std::vector<KurodaRow> out;
    for (const auto& [line, f] : numeric_rows(path)) {
        try {
            if (f.size() != 5)
                throw InputError("expected 5 fields");
            out.push_back({to_u64(parse_integer(f[0]), "p"), parse_integer(f[1]), parse_integer(f[2]),
                           parse_integer(f[3]), parse_integer(f[4])});
        } catch (const InputError& e) {
            throw InputError(path + ":" + std::to_string(line) + ": " + e.what());
        }
    }
    return out;
}

std::vector<GgcCandidate> ggc_scan(std::uint64_t xmax, double T)
{
    auto cands = square_divisor_scan(xmax, T);
    parallel_for(cands.size(), [&](std::size_t i) {
        GgcCandidate& c = cands[i];
        const auto p = static_cast<std::int64_t>(c.p);
        c.radicand = squarefree_part(1 - p * p);
        c.discriminant = field_discriminant(c.radicand);
        c.h_k2 = imag_quadratic_class_number(c.radicand);
        c.class_number_bound = class_number_bound(static_cast<std::uint64_t>(-c.discriminant), roots_of_unity_count(c.radicand));
        c.ggc_holds = c.h_k2 % c.p != 0;
        c.bound_ok = static_cast<double>(c.h_k2) <= c.class_number_bound;
    });
    return cands;
}

}  // namespace prat
