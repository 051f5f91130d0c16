#include "prat/selftest.hpp"

#include "prat/errors.hpp"
#include "prat/families.hpp"
#include "prat/harness.hpp"
#include "prat/recurrence.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace prat {

namespace {

class Tally {
public:
    explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) { r_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what)
    {
        ++r_.checks;
        if (!ok) {
            if (r_.failures++ == 0)
                r_.first_failure = what();
        }
    }

    SuiteResult finish()
    {
        r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return r_;
    }

private:
    SuiteResult r_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<PreparedField> bundled(const std::string& data_dir, const std::vector<std::string>& names)
{
    std::vector<PreparedField> out;
    for (const auto& name : names) {
        auto res = load_records(data_dir + "/" + name, RecordFormat::Csv);
        if (!res.skipped.empty())
            throw InputError(name + ": record " + res.skipped.front().label + " rejected: " +
                             res.skipped.front().message);
        for (auto& f : res.fields)
            out.push_back(std::move(f));
    }
    return out;
}

bool fundamental(std::int64_t D)
{
    const std::int64_t r = ((D % 4) + 4) % 4;
    if (r == 1)
        return squarefree_part(D) == D;
    if (r != 0)
        return false;
    const std::int64_t m = D / 4, m4 = ((m % 4) + 4) % 4;
    return (m4 == 2 || m4 == 3) && squarefree_part(m) == m;
}

// Analytic class number formula for D < 0: h = -(w / 2|D|) sum chi_D(k) k.
long dirichlet_class_number(std::int64_t D)
{
    const long n = static_cast<long>(-D);
    const Integer Dz(static_cast<long>(D));
    long sum = 0;
    for (long k = 1; k < n; ++k)
        sum += mpz_kronecker(Dz.get_mpz_t(), Integer(k).get_mpz_t()) * k;
    const long w = D == -4 ? 4 : D == -3 ? 6 : 2;
    return -w * sum / (2 * n);
}

std::string str_of(const std::vector<std::string>& parts)
{
    std::ostringstream os;
    for (const auto& s : parts)
        os << s;
    return os.str();
}

}  // namespace

SuiteResult suite_forms_vs_dirichlet(long max_abs_d)
{
    Tally t("reduced forms vs Dirichlet sum");
    for (std::int64_t D = -3; D >= -max_abs_d; --D) {
        if (!fundamental(D))
            continue;
        const long forms = static_cast<long>(class_number_of_discriminant(D));
        const long analytic = dirichlet_class_number(D);
        t.check(forms == analytic, [&] {
            return str_of({"D = ", std::to_string(D), ": forms ", std::to_string(forms), ", formula ",
                           std::to_string(analytic)});
        });
    }
    return t.finish();
}

SuiteResult suite_recurrence_matrix_vs_iteration(int specs, int max_n)
{
    Tally t("recurrence matrix power vs iteration");
    std::mt19937_64 rng(97);
    for (int s = 0; s < specs; ++s) {
        RecurrenceSpec spec{static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 201) - 100,
                            static_cast<long>(rng() % 201) - 100};
        const Integer m = static_cast<unsigned long>(2 + rng() % 1000000);
        Integer f0 = 0, f1 = 0, f2 = 1;
        for (int n = 0; n <= max_n; ++n) {
            const Integer got = f_index_mod(spec, n, m);
            t.check(got == mod(f0, m), [&] {
                return str_of({"spec (", spec.a2.get_str(), ",", spec.a1.get_str(), ",", spec.a0.get_str(),
                               ") n = ", std::to_string(n)});
            });
            Integer f3 = mod(spec.a2 * f2 + spec.a1 * f1 + spec.a0 * f0, m);
            f0 = f1;
            f1 = f2;
            f2 = f3;
        }
    }
    return t.finish();
}

SuiteResult suite_sum_ef(int pairs)
{
    Tally t("sum of e*f over random fields and primes");
    std::mt19937_64 rng(1000);
    const auto primes = primes_between(2, 500);
    int done = 0;
    while (done < pairs) {
        const int n = 3 + static_cast<int>(rng() % 2);
        std::vector<Integer> cs;
        for (int i = 0; i < n; ++i)
            cs.emplace_back(static_cast<long>(rng() % 61) - 30);
        cs.emplace_back(1);
        IntPoly f(cs);
        if (!is_irreducible_over_q(f))
            continue;
        NumberField K = make_field(f);
        const Integer p = primes[rng() % primes.size()];
        std::vector<PrimeFactor> fs;
        try {
            fs = split_prime(K, p);
        } catch (const SplittingUndetermined&) {
            continue;
        }
        ++done;
        int total = 0;
        Integer norm_product = 1;
        for (const auto& pf : fs) {
            total += pf.e * pf.f;
            const IdealHNF P = ideal_from_two_generators(K, p, pf.generator);
            t.check(P.norm == ipow(p, static_cast<unsigned long>(pf.f)), [&] {
                return "N(P) != p^f for " + f.to_string() + " at p = " + p.get_str();
            });
            norm_product *= ipow(P.norm, static_cast<unsigned long>(pf.e));
        }
        t.check(total == n, [&] { return "sum ef != n for " + f.to_string() + " at p = " + p.get_str(); });
        t.check(norm_product == ipow(p, static_cast<unsigned long>(n)),
                [&] { return "prod N(P)^e != p^n for " + f.to_string() + " at p = " + p.get_str(); });
    }
    return t.finish();
}

SuiteResult suite_fermat_membership(const std::string& data_dir)
{
    Tally t("Fermat membership in condition 2");
    auto fields = bundled(data_dir, {"examples.csv", "table1_cubic.csv", "table2_quartic.csv"});
    for (const auto& F : fields) {
        for (auto p64 : primes_between(3, 100)) {
            const Integer p = p64;
            std::vector<PrimeFactor> fs;
            try {
                fs = split_prime(F.field, p);
            } catch (const SplittingUndetermined&) {
                continue;
            }
            if (!applicability_guard(F.field, p, fs).ok)
                continue;
            for (const auto& e : condition2(F.field, p, F.unit).per_prime)
                t.check(e.fermat_ok, [&] {
                    return F.record.label + " at p = " + p.get_str() + ", prime " + std::to_string(e.prime.label);
                });
        }
    }
    for (auto p64 : primes_between(5, 200)) {
        auto inst = make_pure_cubic(p64);
        for (const auto& e : condition2(inst.field, p64, UnitData{inst.unit, 2, std::nullopt}).per_prime)
            t.check(e.fermat_ok, [&] { return "pure cubic at p = " + std::to_string(p64); });
    }
    return t.finish();
}

SuiteResult suite_crt_and_degree_one(const std::string& data_dir)
{
    Tally t("split CRT and degree-one equivalences");
    auto fields = bundled(data_dir, {"examples.csv", "table1_cubic.csv", "table2_quartic.csv"});
    auto run = [&](const std::string& label, const NumberField& K, const UnitData& u, const Integer& p) {
        std::vector<PrimeFactor> fs;
        try {
            fs = split_prime(K, p);
        } catch (const SplittingUndetermined&) {
            return;
        }
        if (!applicability_guard(K, p, fs).ok)
            return;
        if (K.degree() == 3 && classify_cubic(fs) == SplitShape::SplitCompletely) {
            const bool crt = condition2_split_crt_check(K, p, u.epsilon);
            t.check(crt == condition2(K, p, u).holds, [&] { return label + " CRT at p = " + p.get_str(); });
        }
        for (const auto& pf : fs) {
            if (pf.e == 1 && pf.f == 1)
                t.check(degree_one_exponent_check(K, p, u.epsilon, pf),
                        [&] { return label + " degree-one prime at p = " + p.get_str(); });
        }
    };
    for (const auto& F : fields)
        for (auto p64 : primes_between(3, 300))
            run(F.record.label, F.field, F.unit, Integer(p64));
    for (auto p64 : primes_between(5, 300)) {
        auto inst = make_pure_cubic(p64);
        run("pure cubic", inst.field, UnitData{inst.unit, 2, std::nullopt}, Integer(p64));
    }
    return t.finish();
}

SuiteResult suite_recurrence_consistency(const std::string& data_dir, unsigned long pmax)
{
    Tally t("third-order recurrence screen vs condition 2");
    std::vector<std::pair<std::string, std::pair<NumberField, FieldElement>>> cubics;
    for (auto& F : bundled(data_dir, {"examples.csv", "table1_cubic.csv"})) {
        if (F.field.degree() == 3)
            cubics.push_back({F.record.label, {F.field, F.unit.epsilon}});
    }
    for (const auto& [label, ke] : cubics) {
        const auto& [K, eps] = ke;
        const RecurrenceSpec spec = spec_from_unit(K, eps);
        const Integer d = discriminant(spec.companion());
        for (auto p64 : primes_between(3, pmax)) {
            const Integer p = p64;
            if (d % p == 0)
                continue;
            ConsistencyReport rep = cross_check(K, eps, spec, p);
            t.check(!rep.violation, [&] { return label + " at p = " + p.get_str(); });
        }
    }
    return t.finish();
}

std::vector<SuiteResult> run_all_suites(const std::string& data_dir)
{
    return {suite_forms_vs_dirichlet(),          suite_recurrence_matrix_vs_iteration(),
            suite_sum_ef(),                      suite_fermat_membership(data_dir),
            suite_crt_and_degree_one(data_dir),      suite_recurrence_consistency(data_dir)};
}

}  // namespace prat
