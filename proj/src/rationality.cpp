#include "prat/rationality.hpp"

#include "prat/errors.hpp"
#include "prat/padic.hpp"

#include <algorithm>

namespace prat {

namespace {

constexpr int kMaxPrecision = 16;

// Image of x in Z_p under alpha -> root, modulo m; coordinates must be p-integral.
Integer embed(const NumberField& K, const FieldElement& x, const Integer& root, const Integer& p, const Integer& m)
{
    Integer acc = 0;
    Integer power = 1;
    for (const Rational& c : K.to_power(x)) {
        if (c.get_den() % p == 0)
            throw DomainError("log index: element is not p-integral in the power basis");
        Integer term = mod(c.get_num() * inverse_mod(c.get_den(), m), m);
        acc = mod(acc + term * power, m);
        power = mod(power * root, m);
    }
    return acc;
}

std::vector<Integer> simple_roots_mod_p(const IntPoly& f, const Integer& p)
{
    std::vector<Integer> roots;
    for (const auto& mf : factor_mod_p(f, p)) {
        if (mf.factor.degree() != 1 || mf.multiplicity != 1)
            return {};
        roots.push_back(mod(-mf.factor.coeff(0), p));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool splits_completely(const NumberField& K, const Integer& p)
{
    return static_cast<int>(simple_roots_mod_p(K.poly(), p).size()) == K.degree();
}

int capped_valuation(const Integer& value, const Integer& p, int cap)
{
    return value == 0 ? cap : valuation(value, p, cap);
}

struct Attempt {
    bool decided = false;
    bool nontrivial = false;
    std::vector<int> u_val;
    std::vector<int> l_val;
};

// One pass at precision k: u_i mod p^k, L_i mod p^(k+1).
Attempt attempt(const NumberField& K, const Integer& p, const std::vector<Integer>& roots, const FieldElement& g,
                const FieldElement& epsilon, int k)
{
    const int N = k + 1;
    const Integer pN = ipow(p, static_cast<unsigned long>(N));
    const Integer pk = pN / p;
    const Integer inv_pm1 = inverse_mod(p - 1, pk);

    std::vector<Integer> u, L;
    Attempt a;
    for (const Integer& r : roots) {
        const Integer alpha = hensel_lift_root(K.poly(), p, r, N).value;
        Integer gi = embed(K, g, alpha, p, pN);
        Integer ei = embed(K, epsilon, alpha, p, pN);
        Integer gp = 1, ep = 1;
        mpz_powm(gp.get_mpz_t(), gi.get_mpz_t(), Integer(p - 1).get_mpz_t(), pN.get_mpz_t());
        mpz_powm(ep.get_mpz_t(), ei.get_mpz_t(), Integer(p - 1).get_mpz_t(), pN.get_mpz_t());
        PadicApprox lg = padic_log(PadicApprox(gp, N, p));
        PadicApprox le = padic_log(PadicApprox(ep, N, p));
        if (lg.value % p != 0)
            throw InvariantViolation("log index: log of a principal unit is not divisible by p");
        u.push_back(mod(lg.value / p * inv_pm1, pk));
        L.push_back(le.value);
        a.u_val.push_back(capped_valuation(u.back(), p, k));
        a.l_val.push_back(le.valuation());
    }

    const auto j = static_cast<std::size_t>(std::min_element(a.l_val.begin(), a.l_val.end()) - a.l_val.begin());
    const int v = a.l_val[j];
    // L_t / L_j is known mod p^(N - v); one digit is all the test needs
    if (v >= N)
        return a;
    a.decided = true;
    const Integer pv = ipow(p, static_cast<unsigned long>(v));
    const Integer lj_inv = inverse_mod(L[j] / pv, p);
    for (std::size_t t = 0; t < roots.size(); ++t) {
        if (t == j)
            continue;
        Integer w = mod(u[t] - u[j] * (L[t] / pv) * lj_inv, p);
        if (w != 0)
            a.nontrivial = true;
    }
    return a;
}

}  // namespace

LogIndexResult log_index_split_cyclic(const NumberField& K, const Integer& p, const IdealHNF& Q,
                                      const FieldElement& g, const FieldElement& epsilon, int k,
                                      std::optional<std::vector<Integer>> roots)
{
    if (p < 3 || !is_prime(p))
        throw DomainError("log index: p must be an odd prime");
    if (k < 2)
        throw DomainError("log index: precision must be at least 2");
    std::vector<Integer> rs = roots ? *roots : simple_roots_mod_p(K.poly(), p);
    if (static_cast<int>(rs.size()) != K.degree())
        throw DomainError("log index: p does not split completely into simple roots");
    for (auto& r : rs) {
        r = mod(r, p);
        if (K.poly().eval(r) % p != 0)
            throw DomainError("log index: supplied residue is not a root of f mod p");
    }
    if (Q.norm % p == 0)
        throw DomainError("log index: auxiliary ideal must be prime to p");
    if (!g.is_integral() || !epsilon.is_integral())
        throw DomainError("log index: g and the unit must be integral");
    const unsigned long pe = p.get_ui();
    Rational ng = norm(K, g);
    if (abs(ng) != ipow(Q.norm, pe))
        throw DomainError("log index: |N(g)| differs from N(Q)^p");
    if (!ideal_contains(K, ideal_power(K, Q, static_cast<int>(pe)), g))
        throw DomainError("log index: g is not in Q^p");

    LogIndexResult result;
    for (int prec = k; prec <= kMaxPrecision; prec *= 2) {
        Attempt a = attempt(K, p, rs, g, epsilon, prec);
        result.precision = prec;
        result.u_valuations = a.u_val;
        result.unit_valuations = a.l_val;
        if (a.decided) {
            result.index = a.nontrivial ? p : Integer(1);
            return result;
        }
    }
    return result;
}

Condition1Report condition1(const PreparedField& F, const Integer& p)
{
    if (!F.record.class_number)
        throw InputError("condition1: class number missing for " + F.record.label);
    const Integer& h = *F.record.class_number;
    Condition1Report rep;
    if (h % p != 0) {
        rep.branch = Condition1Branch::TrivialClassNumber;
        rep.holds = true;
        return rep;
    }
    const NumberField& K = F.field;
    if (!splits_completely(K, p)) {
        rep.note = "p does not split completely";
        return rep;
    }
    if (valuation(h, p) != 1) {
        rep.note = "p-class group larger than p";
        return rep;
    }
    if (!F.record.aux) {
        rep.note = "no auxiliary ideal supplied";
        return rep;
    }
    const AuxIdealData& aux = *F.record.aux;
    if (aux.q == p) {
        rep.note = "auxiliary ideal lies over p";
        return rep;
    }
    const IdealHNF Q = ideal_from_two_generators(K, aux.q, ModPoly::reduce(aux.generator_poly, aux.q));
    const FieldElement g = K.from_power(aux.power_generator);
    LogIndexResult li;
    try {
        li = log_index_split_cyclic(K, p, Q, g, F.unit.epsilon);
    } catch (const DomainError& e) {
        throw InputError(std::string("auxiliary generator rejected: ") + e.what());
    }
    if (!li.index) {
        rep.note = "precision cap reached";
        return rep;
    }
    rep.branch = Condition1Branch::SplitCyclicIndex;
    rep.index = li.index;
    rep.holds = (*li.index == p);
    return rep;
}

bool Verdict::has(Reason r) const { return std::find(reasons.begin(), reasons.end(), r) != reasons.end(); }

Verdict verdict(const PreparedField& F, const Integer& p)
{
    if (!F.record.class_number)
        throw InputError("verdict: class number missing for " + F.record.label);
    Verdict v;
    v.factors = split_prime(F.field, p);
    GuardResult guard = applicability_guard(F.field, p, v.factors);
    if (!guard.ok) {
        v.status = VerdictStatus::NotApplicable;
        v.reasons = {Reason::Guard};
        v.guard_reason = guard.reason;
        return v;
    }
    const bool divisible = *F.record.class_number % p == 0;
    v.condition2 = condition2(F.field, p, F.unit);
    if (!v.condition2->holds) {
        v.status = VerdictStatus::NotPRational;
        v.reasons.push_back(Reason::TorsionNontrivial);
        if (divisible)
            v.reasons.push_back(Reason::ClassNumberDivisible);
        return v;
    }
    v.condition1 = condition1(F, p);
    if (divisible)
        v.reasons.push_back(Reason::ClassNumberDivisible);
    if (!v.condition1->holds) {
        v.status = VerdictStatus::Undetermined;
        v.reasons.push_back(Reason::Condition1Undetermined);
    } else {
        v.status = *v.condition1->holds ? VerdictStatus::PRational : VerdictStatus::NotPRational;
    }
    return v;
}

std::string status_name(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::PRational: return "PRational";
    case VerdictStatus::NotPRational: return "NotPRational";
    case VerdictStatus::Undetermined: return "Undetermined";
    case VerdictStatus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

std::string reason_name(Reason r)
{
    switch (r) {
    case Reason::ClassNumberDivisible: return "classNumberDivisible";
    case Reason::TorsionNontrivial: return "torsionNontrivial";
    case Reason::Guard: return "guard";
    case Reason::Condition1Undetermined: return "condition1Undetermined";
    }
    return "?";
}

}  // namespace prat
