// prat: command-line front end for the p-rationality engine.

#include "prat/errors.hpp"
#include "prat/families.hpp"
#include "prat/harness.hpp"
#include "prat/rationality.hpp"
#include "prat/recurrence.hpp"
#include "prat/selftest.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef PRAT_DATA_DIR
#define PRAT_DATA_DIR "data"
#endif

using namespace prat;

namespace {

// Exit codes
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInvariant = 2;

std::string superscript(int k)
{
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(k))
        out += digits[c - '0'];
    return out;
}

// "1 + 5α + 15α³"
std::string pretty(const NumberField& K, const FieldElement& x, const std::string& var = "α")
{
    std::vector<Rational> c = K.to_power(x);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        if (c[i] == 0)
            continue;
        Rational a = abs(c[i]);
        os << (first ? (c[i] < 0 ? "-" : "") : (c[i] < 0 ? " - " : " + "));
        if (i == 0 || a != 1)
            os << (a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")");
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << superscript(i);
        first = false;
    }
    return first ? "0" : os.str();
}

// Representatives in (-p/2, p/2], so x - 1 reads as such rather than x + 2.
std::string symmetric(const ModPoly& g, const std::string& var)
{
    std::vector<Integer> cs = g.coeffs();
    for (auto& c : cs)
        if (2 * c > g.modulus())
            c -= g.modulus();
    return IntPoly(cs).to_string(var);
}

std::string splitting_summary(const NumberField& K, const std::vector<PrimeFactor>& fs)
{
    const int n = K.degree();
    if (fs.size() == 1 && fs[0].e == 1)
        return "inert, f = " + std::to_string(fs[0].f);
    if (fs.size() == 1 && fs[0].e == n)
        return "totally ramified";
    if (static_cast<int>(fs.size()) == n)
        return "split completely";
    std::string s;
    for (std::size_t i = 0; i < fs.size(); ++i)
        s += (i ? " " : "") + std::string("(e=") + std::to_string(fs[i].e) + ",f=" + std::to_string(fs[i].f) + ")";
    return s;
}

std::string reasons_text(const Verdict& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.reasons.size(); ++i)
        s += (i ? ", " : "") + reason_name(v.reasons[i]);
    return s;
}

std::string verdict_line(const Verdict& v, const Integer& p)
{
    const std::string ps = p.get_str();
    switch (v.status) {
    case VerdictStatus::PRational: return ps + "-rational";
    case VerdictStatus::NotPRational: return "not " + ps + "-rational (" + reasons_text(v) + ")";
    case VerdictStatus::Undetermined: return "undetermined, " + ps + "? (" + reasons_text(v) + ")";
    case VerdictStatus::NotApplicable: return "not applicable: " + v.guard_reason;
    }
    return "?";
}

std::vector<Integer> coeff_list(const std::string& s) { return parse_poly(s).coeffs(); }

std::vector<Integer> padded(std::vector<Integer> v, std::size_t n)
{
    if (v.size() > n)
        throw InputError("too many coefficients: expected at most " + std::to_string(n));
    v.resize(n, 0);
    return v;
}

struct CheckArgs {
    std::string poly, unit, basis, torsion_gen, aux_gen_poly, aux_power_gen;
    std::string unit_den = "1", torsion_gen_den = "1", h, prime, aux_q;
    int torsion_order = 2;
};

int run_check(const CheckArgs& a)
{
    FieldRecord r;
    r.label = "input";
    r.poly = parse_poly(a.poly);
    const auto n = static_cast<std::size_t>(r.poly.degree());
    r.unit = padded(coeff_list(a.unit), n);
    r.unit_den = parse_integer(a.unit_den);
    r.class_number = parse_integer(a.h);
    r.torsion_order = a.torsion_order;
    if (!a.basis.empty()) {
        RatMatrix m;
        std::stringstream rows(a.basis);
        std::string row;
        while (std::getline(rows, row, ';')) {
            std::vector<Rational> rr;
            std::stringstream items(row);
            std::string item;
            while (std::getline(items, item, ','))
                rr.push_back(parse_rational(item));
            m.push_back(rr);
        }
        r.basis = m;
    }
    if (!a.torsion_gen.empty()) {
        r.torsion_gen = padded(coeff_list(a.torsion_gen), n);
        r.torsion_gen_den = parse_integer(a.torsion_gen_den);
    }
    if (!a.aux_q.empty() || !a.aux_gen_poly.empty() || !a.aux_power_gen.empty()) {
        if (a.aux_q.empty() || a.aux_gen_poly.empty() || a.aux_power_gen.empty())
            throw InputError("--aux-q, --aux-gen-poly and --aux-power-gen go together");
        r.aux = AuxIdealData{parse_integer(a.aux_q), parse_poly(a.aux_gen_poly),
                             padded(coeff_list(a.aux_power_gen), n)};
    }
    const Integer p = parse_integer(a.prime);
    if (p < 2 || !is_prime(p))
        throw InputError("--prime must be a prime");

    PreparedField F = prepare(r);
    const NumberField& K = F.field;
    std::cout << "field: " << r.poly.to_string() << ", signature (" << K.signature().real << ","
              << K.signature().complex << "), d(f) = " << K.poly_disc().get_str() << "\n";
    std::cout << "unit: ε = " << pretty(K, F.unit.epsilon) << ", N(ε) = " << norm(K, F.unit.epsilon).get_str()
              << "\n";
    Verdict v = verdict(F, p);
    std::cout << "p = " << p.get_str() << ": splitting " << splitting_summary(K, v.factors) << "\n";
    for (const auto& pf : v.factors)
        std::cout << "  P" << pf.label << " = (" << p.get_str() << ", " << symmetric(pf.generator, "α")
                  << "), e = " << pf.e << ", f = " << pf.f << "\n";
    if (v.condition2) {
        std::cout << "condition 2:\n";
        for (const auto& e : v.condition2->per_prime) {
            std::cout << "  P" << e.prime.label << ": ε^" << e.exponent.get_str() << " ≡ " << pretty(K, e.residue)
                      << " (mod " << e.modulus.get_str() << "), "
                      << (e.congruent ? "≡ 1" : "≢ 1") << " mod P" << e.prime.label << superscript(e.prime.e + 1)
                      << "\n";
        }
        std::cout << "  " << (v.condition2->holds ? "holds" : "fails") << "\n";
    }
    if (v.condition1) {
        const auto& c1 = *v.condition1;
        std::cout << "condition 1: h = " << r.class_number->get_str() << ", ";
        switch (c1.branch) {
        case Condition1Branch::TrivialClassNumber: std::cout << p.get_str() << " ∤ h\n"; break;
        case Condition1Branch::SplitCyclicIndex:
            std::cout << "Log index " << c1.index->get_str() << (*c1.holds ? ", holds" : ", fails") << "\n";
            break;
        case Condition1Branch::Undetermined: std::cout << "undetermined (" << c1.note << ")\n"; break;
        }
    }
    std::cout << "verdict: " << verdict_line(v, p) << "\n";
    return kOk;
}

int run_table(const std::string& input, std::uint64_t pmin, std::uint64_t pmax, const std::string& format)
{
    auto loaded = load_records(input, format_for_path(input));
    for (const auto& s : loaded.skipped)
        std::cerr << input << ":" << s.line << ": skipped " << s.label << ": " << s.message << "\n";
    auto rows = reproduce_table(loaded.fields, pmin, pmax);
    std::cout << (format == "csv" ? render_table_csv(rows) : render_table_text(rows));
    return kOk;
}

int run_scan(const std::string& input, std::uint64_t xmax, bool verbose)
{
    auto loaded = load_records(input, format_for_path(input));
    for (const auto& s : loaded.skipped)
        std::cerr << input << ":" << s.line << ": skipped " << s.label << ": " << s.message << "\n";
    for (const auto& F : loaded.fields) {
        DensityResult d = density_scan(F, xmax);
        std::cout << F.record.label << ": " << d.count << " p-rational primes in [5, " << xmax << "], "
                  << d.undetermined << " undetermined, " << d.not_applicable << " not applicable, " << d.errors
                  << " errors; count / log x = " << std::fixed << std::setprecision(4) << d.ratio_to_log_x << "\n";
        std::cout.unsetf(std::ios::floatfield);
        if (verbose) {
            for (const auto& c : d.per_prime)
                std::cout << "  " << c.p.get_str() << " " << (c.is_error() ? "error: " + c.error : status_name(c.status))
                          << "\n";
        }
    }
    return kOk;
}

// " + 3 F(n)", " - F(n)", "" for a zero coefficient
std::string signed_term(const Integer& c, const std::string& name, bool leading = false)
{
    if (c == 0)
        return "";
    std::string sign = c < 0 ? (leading ? " -" : " - ") : (leading ? " " : " + ");
    Integer a = abs(c);
    return sign + (a == 1 ? "" : a.get_str() + " ") + name;
}

int run_recurrence(const std::string& poly, const std::string& unit, const std::string& prime)
{
    IntPoly f = parse_poly(poly);
    if (f.degree() != 3)
        throw InputError("recurrence: --poly must be a cubic");
    NumberField K = make_field(f);
    FieldElement eps;
    if (unit.empty()) {
        if (f.coeff(0) != 1 && f.coeff(0) != -1)
            throw InputError("recurrence: without --unit, alpha must be a unit (constant term +-1)");
        eps = K.alpha_power(1);
    } else {
        eps = K.from_power(padded(coeff_list(unit), 3));
        validate_unit(K, UnitData{eps, 2, std::nullopt});
    }
    const Integer p = parse_integer(prime);
    if (p < 3 || !is_prime(p))
        throw InputError("--prime must be an odd prime");
    RecurrenceSpec spec = spec_from_unit(K, eps);
    std::cout << "recurrence: F(n+3) =" << signed_term(spec.a2, "F(n+2)", true) << signed_term(spec.a1, "F(n+1)")
              << signed_term(spec.a0, "F(n)") << ", F0 = F1 = 0, F2 = 1\n";
    std::cout << "minimal polynomial of ε: " << spec.companion().to_string() << "\n";
    if (discriminant(spec.companion()) % p == 0) {
        std::cout << "not applicable: " << p.get_str() << " divides the discriminant\n";
        return kOk;
    }
    ConsistencyReport rep = cross_check(K, eps, spec, p);
    std::cout << "splitting: " << shape_name(rep.shape) << "\n";
    std::cout << "F(" << rep.screen.index.get_str() << ") ≡ " << rep.screen.value.get_str() << " (mod "
              << Integer(p * p).get_str() << ")" << (rep.screen.nonzero ? ", nonzero" : ", zero") << "\n";
    std::cout << "condition 2 witness: " << (rep.witness ? "yes" : "no") << "\n";
    std::cout << "consistent: " << (rep.violation ? "NO" : "yes") << "\n";
    return rep.violation ? kInvariant : kOk;
}

int run_pure_cubic(std::uint64_t pmin, std::uint64_t pmax, const std::string& h_data)
{
    std::map<std::uint64_t, Integer> h;
    if (!h_data.empty())
        h = load_prime_values(h_data);
    auto rows = pure_cubic_scan(pmin, pmax, h);
    std::size_t holds = 0, flagged = 0;
    std::cout << "p,splitting,condition2,class_number\n";
    for (const auto& r : rows) {
        holds += r.condition2_holds;
        std::string hc = "h-unknown";
        if (r.class_number) {
            hc = r.class_number->get_str() + (*r.p_divides_h ? " p|h" : "");
            flagged += *r.p_divides_h;
        }
        std::cout << r.p << "," << shape_name(r.shape) << "," << (r.condition2_holds ? "holds" : "fails") << "," << hc
                  << "\n";
    }
    std::cout << "# condition 2 holds at " << holds << " of " << rows.size() << " primes; " << flagged
              << " with p | h\n";
    return kOk;
}

int run_ggc(std::uint64_t xmax, double T)
{
    auto cands = ggc_scan(xmax, T);
    bool bound_ok = true;
    std::cout << "p,n,m,threshold,radicand,h_K2,class_number_bound,verdict\n";
    for (const auto& c : cands) {
        bound_ok = bound_ok && c.bound_ok;
        std::cout << c.p << "," << c.n << "," << c.m << "," << std::setprecision(6) << c.threshold << ","
                  << c.radicand << "," << c.h_k2 << "," << c.class_number_bound << ","
                  << (c.ggc_holds ? "GgcHolds" : "Unknown") << (c.bound_ok ? "" : " (bound exceeded)") << "\n";
    }
    std::cout << "# " << cands.size() << " square-divisor primes up to " << xmax << "\n";
    return bound_ok ? kOk : kInvariant;
}

int run_selftest(const std::string& data_dir)
{
    bool ok = true;
    for (const auto& r : run_all_suites(data_dir)) {
        ok = ok && r.ok();
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.checks << " checks, " << r.failures
                  << " failures (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
        if (!r.first_failure.empty())
            std::cout << "; first: " << r.first_failure;
        std::cout << "\n";
    }
    return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"p-rationality of complex cubic and pure imaginary quartic fields"};
    app.require_subcommand(1);

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "verdict for one field and prime");
    check->set_help_flag("--help", "Print this help message and exit");
    check->add_option("--poly", ca.poly, "defining polynomial, coefficients low degree first, ';'-separated")
        ->required();
    check->add_option("--unit", ca.unit, "fundamental unit in the power basis")->required();
    check->add_option("--unit-den", ca.unit_den, "denominator of the unit");
    check->add_option("--h", ca.h, "class number")->required();
    check->add_option("--prime", ca.prime, "the prime p")->required();
    check->add_option("--basis", ca.basis, "integral basis rows 'a,b,c;...' in powers of alpha");
    check->add_option("--torsion-order", ca.torsion_order, "number of roots of unity");
    check->add_option("--torsion-gen", ca.torsion_gen, "primitive root of unity in the power basis");
    check->add_option("--torsion-gen-den", ca.torsion_gen_den, "denominator of the torsion generator");
    check->add_option("--aux-q", ca.aux_q, "prime under the auxiliary ideal");
    check->add_option("--aux-gen-poly", ca.aux_gen_poly, "second generator of the auxiliary ideal");
    check->add_option("--aux-power-gen", ca.aux_power_gen, "generator of the p-th power of the auxiliary ideal");

    std::string input, format = "text";
    std::uint64_t pmin = 5, pmax = 100, xmax = 100;
    auto* table = app.add_subcommand("table", "exception table over a prime range");
    table->add_option("--input", input, "records (.csv or .json)")->required();
    table->add_option("--pmin", pmin);
    table->add_option("--pmax", pmax);
    table->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

    bool verbose = false;
    auto* scan = app.add_subcommand("scan", "count p-rational primes up to xmax");
    scan->add_option("--input", input, "records (.csv or .json)")->required();
    scan->add_option("--xmax", xmax, "largest prime to test")->capture_default_str();
    scan->add_flag("--verbose", verbose, "list every prime");

    std::string rpoly, runit, rprime;
    auto* rec = app.add_subcommand("recurrence", "third-order recurrence screen and cross-check");
    rec->add_option("--poly", rpoly, "cubic field polynomial; without --unit, alpha itself is the unit")
        ->required();
    rec->add_option("--unit", runit, "unit in the power basis");
    rec->add_option("--prime", rprime)->required();

    std::string h_data;
    std::uint64_t cmin = 5, cmax = 100;
    auto* cubic = app.add_subcommand("pure-cubic", "condition 2 for Q(cbrt(p^3 - 1)) at p");
    cubic->add_option("--pmin", cmin);
    cubic->add_option("--pmax", cmax);
    cubic->add_option("--h-data", h_data, "p,h class number file");

    std::uint64_t gmax = 1000;
    double T = 1.0;
    auto* ggc = app.add_subcommand("ggc", "square-divisor primes and the h(K2) criterion");
    ggc->add_option("--xmax", gmax, "search bound for p")->required();
    ggc->add_option("--T", T, "threshold exponent: n, m > (log p)^T")->required();

    std::string data_dir = PRAT_DATA_DIR;
    auto* self = app.add_subcommand("selftest", "run the invariant suites");
    self->add_option("--data", data_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check)
            return run_check(ca);
        if (*table)
            return run_table(input, pmin, pmax, format);
        if (*scan)
            return run_scan(input, xmax, verbose);
        if (*rec)
            return run_recurrence(rpoly, runit, rprime);
        if (*cubic)
            return run_pure_cubic(cmin, cmax, h_data);
        if (*ggc)
            return run_ggc(gmax, T);
        if (*self)
            return run_selftest(data_dir);
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kInvariant;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kInputError;
}
