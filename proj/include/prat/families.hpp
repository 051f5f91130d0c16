#pragma once

#include "prat/numberfield.hpp"
#include "prat/torsion.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prat {

// ---------------------------------------------------------------- pure cubic

/// Q(cbrt(p^3 - 1)) with alpha^3 = p^3 - 1 and the unit eps = p^2 + p alpha + alpha^2 = 1/(p - alpha).
struct PureCubicInstance {
    Integer p;
    NumberField field;
    FieldElement unit;
};

/// Throws InvariantViolation if eps (p - alpha) != 1.
PureCubicInstance make_pure_cubic(const Integer& p);

struct PureCubicResult {
    std::uint64_t p = 0;
    SplitShape shape = SplitShape::Other;
    bool condition2_holds = false;
    std::optional<Integer> class_number;  // only when supplied
    std::optional<bool> p_divides_h;
};

/// condition2 at p for every prime pmin <= p <= pmax (pmin >= 5), with class
/// numbers looked up in `h_data` when present.
std::vector<PureCubicResult> pure_cubic_scan(std::uint64_t pmin, std::uint64_t pmax,
                                             const std::map<std::uint64_t, Integer>& h_data = {});

/// Reads "p,h" rows ('#' comments and a header line allowed).
std::map<std::uint64_t, Integer> load_prime_values(const std::string& path);

// ---------------------------------------------------------------- GGC

/// Largest n with n^2 | m (m >= 1), by trial division.
std::uint64_t largest_square_root_divisor(std::uint64_t m);

/// Squarefree part keeping the sign: r with m = r s^2, r squarefree.
std::int64_t squarefree_part(std::int64_t m);

struct GgcCandidate {
    std::uint64_t p = 0;
    std::uint64_t n = 0;  // largest with n^2 | p - 1
    std::uint64_t m = 0;  // largest with m^2 | p + 1
    double threshold = 0.0;  // (log p)^T
    std::int64_t radicand = 0;       // squarefree part of 1 - p^2
    std::int64_t discriminant = 0;   // of Q(sqrt(radicand))
    std::uint64_t h_k2 = 0;
    double class_number_bound = 0.0;
    bool ggc_holds = false;  // p does not divide h_k2
    bool bound_ok = false;   // h_k2 <= class_number_bound
};

/// Primes p = 1 mod 4 up to xmax with n, m > (log p)^T. xmax <= 10^7.
std::vector<GgcCandidate> square_divisor_scan(std::uint64_t xmax, double T);

/// Fundamental discriminant of Q(sqrt(r)) for squarefree r.
std::int64_t field_discriminant(std::int64_t radicand);
/// Number of roots of unity of Q(sqrt(r)), r < 0 squarefree.
int roots_of_unity_count(std::int64_t radicand);

/// h(Q(sqrt(radicand))) for a squarefree radicand < 0, by counting reduced forms.
std::uint64_t imag_quadratic_class_number(std::int64_t radicand);
/// h(D) for a negative discriminant D = 0, 1 mod 4, by counting reduced primitive forms.
std::uint64_t class_number_of_discriminant(std::int64_t D);

/// (omega sqrt(dK) / 4 pi)(log dK + 2 + gamma - log pi).
double class_number_bound(std::uint64_t dK, int omega);

struct KurodaResult {
    Rational q;
    bool valid = false;  // q in {1, 2}
};

/// q = 2 hL / (h1 h2 h3).
KurodaResult kuroda_check(const Integer& h1, const Integer& h2, const Integer& h3, const Integer& hL);

struct KurodaRow {
    std::uint64_t p = 0;
    Integer h1, h2, h3, hL;
};
std::vector<KurodaRow> load_kuroda_rows(const std::string& path);

/// square_divisor_scan plus h(K2) for K2 = Q(sqrt(1 - p^2)) and the class number bound.
std::vector<GgcCandidate> ggc_scan(std::uint64_t xmax, double T);

}  // namespace prat
