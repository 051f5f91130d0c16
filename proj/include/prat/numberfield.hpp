#pragma once

#include "prat/integer.hpp"
#include "prat/matrix.hpp"
#include "prat/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prat {

struct Signature {
    int real = 0;     // r1
    int complex = 0;  // r2
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// An element of K as integer coordinates over the field's integral basis,
/// divided by a positive denominator. Kept normalized: gcd(den, content) = 1.
struct FieldElement {
    std::vector<Integer> coords;
    Integer den = 1;

    FieldElement() = default;
    explicit FieldElement(std::vector<Integer> c, Integer d = 1);

    bool is_integral() const { return den == 1; }
    bool is_zero() const;
    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// K = Q(alpha) for a monic irreducible defining polynomial, together with an
/// integral basis written in powers of alpha. Immutable after construction.
class NumberField {
public:
    const IntPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    const Integer& poly_disc() const { return disc_; }
    Signature signature() const { return sig_; }
    /// (n, r1, r2) is (3, 1, 1) or (4, 0, 2).
    bool criterion_eligible() const;
    bool has_power_basis() const { return power_basis_; }
    /// Row i holds basis element b_i in the coordinates 1, alpha, ..., alpha^(n-1).
    const RatMatrix& basis() const { return basis_; }
    /// [O : Z[alpha]] for the stored basis.
    const Integer& index() const { return index_; }

    FieldElement one() const;
    FieldElement from_integer(const Integer& c) const;
    /// alpha^k for 0 <= k < n.
    FieldElement alpha_power(int k) const;
    FieldElement from_power(const std::vector<Rational>& coeffs) const;
    FieldElement from_power(const std::vector<Integer>& coeffs, const Integer& den = 1) const;
    std::vector<Rational> to_power(const FieldElement& a) const;
    /// g(alpha) for a polynomial with integer coefficients.
    FieldElement eval_poly(const IntPoly& g) const;

    /// Structure constants: coordinates of b_i * b_j.
    const std::vector<Integer>& product_coords(int i, int j) const { return table_[i][j]; }

    /// Matrix of multiplication by an integral element (columns = images of b_j).
    IntMatrix multiplication_matrix(const FieldElement& a) const;

    friend NumberField make_field(const IntPoly& f, std::optional<RatMatrix> basis);

private:
    IntPoly poly_;
    Integer disc_;
    Signature sig_;
    bool power_basis_ = true;
    RatMatrix basis_;
    RatMatrix basis_inv_;
    Integer index_ = 1;
    std::vector<std::vector<std::vector<Integer>>> table_;
};

/// Builds K from a monic irreducible polynomial of degree 2..4 and an optional
/// integral basis (default: the power basis). Degree other than 3/4 or a
/// signature outside {(1,1), (0,2)} is accepted but not criterion-eligible.
NumberField make_field(const IntPoly& f, std::optional<RatMatrix> basis = std::nullopt);

/// Exact irreducibility over Q for monic polynomials of degree <= 4.
bool is_irreducible_over_q(const IntPoly& f);

FieldElement add(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement sub(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement mul(const NumberField& K, const FieldElement& a, const FieldElement& b);
FieldElement negate(const FieldElement& a);
/// Exact inverse via the adjugate of the multiplication matrix.
FieldElement inverse(const NumberField& K, const FieldElement& a);
Rational norm(const NumberField& K, const FieldElement& a);
/// Characteristic polynomial of multiplication by a (integral a), monic, integer.
IntPoly characteristic_poly(const NumberField& K, const FieldElement& a);

/// a^e with coordinates reduced mod m after every product; a must be
/// integral. Result coordinates lie in [0, m).
FieldElement pow_mod(const NumberField& K, const FieldElement& a, const Integer& exponent, const Integer& m);
FieldElement mul_mod(const NumberField& K, const FieldElement& a, const FieldElement& b, const Integer& m);
FieldElement reduce_mod(const FieldElement& a, const Integer& m);

/// Power-basis coordinates rendered as "1 + 5*a + 15*a^3".
std::string format_element(const NumberField& K, const FieldElement& a, const std::string& var = "a");

// ---------------------------------------------------------------- primes

/// Dedekind's criterion: is Z[alpha] maximal at p?
bool dedekind_p_maximal(const IntPoly& f, const Integer& p);
/// Same, for a field stored on its power basis (otherwise DomainError).
bool dedekind_p_maximal(const NumberField& K, const Integer& p);

struct PrimeFactor {
    Integer p;
    ModPoly generator;  // P = (p, generator(alpha))
    int e = 1;
    int f = 1;
    int label = 1;  // 1-based, stable
};

/// Splitting of p read off f mod p, certified by p not dividing d(f), by
/// Dedekind on the power basis, or by p not dividing the ingested basis index.
/// Otherwise throws SplittingUndetermined.
std::vector<PrimeFactor> split_prime(const NumberField& K, const Integer& p);

enum class SplitShape { SplitCompletely, OneTwo, Inert, Other };
SplitShape classify_cubic(const std::vector<PrimeFactor>& factors);
std::string shape_name(SplitShape s);

// ---------------------------------------------------------------- ideals

/// Ideal as a full-rank lattice in basis coordinates: upper-triangular
/// column HNF, h[row][col], positive diagonal, entries above the diagonal
/// reduced into [0, diagonal of their row).
struct IdealHNF {
    IntMatrix h;
    Integer norm;

    friend bool operator==(const IdealHNF&, const IdealHNF&) = default;
};

/// Column HNF of the lattice spanned by `columns` (each of length n).
IdealHNF hnf_from_columns(const std::vector<std::vector<Integer>>& columns, int n);
IdealHNF unit_ideal(const NumberField& K);
IdealHNF principal_ideal(const NumberField& K, const FieldElement& a);
IdealHNF ideal_from_two_generators(const NumberField& K, const Integer& p, const ModPoly& g);
IdealHNF ideal_multiply(const NumberField& K, const IdealHNF& A, const IdealHNF& B);
IdealHNF ideal_power(const NumberField& K, const IdealHNF& A, int k);
bool ideal_contains(const NumberField& K, const IdealHNF& A, const FieldElement& x);

}  // namespace prat
