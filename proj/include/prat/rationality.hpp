#pragma once

#include "prat/record.hpp"
#include "prat/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prat {

enum class Condition1Branch { TrivialClassNumber, SplitCyclicIndex, Undetermined };

struct Condition1Report {
    Condition1Branch branch = Condition1Branch::Undetermined;
    std::optional<Integer> index;
    std::optional<bool> holds;
    std::string note;
};

struct LogIndexResult {
    std::optional<Integer> index;  // 1 or p; empty when the precision cap was hit
    int precision = 0;             // k at which the index was decided
    std::vector<int> u_valuations;    // v_p(u_i), capped at precision
    std::vector<int> unit_valuations; // v_p(log eps_i^(p-1)), capped at precision
};

/// (Log(I_p) : Log(P_p)) for p split completely in K and a non-principal
/// class [Q] of order p, with g a generator of Q^p. Embeddings are taken at
/// the roots of f mod p in increasing order unless `roots` gives them
/// explicitly. Starts at precision k and doubles while the unit's log is too
/// close to zero to project it out, up to k = 16.
LogIndexResult log_index_split_cyclic(const NumberField& K, const Integer& p, const IdealHNF& Q,
                                      const FieldElement& g, const FieldElement& epsilon, int k = 2,
                                      std::optional<std::vector<Integer>> roots = std::nullopt);

/// Whether the Hilbert p-class field lies in the compositum of Z_p-extensions.
Condition1Report condition1(const PreparedField& F, const Integer& p);

enum class VerdictStatus { PRational, NotPRational, Undetermined, NotApplicable };
enum class Reason { ClassNumberDivisible, TorsionNontrivial, Guard, Condition1Undetermined };

struct Verdict {
    VerdictStatus status = VerdictStatus::Undetermined;
    std::vector<Reason> reasons;
    std::string guard_reason;
    std::vector<PrimeFactor> factors;
    std::optional<Condition2Report> condition2;
    std::optional<Condition1Report> condition1;

    bool has(Reason r) const;
};

Verdict verdict(const PreparedField& F, const Integer& p);

std::string status_name(VerdictStatus s);
std::string reason_name(Reason r);

}  // namespace prat
