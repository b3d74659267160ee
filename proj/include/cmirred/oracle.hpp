#pragma once

// Independent checks against the classifier: exhaustive divisor search over
// small prime fields, the discriminant identity behind the symmetric-factor
// argument, and randomized identity testing.

#include "cmirred/poly.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <variant>

namespace cmirred {

struct SearchBudget {
  /// Candidate divisors up to this total degree; the search needs
  /// floor(deg/2) to be exhaustive and reports BudgetExceeded otherwise.
  unsigned max_degree = 2;
  std::uint64_t max_field_size = 13;
  /// Enumerate only homogeneous candidates when the input is homogeneous.
  bool homogeneous_only = true;
  /// Upper bound on the number of candidates tried in full enumeration.
  std::uint64_t max_candidates = 10'000'000;
  /// For non-homogeneous input, enumerate only candidates whose leading form
  /// divides the input's leading form; still exhaustive, and the reported
  /// divisor is the same one full enumeration would report.
  bool prune_by_leading_form = false;
  std::optional<std::chrono::milliseconds> time_limit;
  /// Worker threads; the result does not depend on this.
  unsigned jobs = 1;
};

struct NoFactorFound {
  std::uint64_t candidates_tried = 0;
};

struct FactorFound {
  Polynomial divisor;  ///< monic under grlex
  Polynomial quotient;
  std::uint64_t candidates_tried = 0;
};

struct BudgetExceeded {
  std::string reason;
};

using SearchOutcome = std::variant<NoFactorFound, FactorFound, BudgetExceeded>;

/// Number of candidates the full (or homogeneous) enumeration would try.
std::uint64_t candidate_space_size(std::size_t arity, unsigned max_degree, std::uint64_t q, bool homogeneous);

/// Exhaustive search for a proper divisor of `p` over Prime(q). Candidates
/// are monic, enumerated by increasing degree and then in ascending
/// lexicographic order of their coefficient vectors (monomials in descending
/// grlex), so the first divisor found is reproducible.
SearchOutcome brute_force_factor_search(const Polynomial& p, const SearchBudget& budget);

struct DiscriminantReport {
  Polynomial reduced;           ///< f rewritten in (u, v) for the last two variables
  Polynomial expected_reduced;  ///< the closed-form quadratic in v
  Polynomial discriminant;      ///< computed b^2 - 4ac in v
  Polynomial expected_discriminant;
  bool reduced_matches;
  bool discriminant_matches;
};

/// Requires t != 0, t != 2 and m >= 3 (PreconditionError otherwise).
DiscriminantReport discriminant_report(const FieldSpec& field, unsigned m, const FieldElement& t);

/// True iff the reduced form and its v-discriminant both match the closed forms.
bool discriminant_check(const FieldSpec& field, unsigned m, const FieldElement& t);

/// Exact equality plus agreement at `trials` random points.
bool random_identity_test(const Polynomial& lhs, const Polynomial& rhs, unsigned trials, std::uint64_t seed = 1);

}  // namespace cmirred
