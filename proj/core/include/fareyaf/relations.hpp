#pragma once

#include "fareyaf/paths.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace farey::paths {

struct CheckResult {
    std::string equation;
    std::string statement;
    std::map<std::string, std::int64_t> indices;
    bool pass = false;
    std::optional<Witness> witness;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool allPass() const;
    std::size_t failures() const;
    const CheckResult* firstFailure() const;
    void append(const SuiteReport& other);
};

struct RelationOptions {
    // Also evaluate the literal item "v_n^* w_{n-1} = 0", which does not hold.
    bool includeLiteralItem = false;
    // Membership of generators in A_r and in the commutant of A_r.
    bool includeMembership = true;
};

// Edge projections, support, intertwining and partial-isometry relations, the vanishing products,
// the nonzero-product list, v_n^2 = v_n v_{n+-1} v_n = 0, braid relations, locality and membership.
SuiteReport verifyRelationSuite(const GeneratorSet& gens, const RelationOptions& options = {});
SuiteReport verifyRelationSuite(std::int64_t N, const Rational& lambda);

// Matrix units and the decomposition of the floor-N representation.
SuiteReport verifyPathModel(const GeneratorSet& gens);

// R_n(a) R_{n+1}(a+b) R_n(b) = R_{n+1}(b) R_n(a+b) R_{n+1}(a) with R_n(t) = 1 + t v_n.
// Both sides have degree <= 2 in each of a and b, so agreement on a 3x3 grid of distinct
// values per axis proves the identity at this floor.
SuiteReport yangBaxterCheck(const GeneratorSet& gens, const std::vector<Rational>& axis = {0, 1, 2});

// E_n, F_n projections and the braiding relations, with the dominance E_n E_{n+-1} E_n <= tau E_n
// certified by tau E_n - E_n E_{n+1} E_n = tau * (exact projection).
SuiteReport verifyBraidingSuite(const GeneratorSet& gens);
SuiteReport verifyBraidingSuite(std::int64_t N, const Rational& lambda);

// op lies in A_r: supported on equal tails beyond floor r, independent of the tail.
std::optional<Witness> membershipViolation(const SparseOperator& op, std::int64_t r);
// op commutes with A_r: supported on equal prefixes up to floor r, independent of the prefix.
std::optional<Witness> commutantViolation(const SparseOperator& op, std::int64_t r);

std::string reportToJson(const SuiteReport& report);
std::string reportToText(const SuiteReport& report, bool failuresOnly = false);

}  // namespace farey::paths
