#pragma once

#include "fareyaf/fraction.hpp"

#include <string>
#include <vector>

namespace farey {

// Finite continued fraction [a1,...,at] = 1/(a1 + 1/(a2 + ...)) with value in [0,1].
// Zero is the empty expansion, one is [1]; every other value has a_t >= 2.
class ContinuedFraction {
public:
    enum class Kind { zero, one, interior };

    ContinuedFraction() = default;

    // Requires canonical terms; throws std::invalid_argument otherwise.
    static ContinuedFraction fromTerms(std::vector<BigInt> terms);
    // Accepts a leading 0 (dropped) and a trailing 1 (merged into the previous term).
    static ContinuedFraction normalize(std::vector<BigInt> terms);
    static ContinuedFraction zero() { return {}; }
    static ContinuedFraction one() { return fromTerms({BigInt(1)}); }
    static ContinuedFraction parse(const std::string& text);

    Kind kind() const;
    const std::vector<BigInt>& terms() const { return terms_; }
    std::size_t length() const { return terms_.size(); }
    BigInt termSum() const;
    std::string str() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<BigInt> terms_;
};

ContinuedFraction cfEncode(const Fraction& x);
Fraction cfDecode(const ContinuedFraction& cf);

// Value of an arbitrary list of positive terms (no canonical form required).
Fraction cfValue(const std::vector<BigInt>& terms);

// Convergents p_i/q_i of [a1..ai] for i = 1..t.
std::vector<Fraction> convergents(const std::vector<BigInt>& terms);

// ht(x) = min{n : x = r(n,k) for some k}; equals (sum of CF terms) - 1, and 0 for x = 0.
std::int64_t height(const Fraction& x);

// All canonical expansions with term sum <= n, excluding zero, in no particular order.
std::vector<ContinuedFraction> continuedFractionsUpToSum(std::int64_t n);

}  // namespace farey
