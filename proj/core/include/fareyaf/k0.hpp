#pragma once

#include "fareyaf/numbers.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace farey::k0 {

// sum_k coeffs[k] p_(level,k) with p_(n,0) = 1 and p_(n,k) = X^k + X^-k.
struct LevelPoly {
    std::int64_t level = 0;
    std::vector<BigInt> coeffs{BigInt(0)};

    static LevelPoly zero(std::int64_t level);
    static LevelPoly unit() { return {0, {BigInt(1)}}; }
    static LevelPoly basis(std::int64_t level, std::uint64_t k);
    void validate() const;
    std::string str() const;

    friend bool operator==(const LevelPoly&, const LevelPoly&) = default;
};

inline constexpr std::int64_t kMaxLevel = 20;

// Symmetric Laurent polynomial sum_{|d| <= halfDegree} c_d X^d.
class SymLaurent {
public:
    SymLaurent() : half_(0), coeffs_{BigInt(0)} {}
    // coefficients for degrees -half..half; throws if not symmetric
    SymLaurent(std::int64_t half, std::vector<BigInt> coeffs);

    static SymLaurent constant(const BigInt& c) { return SymLaurent(0, {c}); }

    std::int64_t halfDegree() const { return half_; }
    BigInt coefficient(std::int64_t degree) const;
    SymLaurent operator*(const SymLaurent& other) const;
    SymLaurent operator+(const SymLaurent& other) const;
    // X -> X^m
    SymLaurent substitutePower(std::int64_t m) const;
    std::string str() const;

    friend bool operator==(const SymLaurent& a, const SymLaurent& b);

private:
    void trim();
    std::int64_t half_;
    std::vector<BigInt> coeffs_;
};

// X^-1 + 1 + X
SymLaurent rho();
// prod_{k<n} rho(X^{2^k})
SymLaurent rhoN(std::int64_t n);
SymLaurent expandToLaurent(const LevelPoly& p);

// Multiplication by rho after X -> X^2, written in the p-basis of the next level.
LevelPoly betaStep(const LevelPoly& p);
LevelPoly betaLift(const LevelPoly& p, std::int64_t n);

bool equivalent(const LevelPoly& p, const LevelPoly& q);
LevelPoly addClasses(const LevelPoly& p, const LevelPoly& q);
LevelPoly negateClass(const LevelPoly& p);
bool isPositiveClass(const LevelPoly& p);

// Sizes q'(n,k), 0 <= k < 2^n, of the summands of the codimension-one ideal at floor n.
std::vector<BigInt> qPrime(std::int64_t n);

struct UnitDecompositionVerdict {
    bool ok = false;
    std::vector<BigInt> qPrime;
    std::string detail;
};

// sum_k q'(n,k) p_(n,k) = rho_n, by exact expansion.
UnitDecompositionVerdict verifyUnitDecomposition(std::int64_t n);

// First n coefficients of prod_{k>=0} (1 + X^{2^k} + X^{2^{k+1}}).
std::vector<BigInt> sternBrocotGenerating(std::int64_t n);

// 2cosh(k y / 2^n) / prod_{j=1..n} (1 + 2cosh(y / 2^j)), halved for k = 0.
double evalPhi(std::int64_t n, std::int64_t k, double y);

std::string levelPolyToJson(const LevelPoly& p);
LevelPoly levelPolyFromJson(const std::string& text);

}  // namespace farey::k0
