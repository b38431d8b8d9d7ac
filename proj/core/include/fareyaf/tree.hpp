#pragma once

#include "fareyaf/continued_fraction.hpp"
#include "fareyaf/fraction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace farey {

// Vertex (n,k) of the Farey/Stern-Brocot Bratteli diagram; floor -1 is the extra vertex star.
struct TreeVertex {
    std::int64_t floor = 0;
    std::uint64_t index = 0;

    static TreeVertex star() { return {-1, 0}; }
    bool isStar() const { return floor == -1; }
    void validate() const;
    std::string str() const;

    friend auto operator<=>(const TreeVertex&, const TreeVertex&) = default;
};

inline constexpr std::int64_t kMaxIndexedFloor = 62;
inline constexpr std::int64_t kMaxRowFloor = 24;

// r(n,k); O(n) descent, no row materialization.
Fraction label(const TreeVertex& v);
Fraction labelAt(std::int64_t floor, const BigInt& index);

// Whole floor n, left to right (2^n + 1 entries).
std::vector<Fraction> row(std::int64_t n);
std::vector<std::uint64_t> rowNumerators(std::int64_t n);
std::vector<std::uint64_t> rowDenominators(std::int64_t n);

struct UnimodularMatrix {
    BigInt a, b, c, d;

    static UnimodularMatrix identity() { return {1, 0, 0, 1}; }
    BigInt det() const { return a * d - b * c; }
    // [[p',p],[q',q]] with det 1, 0 <= p <= q, 0 <= p' <= q'
    bool inGammaPlus() const;
    UnimodularMatrix pow(std::uint64_t e) const;
    std::string str() const;

    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;
    friend UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y);
};

namespace matrices {
inline UnimodularMatrix A() { return {1, 0, 1, 1}; }
inline UnimodularMatrix B() { return {1, 1, 0, 1}; }
inline UnimodularMatrix J() { return {0, 1, 1, 0}; }
inline UnimodularMatrix M(const BigInt& a) { return {a, 1, 1, 0}; }
}  // namespace matrices

// [[p',p],[q',q]] with p/q = r(n,k) and p'/q' = r(n,k+1).
UnimodularMatrix vertexToMatrix(const TreeVertex& v);
TreeVertex matrixToVertex(const UnimodularMatrix& m);

// Minkowski question mark as a dyadic fraction.
Fraction questionMark(const ContinuedFraction& cf);
Fraction questionMark(const Fraction& x);
// r(n,k), i.e. the preimage of k/2^n.
Fraction questionMarkInv(const BigInt& k, std::int64_t n);
Fraction questionMarkInv(const Fraction& dyadic);

// First appearance of x: (ht(x), 2^ht(x) * ?(x)).
std::pair<std::int64_t, BigInt> firstAppearance(const Fraction& x);

Fraction fareyMap(const Fraction& x);
std::pair<Fraction, Fraction> fareyPreimages(const Fraction& y);
// F^{-n}({0}) sorted ascending.
std::vector<Fraction> fareyInverseOrbit(std::int64_t n);

// Number of odd-index vertices whose label has denominator q, each checked against its tree position.
std::int64_t totientFiber(std::int64_t q);
std::vector<std::int64_t> totientSieve(std::int64_t qmax);
// sum_{q<=qmax} phi(q) q^{-s}; the omitted tail is O(qmax^{2-s}).
double partitionFunction(double s, std::int64_t qmax);

struct MatrixWordVerdict {
    bool ok = true;
    std::int64_t checked = 0;
    struct Counterexample {
        std::uint64_t a, b;
        std::string identity;
    };
    std::optional<Counterexample> counterexample;
};

// B^a A^b = M(a)M(b) and A^a B^b = J M(a)M(b) J for 1 <= a <= amax, 1 <= b <= bmax.
MatrixWordVerdict verifyMatrixWords(std::uint64_t amax, std::uint64_t bmax);

}  // namespace farey
