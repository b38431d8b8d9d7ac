#include "fareyaf/tree.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace farey {

void TreeVertex::validate() const {
    if (floor == -1) {
        if (index != 0) throw std::out_of_range("star vertex must have index 0");
        return;
    }
    if (floor < 0) throw std::out_of_range("negative floor " + std::to_string(floor));
    if (floor > kMaxIndexedFloor) throw std::out_of_range("floor " + std::to_string(floor) + " exceeds index range");
    if (index > (std::uint64_t{1} << floor)) throw std::out_of_range("index out of range: " + str());
}

std::string TreeVertex::str() const {
    if (isStar()) return "*";
    return "(" + std::to_string(floor) + "," + std::to_string(index) + ")";
}

Fraction labelAt(std::int64_t n, const BigInt& k) {
    if (n < 0) throw std::out_of_range("label needs floor >= 0");
    if (k < 0 || k > pow2(n)) throw std::out_of_range("index " + k.str() + " out of range at floor " + std::to_string(n));
    if (k == pow2(n)) return Fraction(1, 1);
    // invariant: left = r(m, j), right = r(m, j+1), j = k >> (n - m)
    BigInt lp = 0, lq = 1, rp = 1, rq = 1;
    for (std::int64_t bit = n - 1; bit >= 0; --bit) {
        BigInt mp = lp + rp, mq = lq + rq;
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(bit))) {
            lp = mp;
            lq = mq;
        } else {
            rp = mp;
            rq = mq;
        }
    }
    return Fraction(lp, lq);
}

Fraction label(const TreeVertex& v) {
    v.validate();
    if (v.isStar()) throw std::out_of_range("star has no label");
    return labelAt(v.floor, BigInt(v.index));
}

namespace {

void checkRowFloor(std::int64_t n) {
    if (n < 0) throw std::out_of_range("negative floor");
    if (n > kMaxRowFloor) throw std::length_error("row floor " + std::to_string(n) + " exceeds guard " + std::to_string(kMaxRowFloor));
}

// Applies the mediant recursion to one integer sequence with the given boundary values.
std::vector<std::uint64_t> rowSequence(std::int64_t n, std::uint64_t first, std::uint64_t last) {
    checkRowFloor(n);
    std::vector<std::uint64_t> cur{first, last};
    for (std::int64_t m = 0; m < n; ++m) {
        std::vector<std::uint64_t> next(2 * cur.size() - 1);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            next[2 * k] = cur[k];
            if (k + 1 < cur.size()) next[2 * k + 1] = cur[k] + cur[k + 1];
        }
        cur.swap(next);
    }
    return cur;
}

}  // namespace

std::vector<std::uint64_t> rowNumerators(std::int64_t n) { return rowSequence(n, 0, 1); }
std::vector<std::uint64_t> rowDenominators(std::int64_t n) { return rowSequence(n, 1, 1); }

std::vector<Fraction> row(std::int64_t n) {
    auto p = rowNumerators(n);
    auto q = rowDenominators(n);
    std::vector<Fraction> out;
    out.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) out.emplace_back(BigInt(p[k]), BigInt(q[k]));
    return out;
}

bool UnimodularMatrix::inGammaPlus() const {
    // [[p',p],[q',q]]
    return det() == 1 && 0 <= b && b <= d && 0 <= a && a <= c;
}

UnimodularMatrix operator*(const UnimodularMatrix& x, const UnimodularMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

UnimodularMatrix UnimodularMatrix::pow(std::uint64_t e) const {
    UnimodularMatrix result = identity(), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::string UnimodularMatrix::str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

UnimodularMatrix vertexToMatrix(const TreeVertex& v) {
    v.validate();
    if (v.isStar()) throw std::out_of_range("star has no matrix");
    if (v.index == (std::uint64_t{1} << v.floor))
        throw std::out_of_range("rightmost vertex " + v.str() + " has no right neighbour");
    Fraction x = label(v);
    Fraction y = label({v.floor, v.index + 1});
    return {y.num(), x.num(), y.den(), x.den()};
}

TreeVertex matrixToVertex(const UnimodularMatrix& m) {
    if (!m.inGammaPlus()) throw std::invalid_argument("matrix not in Gamma+: " + m.str());
    Fraction x(m.b, m.d), y(m.a, m.c);
    std::int64_t n = std::max(height(x), height(y));
    if (n > kMaxIndexedFloor) throw std::out_of_range("matrix corresponds to a floor beyond index range");
    BigInt k = boost::multiprecision::numerator(questionMark(x).toRational() * Rational(pow2(n)));
    TreeVertex v{n, static_cast<std::uint64_t>(k)};
    if (label(v) != x || label({n, v.index + 1}) != y)
        throw std::logic_error("matrix columns are not adjacent labels: " + m.str());
    return v;
}

Fraction questionMark(const ContinuedFraction& cf) {
    Rational sum = 0;
    BigInt partial = 0;
    int sign = 1;
    for (const auto& a : cf.terms()) {
        partial += a;
        sum += Rational(sign, pow2(static_cast<std::int64_t>(partial) - 1));
        sign = -sign;
    }
    return Fraction(sum);
}

Fraction questionMark(const Fraction& x) { return questionMark(cfEncode(x)); }

Fraction questionMarkInv(const BigInt& k, std::int64_t n) { return labelAt(n, k); }

Fraction questionMarkInv(const Fraction& dyadic) {
    BigInt q = dyadic.den();
    std::int64_t n = static_cast<std::int64_t>(boost::multiprecision::msb(q));
    if (pow2(n) != q) throw std::invalid_argument("not a dyadic rational: " + dyadic.str());
    if (!dyadic.inUnitInterval()) throw std::domain_error("dyadic outside [0,1]: " + dyadic.str());
    return labelAt(n, dyadic.num());
}

std::pair<std::int64_t, BigInt> firstAppearance(const Fraction& x) {
    std::int64_t n = height(x);
    Rational k = questionMark(x).toRational() * Rational(pow2(n));
    if (boost::multiprecision::denominator(k) != 1) throw std::logic_error("question mark is not at expected depth");
    return {n, boost::multiprecision::numerator(k)};
}

Fraction fareyMap(const Fraction& x) {
    if (!x.inUnitInterval()) throw std::domain_error("Farey map expects [0,1], got " + x.str());
    const BigInt& p = x.num();
    const BigInt& q = x.den();
    if (2 * p <= q) return Fraction(p, q - p);
    return Fraction(q - p, p);
}

std::pair<Fraction, Fraction> fareyPreimages(const Fraction& y) {
    if (!y.inUnitInterval()) throw std::domain_error("Farey preimages expect [0,1], got " + y.str());
    const BigInt& p = y.num();
    const BigInt& q = y.den();
    return {Fraction(p, p + q), Fraction(q, p + q)};
}

std::vector<Fraction> fareyInverseOrbit(std::int64_t n) {
    if (n < 1 || n > 14) throw std::out_of_range("inverse orbit depth must be in [1,14]");
    std::set<Fraction> cur{Fraction(0, 1)};
    for (std::int64_t i = 0; i < n; ++i) {
        std::set<Fraction> next;
        for (const auto& y : cur) {
            auto [a, b] = fareyPreimages(y);
            next.insert(a);
            next.insert(b);
        }
        cur.swap(next);
    }
    return {cur.begin(), cur.end()};
}

std::int64_t totientFiber(std::int64_t q) {
    if (q < 2) throw std::out_of_range("totientFiber needs q >= 2");
    std::int64_t count = 0;
    for (std::int64_t p = 1; p < q; ++p) {
        if (boost::integer::gcd(p, q) != 1) continue;
        Fraction x(p, q);
        auto [n, k] = firstAppearance(x);
        if (!boost::multiprecision::bit_test(k, 0))
            throw std::logic_error("first appearance of " + x.str() + " has even index");
        if (labelAt(n, k) != x) throw std::logic_error("tree position of " + x.str() + " does not reproduce it");
        ++count;
    }
    return count;
}

std::vector<std::int64_t> totientSieve(std::int64_t qmax) {
    std::vector<std::int64_t> phi(static_cast<std::size_t>(qmax) + 1);
    for (std::int64_t i = 0; i <= qmax; ++i) phi[i] = i;
    for (std::int64_t p = 2; p <= qmax; ++p) {
        if (phi[p] != p) continue;
        for (std::int64_t m = p; m <= qmax; m += p) phi[m] -= phi[m] / p;
    }
    return phi;
}

double partitionFunction(double s, std::int64_t qmax) {
    if (!(s > 2)) throw std::domain_error("partition function diverges for s <= 2");
    if (qmax < 1) throw std::out_of_range("qmax must be positive");
    auto phi = totientSieve(qmax);
    long double sum = 0;
    for (std::int64_t q = qmax; q >= 1; --q) sum += phi[q] * std::pow(static_cast<long double>(q), -static_cast<long double>(s));
    return static_cast<double>(sum);
}

MatrixWordVerdict verifyMatrixWords(std::uint64_t amax, std::uint64_t bmax) {
    using namespace matrices;
    MatrixWordVerdict v;
    for (std::uint64_t a = 1; a <= amax; ++a) {
        for (std::uint64_t b = 1; b <= bmax; ++b) {
            auto mm = M(a) * M(b);
            ++v.checked;
            if (B().pow(a) * A().pow(b) != mm) {
                v.ok = false;
                v.counterexample = MatrixWordVerdict::Counterexample{a, b, "B^a A^b = M(a)M(b)"};
                return v;
            }
            if (A().pow(a) * B().pow(b) != J() * mm * J()) {
                v.ok = false;
                v.counterexample = MatrixWordVerdict::Counterexample{a, b, "A^a B^b = J M(a)M(b) J"};
                return v;
            }
        }
    }
    return v;
}

}  // namespace farey
