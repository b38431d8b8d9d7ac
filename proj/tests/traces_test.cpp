#include "fareyaf/traces.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace farey;
using namespace farey::traces;

namespace {

Fraction fr(long long p, long long q) { return Fraction(BigInt(p), BigInt(q)); }

// Neighbours of the vertical column below v: (n+j, 2^j k +- 1); for star, (j, 1).
std::set<TreeTVertex> columnNeighbours(const TreeTVertex& v, std::int64_t maxFloor) {
    std::set<TreeTVertex> out;
    if (v.isStar()) {
        for (std::int64_t j = 0; j <= maxFloor; ++j) out.insert(TreeTVertex::at(j, 1));
        return out;
    }
    for (std::int64_t j = 1; v.floor + j <= maxFloor; ++j) {
        std::uint64_t c = v.index << j;
        if (c >= 1) out.insert(TreeTVertex::at(v.floor + j, c - 1));
        if (c + 1 < (std::uint64_t{1} << (v.floor + j))) out.insert(TreeTVertex::at(v.floor + j, c + 1));
    }
    return out;
}

std::vector<TreeTVertex> verticesUpTo(std::int64_t floor) {
    std::vector<TreeTVertex> vs{TreeTVertex::star(), TreeTVertex::at(0, 1)};
    for (std::int64_t n = 1; n <= floor; ++n)
        for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); k += 2) vs.push_back(TreeTVertex::at(n, k));
    return vs;
}

Rational pow(Rational r, std::int64_t e) {
    Rational x = 1;
    for (std::int64_t i = 0; i < e; ++i) x *= r;
    return x;
}

}  // namespace

TEST(Moves, WorkedExamples) {
    EXPECT_EQ(moveR(TreeTVertex::star()), TreeTVertex::at(0, 1));
    EXPECT_EQ(cfOfVertex(TreeTVertex::at(0, 1)), ContinuedFraction::one());
    auto half = ContinuedFraction::fromTerms({BigInt(2)});
    EXPECT_EQ(cfMoveL(half), ContinuedFraction::fromTerms({BigInt(3)}));
    EXPECT_EQ(cfMoveR(half), ContinuedFraction::fromTerms({BigInt(1), BigInt(2)}));
    EXPECT_EQ(moveL(TreeTVertex::at(1, 1)), TreeTVertex::at(2, 1));
    EXPECT_EQ(moveR(TreeTVertex::at(1, 1)), TreeTVertex::at(2, 3));
    EXPECT_FALSE(hasMoveR(TreeTVertex::at(0, 1)));
    EXPECT_THROW(TreeTVertex::at(2, 2), std::out_of_range);
}

TEST(Moves, LabelsAgreeWithAmbientTree) {
    for (const auto& v : verticesUpTo(8)) {
        if (v.isStar()) continue;
        EXPECT_EQ(cfDecode(cfOfVertex(v)), label(v.vertex()));
        if (hasMoveL(v)) {
            EXPECT_EQ(cfDecode(cfMoveL(cfOfVertex(v))), label(moveL(v).vertex()));
        }
        if (hasMoveR(v)) {
            EXPECT_EQ(cfDecode(cfMoveR(cfOfVertex(v))), label(moveR(v).vertex()));
        }
    }
}

TEST(Moves, CfBijectionUpToHeightEight) {
    std::set<Fraction> labels;
    for (const auto& v : verticesUpTo(8)) {
        auto x = cfDecode(cfOfVertex(v));
        EXPECT_TRUE(labels.insert(x).second);
        EXPECT_EQ(vertexOfFraction(x), v);
    }
    std::set<Fraction> heights;
    for (long long q = 1; q <= 60; ++q)
        for (long long p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1 && height(fr(p, q)) <= 8) heights.insert(fr(p, q));
    EXPECT_EQ(labels, heights);
}

TEST(Neighbours, WorkedAndColumnOracle) {
    auto star = neighborSet(TreeTVertex::star(), 3);
    EXPECT_EQ(std::set<TreeTVertex>(star.begin(), star.end()),
              (std::set<TreeTVertex>{TreeTVertex::at(0, 1), TreeTVertex::at(1, 1), TreeTVertex::at(2, 1), TreeTVertex::at(3, 1)}));
    auto top = neighborSet(TreeTVertex::at(0, 1), 3);
    EXPECT_EQ(std::set<TreeTVertex>(top.begin(), top.end()),
              (std::set<TreeTVertex>{TreeTVertex::at(1, 1), TreeTVertex::at(2, 3), TreeTVertex::at(3, 7)}));
    for (const auto& v : verticesUpTo(4)) {
        auto got = neighborSet(v, 8);
        std::set<TreeTVertex> gotSet(got.begin(), got.end());
        EXPECT_EQ(gotSet, columnNeighbours(v, 8)) << v.str();
        std::set<Fraction> fromCf;
        for (const auto& x : neighborLabelsFromCf(v, 8)) fromCf.insert(x);
        std::set<Fraction> fromVertices;
        for (const auto& w : gotSet) fromVertices.insert(label(w.vertex()));
        EXPECT_EQ(fromCf, fromVertices) << v.str();
        for (const auto& w : verticesUpTo(8)) EXPECT_EQ(inNeighborSet(v, w), gotSet.count(w) == 1);
    }
}

TEST(CheckTrace, ZeroCandidate) {
    auto verdict = checkTrace(TraceCandidate::zero(), 12);
    EXPECT_TRUE(verdict.valid);
    EXPECT_TRUE(verdict.exact);
}

TEST(CheckTrace, GeometricQuarterWithClosedFormTails) {
    auto t = TraceCandidate::geometric(Rational(1, 4));
    for (std::int64_t d = 0; d <= 8; ++d) {
        for (const auto& v : verticesUpTo(d - 1)) {
            Rational partial = 0;
            for (const auto& w : columnNeighbours(v, d)) partial += t.phi(w);
            Rational full;
            if (v.isStar())
                full = Rational(1, 3);
            else if (v.floor == 0)
                full = Rational(1, 3) * pow(Rational(1, 4), 1);
            else
                full = Rational(2, 3) * pow(Rational(1, 4), v.floor + 1);
            EXPECT_EQ(partial + t.tail(v, d), full) << v.str() << " d=" << d;
        }
    }
    auto verdict = checkTrace(t, 12);
    EXPECT_TRUE(verdict.valid);
    EXPECT_TRUE(verdict.exact);
}

TEST(CheckTrace, GeometricHalfRejected) {
    auto t = TraceCandidate::geometric(Rational(1, 2));
    for (std::int64_t d = 3; d <= 12; ++d) {
        auto verdict = checkTrace(t, d);
        ASSERT_FALSE(verdict.valid);
        ASSERT_TRUE(verdict.firstViolation);
        EXPECT_EQ(*verdict.firstViolation, TreeTVertex::at(1, 1));
        EXPECT_GT(verdict.violationExcess, 0);
    }
    // each non-star vertex other than (0,1) has two branches, each summing to phi(v)
    for (const auto& v : verticesUpTo(5)) {
        if (v.isStar() || v.floor == 0) continue;
        Rational partial = 0;
        for (const auto& w : columnNeighbours(v, 10)) partial += t.phi(w);
        EXPECT_GT(partial + t.tail(v, 10), t.phi(v));
    }
}

TEST(CheckTrace, TablesAndLabelCandidates) {
    std::map<std::pair<std::int64_t, std::uint64_t>, Rational> ok{{{0, 1}, Rational(1, 2)}, {{1, 1}, Rational(1, 4)}};
    EXPECT_TRUE(checkTrace(TraceCandidate::table(ok, 0), 6).valid);
    std::map<std::pair<std::int64_t, std::uint64_t>, Rational> bad{
        {{0, 1}, Rational(1, 2)}, {{1, 1}, Rational(1, 2)}, {{2, 1}, Rational(1, 4)}};
    auto verdict = checkTrace(TraceCandidate::table(bad, 0), 6);
    EXPECT_FALSE(verdict.valid);
    EXPECT_EQ(*verdict.firstViolation, TreeTVertex::star());
    EXPECT_EQ(verdict.violationExcess, Rational(1, 4));

    auto labels = TraceCandidate::fromLabels([](const Fraction& x) { return x.isZero() ? Rational(1) : Rational(0); });
    auto lv = checkTrace(labels, 6);
    EXPECT_TRUE(lv.valid);
    EXPECT_FALSE(lv.exact);
}

TEST(CheckTrace, MonotoneInDepth) {
    auto t = TraceCandidate::geometric(Rational(1, 2));
    bool failed = false;
    for (std::int64_t d = 0; d <= 14; ++d) {
        bool valid = checkTrace(t, d).valid;
        if (failed) {
            EXPECT_FALSE(valid) << d;
        }
        failed = failed || !valid;
    }
    EXPECT_TRUE(failed);
}

TEST(CheckTrace, JsonCandidates) {
    EXPECT_TRUE(checkTrace(traceCandidateFromJson(R"({"kind":"zero"})"), 5).valid);
    EXPECT_TRUE(checkTrace(traceCandidateFromJson(R"({"kind":"geometric","ratio":"1/4"})"), 5).valid);
    EXPECT_FALSE(checkTrace(traceCandidateFromJson(R"({"kind":"geometric","ratio":"1/2"})"), 5).valid);
    EXPECT_TRUE(checkTrace(traceCandidateFromJson(R"({"kind":"table","entries":[[0,1,"1/2"],[1,1,"1/4"]]})"), 5).valid);
    EXPECT_THROW(traceCandidateFromJson(R"({"kind":"nope"})"), std::invalid_argument);
    EXPECT_THROW(traceCandidateFromJson("{"), std::invalid_argument);
}

TEST(Alpha, ZeroAndGeometric) {
    auto zero = alphaFromPhi(TraceCandidate::zero(), 8);
    for (std::int64_t n = 0; n <= 8; ++n)
        for (std::uint64_t k = 0; k <= (std::uint64_t{1} << n); ++k) EXPECT_EQ(zero.at(n, k), k == 0 ? 1 : 0);
    EXPECT_TRUE(zero.recursionHolds);
    EXPECT_TRUE(alphaRecursionHolds(zero));

    auto geo = alphaFromPhi(TraceCandidate::geometric(Rational(1, 4)), 10);
    EXPECT_FALSE(geo.firstNegative);
    EXPECT_TRUE(geo.recursionHolds);
    // independent recursion check: alpha(v) equals the sum over the successors of v in the full diagram
    for (std::int64_t n = 0; n < 10; ++n)
        for (std::uint64_t k = 0; k <= (std::uint64_t{1} << n); ++k) {
            Rational s = 0;
            for (long long c = 2 * static_cast<long long>(k) - 1; c <= 2 * static_cast<long long>(k) + 1; ++c)
                if (c >= 0 && c <= (1ll << (n + 1))) s += geo.at(n + 1, static_cast<std::uint64_t>(c));
            ASSERT_EQ(s, geo.at(n, k)) << n << "," << k;
        }
    EXPECT_EQ(geo.at(0, 0) + geo.at(0, 1), geo.star);

    auto half = alphaFromPhi(TraceCandidate::geometric(Rational(1, 2)), 6);
    EXPECT_TRUE(half.firstNegative);
}
