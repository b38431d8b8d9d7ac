#pragma once

#include "fareyaf/continued_fraction.hpp"
#include "fareyaf/tree.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace farey::traces {

// Vertex of the memoryless tree: star, or (n,k) with k odd.
struct TreeTVertex {
    std::int64_t floor = -1;
    std::uint64_t index = 0;

    static TreeTVertex star() { return {-1, 0}; }
    static TreeTVertex at(std::int64_t n, std::uint64_t k);
    bool isStar() const { return floor == -1; }
    TreeVertex vertex() const { return {floor, index}; }
    std::string str() const;

    friend auto operator<=>(const TreeTVertex&, const TreeTVertex&) = default;
};

bool hasMoveL(const TreeTVertex& v);
bool hasMoveR(const TreeTVertex& v);
TreeTVertex moveL(const TreeTVertex& v);
TreeTVertex moveR(const TreeTVertex& v);

// Label of v as a continued fraction (star -> 0).
ContinuedFraction cfOfVertex(const TreeTVertex& v);
TreeTVertex vertexOfFraction(const Fraction& x);
// The L and R moves written on continued fractions [a1..at], a_t >= 2.
ContinuedFraction cfMoveL(const ContinuedFraction& cf);
ContinuedFraction cfMoveR(const ContinuedFraction& cf);

// Vertices neighbouring the vertical segment below v, floors <= maxFloor.
std::vector<TreeTVertex> neighborSet(const TreeTVertex& v, std::int64_t maxFloor);
// The same set read off the continued fraction of v, as labels of height <= maxFloor.
std::vector<Fraction> neighborLabelsFromCf(const TreeTVertex& v, std::int64_t maxFloor);
bool inNeighborSet(const TreeTVertex& v, const TreeTVertex& w);

// phi must be deterministic and side-effect free; tail(v, d) is the exact sum of phi over
// neighbours of v strictly below floor d.
struct TraceCandidate {
    std::function<Rational(const TreeTVertex&)> phi;
    std::function<Rational(const TreeTVertex&, std::int64_t)> tail;
    std::string description;

    static TraceCandidate zero();
    // phi(n,k) = ratio^(n+1); exact geometric tails
    static TraceCandidate geometric(const Rational& ratio);
    // Tail oracle only when the default is 0 (finite support).
    static TraceCandidate table(std::map<std::pair<std::int64_t, std::uint64_t>, Rational> entries, const Rational& fallback);
    // Values given on labels in [0,1]; no tail oracle.
    static TraceCandidate fromLabels(std::function<Rational(const Fraction&)> f, std::string description = "label-keyed");
};

TraceCandidate traceCandidateFromJson(const std::string& text);

struct TraceVerdict {
    bool valid = true;
    // false when no tail oracle was available: only the necessary condition was checked
    bool exact = false;
    std::int64_t depth = 0;
    std::int64_t verticesChecked = 0;
    std::optional<TreeTVertex> firstViolation;
    Rational violationExcess = 0;
};

inline constexpr std::int64_t kMaxTraceDepth = 20;

TraceVerdict checkTrace(const TraceCandidate& t, std::int64_t depth);

struct AlphaTable {
    std::int64_t depth = 0;
    Rational star = 1;
    std::vector<std::vector<Rational>> floors;  // floors[n][k], 0 <= k <= 2^n
    std::optional<TreeVertex> firstNegative;
    bool recursionHolds = false;

    const Rational& at(std::int64_t n, std::uint64_t k) const { return floors.at(n).at(k); }
};

// Weights on every vertex of the augmented diagram, floors -1..depth.
AlphaTable alphaFromPhi(const TraceCandidate& t, std::int64_t depth);
// alpha(v) = sum of alpha over successors for every vertex above the last floor.
bool alphaRecursionHolds(const AlphaTable& a);

std::string toString(const TraceVerdict& v);

}  // namespace farey::traces
