#pragma once

#include "fareyaf/fraction.hpp"
#include "fareyaf/tree.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace farey {

// Per-floor retained index sets of a subdiagram, floors 0..depth.
struct LevelSet {
    std::int64_t depth = 0;
    std::vector<std::vector<std::uint64_t>> retained;

    static LevelSet full(std::int64_t depth);
    static LevelSet empty(std::int64_t depth);
    // Throws std::invalid_argument on unsorted, duplicate or out-of-range entries.
    void validate() const;
    bool contains(std::int64_t floor, std::uint64_t index) const;
    LevelSet complement() const;
    bool isQuotientForm() const;
    std::vector<std::vector<Fraction>> labels() const;

    friend bool operator==(const LevelSet&, const LevelSet&) = default;
};

std::vector<std::uint64_t> children(const TreeVertex& v);

// Partial quotients of an irrational number, produced on demand.
class CfStream {
public:
    using Generator = std::function<BigInt(std::size_t)>;

    CfStream(Generator term, std::size_t available = std::numeric_limits<std::size_t>::max(),
             std::string description = "cf-stream");

    static CfStream fromPrefix(std::vector<BigInt> terms);
    static CfStream periodic(std::vector<BigInt> preperiod, std::vector<BigInt> period);

    BigInt term(std::size_t i) const;
    std::size_t available() const { return available_; }
    const std::string& description() const { return description_; }
    // Shortest prefix whose term sum exceeds depth; throws std::out_of_range if the stream runs dry.
    std::vector<BigInt> prefixBeyond(std::int64_t depth) const;

private:
    Generator term_;
    std::size_t available_;
    std::string description_;
};

enum class Variant { plain, plus, minus };

std::string toString(Variant v);
Variant parseVariant(const std::string& text);

struct IdealSpec {
    std::variant<Fraction, CfStream> theta;
    Variant variant = Variant::plain;

    bool isRational() const { return std::holds_alternative<Fraction>(theta); }
    void validate() const;
};

// Position of theta on floors 0..depth: r(n,j[n]) <= theta < r(n,j[n]+1), with j[n] = 2^n when theta = 1.
struct ThetaTrack {
    std::vector<std::uint64_t> j;
    std::vector<bool> exact;  // theta == r(n, j[n])
};

ThetaTrack locateTheta(const std::variant<Fraction, CfStream>& theta, std::int64_t depth);

// First floor on which a rational theta is a label (ht(theta)).
std::int64_t firstLabelFloor(const Fraction& theta);

inline constexpr std::int64_t kMaxIdealDepth = 60;

LevelSet quotientLevels(const IdealSpec& spec, std::int64_t depth);
LevelSet idealLevels(const IdealSpec& spec, std::int64_t depth);

enum class Decision { yes, no, undecided };
std::string toString(Decision d);

struct StructureVerdict {
    Decision decision = Decision::undecided;
    std::optional<TreeVertex> witness;
};

// Ideal side: every child of a retained vertex is retained (floors < depth).
StructureVerdict isHereditary(const LevelSet& ideal);
// Ideal side: a vertex all of whose children are retained is itself retained (floors < depth).
StructureVerdict isDirected(const LevelSet& ideal);
// Any two retained vertices have a common descendant reached inside the retained set.
// Meant for quotient sides; undecided when the horizon is too short.
StructureVerdict hasCommonDescendants(const LevelSet& sub);

enum class AdmissibleTag { irrational, rationalPlain, rationalPlus, rationalMinus };
std::string toString(AdmissibleTag t);

struct Classification {
    bool admissible = false;
    std::optional<std::int64_t> failingFloor;
    std::string reason;
    // [r(n, min L_n), r(n, max L_n)] per floor
    std::vector<std::pair<Fraction, Fraction>> intervals;
    std::optional<AdmissibleTag> tag;
    std::optional<Fraction> theta;
    std::vector<AdmissibleTag> candidates;
};

Classification classifyAdmissible(const LevelSet& quotient);

struct ParentPair {
    Fraction left;
    Fraction right;
};

ParentPair parentsOf(const Fraction& x);

// a contains b: floorwise inclusion of ideal sides.
bool idealContains(const LevelSet& a, const LevelSet& b);
LevelSet kernelIntersection(const std::vector<LevelSet>& ideals);
// Smallest ideal containing all inputs at finite depth: floorwise union of ideal sides.
LevelSet idealSum(const std::vector<LevelSet>& ideals);

struct ConvergenceVerdict {
    bool converges = false;
    // per floor: first sequence index from which every quotient meets the limit's quotient
    std::vector<std::optional<std::size_t>> settleIndex;
};

// Finite-depth analogue of I_{theta_m} -> I_theta: on every floor the settled tail must cover
// at least the second half of the sequence.
ConvergenceVerdict convergenceCheck(const std::vector<Fraction>& thetas,
                                    const std::variant<Fraction, CfStream>& theta,
                                    std::int64_t depth, Variant variant = Variant::plain);

std::string levelSetToJson(const LevelSet& ls);
LevelSet levelSetFromJson(const std::string& text);
// Whole diagram to ls.depth; vertices retained by the quotient side are drawn light, the rest dark.
std::string quotientToDot(const LevelSet& quotient);

}  // namespace farey
