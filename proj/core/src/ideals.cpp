#include "fareyaf/ideals.hpp"

#include "fareyaf/continued_fraction.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace farey {

namespace {

std::uint64_t floorWidth(std::int64_t n) { return (std::uint64_t{1} << n) + 1; }

void checkDepth(std::int64_t depth) {
    if (depth < 0) throw std::out_of_range("negative depth");
    if (depth > kMaxIdealDepth) throw std::out_of_range("depth exceeds " + std::to_string(kMaxIdealDepth));
}

void requireSameDepth(const LevelSet& a, const LevelSet& b) {
    if (a.depth != b.depth)
        throw std::invalid_argument("depth mismatch: " + std::to_string(a.depth) + " vs " + std::to_string(b.depth));
}

}  // namespace

LevelSet LevelSet::full(std::int64_t depth) {
    checkDepth(depth);
    LevelSet ls{depth, {}};
    for (std::int64_t n = 0; n <= depth; ++n) {
        std::vector<std::uint64_t> all(floorWidth(n));
        for (std::uint64_t k = 0; k < all.size(); ++k) all[k] = k;
        ls.retained.push_back(std::move(all));
    }
    return ls;
}

LevelSet LevelSet::empty(std::int64_t depth) {
    checkDepth(depth);
    return LevelSet{depth, std::vector<std::vector<std::uint64_t>>(depth + 1)};
}

void LevelSet::validate() const {
    checkDepth(depth);
    if (retained.size() != static_cast<std::size_t>(depth + 1))
        throw std::invalid_argument("level set needs depth+1 floors");
    for (std::int64_t n = 0; n <= depth; ++n) {
        const auto& s = retained[n];
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= floorWidth(n))
                throw std::invalid_argument("index " + std::to_string(s[i]) + " out of range on floor " + std::to_string(n));
            if (i && s[i] <= s[i - 1]) throw std::invalid_argument("floor " + std::to_string(n) + " not strictly sorted");
        }
    }
}

bool LevelSet::contains(std::int64_t floor, std::uint64_t index) const {
    if (floor < 0 || floor > depth) return false;
    const auto& s = retained[floor];
    return std::binary_search(s.begin(), s.end(), index);
}

LevelSet LevelSet::complement() const {
    LevelSet out{depth, {}};
    for (std::int64_t n = 0; n <= depth; ++n) {
        std::vector<std::uint64_t> rest;
        const auto& s = retained[n];
        std::size_t i = 0;
        for (std::uint64_t k = 0; k < floorWidth(n); ++k) {
            if (i < s.size() && s[i] == k) {
                ++i;
                continue;
            }
            rest.push_back(k);
        }
        out.retained.push_back(std::move(rest));
    }
    return out;
}

bool LevelSet::isQuotientForm() const {
    for (const auto& s : retained) {
        if (s.size() == 1) continue;
        if (s.size() == 2 && s[1] == s[0] + 1) continue;
        return false;
    }
    return true;
}

std::vector<std::vector<Fraction>> LevelSet::labels() const {
    std::vector<std::vector<Fraction>> out;
    for (std::int64_t n = 0; n <= depth; ++n) {
        std::vector<Fraction> row;
        for (auto k : retained[n]) row.push_back(label({n, k}));
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::uint64_t> children(const TreeVertex& v) {
    v.validate();
    if (v.isStar()) return {0, 1};
    if (v.floor + 1 > kMaxIndexedFloor) throw std::out_of_range("children beyond index range");
    std::uint64_t last = std::uint64_t{1} << (v.floor + 1);
    std::vector<std::uint64_t> out;
    if (v.index > 0) out.push_back(2 * v.index - 1);
    out.push_back(2 * v.index);
    if (2 * v.index + 1 <= last) out.push_back(2 * v.index + 1);
    return out;
}

CfStream::CfStream(Generator term, std::size_t available, std::string description)
    : term_(std::move(term)), available_(available), description_(std::move(description)) {}

CfStream CfStream::fromPrefix(std::vector<BigInt> terms) {
    for (const auto& a : terms)
        if (a <= 0) throw std::invalid_argument("continued fraction terms must be positive");
    std::string desc = "cf:";
    for (std::size_t i = 0; i < terms.size(); ++i) desc += (i ? "," : "") + terms[i].str();
    std::size_t n = terms.size();
    return CfStream([terms = std::move(terms)](std::size_t i) { return terms.at(i); }, n, desc);
}

CfStream CfStream::periodic(std::vector<BigInt> preperiod, std::vector<BigInt> period) {
    if (period.empty()) throw std::invalid_argument("periodic stream needs a non-empty period");
    for (const auto& a : preperiod)
        if (a <= 0) throw std::invalid_argument("continued fraction terms must be positive");
    for (const auto& a : period)
        if (a <= 0) throw std::invalid_argument("continued fraction terms must be positive");
    std::string desc = "cf:";
    for (const auto& a : preperiod) desc += a.str() + ",";
    desc += "(";
    for (std::size_t i = 0; i < period.size(); ++i) desc += (i ? "," : "") + period[i].str();
    desc += ")";
    return CfStream(
        [pre = std::move(preperiod), per = std::move(period)](std::size_t i) {
            if (i < pre.size()) return pre[i];
            return per[(i - pre.size()) % per.size()];
        },
        std::numeric_limits<std::size_t>::max(), desc);
}

BigInt CfStream::term(std::size_t i) const {
    if (i >= available_) throw std::out_of_range("continued fraction stream exhausted after " + std::to_string(available_) + " terms");
    BigInt a = term_(i);
    if (a <= 0) throw std::invalid_argument("continued fraction stream produced a non-positive term");
    return a;
}

std::vector<BigInt> CfStream::prefixBeyond(std::int64_t depth) const {
    std::vector<BigInt> prefix;
    BigInt sum = 0;
    while (sum <= depth) {
        if (prefix.size() >= available_)
            throw std::out_of_range("continued fraction prefix sums to " + sum.str() + ", need more than " + std::to_string(depth));
        prefix.push_back(term(prefix.size()));
        sum += prefix.back();
    }
    return prefix;
}

std::string toString(Variant v) {
    switch (v) {
        case Variant::plain: return "plain";
        case Variant::plus: return "plus";
        case Variant::minus: return "minus";
    }
    return "?";
}

Variant parseVariant(const std::string& text) {
    if (text == "plain") return Variant::plain;
    if (text == "plus") return Variant::plus;
    if (text == "minus") return Variant::minus;
    throw std::invalid_argument("unknown variant '" + text + "'");
}

void IdealSpec::validate() const {
    if (auto f = std::get_if<Fraction>(&theta)) {
        if (!f->inUnitInterval()) throw std::invalid_argument("theta must lie in [0,1]");
        if (variant == Variant::plus && f->isOne()) throw std::invalid_argument("variant plus requires theta != 1");
        if (variant == Variant::minus && f->isZero()) throw std::invalid_argument("variant minus requires theta != 0");
    } else if (variant != Variant::plain) {
        throw std::invalid_argument("variants plus/minus exist only for rational theta");
    }
}

std::int64_t firstLabelFloor(const Fraction& theta) { return height(theta); }

ThetaTrack locateTheta(const std::variant<Fraction, CfStream>& theta, std::int64_t depth) {
    checkDepth(depth);
    ThetaTrack t;
    if (auto f = std::get_if<Fraction>(&theta); f && f->isOne()) {
        for (std::int64_t n = 0; n <= depth; ++n) {
            t.j.push_back(std::uint64_t{1} << n);
            t.exact.push_back(true);
        }
        return t;
    }

    // less(m): m < theta; for the irrational case via the bracket of a finite prefix.
    std::function<bool(const Fraction&)> atMost;
    std::function<bool(const Fraction&)> equal;
    if (auto f = std::get_if<Fraction>(&theta)) {
        Fraction th = *f;
        atMost = [th](const Fraction& m) { return m <= th; };
        equal = [th](const Fraction& m) { return m == th; };
    } else {
        auto prefix = std::get<CfStream>(theta).prefixBeyond(depth);
        Fraction x = cfValue(prefix);
        prefix.back() += 1;
        Fraction y = cfValue(prefix);
        Fraction lo = std::min(x, y), hi = std::max(x, y);
        atMost = [lo, hi](const Fraction& m) {
            if (m <= lo) return true;
            if (m >= hi) return false;
            throw std::logic_error("label " + m.str() + " inside the prefix bracket; prefix too short");
        };
        equal = [](const Fraction&) { return false; };
    }

    Fraction left(0, 1), right(1, 1);
    std::uint64_t j = 0;
    for (std::int64_t n = 0; n <= depth; ++n) {
        if (n > 0) {
            Fraction mid = Fraction::mediant(left, right);
            if (atMost(mid)) {
                j = 2 * j + 1;
                left = mid;
            } else {
                j = 2 * j;
                right = mid;
            }
        }
        t.j.push_back(j);
        t.exact.push_back(equal(left));
    }
    return t;
}

LevelSet quotientLevels(const IdealSpec& spec, std::int64_t depth) {
    spec.validate();
    ThetaTrack t = locateTheta(spec.theta, depth);
    LevelSet ls{depth, {}};
    for (std::int64_t n = 0; n <= depth; ++n) {
        std::uint64_t j = t.j[n];
        if (!t.exact[n]) {
            ls.retained.push_back({j, j + 1});
            continue;
        }
        switch (spec.variant) {
            case Variant::plain: ls.retained.push_back({j}); break;
            case Variant::plus: ls.retained.push_back({j, j + 1}); break;
            case Variant::minus: ls.retained.push_back({j - 1, j}); break;
        }
    }
    return ls;
}

LevelSet idealLevels(const IdealSpec& spec, std::int64_t depth) { return quotientLevels(spec, depth).complement(); }

std::string toString(Decision d) {
    switch (d) {
        case Decision::yes: return "yes";
        case Decision::no: return "no";
        case Decision::undecided: return "undecided";
    }
    return "?";
}

StructureVerdict isHereditary(const LevelSet& ideal) {
    ideal.validate();
    for (std::int64_t n = 0; n < ideal.depth; ++n)
        for (auto k : ideal.retained[n])
            for (auto c : children({n, k}))
                if (!ideal.contains(n + 1, c)) return {Decision::no, TreeVertex{n, k}};
    return {ideal.depth == 0 ? Decision::undecided : Decision::yes, std::nullopt};
}

StructureVerdict isDirected(const LevelSet& ideal) {
    ideal.validate();
    for (std::int64_t n = 0; n < ideal.depth; ++n) {
        for (std::uint64_t k = 0; k < floorWidth(n); ++k) {
            if (ideal.contains(n, k)) continue;
            auto ch = children({n, k});
            bool all = std::all_of(ch.begin(), ch.end(), [&](std::uint64_t c) { return ideal.contains(n + 1, c); });
            if (all) return {Decision::no, TreeVertex{n, k}};
        }
    }
    return {ideal.depth == 0 ? Decision::undecided : Decision::yes, std::nullopt};
}

StructureVerdict hasCommonDescendants(const LevelSet& sub) {
    sub.validate();
    bool undecided = false;
    std::optional<TreeVertex> witness;
    for (std::int64_t n = 0; n <= sub.depth; ++n) {
        const auto& base = sub.retained[n];
        // reach[i] = descendants of base[i] on the current floor, moving inside sub
        std::vector<std::set<std::uint64_t>> reach;
        for (auto k : base) reach.push_back({k});
        std::vector<std::vector<bool>> met(base.size(), std::vector<bool>(base.size(), false));
        auto updateMet = [&]() {
            for (std::size_t a = 0; a < base.size(); ++a)
                for (std::size_t b = a; b < base.size(); ++b)
                    for (auto x : reach[a])
                        if (reach[b].count(x)) {
                            met[a][b] = true;
                            break;
                        }
        };
        updateMet();
        for (std::int64_t m = n; m < sub.depth; ++m) {
            for (auto& r : reach) {
                std::set<std::uint64_t> next;
                for (auto x : r)
                    for (auto c : children({m, x}))
                        if (sub.contains(m + 1, c)) next.insert(c);
                r.swap(next);
            }
            updateMet();
        }
        for (std::size_t a = 0; a < base.size(); ++a)
            for (std::size_t b = a; b < base.size(); ++b)
                if (!met[a][b]) {
                    undecided = true;
                    if (!witness) witness = TreeVertex{n, base[a]};
                }
    }
    if (undecided) return {Decision::undecided, witness};
    return {Decision::yes, std::nullopt};
}

std::string toString(AdmissibleTag t) {
    switch (t) {
        case AdmissibleTag::irrational: return "irrational";
        case AdmissibleTag::rationalPlain: return "rational-plain";
        case AdmissibleTag::rationalPlus: return "rational-plus";
        case AdmissibleTag::rationalMinus: return "rational-minus";
    }
    return "?";
}

Classification classifyAdmissible(const LevelSet& quotient) {
    Classification c;
    auto fail = [&](std::int64_t floor, std::string reason) {
        c.admissible = false;
        c.failingFloor = floor;
        c.reason = std::move(reason);
        c.intervals.clear();
        return c;
    };
    try {
        quotient.validate();
    } catch (const std::invalid_argument& e) {
        return fail(0, e.what());
    }
    for (std::int64_t n = 0; n <= quotient.depth; ++n) {
        const auto& s = quotient.retained[n];
        if (!(s.size() == 1 || (s.size() == 2 && s[1] == s[0] + 1)))
            return fail(n, "floor " + std::to_string(n) + " is not a singleton or an adjacent pair");
    }
    for (std::int64_t n = 0; n < quotient.depth; ++n) {
        const auto& s = quotient.retained[n];
        const auto& t = quotient.retained[n + 1];
        std::uint64_t a = s[0];
        bool ok;
        if (s.size() == 1) {
            ok = t.size() == 1 && t[0] == 2 * a;
        } else {
            ok = (t.size() == 2 && (t[0] == 2 * a || t[0] == 2 * a + 1)) || (t.size() == 1 && t[0] == 2 * a + 1);
        }
        if (!ok) {
            std::string reason = s.size() == 1 ? "singleton {" + std::to_string(a) + "} must be followed by {" + std::to_string(2 * a) + "}"
                                               : "pair {" + std::to_string(a) + "," + std::to_string(a + 1) + "} has no transition to the next floor's set";
            return fail(n + 1, reason);
        }
    }
    c.admissible = true;
    for (std::int64_t n = 0; n <= quotient.depth; ++n) {
        const auto& s = quotient.retained[n];
        c.intervals.emplace_back(label({n, s.front()}), label({n, s.back()}));
    }
    const auto& last = quotient.retained.back();
    if (last.size() == 1) {
        c.tag = AdmissibleTag::rationalPlain;
        c.theta = label({quotient.depth, last[0]});
        c.candidates = {AdmissibleTag::rationalPlain};
    } else {
        c.candidates = {AdmissibleTag::irrational, AdmissibleTag::rationalPlain, AdmissibleTag::rationalPlus,
                        AdmissibleTag::rationalMinus};
    }
    return c;
}

namespace {

BigInt modInverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = a % m, r = m, old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::invalid_argument("no modular inverse");
    BigInt inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

}  // namespace

ParentPair parentsOf(const Fraction& x) {
    if (x.isZero() || !x.inUnitInterval() || x.isOne())
        throw std::domain_error("parentsOf needs 0 < x < 1, got " + x.str());
    const BigInt& p = x.num();
    const BigInt& q = x.den();
    BigInt pbar = modInverse(p, q);
    BigInt qL = pbar;
    BigInt pL = (p * pbar - 1) / q;
    return {Fraction(pL, qL), Fraction(p - pL, q - qL)};
}

bool idealContains(const LevelSet& a, const LevelSet& b) {
    requireSameDepth(a, b);
    for (std::int64_t n = 0; n <= a.depth; ++n)
        if (!std::includes(a.retained[n].begin(), a.retained[n].end(), b.retained[n].begin(), b.retained[n].end())) return false;
    return true;
}

LevelSet kernelIntersection(const std::vector<LevelSet>& ideals) {
    if (ideals.empty()) throw std::invalid_argument("kernelIntersection of an empty family");
    LevelSet out = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) {
        requireSameDepth(out, ideals[i]);
        for (std::int64_t n = 0; n <= out.depth; ++n) {
            std::vector<std::uint64_t> r;
            std::set_intersection(out.retained[n].begin(), out.retained[n].end(), ideals[i].retained[n].begin(),
                                  ideals[i].retained[n].end(), std::back_inserter(r));
            out.retained[n] = std::move(r);
        }
    }
    return out;
}

LevelSet idealSum(const std::vector<LevelSet>& ideals) {
    if (ideals.empty()) throw std::invalid_argument("idealSum of an empty family");
    LevelSet out = ideals.front();
    for (std::size_t i = 1; i < ideals.size(); ++i) {
        requireSameDepth(out, ideals[i]);
        for (std::int64_t n = 0; n <= out.depth; ++n) {
            std::vector<std::uint64_t> r;
            std::set_union(out.retained[n].begin(), out.retained[n].end(), ideals[i].retained[n].begin(),
                           ideals[i].retained[n].end(), std::back_inserter(r));
            out.retained[n] = std::move(r);
        }
    }
    return out;
}

ConvergenceVerdict convergenceCheck(const std::vector<Fraction>& thetas, const std::variant<Fraction, CfStream>& theta,
                                    std::int64_t depth, Variant variant) {
    ConvergenceVerdict v;
    LevelSet limit = quotientLevels({theta, variant}, depth);
    std::vector<LevelSet> seq;
    for (const auto& t : thetas) seq.push_back(quotientLevels({t, Variant::plain}, depth));
    v.converges = !thetas.empty();
    for (std::int64_t n = 0; n <= depth; ++n) {
        std::optional<std::size_t> settle;
        for (std::size_t m = seq.size(); m-- > 0;) {
            std::vector<std::uint64_t> common;
            std::set_intersection(seq[m].retained[n].begin(), seq[m].retained[n].end(), limit.retained[n].begin(),
                                  limit.retained[n].end(), std::back_inserter(common));
            if (common.empty()) break;
            settle = m;
        }
        v.settleIndex.push_back(settle);
        if (!settle || *settle > thetas.size() / 2) v.converges = false;
    }
    return v;
}

std::string levelSetToJson(const LevelSet& ls) {
    nlohmann::ordered_json j;
    j["depth"] = ls.depth;
    j["retained"] = ls.retained;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const auto& row : ls.labels()) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& f : row) r.push_back(f.str());
        labels.push_back(r);
    }
    j["labels"] = labels;
    return j.dump();
}

LevelSet levelSetFromJson(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        LevelSet ls{j.at("depth").get<std::int64_t>(), j.at("retained").get<std::vector<std::vector<std::uint64_t>>>()};
        ls.validate();
        return ls;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed level set JSON: ") + e.what());
    }
}

std::string quotientToDot(const LevelSet& quotient) {
    quotient.validate();
    if (quotient.depth > 10) throw std::length_error("DOT export limited to depth 10");
    std::ostringstream os;
    os << "digraph farey {\n  rankdir=TB;\n  node [shape=box, style=filled, fontsize=10];\n";
    for (std::int64_t n = 0; n <= quotient.depth; ++n) {
        os << "  { rank=same;";
        for (std::uint64_t k = 0; k < floorWidth(n); ++k) os << " v" << n << "_" << k << ";";
        os << " }\n";
        for (std::uint64_t k = 0; k < floorWidth(n); ++k) {
            bool q = quotient.contains(n, k);
            os << "  v" << n << "_" << k << " [label=\"" << label({n, k}).str() << "\", class=\""
               << (q ? "quotient" : "ideal") << "\", fillcolor=\"" << (q ? "#f2f2f2" : "#555555") << "\", fontcolor=\""
               << (q ? "black" : "white") << "\"];\n";
        }
    }
    for (std::int64_t n = 0; n < quotient.depth; ++n)
        for (std::uint64_t k = 0; k < floorWidth(n); ++k)
            for (auto c : children({n, k})) os << "  v" << n << "_" << k << " -> v" << n + 1 << "_" << c << " [arrowhead=none];\n";
    os << "}\n";
    return os.str();
}

}  // namespace farey
