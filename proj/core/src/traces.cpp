#include "fareyaf/traces.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace farey::traces {

namespace {

std::uint64_t top(std::int64_t n) { return std::uint64_t{1} << n; }

Rational rpow(const Rational& r, std::int64_t e) {
    Rational out = 1;
    for (std::int64_t i = 0; i < e; ++i) out *= r;
    return out;
}

// number of infinite neighbour branches below v
int branches(const TreeTVertex& v) { return (v.isStar() || (v.floor == 0 && v.index == 1)) ? 1 : 2; }

}  // namespace

TreeTVertex TreeTVertex::at(std::int64_t n, std::uint64_t k) {
    if (n < 0 || n > kMaxIndexedFloor) throw std::out_of_range("tree vertex floor out of range");
    if (k % 2 == 0 || k > top(n)) throw std::out_of_range("tree vertex needs odd index <= 2^n, got " + std::to_string(k));
    return {n, k};
}

std::string TreeTVertex::str() const { return isStar() ? "*" : "(" + std::to_string(floor) + "," + std::to_string(index) + ")"; }

bool hasMoveL(const TreeTVertex& v) { return !v.isStar(); }
bool hasMoveR(const TreeTVertex& v) { return v.isStar() || v.index < top(v.floor); }

TreeTVertex moveL(const TreeTVertex& v) {
    if (!hasMoveL(v)) throw std::out_of_range("L is undefined at " + v.str());
    return TreeTVertex::at(v.floor + 1, 2 * v.index - 1);
}

TreeTVertex moveR(const TreeTVertex& v) {
    if (!hasMoveR(v)) throw std::out_of_range("R is undefined at " + v.str());
    if (v.isStar()) return {0, 1};
    return TreeTVertex::at(v.floor + 1, 2 * v.index + 1);
}

ContinuedFraction cfOfVertex(const TreeTVertex& v) {
    if (v.isStar()) return ContinuedFraction::zero();
    return cfEncode(label(v.vertex()));
}

TreeTVertex vertexOfFraction(const Fraction& x) {
    if (x.isZero()) return TreeTVertex::star();
    auto [n, k] = firstAppearance(x);
    return TreeTVertex::at(n, static_cast<std::uint64_t>(k));
}

ContinuedFraction cfMoveL(const ContinuedFraction& cf) {
    switch (cf.kind()) {
        case ContinuedFraction::Kind::zero: throw std::out_of_range("L is undefined at 0");
        case ContinuedFraction::Kind::one: return ContinuedFraction::fromTerms({BigInt(2)});
        case ContinuedFraction::Kind::interior: break;
    }
    auto terms = cf.terms();
    if (terms.size() % 2 == 0) {
        terms.back() -= 1;
        terms.emplace_back(2);
    } else {
        terms.back() += 1;
    }
    return ContinuedFraction::fromTerms(std::move(terms));
}

ContinuedFraction cfMoveR(const ContinuedFraction& cf) {
    switch (cf.kind()) {
        case ContinuedFraction::Kind::zero: return ContinuedFraction::one();
        case ContinuedFraction::Kind::one: throw std::out_of_range("R is undefined at 1");
        case ContinuedFraction::Kind::interior: break;
    }
    auto terms = cf.terms();
    if (terms.size() % 2 == 0) {
        terms.back() += 1;
    } else {
        terms.back() -= 1;
        terms.emplace_back(2);
    }
    return ContinuedFraction::fromTerms(std::move(terms));
}

std::vector<TreeTVertex> neighborSet(const TreeTVertex& v, std::int64_t maxFloor) {
    if (maxFloor < v.floor + 1) throw std::invalid_argument("maxFloor must exceed the vertex floor");
    std::vector<TreeTVertex> out;
    if (v.isStar()) {
        for (TreeTVertex w = moveR(v); w.floor <= maxFloor; w = moveL(w)) out.push_back(w);
        return out;
    }
    if (branches(v) == 1) {
        for (TreeTVertex w = moveL(v); w.floor <= maxFloor; w = moveR(w)) {
            out.push_back(w);
            if (!hasMoveR(w)) break;
        }
        return out;
    }
    for (TreeTVertex w = moveL(v); w.floor <= maxFloor; w = moveR(w)) out.push_back(w);
    for (TreeTVertex w = moveR(v); w.floor <= maxFloor; w = moveL(w)) out.push_back(w);
    return out;
}

std::vector<Fraction> neighborLabelsFromCf(const TreeTVertex& v, std::int64_t maxFloor) {
    std::vector<Fraction> out;
    if (v.isStar()) {
        for (std::int64_t k = 1; k <= maxFloor + 1; ++k) out.emplace_back(1, k);
        return out;
    }
    if (branches(v) == 1) {
        for (std::int64_t k = 1; k <= maxFloor; ++k) out.emplace_back(k, k + 1);
        return out;
    }
    auto terms = cfOfVertex(v).terms();
    for (std::int64_t k = 1; k <= maxFloor - v.floor; ++k) {
        auto a = terms;
        a.back() -= 1;
        a.emplace_back(1);
        a.emplace_back(k);
        out.push_back(cfDecode(ContinuedFraction::normalize(a)));
        auto b = terms;
        b.emplace_back(k);
        out.push_back(cfDecode(ContinuedFraction::normalize(b)));
    }
    return out;
}

bool inNeighborSet(const TreeTVertex& v, const TreeTVertex& w) {
    if (w.isStar() || w.floor <= v.floor) return false;
    if (v.isStar()) return w.index == 1;
    if (branches(v) == 1) return w.index == top(w.floor) - 1;
    std::uint64_t base = v.index << (w.floor - v.floor);
    return w.index == base - 1 || w.index == base + 1;
}

TraceCandidate TraceCandidate::zero() {
    TraceCandidate t;
    t.phi = [](const TreeTVertex& v) { return v.isStar() ? Rational(1) : Rational(0); };
    t.tail = [](const TreeTVertex&, std::int64_t) { return Rational(0); };
    t.description = "zero";
    return t;
}

TraceCandidate TraceCandidate::geometric(const Rational& ratio) {
    if (ratio < 0 || ratio >= 1) throw std::invalid_argument("geometric ratio must lie in [0,1)");
    TraceCandidate t;
    t.phi = [ratio](const TreeTVertex& v) { return v.isStar() ? Rational(1) : rpow(ratio, v.floor + 1); };
    t.tail = [ratio](const TreeTVertex& v, std::int64_t d) {
        // each branch contributes ratio^(m+1) for every floor m > d
        return Rational(branches(v)) * rpow(ratio, d + 2) / (1 - ratio);
    };
    t.description = "geometric " + farey::toString(ratio);
    return t;
}

TraceCandidate TraceCandidate::table(std::map<std::pair<std::int64_t, std::uint64_t>, Rational> entries, const Rational& fallback) {
    for (const auto& [key, value] : entries) {
        TreeTVertex::at(key.first, key.second);
        if (value < 0 || value > 1) throw std::invalid_argument("trace values must lie in [0,1]");
    }
    if (fallback < 0 || fallback > 1) throw std::invalid_argument("trace values must lie in [0,1]");
    auto shared = std::make_shared<const std::map<std::pair<std::int64_t, std::uint64_t>, Rational>>(std::move(entries));
    TraceCandidate t;
    t.phi = [shared, fallback](const TreeTVertex& v) {
        if (v.isStar()) return Rational(1);
        auto it = shared->find({v.floor, v.index});
        return it == shared->end() ? fallback : it->second;
    };
    if (fallback == 0) {
        t.tail = [shared](const TreeTVertex& v, std::int64_t d) {
            Rational s = 0;
            for (const auto& [key, value] : *shared) {
                TreeTVertex w{key.first, key.second};
                if (w.floor > d && inNeighborSet(v, w)) s += value;
            }
            return s;
        };
    }
    t.description = "table";
    return t;
}

TraceCandidate TraceCandidate::fromLabels(std::function<Rational(const Fraction&)> f, std::string description) {
    TraceCandidate t;
    t.phi = [f = std::move(f)](const TreeTVertex& v) { return v.isStar() ? f(Fraction(0, 1)) : f(label(v.vertex())); };
    t.description = std::move(description);
    return t;
}

TraceCandidate traceCandidateFromJson(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "zero") return TraceCandidate::zero();
        if (kind == "geometric") return TraceCandidate::geometric(parseRational(j.at("ratio").get<std::string>()));
        if (kind == "table") {
            std::map<std::pair<std::int64_t, std::uint64_t>, Rational> entries;
            for (const auto& e : j.at("entries")) {
                if (!e.is_array() || e.size() != 3) throw std::invalid_argument("table entries are [n, k, \"p/q\"]");
                entries[{e[0].get<std::int64_t>(), e[1].get<std::uint64_t>()}] = parseRational(e[2].get<std::string>());
            }
            Rational fallback = j.contains("default") ? parseRational(j.at("default").get<std::string>()) : Rational(0);
            return TraceCandidate::table(std::move(entries), fallback);
        }
        throw std::invalid_argument("unknown trace candidate kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed trace candidate JSON: ") + e.what());
    }
}

TraceVerdict checkTrace(const TraceCandidate& t, std::int64_t depth) {
    if (depth < 0 || depth > kMaxTraceDepth) throw std::out_of_range("trace depth must be in [0, 20]");
    if (t.phi(TreeTVertex::star()) != 1) throw std::invalid_argument("trace candidate must have phi(*) = 1");
    TraceVerdict verdict;
    verdict.depth = depth;
    verdict.exact = static_cast<bool>(t.tail);
    auto check = [&](const TreeTVertex& v) {
        Rational sum = 0;
        if (depth >= v.floor + 1)
            for (const auto& w : neighborSet(v, depth)) sum += t.phi(w);
        if (t.tail) sum += t.tail(v, depth);
        ++verdict.verticesChecked;
        Rational value = t.phi(v);
        if (value < 0 || value > 1 || value < sum) {
            verdict.valid = false;
            verdict.firstViolation = v;
            verdict.violationExcess = sum - value;
            return false;
        }
        return true;
    };
    if (!check(TreeTVertex::star())) return verdict;
    for (std::int64_t n = 0; n < depth; ++n)
        for (std::uint64_t k = 1; k <= top(n); k += 2)
            if (!check({n, k})) return verdict;
    return verdict;
}

AlphaTable alphaFromPhi(const TraceCandidate& t, std::int64_t depth) {
    if (depth < 0 || depth > kMaxTraceDepth) throw std::out_of_range("alpha depth must be in [0, 20]");
    AlphaTable a;
    a.depth = depth;
    a.star = t.phi(TreeTVertex::star());
    for (std::int64_t n = 0; n <= depth; ++n) {
        std::vector<Rational> f(top(n) + 1);
        for (std::uint64_t k = 1; k <= top(n); k += 2) f[k] = t.phi({n, k});
        const Rational& above0 = n == 0 ? a.star : a.floors[n - 1][0];
        f[0] = above0 - f[1];
        if (n >= 1) {
            f[top(n)] = a.floors[n - 1][top(n - 1)] - f[top(n) - 1];
            for (std::uint64_t k = 2; k < top(n); k += 2) f[k] = a.floors[n - 1][k / 2] - f[k - 1] - f[k + 1];
        }
        for (std::uint64_t k = 0; k <= top(n) && !a.firstNegative; ++k)
            if (f[k] < 0) a.firstNegative = TreeVertex{n, k};
        a.floors.push_back(std::move(f));
    }
    a.recursionHolds = alphaRecursionHolds(a);
    return a;
}

bool alphaRecursionHolds(const AlphaTable& a) {
    if (a.depth >= 0 && a.star != a.floors[0][0] + a.floors[0][1]) return false;
    for (std::int64_t n = 0; n < a.depth; ++n) {
        for (std::uint64_t k = 0; k <= top(n); ++k) {
            Rational s = a.floors[n + 1][2 * k];
            if (k > 0) s += a.floors[n + 1][2 * k - 1];
            if (k < top(n)) s += a.floors[n + 1][2 * k + 1];
            if (s != a.floors[n][k]) return false;
        }
    }
    return true;
}

std::string toString(const TraceVerdict& v) {
    std::ostringstream os;
    os << (v.valid ? "valid" : "violated") << (v.exact ? " (exact)" : " (necessary-only)") << " depth=" << v.depth
       << " checked=" << v.verticesChecked;
    if (v.firstViolation) os << " first-violation=" << v.firstViolation->str() << " excess=" << farey::toString(v.violationExcess);
    return os.str();
}

}  // namespace farey::traces
