#include "fareyaf/relations.hpp"

#include "fareyaf/tree.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace farey::paths {

bool SuiteReport::allPass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; }));
}

const CheckResult* SuiteReport::firstFailure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

void SuiteReport::append(const SuiteReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

namespace {

using Indices = std::map<std::string, std::int64_t>;

class Recorder {
public:
    explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

    void equal(const std::string& eq, const std::string& stmt, Indices idx, const SparseOperator& lhs, const SparseOperator& rhs) {
        auto w = lhs.firstDifference(rhs);
        push(eq, stmt, std::move(idx), !w, w);
    }
    void zero(const std::string& eq, const std::string& stmt, Indices idx, const SparseOperator& op) {
        std::optional<Witness> w;
        if (!op.isZero()) w = op.firstDifference(SparseOperator(op.spacePtr(), op.fieldPtr()));
        push(eq, stmt, std::move(idx), !w, w);
    }
    void nonzero(const std::string& eq, const std::string& stmt, Indices idx, const SparseOperator& op) {
        push(eq, stmt, std::move(idx), !op.isZero(), std::nullopt);
    }
    void projection(const std::string& eq, const std::string& stmt, Indices idx, const SparseOperator& p) {
        auto w = (p * p).firstDifference(p);
        if (!w) w = p.adjoint().firstDifference(p);
        push(eq, stmt, std::move(idx), !w, w);
    }
    void outcome(const std::string& eq, const std::string& stmt, Indices idx, std::optional<Witness> w) {
        push(eq, stmt, std::move(idx), !w, w);
    }
    void flag(const std::string& eq, const std::string& stmt, Indices idx, bool pass) {
        push(eq, stmt, std::move(idx), pass, std::nullopt);
    }

    SuiteReport take() { return std::move(report_); }

private:
    void push(const std::string& eq, const std::string& stmt, Indices idx, bool pass, std::optional<Witness> w) {
        report_.checks.push_back(CheckResult{eq, stmt, std::move(idx), pass, std::move(w)});
    }
    SuiteReport report_;
};

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) { return a * b - b * a; }

void requireFloor(const GeneratorSet& gens) {
    if (gens.floor() < 4) throw std::invalid_argument("relation suites need N >= 4");
}

// representative path through each vertex of floor r: first in lexicographic order
std::vector<std::size_t> firstThrough(const PathSpace& s, std::int64_t r) {
    std::vector<std::size_t> first((std::size_t{1} << r) + 1, s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto x = s.coord(i, r);
        if (first[x] == s.size()) first[x] = i;
    }
    return first;
}

bool sameRange(const PathSpace& s, std::size_t i, std::size_t j, std::int64_t from, std::int64_t to) {
    for (std::int64_t m = from; m <= to; ++m)
        if (s.coord(i, m) != s.coord(j, m)) return false;
    return true;
}

Witness witnessAt(const SparseOperator& op, std::size_t i, std::size_t j, std::string expected) {
    const PathSpace& s = op.space();
    return Witness{i, j, s.pathString(i), s.pathString(j), op.entry(i, j).str(), std::move(expected)};
}

// Shared shape of the two locality checks: `fixed` is the coordinate range that must agree,
// `canon` moves a path to the representative that only keeps the free part.
std::optional<Witness> blockInvariance(const SparseOperator& op, std::int64_t fixedFrom, std::int64_t fixedTo,
                                       const std::function<std::size_t(std::size_t)>& canon) {
    const PathSpace& s = op.space();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (const auto& [j, v] : op.row(i))
            if (!sameRange(s, i, j, fixedFrom, fixedTo)) return witnessAt(op, i, j, "0");
    std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto p = s.path(i);
        groups[std::vector<std::uint32_t>(p.begin() + fixedFrom, p.begin() + fixedTo + 1)].push_back(i);
    }
    std::vector<std::size_t> rep(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) rep[i] = canon(i);
    for (const auto& [key, members] : groups)
        for (auto i : members)
            for (auto j : members) {
                QuadScalar expected = op.entry(rep[i], rep[j]);
                if (!(op.entry(i, j) == expected)) return witnessAt(op, i, j, expected.str());
            }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> membershipViolation(const SparseOperator& op, std::int64_t r) {
    const PathSpace& s = op.space();
    if (r >= s.floor()) return std::nullopt;
    if (r < 0) throw std::out_of_range("membership needs r >= 0");
    auto first = firstThrough(s, r);
    return blockInvariance(op, r, s.floor(), [&](std::size_t i) { return s.splice(i, first[s.coord(i, r)], r); });
}

std::optional<Witness> commutantViolation(const SparseOperator& op, std::int64_t r) {
    const PathSpace& s = op.space();
    if (r < 0) return std::nullopt;
    if (r > s.floor()) throw std::out_of_range("commutant floor beyond N");
    auto first = firstThrough(s, r);
    return blockInvariance(op, 0, r, [&](std::size_t i) { return s.splice(first[s.coord(i, r)], i, r); });
}

SuiteReport verifyRelationSuite(const GeneratorSet& G, const RelationOptions& options) {
    requireFloor(G);
    const std::int64_t N = G.floor();
    Recorder rec("relations");
    const SparseOperator one = G.one();
    auto idx = [](std::int64_t n) { return Indices{{"n", n}}; };

    // projections
    for (std::int64_t n = 0; n <= N; ++n) {
        rec.projection("projections", "e_n^2 = e_n^* = e_n", idx(n), G.e(n));
        rec.projection("projections", "f_n^2 = f_n^* = f_n", idx(n), G.f(n));
        rec.projection("projections", "g_n^2 = g_n^* = g_n", idx(n), G.g(n));
        rec.equal("projections", "e_n + f_n + g_n = 1", idx(n), G.e(n) + G.f(n) + G.g(n), one);
    }
    for (GenKind a : {GenKind::e, GenKind::f, GenKind::g})
        for (GenKind b : {GenKind::e, GenKind::f, GenKind::g})
            for (std::int64_t n = 0; n <= N; ++n)
                for (std::int64_t m = 0; m <= N; ++m) {
                    if (std::make_pair(int(a), n) >= std::make_pair(int(b), m)) continue;
                    rec.zero("projections", "[" + toString(a) + "_n, " + toString(b) + "_m] = 0", {{"n", n}, {"m", m}},
                             commutator(G.get(a, n), G.get(b, m)));
                }

    for (std::int64_t n = 0; n <= N - 1; ++n) {
        const auto& v = G.v(n);
        const auto vs = v.adjoint();
        // support
        rec.zero("support", "(1 - f_n) v_n = 0", idx(n), (one - G.f(n)) * v);
        rec.zero("support", "(1 - e_{n+1}) v_n = 0", idx(n), (one - G.e(n + 1)) * v);
        rec.zero("support", "v_n (1 - g_n) = 0", idx(n), v * (one - G.g(n)));
        rec.zero("support", "v_n (1 - f_{n+1}) = 0", idx(n), v * (one - G.f(n + 1)));
        // intertwining
        rec.equal("intertwining", "v_n g_n = f_n v_n", idx(n), v * G.g(n), G.f(n) * v);
        rec.equal("intertwining", "v_n f_{n+1} = e_{n+1} v_n", idx(n), v * G.f(n + 1), G.e(n + 1) * v);
        // partial isometries
        rec.equal("partial-isometry", "v_n^* v_n = g_n f_{n+1}", idx(n), vs * v, G.g(n) * G.f(n + 1));
        rec.equal("partial-isometry", "v_n v_n^* = f_n e_{n+1}", idx(n), v * vs, G.f(n) * G.e(n + 1));
        if (!G.has(GenKind::w, n)) continue;
        const auto& w = G.w(n);
        const auto ws = w.adjoint();
        rec.zero("support", "(1 - e_n) w_n = 0", idx(n), (one - G.e(n)) * w);
        rec.zero("support", "(1 - f_{n+1}) w_n = 0", idx(n), (one - G.f(n + 1)) * w);
        rec.zero("support", "w_n (1 - g_n) = 0", idx(n), w * (one - G.g(n)));
        rec.zero("support", "w_n (1 - e_{n+1}) = 0", idx(n), w * (one - G.e(n + 1)));
        rec.equal("intertwining", "w_n g_n = e_n w_n", idx(n), w * G.g(n), G.e(n) * w);
        rec.equal("intertwining", "w_n e_{n+1} = f_{n+1} w_n", idx(n), w * G.e(n + 1), G.f(n + 1) * w);
        rec.equal("partial-isometry", "w_n^* w_n = g_n e_{n+1}", idx(n), ws * w, G.g(n) * G.e(n + 1));
        rec.equal("partial-isometry", "w_n w_n^* = e_n f_{n+1}", idx(n), w * ws, G.e(n) * G.f(n + 1));
    }

    // vanishing products
    auto has = [&](GenKind k, std::int64_t n) { return G.has(k, n); };
    auto op = [&](GenKind k, std::int64_t n, bool star) { return star ? G.get(k, n).adjoint() : G.get(k, n); };
    struct Item {
        GenKind a;
        int da;
        bool sa;
        GenKind b;
        int db;
        bool sb;
        const char* text;
    };
    const GenKind V = GenKind::v, W = GenKind::w;
    const std::vector<Item> vanishing = {
        {V, 1, false, V, 0, false, "v_{n+1} v_n = 0"},   {V, 0, false, V, 0, false, "v_n^2 = 0"},
        {V, 1, false, V, 0, true, "v_{n+1} v_n^* = 0"},  {V, -1, false, V, 0, true, "v_{n-1} v_n^* = 0"},
        {V, 1, true, V, 0, false, "v_{n+1}^* v_n = 0"},  {V, -1, true, V, 0, false, "v_{n-1}^* v_n = 0"},
        {W, 1, false, W, 0, false, "w_{n+1} w_n = 0"},   {W, 0, false, W, 0, false, "w_n^2 = 0"},
        {W, 1, false, W, 0, true, "w_{n+1} w_n^* = 0"},  {W, -1, false, W, 0, true, "w_{n-1} w_n^* = 0"},
        {W, 1, true, W, 0, false, "w_{n+1}^* w_n = 0"},  {W, -1, true, W, 0, false, "w_{n-1}^* w_n = 0"},
        {V, 0, false, W, 0, false, "v_n w_n = 0"},       {V, 1, false, W, 0, false, "v_{n+1} w_n = 0"},
        {V, -1, false, W, 0, false, "v_{n-1} w_n = 0"},  {W, 0, false, V, 0, false, "w_n v_n = 0"},
        {W, 1, false, V, 0, false, "w_{n+1} v_n = 0"},   {W, -1, false, V, 0, false, "w_{n-1} v_n = 0"},
        {V, 0, false, W, 0, true, "v_n w_n^* = 0"},      {V, 1, false, W, 0, true, "v_{n+1} w_n^* = 0"},
        {V, -1, false, W, 0, true, "v_{n-1} w_n^* = 0"}, {V, 0, true, W, 0, false, "v_n^* w_n = 0"},
        {V, 0, true, W, -1, true, "v_n^* w_{n-1}^* = 0"},
    };
    for (std::int64_t n = 0; n <= N - 1; ++n)
        for (const auto& it : vanishing) {
            if (!has(it.a, n + it.da) || !has(it.b, n + it.db)) continue;
            rec.zero("vanishing", it.text, idx(n), op(it.a, n + it.da, it.sa) * op(it.b, n + it.db, it.sb));
        }
    for (std::int64_t n = 2; n <= N - 1; ++n) {
        SparseOperator p = G.v(n).adjoint() * G.w(n - 1);
        rec.nonzero("vanishing", "v_n^* w_{n-1} != 0 (adjoint of w_{n-1}^* v_n)", idx(n), p);
        if (options.includeLiteralItem) rec.zero("vanishing-literal", "v_n^* w_{n-1} = 0", idx(n), p);
    }

    // products a b, a in {v_n, v_n^*, w_n, w_n^*}, b in {v_{n+1}, ...}
    for (std::int64_t n = 0; n + 1 <= N - 1; ++n)
        for (GenKind a : {V, W})
            for (bool sa : {false, true})
                for (GenKind b : {V, W})
                    for (bool sb : {false, true}) {
                        if (!has(a, n) || !has(b, n + 1)) continue;
                        bool expectNonzero = (a == V && !sa && b == V && !sb) || (a == W && !sa && b == W && !sb) ||
                                             (a == W && sa && b == V && !sb) || (a == V && sa && b == W && !sb);
                        std::string text = toString(a) + "_n" + (sa ? "^*" : "") + " " + toString(b) + "_{n+1}" + (sb ? "^*" : "");
                        SparseOperator p = op(a, n, sa) * op(b, n + 1, sb);
                        if (expectNonzero)
                            rec.nonzero("nonzero", text + " != 0", idx(n), p);
                        else
                            rec.zero("nonzero", text + " = 0", idx(n), p);
                    }

    // v_n^2 = 0, v_n v_{n+-1} v_n = 0 and the braid relations they imply
    for (std::int64_t n = 0; n <= N - 1; ++n) {
        rec.zero("nilpotent", "v_n^2 = 0", idx(n), G.v(n) * G.v(n));
        if (n + 1 <= N - 1) {
            SparseOperator a = G.v(n) * G.v(n + 1) * G.v(n);
            SparseOperator b = G.v(n + 1) * G.v(n) * G.v(n + 1);
            rec.zero("nilpotent", "v_n v_{n+1} v_n = 0", idx(n), a);
            rec.zero("nilpotent", "v_{n+1} v_n v_{n+1} = 0", idx(n), b);
            rec.equal("braid", "v_n v_{n+1} v_n = v_{n+1} v_n v_{n+1}", idx(n), a, b);
        }
        if (n >= 1 && n + 1 <= N - 1)
            rec.equal("braid", "w_n w_{n+1} w_n = w_{n+1} w_n w_{n+1}", idx(n), G.w(n) * G.w(n + 1) * G.w(n),
                      G.w(n + 1) * G.w(n) * G.w(n + 1));
    }

    // locality
    for (GenKind a : {V, W})
        for (std::int64_t s = G.minIndex(a); s <= G.maxIndex(a); ++s) {
            const auto& x = G.get(a, s);
            for (GenKind b : {V, W})
                for (std::int64_t r = G.minIndex(b); r <= G.maxIndex(b); ++r) {
                    if (std::abs(r - s) < 2) continue;
                    const auto& y = G.get(b, r);
                    Indices ix{{"s", s}, {"r", r}};
                    rec.zero("locality", "[" + toString(a) + "_s, " + toString(b) + "_r] = 0", ix, commutator(x, y));
                    rec.zero("locality", "[" + toString(a) + "_s, " + toString(b) + "_r^*] = 0", ix, commutator(x, y.adjoint()));
                }
            for (GenKind b : {GenKind::e, GenKind::f, GenKind::g})
                for (std::int64_t r = 0; r <= N; ++r) {
                    if (r >= s && r <= s + 1) continue;
                    rec.zero("locality", "[" + toString(a) + "_s, " + toString(b) + "_r] = 0", {{"s", s}, {"r", r}},
                             commutator(x, G.get(b, r)));
                }
        }

    if (options.includeMembership) {
        for (GenKind a : {V, W})
            for (std::int64_t n = G.minIndex(a); n <= G.maxIndex(a); ++n) {
                rec.outcome("membership", toString(a) + "_n in A_{n+1}", idx(n), membershipViolation(G.get(a, n), n + 1));
                rec.outcome("membership", toString(a) + "_n commutes with A_{n-1}", idx(n), commutantViolation(G.get(a, n), n - 1));
            }
        for (GenKind a : {GenKind::e, GenKind::f, GenKind::g})
            for (std::int64_t n = 0; n <= N; ++n) {
                rec.outcome("membership", toString(a) + "_n in A_n", idx(n), membershipViolation(G.get(a, n), n));
                rec.outcome("membership", toString(a) + "_n commutes with A_{n-1}", idx(n), commutantViolation(G.get(a, n), n - 1));
            }
    }
    return rec.take();
}

SuiteReport verifyRelationSuite(std::int64_t N, const Rational& lambda) { return verifyRelationSuite(GeneratorSet(N, lambda)); }

SuiteReport verifyPathModel(const GeneratorSet& G) {
    const PathSpace& s = *G.space();
    const std::int64_t N = G.floor();
    Recorder rec("model");
    auto counts = s.endpointCounts();
    auto q = farey::rowDenominators(N);
    std::uint64_t total = 0;
    bool blocksOk = counts.size() == q.size();
    for (std::size_t k = 0; blocksOk && k < q.size(); ++k) {
        blocksOk = counts[k] == q[k];
        total += counts[k];
    }
    rec.flag("model", "block of endpoint (N,k) has size q(N,k)", {{"N", N}}, blocksOk);
    rec.flag("model", "number of paths = 3^N + 1", {{"N", N}}, BigInt(total) == farey::pow3(N) + 1 && total == s.size());

    // T_{xi,eta} for prefixes of length r: maps omega with omega_{r]} = eta to xi o omega_{[r}
    auto unit = [&](std::size_t xi, std::size_t eta, const PathSpace& pre) {
        SparseOperator t(G.space(), G.field());
        std::int64_t r = pre.floor();
        auto xp = pre.path(xi);
        auto ep = pre.path(eta);
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto p = s.path(i);
            if (!std::equal(ep.begin(), ep.end(), p.begin())) continue;
            Path target(p.begin(), p.end());
            std::copy(xp.begin(), xp.end(), target.begin());
            t.set(*s.indexOf(target), i, t.scalar(1));
        }
        (void)r;
        return t;
    };
    for (std::int64_t r = 0; r <= N - 1; ++r) {
        auto pre = PathSpace::make(r);
        SparseOperator sum(G.space(), G.field());
        for (std::size_t i = 0; i < pre->size(); ++i) sum = sum + unit(i, i, *pre);
        rec.equal("model", "sum_{xi in Omega_{r]}} T_{xi,xi} = 1", {{"r", r}}, sum, G.one());
    }
    {
        std::int64_t r = std::min<std::int64_t>(2, N - 1);
        auto pre = PathSpace::make(r);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < pre->size(); ++i)
            for (std::size_t j = 0; j < pre->size(); ++j)
                if (pre->endpoint(i) == pre->endpoint(j)) pairs.emplace_back(i, j);
        std::vector<SparseOperator> units;
        for (auto [i, j] : pairs) units.push_back(unit(i, j, *pre));
        bool adjointOk = true, productOk = true;
        for (std::size_t a = 0; a < pairs.size(); ++a) {
            auto [xi, eta] = pairs[a];
            auto back = std::find(pairs.begin(), pairs.end(), std::make_pair(eta, xi)) - pairs.begin();
            adjointOk = adjointOk && units[a].adjoint() == units[back];
            for (std::size_t b = 0; b < pairs.size() && productOk; ++b) {
                auto [xi2, eta2] = pairs[b];
                SparseOperator prod = units[a] * units[b];
                if (eta == xi2) {
                    auto c = std::find(pairs.begin(), pairs.end(), std::make_pair(xi, eta2)) - pairs.begin();
                    productOk = prod == units[c];
                } else {
                    productOk = prod.isZero();
                }
            }
        }
        rec.flag("model", "T_{eta,xi}^* = T_{xi,eta}", {{"r", r}}, adjointOk);
        rec.flag("model", "T_{xi,eta} T_{xi',eta'} = delta(eta,xi') T_{xi,eta'}", {{"r", r}}, productOk);
    }
    return rec.take();
}

// Both sides are polynomials of degree <= 2 in a and in b separately, so agreement on a
// 3 x 3 grid of distinct values proves the identity for all a, b at this N.
SuiteReport yangBaxterCheck(const GeneratorSet& G, const std::vector<Rational>& axis) {
    Recorder rec("yang-baxter");
    const SparseOperator one = G.one();
    auto R = [&](std::int64_t n, const Rational& t) { return one + G.v(n).scaled(t); };
    for (std::int64_t n = 0; n + 1 <= G.floor() - 1; ++n)
        for (std::size_t i = 0; i < axis.size(); ++i)
            for (std::size_t j = 0; j < axis.size(); ++j) {
                const Rational& a = axis[i];
                const Rational& b = axis[j];
                SparseOperator lhs = R(n, a) * R(n + 1, a + b) * R(n, b);
                SparseOperator rhs = R(n + 1, b) * R(n, a + b) * R(n + 1, a);
                rec.equal("yang-baxter", "R_n(a) R_{n+1}(a+b) R_n(b) = R_{n+1}(b) R_n(a+b) R_{n+1}(a)",
                          {{"n", n}, {"a_index", static_cast<std::int64_t>(i)}, {"b_index", static_cast<std::int64_t>(j)}}, lhs, rhs);
            }
    return rec.take();
}

SuiteReport verifyBraidingSuite(const GeneratorSet& G) {
    requireFloor(G);
    const std::int64_t N = G.floor();
    Recorder rec("braiding");
    const SparseOperator one = G.one();
    const Rational tau = G.tau();
    const Rational lt = G.lambda() * tau;
    auto idx = [](std::int64_t n) { return Indices{{"n", n}}; };

    for (std::int64_t n = 0; n <= N - 1; ++n) rec.projection("projection", "E_n^2 = E_n^* = E_n", idx(n), G.E(n));
    for (std::int64_t n = 1; n <= N - 1; ++n) {
        rec.projection("projection", "F_n^2 = F_n^* = F_n", idx(n), G.F(n));
        rec.zero("orthogonal", "E_n F_n = 0", idx(n), G.E(n) * G.F(n));
        rec.zero("orthogonal", "F_n E_n = 0", idx(n), G.F(n) * G.E(n));
    }
    for (GenKind a : {GenKind::E, GenKind::F})
        for (GenKind b : {GenKind::E, GenKind::F})
            for (std::int64_t n = G.minIndex(a); n <= G.maxIndex(a); ++n)
                for (std::int64_t m = G.minIndex(b); m <= G.maxIndex(b); ++m) {
                    if (m - n < 2 && n - m < 2) continue;
                    if (a == b && m < n) continue;
                    rec.zero("commutation", "[" + toString(a) + "_n, " + toString(b) + "_m] = 0", {{"n", n}, {"m", m}},
                             commutator(G.get(a, n), G.get(b, m)));
                }

    for (std::int64_t n = 0; n + 2 <= N; ++n) {
        const auto& En = G.E(n);
        const auto& En1 = G.E(n + 1);
        const auto& Fn1 = G.F(n + 1);
        SparseOperator EEE = En * En1 * En;
        SparseOperator E1EE1 = En1 * En * En1;
        rec.equal("temperley-lieb", "E_n E_{n+1} E_n = tau E_n e_{n+2}", idx(n), EEE, (En * G.e(n + 2)).scaled(tau));
        rec.equal("temperley-lieb", "E_{n+1} E_n E_{n+1} = tau E_{n+1} g_n", idx(n), E1EE1, (En1 * G.g(n)).scaled(tau));
        rec.equal("mixed-tl", "E_n F_{n+1} E_n = lambda tau E_n f_{n+2}", idx(n), En * Fn1 * En, (En * G.f(n + 2)).scaled(lt));
        rec.equal("mixed-tl", "F_{n+1} E_n F_{n+1} = lambda tau F_{n+1} f_n", idx(n), Fn1 * En * Fn1, (Fn1 * G.f(n)).scaled(lt));
        rec.zero("mixed-vanishing", "E_{n+1} E_n F_{n+1} = 0", idx(n), En1 * En * Fn1);
        rec.zero("mixed-vanishing", "F_{n+1} E_n E_{n+1} = 0", idx(n), Fn1 * En * En1);

        // dominance: tau E_n - E_n E_{n+1} E_n = tau P with P = E_n (1 - e_{n+2}) a projection
        SparseOperator P = En * (one - G.e(n + 2));
        rec.projection("dominance", "E_n (1 - e_{n+2}) is a projection", idx(n), P);
        rec.equal("dominance", "tau E_n - E_n E_{n+1} E_n = tau E_n (1 - e_{n+2})", idx(n), En.scaled(tau) - EEE, P.scaled(tau));
        SparseOperator Q = En1 * (one - G.g(n));
        rec.projection("dominance", "E_{n+1} (1 - g_n) is a projection", idx(n), Q);
        rec.equal("dominance", "tau E_{n+1} - E_{n+1} E_n E_{n+1} = tau E_{n+1} (1 - g_n)", idx(n), En1.scaled(tau) - E1EE1,
                  Q.scaled(tau));

        if (n < 1) continue;
        const auto& Fn = G.F(n);
        SparseOperator FFF = Fn * Fn1 * Fn;
        SparseOperator F1FF1 = Fn1 * Fn * Fn1;
        rec.equal("temperley-lieb", "F_n F_{n+1} F_n = tau F_n f_{n+2}", idx(n), FFF, (Fn * G.f(n + 2)).scaled(tau));
        rec.equal("temperley-lieb", "F_{n+1} F_n F_{n+1} = tau F_{n+1} g_n", idx(n), F1FF1, (Fn1 * G.g(n)).scaled(tau));
        rec.equal("mixed-tl", "F_n E_{n+1} F_n = lambda tau F_n e_{n+2}", idx(n), Fn * En1 * Fn, (Fn * G.e(n + 2)).scaled(lt));
        rec.equal("mixed-tl", "E_{n+1} F_n E_{n+1} = lambda tau E_{n+1} e_n", idx(n), En1 * Fn * En1, (En1 * G.e(n)).scaled(lt));
        rec.zero("mixed-vanishing", "E_n E_{n+1} F_n = 0", idx(n), En * En1 * Fn);
        rec.zero("mixed-vanishing", "E_n F_{n+1} F_n = 0", idx(n), En * Fn1 * Fn);
        rec.zero("mixed-vanishing", "E_{n+1} F_n F_{n+1} = 0", idx(n), En1 * Fn * Fn1);
        rec.zero("mixed-vanishing", "F_n E_{n+1} E_n = 0", idx(n), Fn * En1 * En);
        rec.zero("mixed-vanishing", "F_n F_{n+1} E_n = 0", idx(n), Fn * Fn1 * En);
        rec.zero("mixed-vanishing", "F_{n+1} F_n E_{n+1} = 0", idx(n), Fn1 * Fn * En1);

        SparseOperator PF = Fn * (one - G.f(n + 2));
        rec.projection("dominance", "F_n (1 - f_{n+2}) is a projection", idx(n), PF);
        rec.equal("dominance", "tau F_n - F_n F_{n+1} F_n = tau F_n (1 - f_{n+2})", idx(n), Fn.scaled(tau) - FFF, PF.scaled(tau));
        SparseOperator QF = Fn1 * (one - G.g(n));
        rec.projection("dominance", "F_{n+1} (1 - g_n) is a projection", idx(n), QF);
        rec.equal("dominance", "tau F_{n+1} - F_{n+1} F_n F_{n+1} = tau F_{n+1} (1 - g_n)", idx(n), Fn1.scaled(tau) - F1FF1,
                  QF.scaled(tau));
    }
    return rec.take();
}

SuiteReport verifyBraidingSuite(std::int64_t N, const Rational& lambda) { return verifyBraidingSuite(GeneratorSet(N, lambda)); }

std::string reportToJson(const SuiteReport& report) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json j;
        j["equation"] = c.equation;
        j["statement"] = c.statement;
        j["indices"] = c.indices;
        j["status"] = c.pass ? "pass" : "fail";
        if (c.witness) {
            j["witness"] = {{"row", c.witness->rowPath},
                            {"col", c.witness->colPath},
                            {"value", c.witness->value},
                            {"expected", c.witness->expected}};
        }
        list.push_back(j);
    }
    return list.dump(2);
}

std::string reportToText(const SuiteReport& report, bool failuresOnly) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        if (failuresOnly && c.pass) continue;
        os << (c.pass ? "pass " : "FAIL ") << "[" << c.equation << "] " << c.statement;
        for (const auto& [k, v] : c.indices) os << " " << k << "=" << v;
        if (c.witness)
            os << "  witness row=" << c.witness->rowPath << " col=" << c.witness->colPath << " value=" << c.witness->value
               << " expected=" << c.witness->expected;
        os << "\n";
    }
    os << report.suite << ": " << report.checks.size() - report.failures() << "/" << report.checks.size() << " checks pass\n";
    return os.str();
}

}  // namespace farey::paths
