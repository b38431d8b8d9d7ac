#include "fareyaf/cli.hpp"

#include "fareyaf/continued_fraction.hpp"
#include "fareyaf/ideals.hpp"
#include "fareyaf/k0.hpp"
#include "fareyaf/paths.hpp"
#include "fareyaf/relations.hpp"
#include "fareyaf/traces.hpp"
#include "fareyaf/tree.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace farey::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename T>
std::string joined(const std::vector<T>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    return os.str();
}

std::vector<BigInt> parseTerms(const std::string& text) {
    std::vector<BigInt> terms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad continued fraction term '" + item + "'");
        terms.emplace_back(item);
        if (terms.back() < 1) throw UsageError("continued fraction terms must be positive");
    }
    if (terms.empty()) throw UsageError("empty continued fraction");
    return terms;
}

// "L:c0,c1,..." with 2^L coefficients
k0::LevelPoly parseLevelPoly(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("level polynomial must look like L:c0,c1,...");
    k0::LevelPoly p;
    try {
        p.level = std::stoll(text.substr(0, colon));
        p.coeffs.clear();
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) p.coeffs.emplace_back(item);
    } catch (const std::exception&) {
        throw UsageError("malformed level polynomial '" + text + "'");
    }
    p.validate();
    return p;
}

std::variant<Fraction, CfStream> parseTheta(const std::string& text, std::int64_t depth) {
    if (text.rfind("cf:", 0) == 0) {
        auto terms = parseTerms(text.substr(3));
        BigInt sum = 0;
        for (const auto& t : terms) sum += t;
        if (sum <= depth)
            throw UsageError("continued fraction prefix has term sum " + sum.str() + ", need more than --depth " +
                             std::to_string(depth));
        return CfStream::fromPrefix(std::move(terms));
    }
    return Fraction::parse(text);
}

Fraction parseDyadic(const std::string& text) {
    auto pos = text.find("/2^");
    if (pos == std::string::npos) return questionMarkInv(Fraction::parse(text));
    BigInt k;
    std::int64_t n = 0;
    try {
        k = BigInt(text.substr(0, pos));
        n = std::stoll(text.substr(pos + 3));
    } catch (const std::exception&) {
        throw UsageError("malformed dyadic '" + text + "'");
    }
    if (n < 0 || n > 4096) throw UsageError("dyadic exponent out of range");
    return questionMarkInv(k, n);
}

int cmdRow(std::int64_t floor, bool numerators, bool denominators, std::ostream& out) {
    if (numerators)
        out << joined(rowNumerators(floor)) << "\n";
    else if (denominators)
        out << joined(rowDenominators(floor)) << "\n";
    else
        out << joined(row(floor)) << "\n";
    return kExitPass;
}

int cmdIdeal(const std::string& thetaText, const std::string& variant, std::int64_t depth, const std::string& format,
             const std::string& side, std::ostream& out, std::ostream& err) {
    if (depth < 0 || depth > kMaxIdealDepth) throw UsageError("--depth must be in [0, 60]");
    IdealSpec spec{parseTheta(thetaText, depth), parseVariant(variant)};
    spec.validate();
    LevelSet quotient = quotientLevels(spec, depth);
    if (format == "dot") {
        if (depth > 10) throw UsageError("dot output is limited to depth 10");
        out << quotientToDot(quotient);
    } else {
        out << levelSetToJson(side == "ideal" ? quotient.complement() : quotient) << "\n";
    }
    auto c = classifyAdmissible(quotient);
    if (!c.admissible) {
        err << "quotient is not admissible at floor " << c.failingFloor.value_or(-1) << ": " << c.reason << "\n";
        return kExitFailed;
    }
    return kExitPass;
}

int cmdK0Identity(std::int64_t maxLevel, std::ostream& out, std::ostream& err) {
    if (maxLevel < 0 || maxLevel > 14) throw UsageError("--max-level must be in [0, 14]");
    bool ok = true;
    for (std::int64_t n = 0; n <= maxLevel; ++n) {
        auto v = k0::verifyUnitDecomposition(n);
        out << "n=" << n << " " << (v.ok ? "ok" : "FAIL");
        if (n <= 4) out << " q'=" << joined(v.qPrime);
        out << "\n";
        if (!v.ok) {
            err << "unit decomposition fails at n=" << n << ": " << v.detail << "\n";
            ok = false;
        }
    }
    return ok ? kExitPass : kExitFailed;
}

int cmdGen(std::int64_t terms, bool check, std::ostream& out, std::ostream& err) {
    if (terms < 0 || terms > (1 << 14)) throw UsageError("--terms must be in [0, 16384]");
    auto coeffs = k0::sternBrocotGenerating(terms);
    out << joined(coeffs) << "\n";
    if (!check) return kExitPass;
    std::vector<BigInt> flat;
    for (std::int64_t n = 0; static_cast<std::int64_t>(flat.size()) < terms; ++n) {
        auto q = rowDenominators(n);
        flat.insert(flat.end(), q.begin(), q.end() - 1);
    }
    for (std::int64_t i = 0; i < terms; ++i)
        if (coeffs[i] != flat[i]) {
            err << "coefficient " << i << " is " << coeffs[i] << ", flattened sequence has " << flat[i] << "\n";
            return kExitFailed;
        }
    return kExitPass;
}

int cmdTrace(const std::string& file, std::int64_t depth, std::ostream& out) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    auto candidate = traces::traceCandidateFromJson(buf.str());
    auto verdict = traces::checkTrace(candidate, depth);
    out << candidate.description << ": " << traces::toString(verdict) << "\n";
    return verdict.valid ? kExitPass : kExitFailed;
}

int cmdPaths(std::int64_t floor, std::ostream& out, std::ostream& err) {
    if (floor < 0 || floor > paths::kMaxPathFloor) throw UsageError("--floor must be in [0, 9]");
    auto space = paths::PathSpace::make(floor);
    auto counts = space->endpointCounts();
    auto q = rowDenominators(floor);
    out << "endpoints " << joined(counts) << "\n";
    out << "total " << space->size() << "\n";
    bool ok = counts == q && BigInt(space->size()) == pow3(floor) + 1;
    if (!ok) err << "path counts differ from q(" << floor << ",k) = " << joined(q) << "\n";
    return ok ? kExitPass : kExitFailed;
}

int cmdRelations(std::int64_t floor, const std::vector<std::string>& lambdas, const std::string& suite,
                 const std::string& format, bool failuresOnly, bool literal, std::ostream& out, std::ostream& err) {
    if (floor < 4 || floor > paths::kMaxPathFloor) throw UsageError("--floor must be in [4, 9]");
    bool ok = true;
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& text : lambdas) {
        Rational lambda = parseRational(text);
        if (lambda <= 0) throw UsageError("--lambda must be positive");
        paths::GeneratorSet gens(floor, lambda);
        std::vector<paths::SuiteReport> reports;
        if (suite == "base" || suite == "all") {
            paths::RelationOptions options;
            options.includeLiteralItem = literal;
            reports.push_back(paths::verifyRelationSuite(gens, options));
        }
        if (suite == "model" || suite == "all") reports.push_back(paths::verifyPathModel(gens));
        if (suite == "yb" || suite == "all") reports.push_back(paths::yangBaxterCheck(gens));
        if (suite == "braiding" || suite == "all") reports.push_back(paths::verifyBraidingSuite(gens));
        for (const auto& r : reports) {
            ok = ok && r.allPass();
            if (format == "json") {
                doc.push_back({{"lambda", toString(lambda)},
                               {"floor", floor},
                               {"suite", r.suite},
                               {"checks", nlohmann::json::parse(paths::reportToJson(r))}});
            } else {
                out << "# lambda=" << toString(lambda) << " N=" << floor << "\n" << paths::reportToText(r, failuresOnly);
            }
            if (!r.allPass()) err << r.suite << " (lambda=" << toString(lambda) << "): " << r.failures() << " failing checks\n";
        }
    }
    if (format == "json") out << doc.dump(2) << "\n";
    return ok ? kExitPass : kExitFailed;
}

int cmdZeta(double s, std::int64_t qmax, std::ostream& out) {
    if (!(s > 2)) throw UsageError("--s must exceed 2");
    if (qmax < 1) throw UsageError("--qmax must be positive");
    out << std::setprecision(15) << partitionFunction(s, qmax) << "\n";
    return kExitPass;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on the Farey/Stern-Brocot Bratteli diagram", "fareyaf"};
    app.require_subcommand(1);
    int code = kExitPass;
    std::function<int()> action;

    auto* row = app.add_subcommand("row", "Labels of one floor");
    std::int64_t rowFloor = 0;
    bool numerators = false, denominators = false;
    row->add_option("--floor", rowFloor, "Floor n")->required();
    auto* numFlag = row->add_flag("--numerators", numerators, "Numerators only");
    row->add_flag("--denominators", denominators, "Denominators only")->excludes(numFlag);
    row->callback([&] { action = [&] { return cmdRow(rowFloor, numerators, denominators, out); }; });

    auto* qmark = app.add_subcommand("qmark", "Minkowski question mark function");
    qmark->require_subcommand(1);
    std::string qArg;
    auto* qEval = qmark->add_subcommand("eval", "?(p/q)");
    qEval->add_option("x", qArg, "Fraction p/q in [0,1]")->required();
    qEval->callback([&] { action = [&] { out << questionMark(Fraction::parse(qArg)) << "\n"; return kExitPass; }; });
    auto* qInv = qmark->add_subcommand("inv", "Preimage of a dyadic rational");
    qInv->add_option("y", qArg, "k/2^n or p/q with q a power of two")->required();
    qInv->callback([&] { action = [&] { out << parseDyadic(qArg) << "\n"; return kExitPass; }; });

    auto* ideal = app.add_subcommand("ideal", "Quotient diagram of a primitive ideal");
    std::string theta, variant = "plain", format = "json", side = "quotient";
    std::int64_t depth = 0;
    ideal->add_option("--theta", theta, "p/q or cf:a1,a2,...")->required();
    ideal->add_option("--variant", variant)->check(CLI::IsMember({"plain", "plus", "minus"}));
    ideal->add_option("--depth", depth)->required();
    ideal->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
    ideal->add_option("--side", side, "Level set written as JSON")->check(CLI::IsMember({"quotient", "ideal"}));
    ideal->callback([&] { action = [&] { return cmdIdeal(theta, variant, depth, format, side, out, err); }; });

    auto* k0cmd = app.add_subcommand("k0", "Dimension group arithmetic; polynomials are L:c0,c1,...");
    k0cmd->require_subcommand(1);
    std::string pa, pb;
    std::int64_t liftTo = 0, maxLevel = 10;
    auto* kAdd = k0cmd->add_subcommand("add", "[p] + [q]");
    kAdd->add_option("p", pa)->required();
    kAdd->add_option("q", pb)->required();
    kAdd->callback([&] {
        action = [&] { out << k0::addClasses(parseLevelPoly(pa), parseLevelPoly(pb)).str() << "\n"; return kExitPass; };
    });
    auto* kPos = k0cmd->add_subcommand("pos", "Positivity of [p]");
    kPos->add_option("p", pa)->required();
    kPos->callback([&] {
        action = [&] { out << (k0::isPositiveClass(parseLevelPoly(pa)) ? "positive" : "not positive") << "\n"; return kExitPass; };
    });
    auto* kLift = k0cmd->add_subcommand("lift", "Lift p to a higher level");
    kLift->add_option("p", pa)->required();
    kLift->add_option("--to", liftTo, "Target level")->required();
    kLift->callback([&] {
        action = [&] {
            if (liftTo > k0::kMaxLevel) throw UsageError("--to must be at most 20");
            out << k0::betaLift(parseLevelPoly(pa), liftTo).str() << "\n";
            return kExitPass;
        };
    });
    auto* kId = k0cmd->add_subcommand("identity", "Check sum_k q'(n,k) p_(n,k) = rho_n");
    kId->add_option("--max-level", maxLevel, "Largest n checked");
    kId->callback([&] { action = [&] { return cmdK0Identity(maxLevel, out, err); }; });

    auto* gen = app.add_subcommand("gen", "Stern-Brocot generating function coefficients");
    std::int64_t terms = 0;
    bool genCheck = false;
    gen->add_option("--terms", terms)->required();
    gen->add_flag("--check", genCheck, "Compare with the flattened denominator rows");
    gen->callback([&] { action = [&] { return cmdGen(terms, genCheck, out, err); }; });

    auto* trace = app.add_subcommand("trace", "Trace cone");
    trace->require_subcommand(1);
    std::string candidateFile;
    std::int64_t traceDepth = 10;
    auto* tCheck = trace->add_subcommand("check", "Check a trace candidate");
    tCheck->add_option("--candidate", candidateFile, "Candidate JSON file")->required();
    tCheck->add_option("--depth", traceDepth);
    tCheck->callback([&] { action = [&] { return cmdTrace(candidateFile, traceDepth, out); }; });

    auto* pathsCmd = app.add_subcommand("paths", "Monotone path counts per endpoint");
    std::int64_t pathFloor = 0;
    pathsCmd->add_option("--floor", pathFloor)->required();
    pathsCmd->callback([&] { action = [&] { return cmdPaths(pathFloor, out, err); }; });

    auto* rel = app.add_subcommand("relations", "Verify the generator relations in the path model");
    std::int64_t relFloor = 5;
    std::vector<std::string> lambdas{"1"};
    std::string suite = "all", relFormat = "text";
    bool failuresOnly = false, literal = false;
    rel->add_option("--floor", relFloor)->required();
    rel->add_option("--lambda", lambdas, "p/q, repeatable")->take_all();
    rel->add_option("--suite", suite)->check(CLI::IsMember({"base", "model", "yb", "braiding", "all"}));
    rel->add_option("--format", relFormat)->check(CLI::IsMember({"text", "json"}));
    rel->add_flag("--failures-only", failuresOnly);
    rel->add_flag("--literal-item", literal, "Also check the false item v_n^* w_{n-1} = 0");
    rel->callback([&] {
        action = [&] { return cmdRelations(relFloor, lambdas, suite, relFormat, failuresOnly, literal, out, err); };
    });

    auto* zeta = app.add_subcommand("zeta", "Truncated sum of phi(q) q^-s");
    double s = 3;
    std::int64_t qmax = 1000;
    zeta->add_option("--s", s)->required();
    zeta->add_option("--qmax", qmax)->required();
    zeta->callback([&] { action = [&] { return cmdZeta(s, qmax, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kExitPass : kExitUsage;
    }
    try {
        code = action ? action() : kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "failed: " << e.what() << "\n";
        return kExitFailed;
    }
    return code;
}

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return runCli(args, out, err);
}

}  // namespace farey::cli
