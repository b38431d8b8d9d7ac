#include "fareyaf/continued_fraction.hpp"

#include <sstream>
#include <stdexcept>

namespace farey {

ContinuedFraction ContinuedFraction::fromTerms(std::vector<BigInt> terms) {
    for (const auto& a : terms)
        if (a <= 0) throw std::invalid_argument("continued fraction terms must be positive");
    if (terms.size() >= 2 && terms.back() == 1)
        throw std::invalid_argument("non-canonical continued fraction: trailing term 1");
    ContinuedFraction cf;
    cf.terms_ = std::move(terms);
    return cf;
}

ContinuedFraction ContinuedFraction::normalize(std::vector<BigInt> terms) {
    if (!terms.empty() && terms.front() == 0) terms.erase(terms.begin());
    if (terms.size() >= 2 && terms.back() == 1) {
        terms.pop_back();
        terms.back() += 1;
    }
    return fromTerms(std::move(terms));
}

ContinuedFraction ContinuedFraction::parse(const std::string& text) {
    std::string body = text;
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
    std::vector<BigInt> terms;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty continued fraction term in '" + text + "'");
        try {
            terms.emplace_back(item);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("malformed continued fraction term '" + item + "'");
        }
    }
    return normalize(std::move(terms));
}

ContinuedFraction::Kind ContinuedFraction::kind() const {
    if (terms_.empty()) return Kind::zero;
    if (terms_.size() == 1 && terms_[0] == 1) return Kind::one;
    return Kind::interior;
}

BigInt ContinuedFraction::termSum() const {
    BigInt s = 0;
    for (const auto& a : terms_) s += a;
    return s;
}

std::string ContinuedFraction::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += ",";
        s += terms_[i].str();
    }
    return s + "]";
}

ContinuedFraction cfEncode(const Fraction& x) {
    if (!x.inUnitInterval()) throw std::domain_error("cfEncode expects a value in [0,1], got " + x.str());
    std::vector<BigInt> terms;
    BigInt p = x.num(), q = x.den();
    // x = p/q = 1/(q/p)
    while (p != 0) {
        BigInt a = q / p;
        BigInt r = q % p;
        terms.push_back(a);
        q = p;
        p = r;
    }
    return ContinuedFraction::fromTerms(std::move(terms));
}

std::vector<Fraction> convergents(const std::vector<BigInt>& terms) {
    std::vector<Fraction> out;
    out.reserve(terms.size());
    BigInt pm1 = 1, qm1 = 0, p0 = 0, q0 = 1;
    for (const auto& a : terms) {
        BigInt p = a * p0 + pm1;
        BigInt q = a * q0 + qm1;
        out.emplace_back(p, q);
        pm1 = p0;
        qm1 = q0;
        p0 = p;
        q0 = q;
    }
    return out;
}

Fraction cfValue(const std::vector<BigInt>& terms) {
    if (terms.empty()) return Fraction(0, 1);
    return convergents(terms).back();
}

Fraction cfDecode(const ContinuedFraction& cf) { return cfValue(cf.terms()); }

std::int64_t height(const Fraction& x) {
    if (x.isZero()) return 0;
    return static_cast<std::int64_t>(cfEncode(x).termSum()) - 1;
}

namespace {

void extend(std::vector<BigInt>& prefix, std::int64_t remaining, std::vector<ContinuedFraction>& out) {
    // prefix is a valid non-final part; append a final term a >= 2 or continue with any a >= 1
    for (std::int64_t a = 1; a <= remaining; ++a) {
        prefix.emplace_back(a);
        if (a >= 2) out.push_back(ContinuedFraction::fromTerms(prefix));
        extend(prefix, remaining - a, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ContinuedFraction> continuedFractionsUpToSum(std::int64_t n) {
    std::vector<ContinuedFraction> out;
    if (n >= 1) out.push_back(ContinuedFraction::one());
    std::vector<BigInt> prefix;
    extend(prefix, n, out);
    return out;
}

}  // namespace farey
