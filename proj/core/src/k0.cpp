#include "fareyaf/k0.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace farey::k0 {

namespace {

void checkLevel(std::int64_t n) {
    if (n < 0) throw std::out_of_range("negative level");
    if (n > kMaxLevel) throw std::out_of_range("level " + std::to_string(n) + " exceeds " + std::to_string(kMaxLevel));
}

std::size_t width(std::int64_t n) { return std::size_t{1} << n; }

}  // namespace

LevelPoly LevelPoly::zero(std::int64_t level) {
    checkLevel(level);
    return {level, std::vector<BigInt>(width(level), BigInt(0))};
}

LevelPoly LevelPoly::basis(std::int64_t level, std::uint64_t k) {
    LevelPoly p = zero(level);
    if (k >= p.coeffs.size()) throw std::out_of_range("basis index out of range");
    p.coeffs[k] = 1;
    return p;
}

void LevelPoly::validate() const {
    checkLevel(level);
    if (coeffs.size() != width(level))
        throw std::invalid_argument("level " + std::to_string(level) + " needs " + std::to_string(width(level)) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
}

std::string LevelPoly::str() const {
    std::string s = std::to_string(level) + ":";
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + coeffs[i].str();
    return s;
}

SymLaurent::SymLaurent(std::int64_t half, std::vector<BigInt> coeffs) : half_(half), coeffs_(std::move(coeffs)) {
    if (half_ < 0 || coeffs_.size() != static_cast<std::size_t>(2 * half_ + 1))
        throw std::invalid_argument("Laurent coefficient vector has wrong length");
    for (std::int64_t d = 1; d <= half_; ++d)
        if (coeffs_[half_ + d] != coeffs_[half_ - d]) throw std::invalid_argument("Laurent polynomial is not symmetric");
    trim();
}

void SymLaurent::trim() {
    while (half_ > 0 && coeffs_.front() == 0 && coeffs_.back() == 0) {
        coeffs_.pop_back();
        coeffs_.erase(coeffs_.begin());
        --half_;
    }
}

BigInt SymLaurent::coefficient(std::int64_t degree) const {
    if (degree < -half_ || degree > half_) return 0;
    return coeffs_[half_ + degree];
}

SymLaurent SymLaurent::operator*(const SymLaurent& o) const {
    std::int64_t h = half_ + o.half_;
    std::vector<BigInt> c(2 * h + 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return SymLaurent(h, std::move(c));
}

SymLaurent SymLaurent::operator+(const SymLaurent& o) const {
    std::int64_t h = std::max(half_, o.half_);
    std::vector<BigInt> c(2 * h + 1, BigInt(0));
    for (std::int64_t d = -h; d <= h; ++d) c[h + d] = coefficient(d) + o.coefficient(d);
    return SymLaurent(h, std::move(c));
}

SymLaurent SymLaurent::substitutePower(std::int64_t m) const {
    if (m < 1) throw std::invalid_argument("substitution exponent must be positive");
    std::int64_t h = half_ * m;
    std::vector<BigInt> c(2 * h + 1, BigInt(0));
    for (std::int64_t d = -half_; d <= half_; ++d) c[h + d * m] = coefficient(d);
    return SymLaurent(h, std::move(c));
}

std::string SymLaurent::str() const {
    std::string s;
    for (std::int64_t d = -half_; d <= half_; ++d) {
        BigInt c = coefficient(d);
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        s += c.str();
        if (d != 0) s += "X^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

bool operator==(const SymLaurent& a, const SymLaurent& b) { return a.half_ == b.half_ && a.coeffs_ == b.coeffs_; }

SymLaurent rho() { return SymLaurent(1, {1, 1, 1}); }

SymLaurent rhoN(std::int64_t n) {
    checkLevel(n);
    SymLaurent r = SymLaurent::constant(1);
    for (std::int64_t k = 0; k < n; ++k) r = r * rho().substitutePower(std::int64_t{1} << k);
    return r;
}

SymLaurent expandToLaurent(const LevelPoly& p) {
    p.validate();
    std::int64_t h = static_cast<std::int64_t>(p.coeffs.size()) - 1;
    std::vector<BigInt> c(2 * h + 1, BigInt(0));
    c[h] = p.coeffs[0];
    for (std::int64_t k = 1; k <= h; ++k) {
        c[h + k] = p.coeffs[k];
        c[h - k] = p.coeffs[k];
    }
    return SymLaurent(h, std::move(c));
}

LevelPoly betaStep(const LevelPoly& p) {
    p.validate();
    checkLevel(p.level + 1);
    LevelPoly out = LevelPoly::zero(p.level + 1);
    const auto& c = p.coeffs;
    for (std::size_t k = 0; k < c.size(); ++k) {
        out.coeffs[2 * k] = c[k];
        out.coeffs[2 * k + 1] = c[k] + (k + 1 < c.size() ? c[k + 1] : BigInt(0));
    }
    return out;
}

LevelPoly betaLift(const LevelPoly& p, std::int64_t n) {
    p.validate();
    if (n < p.level) throw std::invalid_argument("cannot lift level " + std::to_string(p.level) + " down to " + std::to_string(n));
    LevelPoly out = p;
    while (out.level < n) out = betaStep(out);
    return out;
}

bool equivalent(const LevelPoly& p, const LevelPoly& q) {
    std::int64_t n = std::max(p.level, q.level);
    return betaLift(p, n) == betaLift(q, n);
}

LevelPoly addClasses(const LevelPoly& p, const LevelPoly& q) {
    std::int64_t n = std::max(p.level, q.level);
    LevelPoly a = betaLift(p, n);
    LevelPoly b = betaLift(q, n);
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) a.coeffs[k] += b.coeffs[k];
    return a;
}

LevelPoly negateClass(const LevelPoly& p) {
    p.validate();
    LevelPoly out = p;
    for (auto& c : out.coeffs) c = -c;
    return out;
}

bool isPositiveClass(const LevelPoly& p) {
    p.validate();
    for (const auto& c : p.coeffs)
        if (c < 0) return false;
    return true;
}

std::vector<BigInt> qPrime(std::int64_t n) {
    checkLevel(n);
    std::vector<BigInt> cur{BigInt(1)};
    for (std::int64_t m = 1; m <= n; ++m) {
        std::vector<BigInt> next(width(m));
        std::size_t last = next.size() - 1;
        for (std::size_t k = 0; 2 * k < next.size(); ++k) {
            next[2 * k] = cur[k];
            if (2 * k + 1 == last)
                next[2 * k + 1] = 1;
            else
                next[2 * k + 1] = cur[k] + cur[k + 1];
        }
        next[0] = 1;
        cur.swap(next);
    }
    return cur;
}

UnitDecompositionVerdict verifyUnitDecomposition(std::int64_t n) {
    if (n > 14) throw std::out_of_range("unit decomposition check limited to n <= 14");
    UnitDecompositionVerdict v;
    v.qPrime = qPrime(n);
    SymLaurent lhs = expandToLaurent(LevelPoly{n, v.qPrime});
    SymLaurent rhs = rhoN(n);
    v.ok = lhs == rhs;
    if (!v.ok) v.detail = "expansion " + lhs.str() + " differs from rho_n " + rhs.str();
    return v;
}

std::vector<BigInt> sternBrocotGenerating(std::int64_t n) {
    if (n < 0 || n > (std::int64_t{1} << 14)) throw std::out_of_range("generating function length must be in [0, 2^14]");
    std::vector<BigInt> c(static_cast<std::size_t>(n), BigInt(0));
    if (n == 0) return c;
    c[0] = 1;
    for (std::int64_t s = 1; s < n; s <<= 1) {
        // multiply by 1 + X^s + X^{2s}, truncated
        for (std::int64_t d = n - 1; d >= 0; --d) {
            BigInt add = 0;
            if (d >= s) add += c[d - s];
            if (d >= 2 * s) add += c[d - 2 * s];
            c[d] += add;
        }
    }
    return c;
}

double evalPhi(std::int64_t n, std::int64_t k, double y) {
    if (n < 0 || n > 60) throw std::out_of_range("evalPhi level out of range");
    if (k < 0 || static_cast<std::uint64_t>(k) >= (std::uint64_t{1} << n)) throw std::out_of_range("evalPhi index out of range");
    if (!std::isfinite(y)) throw std::domain_error("evalPhi needs finite y");
    if (std::fabs(y) > 700) throw std::overflow_error("evalPhi: |y| too large for double cosh");
    double denom = 1;
    for (std::int64_t j = 1; j <= n; ++j) denom *= 1 + 2 * std::cosh(y / std::ldexp(1.0, static_cast<int>(j)));
    double num = k == 0 ? 1.0 : 2 * std::cosh(static_cast<double>(k) * y / std::ldexp(1.0, static_cast<int>(n)));
    return num / denom;
}

std::string levelPolyToJson(const LevelPoly& p) {
    p.validate();
    nlohmann::json j;
    j["level"] = p.level;
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : p.coeffs) {
        if (x >= INT64_MIN && x <= INT64_MAX)
            c.push_back(static_cast<std::int64_t>(x));
        else
            c.push_back(x.str());
    }
    j["coeffs"] = c;
    return j.dump();
}

LevelPoly levelPolyFromJson(const std::string& text) {
    try {
        auto j = nlohmann::json::parse(text);
        LevelPoly p;
        p.level = j.at("level").get<std::int64_t>();
        p.coeffs.clear();
        for (const auto& x : j.at("coeffs")) {
            if (x.is_string())
                p.coeffs.emplace_back(x.get<std::string>());
            else
                p.coeffs.emplace_back(x.get<std::int64_t>());
        }
        p.validate();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed level polynomial JSON: ") + e.what());
    }
}

}  // namespace farey::k0
