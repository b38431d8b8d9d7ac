#include "fareyaf/fraction.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <ostream>
#include <stdexcept>

namespace farey {

std::string toString(const Rational& x) {
    auto n = boost::multiprecision::numerator(x);
    auto d = boost::multiprecision::denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rational parseRational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
}

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("fraction with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ < 0) throw std::domain_error("negative fraction " + num_.str() + "/" + den_.str());
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Fraction::Fraction(const Rational& r)
    : Fraction(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r)) {}

Fraction Fraction::parse(const std::string& text) { return Fraction(parseRational(text)); }

Fraction Fraction::mediant(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ + b.num_, a.den_ + b.den_);
}

double Fraction::toDouble() const { return toRational().convert_to<double>(); }

std::string Fraction::str() const { return num_.str() + "/" + den_.str(); }

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    BigInt l = a.num_ * b.den_;
    BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

}  // namespace farey
