#include "fareyaf/quad.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace farey::paths {

namespace {

std::optional<BigInt> intSqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

}  // namespace

std::optional<Rational> QuadField::squareRoot(const Rational& x) {
    auto n = intSqrt(boost::multiprecision::numerator(x));
    auto d = intSqrt(boost::multiprecision::denominator(x));
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

std::shared_ptr<const QuadField> QuadField::make(const Rational& lambda, bool embedSquares) {
    if (lambda <= 0) throw std::domain_error("lambda must be a positive rational, got " + toString(lambda));
    std::optional<Rational> root;
    if (embedSquares) root = squareRoot(lambda);
    return std::shared_ptr<const QuadField>(new QuadField(lambda, root));
}

QuadScalar::QuadScalar(const QuadField* field, Rational a, Rational b) : field_(field), a_(std::move(a)), b_(std::move(b)) {
    if (field_ && field_->isEmbedded() && b_ != 0) {
        a_ += b_ * *field_->rationalRoot();
        b_ = 0;
    }
}

const QuadField* QuadScalar::sharedField(const QuadScalar& o) const {
    if (field_ == o.field_ || !o.field_) return field_;
    if (!field_) return o.field_;
    if (field_->lambda() != o.field_->lambda() || field_->isEmbedded() != o.field_->isEmbedded())
        throw std::logic_error("mixing scalars over different quadratic fields");
    return field_;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
    field_ = sharedField(o);
    a_ += o.a_;
    if (o.b_ != 0) b_ += o.b_;
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
    field_ = sharedField(o);
    a_ -= o.a_;
    if (o.b_ != 0) b_ -= o.b_;
    return *this;
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
    const QuadField* f = x.sharedField(y);
    QuadScalar r;
    r.field_ = f;
    if (x.b_ == 0 && y.b_ == 0) {
        r.a_ = x.a_ * y.a_;
        return r;
    }
    if (!f) throw std::logic_error("irrational scalar without a field");
    r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * f->lambda();
    r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
    return r;
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool operator==(const QuadScalar& x, const QuadScalar& y) {
    x.sharedField(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

QuadScalar QuadScalar::conj() const {
    QuadScalar r = *this;
    r.b_ = -r.b_;
    return r;
}

QuadScalar QuadScalar::inverse() const {
    if (isZero()) throw std::domain_error("inverse of zero");
    if (b_ == 0) return QuadScalar(field_, 1 / a_, 0);
    if (!field_->isField()) throw std::domain_error("Q(s) is not a field for a non-embedded square lambda");
    Rational norm = a_ * a_ - b_ * b_ * field_->lambda();
    return QuadScalar(field_, a_ / norm, -b_ / norm);
}

std::string QuadScalar::str() const {
    if (b_ == 0) return toString(a_);
    std::string s = a_ == 0 ? "" : toString(a_) + (b_ > 0 ? "+" : "");
    return s + toString(b_) + "*sqrt(" + (field_ ? toString(field_->lambda()) : std::string("?")) + ")";
}

}  // namespace farey::paths
