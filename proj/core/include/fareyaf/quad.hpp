#pragma once

#include "fareyaf/numbers.hpp"

#include <memory>
#include <optional>
#include <string>

namespace farey::paths {

// Q(s) with s^2 = lambda > 0. When lambda is a rational square and squares are embedded,
// s is replaced by its rational root so every element has b = 0.
class QuadField {
public:
    static std::shared_ptr<const QuadField> make(const Rational& lambda, bool embedSquares = true);

    const Rational& lambda() const { return lambda_; }
    const std::optional<Rational>& rationalRoot() const { return root_; }
    bool isEmbedded() const { return root_.has_value(); }
    // Q(s) is a field unless lambda is a square that was not embedded.
    bool isField() const { return root_.has_value() || !squareRoot(lambda_); }

    static std::optional<Rational> squareRoot(const Rational& x);

private:
    QuadField(Rational lambda, std::optional<Rational> root) : lambda_(std::move(lambda)), root_(std::move(root)) {}
    Rational lambda_;
    std::optional<Rational> root_;
};

// a + b s; the field pointer must outlive the scalar (operators keep it alive).
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(const QuadField* field, Rational a, Rational b = 0);

    static QuadScalar sqrtLambda(const QuadField* field) { return QuadScalar(field, 0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const QuadField* field() const { return field_; }
    bool isZero() const { return a_ == 0 && b_ == 0; }

    QuadScalar conj() const;
    // Requires a field; throws std::domain_error on zero or zero divisors.
    QuadScalar inverse() const;
    std::string str() const;

    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
    QuadScalar operator-() const;
    friend bool operator==(const QuadScalar& x, const QuadScalar& y);

private:
    const QuadField* sharedField(const QuadScalar& o) const;

    const QuadField* field_ = nullptr;
    Rational a_ = 0;
    Rational b_ = 0;
};

}  // namespace farey::paths
