#pragma once

#include "fareyaf/numbers.hpp"

#include <compare>
#include <iosfwd>
#include <string>

namespace farey {

// Reduced non-negative fraction num/den; reduction happens in the constructor.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(BigInt num, BigInt den);
    explicit Fraction(const Rational& r);

    static Fraction parse(const std::string& text);
    static Fraction mediant(const Fraction& a, const Fraction& b);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    bool isOne() const { return num_ == 1 && den_ == 1; }
    bool inUnitInterval() const { return num_ <= den_; }

    Rational toRational() const { return Rational(num_, den_); }
    double toDouble() const;
    std::string str() const;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

private:
    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace farey
