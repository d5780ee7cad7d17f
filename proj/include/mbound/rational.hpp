#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mbound {

// Exact fraction over unbounded integers, always in lowest terms with a
// positive denominator. Carrier for all probabilities and covariances.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(Int num, Int den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    // "num/den", e.g. "1/5", "-1/25", "0/1".
    std::string str() const;

    double to_double() const;

private:
    Int num_;
    Int den_;
};

}  // namespace mbound
