#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace awbench {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator, so equality is plain bit-for-bit comparison.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(static_cast<long>(n)) {}
    Rational(long long num, long long den)
        : value_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.value_ < b.value_;
    }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }

    /// Denominator as a rational value q/1.
    Rational denominator_part() const {
        Rational r;
        r.value_ = mpq_class(value_.get_den());
        return r;
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace awbench
