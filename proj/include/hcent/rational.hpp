#ifndef HCENT_RATIONAL_HPP
#define HCENT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hcent {

// Exact rational with arbitrary-precision integer parts. Always held in
// lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long numerator) : value_(numerator) {} // NOLINT: implicit by design
    Rational(long numerator, long denominator);
    Rational(mpz_class numerator, mpz_class denominator);

    // Parses "p/q" or a bare integer "p". Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational &lhs, const Rational &rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend bool operator<(const Rational &lhs, const Rational &rhs) {
        return lhs.value_ < rhs.value_;
    }
    friend bool operator>(const Rational &lhs, const Rational &rhs) { return rhs < lhs; }
    friend bool operator<=(const Rational &lhs, const Rational &rhs) { return !(rhs < lhs); }
    friend bool operator>=(const Rational &lhs, const Rational &rhs) { return !(lhs < rhs); }

    // Lowest-terms "p/q", denominator always present ("0/1", "1/1", "2/3").
    std::string to_string() const;

    // Decimal rendering rounded to at most `significant_digits` digits,
    // printf %g style. Presentation only; never feeds back into arithmetic.
    std::string to_decimal(int significant_digits = 12) const;

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace hcent

#endif // HCENT_RATIONAL_HPP
