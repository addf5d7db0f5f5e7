#include "hcent/rational.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "hcent/errors.hpp"

namespace hcent {

namespace {

mpq_class make_canonical(mpz_class num, mpz_class den) {
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    mpq_class q;
    q.get_num() = std::move(num);
    q.get_den() = std::move(den);
    q.canonicalize(); // reduces by gcd and moves the sign to the numerator
    return q;
}

} // namespace

Rational::Rational(long numerator, long denominator)
    : value_(make_canonical(mpz_class(numerator), mpz_class(denominator))) {}

Rational::Rational(mpz_class numerator, mpz_class denominator)
    : value_(make_canonical(std::move(numerator), std::move(denominator))) {}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return ParseError("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty())
        throw bad();

    const auto is_integer = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };

    std::string_view num_part = text;
    std::string_view den_part = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
    }
    if (!is_integer(num_part) || !is_integer(den_part))
        throw bad();

    mpz_class num(std::string(num_part), 10);
    mpz_class den(std::string(den_part), 10);
    if (sgn(den) == 0)
        throw bad();
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational &Rational::operator+=(const Rational &rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value_.get_d());
    return buf;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
    return os << r.to_string();
}

} // namespace hcent
