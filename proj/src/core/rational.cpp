#include "core/rational.hpp"

#include <limits>

#include "core/error.hpp"

namespace margin_mcmc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational Rational::normalized(__int128 numerator, __int128 denominator) {
    if (denominator == 0) {
        throw Error(ErrorCode::invalid_argument, "rational with zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    if (numerator == 0) {
        denominator = 1;
    } else {
        __int128 g = gcd128(numerator, denominator);
        numerator /= g;
        denominator /= g;
    }
    constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
    if (numerator < lo || numerator > hi || denominator > hi) {
        throw Error(ErrorCode::internal, "rational overflow past 64 bits");
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = normalized(numerator, denominator);
}

Rational Rational::operator+(const Rational& other) const {
    return normalized(static_cast<__int128>(num_) * other.den_ +
                          static_cast<__int128>(other.num_) * den_,
                      static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator-(const Rational& other) const {
    return normalized(static_cast<__int128>(num_) * other.den_ -
                          static_cast<__int128>(other.num_) * den_,
                      static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator*(const Rational& other) const {
    return normalized(static_cast<__int128>(num_) * other.num_,
                      static_cast<__int128>(den_) * other.den_);
}

Rational Rational::operator/(const Rational& other) const {
    if (other.num_ == 0) {
        throw Error(ErrorCode::invalid_argument, "rational division by zero");
    }
    return normalized(static_cast<__int128>(num_) * other.den_,
                      static_cast<__int128>(den_) * other.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    __int128 lhs = static_cast<__int128>(num_) * other.den_;
    __int128 rhs = static_cast<__int128>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace margin_mcmc
