#ifndef MARGIN_MCMC_RATIONAL_HPP
#define MARGIN_MCMC_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace margin_mcmc {

// Exact rational on int64 components, always in lowest terms with a positive
// denominator. Intermediate products run through 128-bit integers; a result
// that does not fit back into int64 throws (ErrorCode::internal). Transition
// probabilities here are built from factors bounded by the matrix dimensions,
// so in practice the components stay tiny.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;
    Rational operator*(const Rational& other) const;
    Rational operator/(const Rational& other) const;
    Rational operator-() const;
    Rational& operator+=(const Rational& other) { return *this = *this + other; }
    Rational& operator-=(const Rational& other) { return *this = *this - other; }
    Rational& operator*=(const Rational& other) { return *this = *this * other; }
    Rational& operator/=(const Rational& other) { return *this = *this / other; }

    bool operator==(const Rational& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }
    std::strong_ordering operator<=>(const Rational& other) const;

    Rational abs() const { return num_ < 0 ? -*this : *this; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "0", "1", "5/9", "-1/3"; denominator omitted when it is 1.
    std::string to_string() const;

private:
    static Rational normalized(__int128 numerator, __int128 denominator);

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace margin_mcmc

#endif
