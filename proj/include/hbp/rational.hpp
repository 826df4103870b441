#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "hbp/errors.hpp"

namespace hbp {

// Exact fraction with a positive denominator, always in lowest terms.
// Every combinatorial decision in the library is made through this type;
// doubles appear only in spectral estimates and closing bound values.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "a/b", an integer, or an exact decimal such as "1.5".
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::int64_t floor() const;
    std::int64_t ceil() const;
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string to_string() const;  // "a/b", or "a" when integral

  private:
    static Rational make(__int128 num, __int128 den);
    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational binomial2(std::int64_t k) { return Rational(k * (k - 1) / 2); }

}  // namespace hbp
