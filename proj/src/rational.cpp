#include "hbp/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

namespace hbp {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw WideOverflowError("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::make(__int128 num, __int128 den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    Rational q;
    q.num_ = narrow(num);
    q.den_ = narrow(den);
    return q;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

Rational Rational::operator-() const { return make(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.den_ +
                              static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(static_cast<__int128>(a.num_) * b.num_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ValidationError("rational division by zero");
    return Rational::make(static_cast<__int128>(a.num_) * b.den_,
                          static_cast<__int128>(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&](long off) { return ParseError("bad rational '" + std::string(text) + "'", off); };
    size_t i = 0;
    auto read_int = [&](bool sign_ok) -> __int128 {
        bool neg = false;
        if (sign_ok && i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw fail(static_cast<long>(i));
        __int128 v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > static_cast<__int128>(1) << 100) throw WideOverflowError("rational literal too large");
            ++i;
        }
        return neg ? -v : v;
    };
    __int128 whole = read_int(true);
    if (i == text.size()) return make(whole, 1);
    if (text[i] == '/') {
        ++i;
        __int128 den = read_int(false);
        if (i != text.size()) throw fail(static_cast<long>(i));
        return make(whole, den);
    }
    if (text[i] == '.') {
        ++i;
        size_t start = i;
        __int128 frac = read_int(false);
        if (i != text.size()) throw fail(static_cast<long>(i));
        __int128 scale = 1;
        for (size_t k = start; k < i; ++k) scale *= 10;
        bool neg = text[0] == '-';
        __int128 num = whole * scale + (neg ? -frac : frac);
        return make(num, scale);
    }
    throw fail(static_cast<long>(i));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace hbp
