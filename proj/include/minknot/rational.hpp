#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "minknot/errors.hpp"

namespace minknot {

// Exact rational on int64, always in lowest terms with positive denominator.
// All time/phase quantities in this library are turn units (fractions of a
// full revolution), so magnitudes stay tiny; int64 is ample.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { reduce(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw internal_error("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const { return -(-*this).floor(); }

    // Representative in [0, 1).
    Rational mod1() const { return *this - Rational(floor()); }

    // Representative in [0, m) for a positive rational modulus m.
    Rational mod(const Rational& m) const {
        Rational q = *this / m;
        return *this - Rational(q.floor()) * m;
    }

    bool is_integer() const { return den_ == 1; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // Parses "a/b" or "a"; exact fractions only, no decimals.
    static Rational parse(const std::string& s);

  private:
    void reduce() {
        if (den_ == 0) throw internal_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& s) {
    auto fail = [&] { throw out_of_range_error("expected exact fraction \"a/b\", got \"" + s + "\""); };
    if (s.empty()) fail();
    std::size_t slash = s.find('/');
    auto to_int = [&](const std::string& part) -> std::int64_t {
        if (part.empty()) fail();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) fail();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) fail();
        return std::stoll(part);
    };
    if (slash == std::string::npos) return Rational(to_int(s));
    return Rational(to_int(s.substr(0, slash)), to_int(s.substr(slash + 1)));
}

}  // namespace minknot
