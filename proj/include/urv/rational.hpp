#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace urv {

// Exact rational scalar. Invariant: den > 0 and gcd(|num|, den) == 1.
// All geometry in this project runs on these; no floating point.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p" or "p/q", normalized.
    std::string str() const;
    static Rational parse(const std::string& text);

private:
    static Rational make(__int128 n, __int128 d);

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational abs(const Rational& a) { return a.num() < 0 ? -a : a; }

} // namespace urv
