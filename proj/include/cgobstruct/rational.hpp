#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgo {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact reduced fraction num/den with den > 0.
///
/// Values live in two 64-bit words while they fit; any operation whose
/// reduced result leaves the int64 range switches to an arbitrary-width
/// representation. Results that shrink back into range are stored small
/// again, so equality and hashing never depend on history.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const BigRational& value);

    bool is_small() const { return big_ == nullptr; }
    bool is_zero() const;
    bool is_integer() const;
    int sign() const;

    /// Numerator and denominator; throws std::overflow_error on a wide value.
    std::int64_t num() const;
    std::int64_t den() const;

    BigInt big_num() const;
    BigInt big_den() const;
    BigRational to_big() const;

    double to_double() const;
    /// "num/den", or just "num" for integers.
    std::string to_string() const;
    static Rational parse(const std::string& text);

    Rational operator-() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const BigRational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cgo
