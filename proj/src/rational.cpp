#include "cgobstruct/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace cgo {

namespace {

__int128 gcd128(__int128 a, __int128 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

BigInt to_bigint(__int128 v)
{
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                              : static_cast<unsigned __int128>(v);
    BigInt hi = static_cast<std::uint64_t>(u >> 64);
    BigInt out = (hi << 64) | BigInt(static_cast<std::uint64_t>(u));
    return neg ? BigInt(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    *this = from_wide(num, den);
}

Rational::Rational(const BigRational& value)
{
    const BigInt& n = boost::multiprecision::numerator(value);
    const BigInt& d = boost::multiprecision::denominator(value);
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi && d <= hi) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    } else {
        big_ = std::make_shared<const BigRational>(value);
    }
}

Rational Rational::from_wide(__int128 num, __int128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) den = 1;
    Rational r;
    if (fits64(num) && fits64(den)) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
    } else {
        r.big_ = std::make_shared<const BigRational>(to_bigint(num), to_bigint(den));
    }
    return r;
}

bool Rational::is_zero() const { return big_ ? big_->is_zero() : num_ == 0; }

bool Rational::is_integer() const
{
    return big_ ? boost::multiprecision::denominator(*big_) == 1 : den_ == 1;
}

int Rational::sign() const
{
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
}

std::int64_t Rational::num() const
{
    if (big_) throw std::overflow_error("Rational: numerator exceeds 64 bits");
    return num_;
}

std::int64_t Rational::den() const
{
    if (big_) throw std::overflow_error("Rational: denominator exceeds 64 bits");
    return den_;
}

BigInt Rational::big_num() const { return big_ ? boost::multiprecision::numerator(*big_) : BigInt(num_); }
BigInt Rational::big_den() const { return big_ ? boost::multiprecision::denominator(*big_) : BigInt(den_); }
BigRational Rational::to_big() const { return big_ ? *big_ : BigRational(num_, den_); }

double Rational::to_double() const
{
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const
{
    if (is_integer()) return big_num().str();
    return big_num().str() + "/" + big_den().str();
}

Rational Rational::parse(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigRational(BigInt(text)));
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        return Rational(BigRational(n, d));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational Rational::operator-() const
{
    if (big_) return Rational(BigRational(-*big_));
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) return Rational(a.to_big() + b.to_big());
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) return Rational(a.to_big() * b.to_big());
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    if (a.big_ || b.big_) return Rational(a.to_big() / b.to_big());
    return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_,
                               static_cast<__int128>(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) return a.to_big() == b.to_big();
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) {
        auto x = a.to_big();
        auto y = b.to_big();
        if (x < y) return std::strong_ordering::less;
        if (y < x) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cgo
