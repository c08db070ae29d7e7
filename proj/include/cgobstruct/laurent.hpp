#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgobstruct/rational.hpp"

namespace cgo {

/// Laurent polynomial with arbitrary-width integer coefficients, stored
/// densely from its lowest nonzero exponent. The zero polynomial has no
/// coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    /// coefficients[i] multiplies t^(low + i).
    LaurentPoly(std::int64_t low, std::vector<BigInt> coefficients);

    static LaurentPoly constant(const BigInt& c);
    static LaurentPoly monomial(const BigInt& c, std::int64_t exponent);

    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t low_exponent() const { return low_; }
    std::int64_t high_exponent() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// Span high - low; 0 for constants and for zero.
    std::int64_t degree() const { return coeffs_.empty() ? 0 : high_exponent() - low_; }
    BigInt coefficient(std::int64_t exponent) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    /// p(t^k) for k != 0 (k < 0 reverses).
    LaurentPoly substitute_power(std::int64_t k) const;
    BigInt evaluate(const BigInt& t) const;  // requires low >= 0 or |t| == 1
    /// Shift so the lowest exponent is 0 and flip so the lowest coefficient is positive.
    LaurentPoly normalized() const;
    bool is_palindromic() const;  // after normalization

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    std::string to_string() const;

private:
    void trim();

    std::int64_t low_ = 0;
    std::vector<BigInt> coeffs_;
};

/// Δ_{T(2,m)}(t) = (t^m + 1)/(t + 1) for odd m >= 3, 1 for m = 1.
LaurentPoly torus_alexander(std::int64_t m);

}  // namespace cgo
