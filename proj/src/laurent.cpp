#include "cgobstruct/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cgo {

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<BigInt> coefficients)
    : low_(low), coeffs_(std::move(coefficients))
{
    trim();
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, std::int64_t exponent) { return LaurentPoly(exponent, {c}); }

void LaurentPoly::trim()
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    low_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt LaurentPoly::coefficient(std::int64_t exponent) const
{
    if (coeffs_.empty() || exponent < low_ || exponent > high_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t k) const
{
    if (k == 0) throw std::invalid_argument("substitute_power: k must be nonzero");
    if (coeffs_.empty()) return {};
    std::int64_t span = degree();
    std::vector<BigInt> out(static_cast<std::size_t>(span * std::abs(k) + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::int64_t idx = k > 0 ? static_cast<std::int64_t>(i) * k
                                 : (span - static_cast<std::int64_t>(i)) * (-k);
        out[static_cast<std::size_t>(idx)] = coeffs_[i];
    }
    std::int64_t new_low = k > 0 ? low_ * k : high_exponent() * k;
    return LaurentPoly(new_low, std::move(out));
}

BigInt LaurentPoly::evaluate(const BigInt& t) const
{
    if (coeffs_.empty()) return 0;
    if (low_ < 0 && t != 1 && t != -1) throw std::domain_error("evaluate: negative exponent at non-unit");
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    BigInt shift = 1;
    std::int64_t e = low_ < 0 ? -low_ : low_;
    for (std::int64_t i = 0; i < e; ++i) shift *= t;
    // t^-e == t^e for t = ±1
    return acc * shift;
}

LaurentPoly LaurentPoly::normalized() const
{
    if (coeffs_.empty()) return {};
    LaurentPoly out(0, coeffs_);
    if (out.coeffs_.front() < 0)
        for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool LaurentPoly::is_palindromic() const
{
    auto n = normalized();
    auto m = n.substitute_power(-1).normalized();
    return n == m;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.coeffs_.empty()) return b;
    if (b.coeffs_.empty()) return a;
    std::int64_t low = std::min(a.low_, b.low_);
    std::int64_t high = std::max(a.high_exponent(), b.high_exponent());
    std::vector<BigInt> out(static_cast<std::size_t>(high - low + 1));
    for (std::int64_t e = low; e <= high; ++e)
        out[static_cast<std::size_t>(e - low)] = a.coefficient(e) + b.coefficient(e);
    return LaurentPoly(low, std::move(out));
}

std::string LaurentPoly::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::int64_t e = high_exponent(); e >= low_; --e) {
        BigInt c = coefficient(e);
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || e == 0) os << mag;
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly torus_alexander(std::int64_t m)
{
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("torus_alexander: m must be odd and positive");
    // (t^m + 1)/(t + 1) = sum_{i=0}^{m-1} (-1)^i t^i
    std::vector<BigInt> c(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : -1;
    return LaurentPoly(0, std::move(c));
}

}  // namespace cgo
