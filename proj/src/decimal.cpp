#include "emolog/decimal.hpp"

#include <cstdlib>

#include "emolog/errors.hpp"

namespace emolog {

namespace {

// Scale a mantissa by 10^k, refusing to overflow silently.
std::int64_t scale(std::int64_t mant, int k) {
    __int128 v = mant;
    for (int i = 0; i < k; ++i) {
        v *= 10;
        if (v > INT64_MAX || v < INT64_MIN)
            throw Error("decimal arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

Decimal Decimal::parse(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t int_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == int_start) throw ParseError("expected digits in decimal literal", i);
    std::size_t frac_start = 0, frac_end = 0;
    if (i < text.size() && text[i] == '.') {
        ++i;
        frac_start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        frac_end = i;
        if (frac_end == frac_start)
            throw ParseError("expected digits after decimal point", i);
    }
    if (i != text.size())
        throw ParseError("trailing characters in decimal literal", i);

    __int128 mant = 0;
    for (std::size_t k = int_start; k < text.size(); ++k) {
        if (text[k] == '.') continue;
        mant = mant * 10 + (text[k] - '0');
        if (mant > INT64_MAX) throw ParseError("decimal literal out of range", k);
    }
    if (neg) mant = -mant;
    Decimal d;
    d.mant_ = static_cast<std::int64_t>(mant);
    d.exp_ = static_cast<int>(frac_end - frac_start);
    d.normalize();
    return d;
}

Decimal Decimal::from_mantissa(std::int64_t mantissa, int exponent) {
    if (exponent < 0) {
        mantissa = scale(mantissa, -exponent);
        exponent = 0;
    }
    Decimal d;
    d.mant_ = mantissa;
    d.exp_ = exponent;
    d.normalize();
    return d;
}

void Decimal::normalize() {
    while (exp_ > 0 && mant_ % 10 == 0) {
        mant_ /= 10;
        --exp_;
    }
    if (mant_ == 0) exp_ = 0;
}

Decimal Decimal::operator+(const Decimal& o) const {
    int e = std::max(exp_, o.exp_);
    __int128 a = scale(mant_, e - exp_);
    __int128 b = scale(o.mant_, e - o.exp_);
    __int128 sum = a + b;
    if (sum > INT64_MAX || sum < INT64_MIN)
        throw Error("decimal arithmetic overflow");
    Decimal d;
    d.mant_ = static_cast<std::int64_t>(sum);
    d.exp_ = e;
    d.normalize();
    return d;
}

bool Decimal::operator<(const Decimal& o) const {
    int e = std::max(exp_, o.exp_);
    // compare in __int128 so scaling cannot overflow the comparison
    __int128 a = mant_;
    for (int i = 0; i < e - exp_; ++i) a *= 10;
    __int128 b = o.mant_;
    for (int i = 0; i < e - o.exp_; ++i) b *= 10;
    return a < b;
}

std::string Decimal::str() const {
    std::string digits = std::to_string(mant_ < 0 ? -mant_ : mant_);
    if (exp_ > 0) {
        if (digits.size() <= static_cast<std::size_t>(exp_))
            digits.insert(0, exp_ + 1 - digits.size(), '0');
        digits.insert(digits.size() - exp_, ".");
    }
    return (mant_ < 0 ? "-" : "") + digits;
}

} // namespace emolog
