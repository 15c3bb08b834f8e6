#ifndef EMOLOG_DECIMAL_HPP
#define EMOLOG_DECIMAL_HPP

#include <cstdint>
#include <string>

namespace emolog {

// Exact decimal number: mantissa * 10^-exponent, exponent >= 0.
// Utilities and emotion degrees are compared and added exactly, so they are
// kept in decimal form instead of binary floating point. Always normalized
// (no trailing zeros in the fractional part; -0 collapses to 0).
class Decimal {
public:
    Decimal() : mant_(0), exp_(0) {}
    explicit Decimal(std::int64_t whole) : mant_(whole), exp_(0) {}

    // Accepts [+-]?digits[.digits]. Throws ParseError on anything else.
    static Decimal parse(const std::string& text);

    static Decimal from_mantissa(std::int64_t mantissa, int exponent);

    std::int64_t mantissa() const { return mant_; }
    int exponent() const { return exp_; }

    bool is_integer() const { return exp_ == 0; }
    bool negative() const { return mant_ < 0; }

    Decimal operator+(const Decimal& o) const;

    bool operator==(const Decimal& o) const { return mant_ == o.mant_ && exp_ == o.exp_; }
    bool operator!=(const Decimal& o) const { return !(*this == o); }
    bool operator<(const Decimal& o) const;
    bool operator<=(const Decimal& o) const { return *this < o || *this == o; }
    bool operator>(const Decimal& o) const { return o < *this; }
    bool operator>=(const Decimal& o) const { return o <= *this; }

    // Shortest form: "3", "-0.5", "0.25".
    std::string str() const;

private:
    std::int64_t mant_;
    int exp_;

    void normalize();
};

} // namespace emolog

#endif
