#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Exact arithmetic used by the series algebra and the closed-form
// coefficient formulas: arbitrary-precision signed integers, rationals,
// and a wide fixed-point type for formulas that cancel far below double
// precision.

namespace photocount {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_uint64(std::uint64_t v);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    // number of significant bits of |x|; 0 for zero
    std::size_t bit_length() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    BigInt operator<<(std::size_t bits) const;
    BigInt operator>>(std::size_t bits) const;

    // truncated toward zero; remainder has the sign of the dividend
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const { return cmp(*this, o) < 0; }
    bool operator>(const BigInt& o) const { return cmp(*this, o) > 0; }
    bool operator<=(const BigInt& o) const { return cmp(*this, o) <= 0; }
    bool operator>=(const BigInt& o) const { return cmp(*this, o) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b);
    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(const BigInt& base, unsigned e);
    static BigInt factorial(unsigned n);

    // value * 2^exp2 as double, rounded; overflows to +-inf like ldexp
    double to_double_scaled(long exp2) const;
    double to_double() const { return to_double_scaled(0); }

    std::string to_string() const;

private:
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    void trim();

    int sign_ = 0;
    std::vector<std::uint32_t> mag_;  // little-endian base 2^32, no leading zeros
};

// Reduced fraction num/den with den > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);
    Rational(BigInt num, BigInt den);

    // exact: every finite double is a dyadic rational
    static Rational from_double(double v);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on /0
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    double to_double() const;
    std::string to_string() const;  // "p/q", or "p" when q == 1

private:
    void normalize();
    BigInt num_, den_;
};

// Fixed-point value v * 2^-FRAC_BITS. Addition is exact, products are
// truncated at the last place, so sums that cancel hundreds of bits
// (the closed-form u_m/v_m evaluation) still come out with ~200 good
// bits to spare.
class BigFixed {
public:
    static constexpr long FRAC_BITS = 768;

    BigFixed() = default;
    explicit BigFixed(std::int64_t v) : v_(BigInt(v) << FRAC_BITS) {}
    static BigFixed from_rational(const Rational& r);
    static BigFixed from_double(double d) { return from_rational(Rational::from_double(d)); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    BigFixed operator-() const;
    BigFixed abs() const;
    BigFixed operator+(const BigFixed& o) const;
    BigFixed operator-(const BigFixed& o) const;
    BigFixed operator*(const BigFixed& o) const;
    BigFixed operator/(const BigFixed& o) const;  // throws on /0
    BigFixed& operator+=(const BigFixed& o) { *this = *this + o; return *this; }
    BigFixed& operator-=(const BigFixed& o) { *this = *this - o; return *this; }
    BigFixed& operator*=(const BigFixed& o) { *this = *this * o; return *this; }
    BigFixed& operator/=(const BigFixed& o) { *this = *this / o; return *this; }

    BigFixed mul_int(const BigInt& k) const;
    BigFixed div_int(const BigInt& k) const;

    bool operator==(const BigFixed& o) const { return v_ == o.v_; }
    bool operator!=(const BigFixed& o) const { return v_ != o.v_; }
    bool operator<(const BigFixed& o) const { return v_ < o.v_; }
    bool operator>(const BigFixed& o) const { return v_ > o.v_; }
    bool operator<=(const BigFixed& o) const { return v_ <= o.v_; }
    bool operator>=(const BigFixed& o) const { return v_ >= o.v_; }

    double to_double() const { return v_.to_double_scaled(-FRAC_BITS); }

    // e^x summed to full fixed-point resolution; |x| should stay desk-scale
    static BigFixed exp(const BigFixed& x);

private:
    BigInt v_;
};

}  // namespace photocount
