#include "photocount/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace photocount {

namespace {
constexpr std::uint64_t BASE = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

BigInt BigInt::from_uint64(std::uint64_t u) {
    BigInt r;
    if (u == 0) return r;
    r.sign_ = 1;
    r.mag_.push_back(static_cast<std::uint32_t>(u));
    if (u >> 32) r.mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t bits = (mag_.size() - 1) * 32;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

bool BigInt::operator==(const BigInt& o) const {
    return sign_ == o.sign_ && mag_ == o.mag_;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
        if (d < 0) { d += static_cast<std::int64_t>(BASE); borrow = 1; } else { borrow = 0; }
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.sign_ = sign_;
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) return r;
        if (c > 0) { r.mag_ = sub_mag(mag_, o.mag_); r.sign_ = sign_; }
        else       { r.mag_ = sub_mag(o.mag_, mag_); r.sign_ = o.sign_; }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    if (sign_ == 0 || o.sign_ == 0) return r;
    r.mag_.assign(mag_.size() + o.mag_.size(), 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = mag_[i];
        for (std::size_t j = 0; j < o.mag_.size(); ++j) {
            std::uint64_t cur = r.mag_[i + j] + ai * o.mag_[j] + carry;
            r.mag_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::size_t k = i + o.mag_.size();
        while (carry) {
            std::uint64_t cur = r.mag_[k] + carry;
            r.mag_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

BigInt BigInt::operator<<(std::size_t bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    std::size_t words = bits / 32, rem = bits % 32;
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size() + words + 1, 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(mag_[i]) << rem;
        r.mag_[i + words] |= static_cast<std::uint32_t>(v);
        r.mag_[i + words + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator>>(std::size_t bits) const {
    if (sign_ == 0) return *this;
    std::size_t words = bits / 32, rem = bits % 32;
    if (words >= mag_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size() - words, 0);
    for (std::size_t i = 0; i < r.mag_.size(); ++i) {
        std::uint64_t v = mag_[i + words] >> rem;
        if (rem && i + words + 1 < mag_.size())
            v |= static_cast<std::uint64_t>(mag_[i + words + 1]) << (32 - rem);
        r.mag_[i] = static_cast<std::uint32_t>(v);
    }
    r.trim();
    return r;
}

// Knuth algorithm D on 32-bit limbs.
void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    int c = cmp_mag(a.mag_, b.mag_);
    if (c < 0) { q = BigInt(); r = a; return; }

    if (b.mag_.size() == 1) {
        std::uint64_t d = b.mag_[0];
        std::vector<std::uint32_t> qm(a.mag_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.mag_[i];
            qm[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q = BigInt();
        q.mag_ = std::move(qm);
        q.sign_ = 1;
        q.trim();
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r = BigInt();
        if (rem) {
            r.mag_.push_back(static_cast<std::uint32_t>(rem));
            r.sign_ = a.sign_;
        }
        return;
    }

    // normalize so the top limb of the divisor has its high bit set
    int shift = 0;
    for (std::uint32_t top = b.mag_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    BigInt u = a.abs() << shift;
    BigInt v = b.abs() << shift;
    std::size_t n = v.mag_.size();
    std::size_t m = u.mag_.size() - n;
    u.mag_.push_back(0);

    std::vector<std::uint32_t> qm(m + 1, 0);
    const std::uint64_t vh = v.mag_[n - 1];
    const std::uint64_t vl = v.mag_[n - 2];

    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t num = (static_cast<std::uint64_t>(u.mag_[j + n]) << 32) | u.mag_[j + n - 1];
        std::uint64_t qhat = num / vh;
        std::uint64_t rhat = num % vh;
        while (qhat >= BASE ||
               qhat * vl > ((rhat << 32) | u.mag_[j + n - 2])) {
            --qhat;
            rhat += vh;
            if (rhat >= BASE) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t p = qhat * v.mag_[i] + carry;
            carry = p >> 32;
            std::int64_t t = static_cast<std::int64_t>(u.mag_[i + j]) -
                             static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
            if (t < 0) { t += static_cast<std::int64_t>(BASE); borrow = 1; } else { borrow = 0; }
            u.mag_[i + j] = static_cast<std::uint32_t>(t);
        }
        std::int64_t t = static_cast<std::int64_t>(u.mag_[j + n]) -
                         static_cast<std::int64_t>(carry) - borrow;
        if (t < 0) {
            // qhat was one too large: add the divisor back
            t += static_cast<std::int64_t>(BASE);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = c2 + u.mag_[i + j] + v.mag_[i];
                u.mag_[i + j] = static_cast<std::uint32_t>(s);
                c2 = s >> 32;
            }
            t += static_cast<std::int64_t>(c2);
            t &= 0xffffffff;
        }
        u.mag_[j + n] = static_cast<std::uint32_t>(t);
        qm[j] = static_cast<std::uint32_t>(qhat);
    }

    q = BigInt();
    q.mag_ = std::move(qm);
    q.sign_ = 1;
    q.trim();
    if (!q.mag_.empty()) q.sign_ = a.sign_ * b.sign_; else q.sign_ = 0;

    u.mag_.resize(n);
    u.sign_ = 1;
    u.trim();
    r = u >> shift;
    if (!r.mag_.empty()) r.sign_ = a.sign_; else r.sign_ = 0;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned e) {
    BigInt r(1), b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt r(1);
    for (unsigned k = 2; k <= n; ++k) r *= BigInt(static_cast<std::int64_t>(k));
    return r;
}

double BigInt::to_double_scaled(long exp2) const {
    if (sign_ == 0) return 0.0;
    std::size_t bits = bit_length();
    long shift = 0;
    std::uint64_t top;
    if (bits <= 64) {
        top = 0;
        for (std::size_t i = mag_.size(); i-- > 0;)
            top = (top << 32) | mag_[i];
    } else {
        shift = static_cast<long>(bits) - 64;
        BigInt t = *this >> static_cast<std::size_t>(shift);
        top = 0;
        for (std::size_t i = t.mag_.size(); i-- > 0;)
            top = (top << 32) | t.mag_[i];
    }
    double d = std::ldexp(static_cast<double>(top), static_cast<int>(shift + exp2));
    return sign_ < 0 ? -d : d;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> chunks;  // base 1e9, little-endian
    BigInt t = abs();
    BigInt billion(1000000000);
    while (!t.is_zero()) {
        BigInt q, r;
        divmod(t, billion, q, r);
        chunks.push_back(r.mag_.empty() ? 0u : r.mag_[0]);
        t = std::move(q);
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    normalize();
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("Rational: non-finite double");
    if (v == 0.0) return Rational();
    int e = 0;
    double m = std::frexp(v, &e);        // v = m * 2^e, |m| in [0.5, 1)
    std::int64_t mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    e -= 53;
    BigInt num(mant), den(1);
    if (e >= 0) num = num << static_cast<std::size_t>(e);
    else den = den << static_cast<std::size_t>(-e);
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

bool Rational::operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

bool Rational::operator<(const Rational& o) const {
    return BigInt::cmp(num_ * o.den_, o.num_ * den_) < 0;
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale the quotient to ~64 significant bits, divide, undo the scale
    long k = 64 + static_cast<long>(den_.bit_length()) - static_cast<long>(num_.bit_length());
    BigInt a = num_.abs(), b = den_;
    if (k > 0) a = a << static_cast<std::size_t>(k);
    else b = b << static_cast<std::size_t>(-k);
    BigInt q = a / b;
    double d = q.to_double_scaled(-k);
    return num_.is_negative() ? -d : d;
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

// ---------------------------------------------------------------- BigFixed

BigFixed BigFixed::from_rational(const Rational& r) {
    BigFixed f;
    f.v_ = (r.num() << FRAC_BITS) / r.den();
    return f;
}

BigFixed BigFixed::operator-() const { BigFixed r; r.v_ = -v_; return r; }
BigFixed BigFixed::abs() const { BigFixed r; r.v_ = v_.abs(); return r; }
BigFixed BigFixed::operator+(const BigFixed& o) const { BigFixed r; r.v_ = v_ + o.v_; return r; }
BigFixed BigFixed::operator-(const BigFixed& o) const { BigFixed r; r.v_ = v_ - o.v_; return r; }

BigFixed BigFixed::operator*(const BigFixed& o) const {
    BigFixed r;
    r.v_ = (v_ * o.v_) >> FRAC_BITS;
    return r;
}

BigFixed BigFixed::operator/(const BigFixed& o) const {
    if (o.v_.is_zero()) throw std::domain_error("BigFixed: division by zero");
    BigFixed r;
    r.v_ = (v_ << FRAC_BITS) / o.v_;
    return r;
}

BigFixed BigFixed::mul_int(const BigInt& k) const {
    BigFixed r;
    r.v_ = v_ * k;
    return r;
}

BigFixed BigFixed::div_int(const BigInt& k) const {
    if (k.is_zero()) throw std::domain_error("BigFixed: division by zero");
    BigFixed r;
    r.v_ = v_ / k;
    return r;
}

BigFixed BigFixed::exp(const BigFixed& x) {
    BigFixed sum(1), term(1);
    for (std::int64_t k = 1; k < 4000; ++k) {
        term = (term * x).div_int(BigInt(k));
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

}  // namespace photocount
