#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "photocount/exact.hpp"

using namespace photocount;

namespace {

BigInt from_i128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    BigInt r = BigInt::from_uint64(static_cast<std::uint64_t>(u & 0xffffffffffffffffULL));
    BigInt hi = BigInt::from_uint64(static_cast<std::uint64_t>(u >> 64));
    r = r + (hi << 64);
    return neg ? -r : r;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("bigint arithmetic matches 128-bit oracle") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 2000; ++it) {
        const int sh_a = static_cast<int>(rng() % 62);
        const int sh_b = static_cast<int>(rng() % 62);
        const std::int64_t a = static_cast<std::int64_t>(rng()) >> sh_a;
        const std::int64_t b = static_cast<std::int64_t>(rng()) >> sh_b;
        const BigInt A(a), B(b);
        CHECK(A + B == from_i128(static_cast<__int128>(a) + b));
        CHECK(A - B == from_i128(static_cast<__int128>(a) - b));
        CHECK(A * B == from_i128(static_cast<__int128>(a) * b));
        if (b != 0) {
            CHECK(A / B == BigInt(a / b));
            CHECK(A % B == BigInt(a % b));
        }
        CHECK(BigInt::cmp(A, B) == (a < b ? -1 : (a > b ? 1 : 0)));
    }
}

TEST_CASE("bigint multi-word division round-trips") {
    std::mt19937_64 rng(99);
    auto check_divmod = [](const BigInt& a, const BigInt& b) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    };
    for (int it = 0; it < 500; ++it) {
        BigInt a = from_i128(static_cast<__int128>(rng()) * static_cast<__int128>(rng() | 1));
        BigInt b = from_i128((static_cast<__int128>(rng() % 1000000 + 1) << 40) + (rng() % 97));
        if (rng() & 1) a = -a;
        if (rng() & 1) b = -b;
        check_divmod(a, b);
    }
    // qhat-correction and add-back corners
    check_divmod(BigInt::from_uint64(0x80000000ULL) << 64,
                 (BigInt::from_uint64(0x80000000ULL) << 32) + BigInt(1));
    check_divmod((BigInt(1) << 128) - BigInt(1), (BigInt(1) << 64) + BigInt(1));
    check_divmod((BigInt(1) << 192) - (BigInt(1) << 64),
                 (BigInt(1) << 96) - BigInt(1));
    check_divmod(BigInt::factorial(40), BigInt::factorial(20));
    CHECK(BigInt::factorial(40) / BigInt::factorial(39) == BigInt(40));
    // guaranteed add-back: the two-limb estimate gives 8, the true digit is 7
    {
        const BigInt a = (BigInt(1) << 98) + (BigInt(1) << 35) - BigInt(9);
        const BigInt b = (BigInt(1) << 95) + (BigInt(1) << 32) - BigInt(1);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q == BigInt(7));
        CHECK(r == b - BigInt(1));
    }
}

TEST_CASE("bigint factorial, shifts, strings") {
    CHECK(BigInt::factorial(20) == BigInt(2432902008176640000LL));
    CHECK(BigInt::factorial(30).to_string() == "265252859812191058636308480000000");
    CHECK((BigInt(1) << 100) == BigInt::pow(BigInt(2), 100));
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const std::int64_t v = static_cast<std::int64_t>(rng());
        const std::size_t k = rng() % 200;
        CHECK(((BigInt(v) << k) >> k) == BigInt(v));
    }
    CHECK(BigInt(-123456789).to_string() == "-123456789");
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("bigint gcd matches std::gcd") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 500; ++it) {
        const std::int64_t a = static_cast<std::int64_t>(rng() % 1000000007);
        const std::int64_t b = static_cast<std::int64_t>(rng() % 1000000007);
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(std::gcd(a, b)));
    }
}

TEST_CASE("bigint to_double") {
    CHECK(BigInt(123456789).to_double() == 123456789.0);
    CHECK((BigInt(1) << 100).to_double() == std::ldexp(1.0, 100));
    CHECK(BigInt(-3).to_double_scaled(-1) == -1.5);
    CHECK(BigInt(0).to_double() == 0.0);
}

TEST_CASE("rational round-trips doubles exactly") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> dist(-1e6, 1e6);
    for (int it = 0; it < 500; ++it) {
        const double v = dist(rng);
        CHECK(Rational::from_double(v).to_double() == v);
    }
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(-0.25) == Rational(-1, 4));
    CHECK(Rational::from_double(3.0) == Rational(3));
}

TEST_CASE("rational arithmetic and ordering") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(1, 3) * Rational(3, 1) == Rational(1));
    CHECK(Rational(-1, 3) < Rational(1, 7));
    CHECK(Rational(5, 7) / Rational(5, 7) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    std::mt19937_64 rng(5150);
    for (int it = 0; it < 300; ++it) {
        const std::int64_t n = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const std::int64_t d = static_cast<std::int64_t>(rng() % 999) + 1;
        const Rational r(n, d);
        CHECK(r - r == Rational(0));
        if (n != 0) CHECK(r / r == Rational(1));
        CHECK(doctest::Approx(r.to_double()).epsilon(1e-15) ==
              static_cast<double>(n) / static_cast<double>(d));
    }
}

TEST_CASE("fixed-point matches double at coarse scale") {
    CHECK(BigFixed(3).to_double() == 3.0);
    CHECK((BigFixed(1) / BigFixed(3)).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    const BigFixed x = BigFixed::from_double(1.25);
    CHECK((x * x).to_double() == 1.5625);
    CHECK((x - x).is_zero());
    CHECK(BigFixed::from_double(-2.5).abs().to_double() == 2.5);
}

TEST_CASE("fixed-point exponential") {
    CHECK(BigFixed::exp(BigFixed(0)).to_double() == 1.0);
    CHECK(BigFixed::exp(BigFixed(1)).to_double() ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-16));
    CHECK(BigFixed::exp(BigFixed::from_double(-2.0)).to_double() ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    // e^x e^-x stays at 1 far below double resolution
    const BigFixed x = BigFixed::from_double(1.7);
    const BigFixed prod = BigFixed::exp(x) * BigFixed::exp(-x);
    CHECK(std::fabs(prod.to_double() - 1.0) < 1e-200);
}

}  // TEST_SUITE
