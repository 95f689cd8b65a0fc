#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "photocount/exact.hpp"

// Truncated power-series coefficient sequences under termwise addition and
// Cauchy-product convolution, over a float, rational, or fixed-point scalar.
// All operations are pure; sequences are safe to share across threads.

namespace photocount {

namespace detail {

template <class S>
inline bool scalar_finite(const S&) { return true; }
inline bool scalar_finite(const double& v) { return std::isfinite(v); }

template <class S>
inline S scalar_zero() { return S(0); }

template <class S>
inline bool scalar_is_zero(const S& v) { return v == scalar_zero<S>(); }

}  // namespace detail

template <class S>
class CoeffSeq {
public:
    // order = coeffs.size() - 1; coefficients a_0..a_M
    explicit CoeffSeq(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("CoeffSeq: needs at least a_0");
        for (const S& v : c_)
            if (!detail::scalar_finite(v))
                throw std::invalid_argument("CoeffSeq: non-finite coefficient");
    }

    static CoeffSeq zero(std::size_t order) {
        return CoeffSeq(std::vector<S>(order + 1, detail::scalar_zero<S>()));
    }

    // the algebra unit E = <1, 0, 0, ...>
    static CoeffSeq unit(std::size_t order) {
        CoeffSeq e = zero(order);
        e.c_[0] = S(1);
        return e;
    }

    std::size_t order() const { return c_.size() - 1; }
    const S& operator[](std::size_t k) const { return c_.at(k); }
    const std::vector<S>& coeffs() const { return c_; }

    bool in_ideal() const { return detail::scalar_is_zero(c_[0]); }

    // embed into order M (>= current) by zero-padding
    CoeffSeq padded(std::size_t order_m) const {
        if (order_m < order()) throw std::invalid_argument("CoeffSeq: cannot pad downward");
        std::vector<S> c = c_;
        c.resize(order_m + 1, detail::scalar_zero<S>());
        return CoeffSeq(std::move(c));
    }

    bool operator==(const CoeffSeq& o) const { return c_ == o.c_; }
    bool operator!=(const CoeffSeq& o) const { return !(*this == o); }

private:
    std::vector<S> c_;
};

template <class S>
CoeffSeq<S> operator+(const CoeffSeq<S>& a, const CoeffSeq<S>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("CoeffSeq: order mismatch (zero-pad first)");
    std::vector<S> c(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) c[k] = a[k] + b[k];
    return CoeffSeq<S>(std::move(c));
}

template <class S>
CoeffSeq<S> operator-(const CoeffSeq<S>& a, const CoeffSeq<S>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("CoeffSeq: order mismatch (zero-pad first)");
    std::vector<S> c(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) c[k] = a[k] - b[k];
    return CoeffSeq<S>(std::move(c));
}

template <class S>
CoeffSeq<S> operator*(const S& lam, const CoeffSeq<S>& a) {
    std::vector<S> c(a.order() + 1);
    for (std::size_t k = 0; k <= a.order(); ++k) c[k] = lam * a[k];
    return CoeffSeq<S>(std::move(c));
}

// (A o B)_k = sum_{j<=k} a_j b_{k-j}, truncated at the common order
template <class S>
CoeffSeq<S> convolve(const CoeffSeq<S>& a, const CoeffSeq<S>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("CoeffSeq: order mismatch (zero-pad first)");
    std::vector<S> c(a.order() + 1, detail::scalar_zero<S>());
    for (std::size_t j = 0; j <= a.order(); ++j) {
        if (detail::scalar_is_zero(a[j])) continue;
        for (std::size_t k = j; k <= a.order(); ++k)
            c[k] = c[k] + a[j] * b[k - j];
    }
    return CoeffSeq<S>(std::move(c));
}

template <class S>
CoeffSeq<S> power(const CoeffSeq<S>& a, unsigned n) {
    CoeffSeq<S> r = CoeffSeq<S>::unit(a.order());
    for (unsigned i = 0; i < n; ++i) r = convolve(r, a);
    return r;
}

// B = A^-1: b_0 = 1/a_0, b_n = -(1/a_0) sum_{k=1..n} a_k b_{n-k}
template <class S>
CoeffSeq<S> inverse(const CoeffSeq<S>& a) {
    if (a.in_ideal())
        throw std::domain_error("CoeffSeq: not invertible (a_0 == 0)");
    std::vector<S> b(a.order() + 1, detail::scalar_zero<S>());
    b[0] = S(1) / a[0];
    for (std::size_t n = 1; n <= a.order(); ++n) {
        S acc = detail::scalar_zero<S>();
        for (std::size_t k = 1; k <= n; ++k) acc = acc + a[k] * b[n - k];
        b[n] = (S(0) - acc) / a[0];
    }
    return CoeffSeq<S>(std::move(b));
}

// sum_{n=0..M} A^n at truncation order M; componentwise finite because
// (A^n)_m vanishes for m < n when a_0 == 0, so it equals (E - A)^-1
template <class S>
CoeffSeq<S> geometric_resolvent(const CoeffSeq<S>& a, std::size_t order_m) {
    if (!a.in_ideal())
        throw std::invalid_argument("geometric_resolvent: needs a_0 == 0");
    std::vector<S> c(order_m + 1, detail::scalar_zero<S>());
    for (std::size_t k = 0; k <= std::min(order_m, a.order()); ++k) c[k] = a[k];
    CoeffSeq<S> al(std::move(c));
    CoeffSeq<S> sum = CoeffSeq<S>::unit(order_m);
    CoeffSeq<S> pw = CoeffSeq<S>::unit(order_m);
    for (std::size_t n = 1; n <= order_m; ++n) {
        pw = convolve(pw, al);
        sum = sum + pw;
    }
    return sum;
}

template <class S>
CoeffSeq<S> geometric_resolvent(const CoeffSeq<S>& a) {
    return geometric_resolvent(a, a.order());
}

// Horner evaluation of the truncated series at z
template <class S>
S eval(const CoeffSeq<S>& a, const S& z) {
    S acc = a[a.order()];
    for (std::size_t k = a.order(); k-- > 0;) acc = acc * z + a[k];
    return acc;
}

}  // namespace photocount
