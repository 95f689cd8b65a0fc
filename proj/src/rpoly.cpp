#include "photocount/rpoly.hpp"

#include <stdexcept>

namespace photocount {

RPolyTable::RPolyTable(std::size_t max_m) {
    plus_.resize(max_m + 1);
    minus_.resize(max_m + 1);
    plus_[0] = {Rational(1)};
    minus_[0] = {Rational(1)};

    // c_l = (2l)! / (2^{2l} (l!)^2), built incrementally: c_0 = 1,
    // c_{l+1} = c_l * (2l+1) / (2l+2)
    std::vector<Rational> c(max_m + 1);
    if (max_m > 0) {
        c[0] = Rational(1);
        for (std::size_t l = 0; l + 1 <= max_m; ++l)
            c[l + 1] = c[l] * Rational(2 * static_cast<std::int64_t>(l) + 1,
                                       2 * static_cast<std::int64_t>(l) + 2);
    }

    for (std::size_t m = 0; m + 1 <= max_m; ++m) {
        // s^{+-}(T) = sum_{l=0..m} (-1)^l c_l R_{m-l}^{+-}(T), degree m
        std::vector<Rational> sp(m + 1, Rational(0)), sm(m + 1, Rational(0));
        for (std::size_t l = 0; l <= m; ++l) {
            Rational f = (l % 2 == 0) ? c[l] : -c[l];
            const auto& rp = plus_[m - l];
            const auto& rm = minus_[m - l];
            for (std::size_t k = 0; k < rp.size(); ++k) {
                sp[k] += f * rp[k];
                sm[k] += f * rm[k];
            }
        }
        // multiply by +-T/(2(m+1)): shift degree up by one and scale
        Rational scale(1, 2 * static_cast<std::int64_t>(m) + 2);
        std::vector<Rational> np(m + 2, Rational(0)), nm(m + 2, Rational(0));
        for (std::size_t k = 0; k <= m; ++k) {
            np[k + 1] = scale * sp[k];
            nm[k + 1] = -(scale * sm[k]);
        }
        plus_[m + 1] = std::move(np);
        minus_[m + 1] = std::move(nm);
    }
}

namespace {

double horner(const std::vector<Rational>& c, double t) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * t + c[k].to_double();
    return acc;
}

BigFixed horner(const std::vector<Rational>& c, const BigFixed& t) {
    BigFixed acc(0);
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * t + BigFixed::from_rational(c[k]);
    return acc;
}

}  // namespace

double RPolyTable::eval_plus(std::size_t m, double t) const { return horner(plus_.at(m), t); }
double RPolyTable::eval_minus(std::size_t m, double t) const { return horner(minus_.at(m), t); }
BigFixed RPolyTable::eval_plus(std::size_t m, const BigFixed& t) const { return horner(plus_.at(m), t); }
BigFixed RPolyTable::eval_minus(std::size_t m, const BigFixed& t) const { return horner(minus_.at(m), t); }

}  // namespace photocount
