#pragma once

#include <cstddef>
#include <vector>

#include "photocount/exact.hpp"

namespace photocount {

// Exact monomial coefficients of the polynomials R_m^+(T), R_m^-(T),
// generated by
//   R_0^{+-} = 1,
//   R_{m+1}^{+-}(T) = +-(T / (2(m+1))) * sum_{l=0..m} (-1)^l binom(2l,l) 4^-l R_{m-l}^{+-}(T).
// Row m carries degree-m polynomials; they feed the closed forms for u_m, v_m.
class RPolyTable {
public:
    explicit RPolyTable(std::size_t max_m);

    std::size_t max_m() const { return plus_.size() - 1; }

    // coefficient rows in the monomial basis, index [m][power]
    const std::vector<Rational>& plus(std::size_t m) const { return plus_.at(m); }
    const std::vector<Rational>& minus(std::size_t m) const { return minus_.at(m); }

    double eval_plus(std::size_t m, double t) const;
    double eval_minus(std::size_t m, double t) const;
    BigFixed eval_plus(std::size_t m, const BigFixed& t) const;
    BigFixed eval_minus(std::size_t m, const BigFixed& t) const;

private:
    std::vector<std::vector<Rational>> plus_, minus_;
};

inline RPolyTable build_r_polys(std::size_t max_m) { return RPolyTable(max_m); }

}  // namespace photocount
