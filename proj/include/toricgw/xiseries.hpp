#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoefficient.hpp"

namespace toricgw {

// Truncated Laurent series in xi, where q = e^xi. Coefficients are exact
// rationals; all exponents above `order` are unknown rather than zero.
class XiSeries {
public:
    XiSeries() : order_(0) {}
    XiSeries(std::map<int, Rational> coeffs, int order) : coeffs_(std::move(coeffs)), order_(order) {
        prune();
    }

    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    int floor_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

    Rational coeff(int e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }

    bool operator==(const XiSeries& o) const { return order_ == o.order_ && coeffs_ == o.coeffs_; }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            os << rational_string(c);
            if (e != 0) os << "*xi^" << e;
        }
        if (first) os << "0";
        os << " + O(xi^" << order_ + 1 << ")";
        return os.str();
    }

private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->second == 0 || it->first > order_) ? coeffs_.erase(it) : std::next(it);
    }

    std::map<int, Rational> coeffs_;
    int order_;
};

namespace detail {

// Coefficients of p(e^{xi/(2M)}) through xi^K.
inline std::vector<Rational> exp_substitution(const LaurentPoly& p, int root_order, int K) {
    std::vector<Rational> out(static_cast<size_t>(K) + 1, Rational(0));
    for (auto& [e, c] : p.terms()) {
        Rational x = Rational(e, 2 * root_order);  // w^e = e^{x xi}
        Rational powj = 1;                         // x^j / j!
        for (int j = 0; j <= K; ++j) {
            out[static_cast<size_t>(j)] += c * powj;
            powj = powj * x / (j + 1);
        }
    }
    return out;
}

}  // namespace detail

// Laurent expansion of c at w = 1 via w = e^{xi/(2M)}, through xi^order.
inline XiSeries lambda_expand(const QCoefficient& c, int order) {
    if (c.is_zero()) return XiSeries({}, order);

    // The denominator's vanishing order at w = 1 is at most its degree span.
    int vmax = c.den().span();
    int K = order + vmax;
    if (K < 0) K = 0;
    auto nums = detail::exp_substitution(c.num(), c.root_order(), K);
    auto dens = detail::exp_substitution(c.den(), c.root_order(), K);

    int vden = -1, vnum = -1;
    for (int j = 0; j <= K; ++j) {
        if (vden < 0 && dens[static_cast<size_t>(j)] != 0) vden = j;
        if (vnum < 0 && nums[static_cast<size_t>(j)] != 0) vnum = j;
    }
    if (vden < 0)
        throw std::domain_error("lambda_expand: denominator vanishes to all computed orders");
    if (vnum < 0) return XiSeries({}, order);

    // Power-series division after factoring out the valuations.
    int flo = vnum - vden;
    int terms = order - flo + 1;
    std::map<int, Rational> res;
    if (terms > 0) {
        std::vector<Rational> r(static_cast<size_t>(terms), Rational(0));
        for (int m = 0; m < terms; ++m) {
            Rational acc = (vnum + m <= K) ? nums[static_cast<size_t>(vnum + m)] : Rational(0);
            for (int i = 0; i < m; ++i) {
                int di = vden + m - i;
                if (di <= K) acc -= r[static_cast<size_t>(i)] * dens[static_cast<size_t>(di)];
            }
            r[static_cast<size_t>(m)] = acc / dens[static_cast<size_t>(vden)];
        }
        for (int m = 0; m < terms; ++m) res[flo + m] = r[static_cast<size_t>(m)];
    }
    return XiSeries(std::move(res), order);
}

}  // namespace toricgw
