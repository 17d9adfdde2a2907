#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace toricgw {

// Sparse Laurent polynomial in one variable over the rationals.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    static LaurentPoly monomial(const Rational& c, int exponent) {
        LaurentPoly p;
        if (c != 0) p.terms_[exponent] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::domain_error("LaurentPoly: not a constant");
        return terms_.begin()->second;
    }

    int min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    int span() const { return terms_.empty() ? 0 : max_exp() - min_exp(); }

    const std::map<int, Rational>& terms() const { return terms_; }

    Rational coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int exponent, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exponent, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    // w -> w^r (root-order rescaling); r >= 1.
    LaurentPoly stretched(int r) const {
        LaurentPoly out;
        for (auto& [e, c] : terms_) out.terms_[e * r] = c;
        return out;
    }

    // w -> w^{-1}.
    LaurentPoly inverted_variable() const {
        LaurentPoly out;
        for (auto& [e, c] : terms_) out.terms_[-e] = c;
        return out;
    }

    Rational eval_at_one() const {
        Rational s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }

    LaurentPoly pow(int n) const {
        if (n < 0) throw std::domain_error("LaurentPoly::pow: negative exponent");
        LaurentPoly r(Rational(1));
        LaurentPoly b(*this);
        unsigned e = static_cast<unsigned>(n);
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Dense coefficients of w^min..w^max as an ordinary polynomial.
    std::vector<Rational> dense() const {
        std::vector<Rational> v(static_cast<size_t>(span()) + 1, Rational(0));
        for (auto& [e, c] : terms_) v[static_cast<size_t>(e - min_exp())] = c;
        return v;
    }

    static LaurentPoly from_dense(const std::vector<Rational>& v, int min_exp) {
        LaurentPoly p;
        for (size_t i = 0; i < v.size(); ++i) p.add_term(min_exp + static_cast<int>(i), v[i]);
        return p;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << rational_string(c);
            if (e != 0) os << "*w^" << e;
        }
        return os.str();
    }

    static LaurentPoly parse(const std::string& s);

private:
    std::map<int, Rational> terms_;
};

namespace detail {

// Quotient/remainder in Q[x] on dense coefficient vectors (lowest degree first).
inline void poly_divmod(std::vector<Rational> num, const std::vector<Rational>& den,
                        std::vector<Rational>& quot, std::vector<Rational>& rem) {
    auto deg = [](const std::vector<Rational>& p) {
        for (size_t i = p.size(); i > 0; --i)
            if (p[i - 1] != 0) return static_cast<int>(i) - 1;
        return -1;
    };
    int dd = deg(den);
    if (dd < 0) throw std::domain_error("poly_divmod: division by zero polynomial");
    int dn = deg(num);
    quot.assign(dn >= dd ? static_cast<size_t>(dn - dd) + 1 : 1, Rational(0));
    while ((dn = deg(num)) >= dd) {
        Rational c = num[static_cast<size_t>(dn)] / den[static_cast<size_t>(dd)];
        quot[static_cast<size_t>(dn - dd)] = c;
        for (int i = 0; i <= dd; ++i)
            num[static_cast<size_t>(dn - dd + i)] -= c * den[static_cast<size_t>(i)];
    }
    rem = std::move(num);
}

inline std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    auto deg = [](const std::vector<Rational>& p) {
        for (size_t i = p.size(); i > 0; --i)
            if (p[i - 1] != 0) return static_cast<int>(i) - 1;
        return -1;
    };
    while (deg(b) >= 0) {
        std::vector<Rational> q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    int d = deg(a);
    if (d < 0) return a;
    Rational lead = a[static_cast<size_t>(d)];
    for (auto& c : a) c /= lead;
    a.resize(static_cast<size_t>(d) + 1);
    return a;
}

}  // namespace detail

// Monic gcd, with all w-powers treated as units.
inline LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto g = detail::poly_gcd(a.dense(), b.dense());
    return LaurentPoly::from_dense(g, 0);
}

// Exact quotient; throws when the division has a remainder.
inline LaurentPoly laurent_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("laurent_divexact: division by zero");
    if (a.is_zero()) return LaurentPoly();
    std::vector<Rational> q, r;
    detail::poly_divmod(a.dense(), b.dense(), q, r);
    for (auto& c : r)
        if (c != 0) throw std::domain_error("laurent_divexact: inexact division");
    return LaurentPoly::from_dense(q, a.min_exp() - b.min_exp());
}

inline LaurentPoly LaurentPoly::parse(const std::string& s) {
    LaurentPoly p;
    if (s == "0") return p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;
        auto star = term.find("*w^");
        if (star == std::string::npos) {
            p.add_term(0, parse_rational(term));
        } else {
            Rational c = parse_rational(term.substr(0, star));
            int e = std::stoi(term.substr(star + 3));
            p.add_term(e, c);
        }
    }
    return p;
}

}  // namespace toricgw
