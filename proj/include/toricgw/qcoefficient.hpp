#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "laurent.hpp"

namespace toricgw {

// Exact rational function in w, where w^{2M} = q and M is the root order.
// Representation is reduced and canonical: gcd(num, den) is a unit, the
// denominator has minimal exponent 0 and leading coefficient 1.
class QCoefficient {
public:
    QCoefficient() : num_(), den_(Rational(1)), root_order_(1) {}

    explicit QCoefficient(const Rational& r, int root_order = 1)
        : num_(r), den_(Rational(1)), root_order_(root_order) {
        check_order();
    }

    QCoefficient(LaurentPoly num, LaurentPoly den, int root_order)
        : num_(std::move(num)), den_(std::move(den)), root_order_(root_order) {
        check_order();
        if (den_.is_zero()) throw std::domain_error("QCoefficient: zero denominator");
        reduce();
    }

    static QCoefficient zero(int root_order = 1) { return QCoefficient(Rational(0), root_order); }
    static QCoefficient one(int root_order = 1) { return QCoefficient(Rational(1), root_order); }

    // c * w^e at the given root order.
    static QCoefficient monomial(const Rational& c, int wexp, int root_order = 1) {
        return QCoefficient(LaurentPoly::monomial(c, wexp), LaurentPoly(Rational(1)), root_order);
    }

    // q^e for rational e; requires 2*M*e integral.
    static QCoefficient qpow(const Rational& e, int root_order) {
        Rational wexp = Rational(2 * root_order) * e;
        if (!is_integer(wexp))
            throw std::domain_error("QCoefficient::qpow: exponent " + rational_string(e) +
                                    " is not representable at root order " + std::to_string(root_order));
        return monomial(1, static_cast<int>(to_integer(wexp)), root_order);
    }

    // Smallest root order M with 2*M*e integral.
    static int min_root_order(const Rational& e) {
        Integer b = denominator(e);
        Integer m = (b % 2 == 0) ? b / 2 : b;
        return static_cast<int>(m);
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int root_order() const { return root_order_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_rational() const { return is_polynomial() && num_.is_constant(); }
    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("QCoefficient: not a plain rational");
        if (num_.is_zero()) return 0;
        return num_.constant_value() / den_.constant_value();
    }

    // Pure Laurent-polynomial part; throws when the denominator is not a unit.
    LaurentPoly as_laurent() const {
        if (!is_polynomial()) throw std::domain_error("QCoefficient: denominator is not a unit");
        return num_.scaled(Rational(1) / den_.constant_value());
    }

    QCoefficient rescaled(int new_order) const {
        if (new_order == root_order_) return *this;
        if (new_order % root_order_ != 0)
            throw std::domain_error("QCoefficient: root order " + std::to_string(new_order) +
                                    " does not refine " + std::to_string(root_order_));
        int r = new_order / root_order_;
        QCoefficient out;
        out.num_ = num_.stretched(r);
        out.den_ = den_.stretched(r);
        out.root_order_ = new_order;
        return out;  // stretching preserves canonical form
    }

    friend QCoefficient operator+(const QCoefficient& a, const QCoefficient& b) {
        auto [x, y] = aligned(a, b);
        return QCoefficient(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_, x.root_order_);
    }
    friend QCoefficient operator-(const QCoefficient& a, const QCoefficient& b) {
        auto [x, y] = aligned(a, b);
        return QCoefficient(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_, x.root_order_);
    }
    friend QCoefficient operator*(const QCoefficient& a, const QCoefficient& b) {
        auto [x, y] = aligned(a, b);
        return QCoefficient(x.num_ * y.num_, x.den_ * y.den_, x.root_order_);
    }
    friend QCoefficient operator/(const QCoefficient& a, const QCoefficient& b) {
        if (b.is_zero()) throw std::domain_error("QCoefficient: division by zero");
        auto [x, y] = aligned(a, b);
        return QCoefficient(x.num_ * y.den_, x.den_ * y.num_, x.root_order_);
    }
    QCoefficient operator-() const {
        QCoefficient r(*this);
        r.num_ = -r.num_;
        return r;
    }
    QCoefficient& operator+=(const QCoefficient& o) { return *this = *this + o; }
    QCoefficient& operator-=(const QCoefficient& o) { return *this = *this - o; }
    QCoefficient& operator*=(const QCoefficient& o) { return *this = *this * o; }
    QCoefficient& operator/=(const QCoefficient& o) { return *this = *this / o; }

    QCoefficient pow(int n) const {
        if (n < 0) return QCoefficient::one(root_order_) / pow(-n);
        QCoefficient r = QCoefficient::one(root_order_);
        QCoefficient b = *this;
        unsigned e = static_cast<unsigned>(n);
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    // w -> w^{-1} (equivalently q -> q^{-1}).
    QCoefficient bar() const {
        return QCoefficient(num_.inverted_variable(), den_.inverted_variable(), root_order_);
    }

    bool operator==(const QCoefficient& o) const {
        auto [x, y] = aligned(*this, o);
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    bool operator!=(const QCoefficient& o) const { return !(*this == o); }

    std::string str() const {
        if (is_polynomial()) {
            LaurentPoly p = as_laurent();
            if (p.terms().size() <= 1) return p.str();
            return "(" + p.str() + ")";
        }
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    static QCoefficient parse(const std::string& s, int root_order) {
        auto strip = [](const std::string& t) {
            if (t.size() >= 2 && t.front() == '(' && t.back() == ')') return t.substr(1, t.size() - 2);
            return t;
        };
        auto sep = s.find(")/(");
        if (sep == std::string::npos)
            return QCoefficient(LaurentPoly::parse(strip(s)), LaurentPoly(Rational(1)), root_order);
        return QCoefficient(LaurentPoly::parse(s.substr(1, sep - 1)),
                            LaurentPoly::parse(s.substr(sep + 3, s.size() - sep - 4)), root_order);
    }

private:
    void check_order() const {
        if (root_order_ < 1) throw std::domain_error("QCoefficient: root order must be positive");
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(Rational(1));
            return;
        }
        LaurentPoly g = laurent_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = laurent_divexact(num_, g);
            den_ = laurent_divexact(den_, g);
        }
        // Shift powers of w out of the denominator, then make it monic.
        int shift = den_.min_exp();
        den_ = LaurentPoly::monomial(1, -shift) * den_;
        num_ = LaurentPoly::monomial(1, -shift) * num_;
        Rational lead = den_.terms().rbegin()->second;
        den_ = den_.scaled(Rational(1) / lead);
        num_ = num_.scaled(Rational(1) / lead);
    }

    static std::pair<QCoefficient, QCoefficient> aligned(const QCoefficient& a, const QCoefficient& b) {
        int m = std::lcm(a.root_order_, b.root_order_);
        return {a.rescaled(m), b.rescaled(m)};
    }

    LaurentPoly num_, den_;
    int root_order_;
};

}  // namespace toricgw
