#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcoefficient.hpp"

namespace toricgw {

struct NovikovKey {
    std::vector<int> exps;
    int lambda = 0;

    int total_degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
    bool operator<(const NovikovKey& o) const {
        if (exps != o.exps) return exps < o.exps;
        return lambda < o.lambda;
    }
    bool operator==(const NovikovKey& o) const { return exps == o.exps && lambda == o.lambda; }
};

// Multivariate polynomial in Novikov variables, truncated at total degree D,
// with an extra integer Laurent exponent tracking the genus parameter.
class NovikovSeries {
public:
    NovikovSeries() : truncation_(0) {}
    NovikovSeries(std::vector<std::string> vars, int truncation)
        : vars_(std::move(vars)), truncation_(truncation) {
        if (truncation_ < 0) throw std::domain_error("NovikovSeries: negative truncation");
    }

    static NovikovSeries scalar(std::vector<std::string> vars, int truncation, QCoefficient c) {
        NovikovSeries s(std::move(vars), truncation);
        s.add_term(NovikovKey{std::vector<int>(s.vars_.size(), 0), 0}, std::move(c));
        return s;
    }
    static NovikovSeries one(std::vector<std::string> vars, int truncation) {
        return scalar(std::move(vars), truncation, QCoefficient::one());
    }

    const std::vector<std::string>& variables() const { return vars_; }
    int truncation() const { return truncation_; }
    const std::map<NovikovKey, QCoefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const NovikovKey& key, const QCoefficient& c) {
        if (key.exps.size() != vars_.size())
            throw std::domain_error("NovikovSeries: exponent arity mismatch");
        for (int e : key.exps)
            if (e < 0) throw std::domain_error("NovikovSeries: negative exponent");
        if (key.total_degree() > truncation_ || c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QCoefficient coeff(const NovikovKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? QCoefficient::zero() : it->second;
    }
    QCoefficient coeff(const std::vector<int>& exps, int lambda = 0) const {
        return coeff(NovikovKey{exps, lambda});
    }

    // Coefficient of the degree-0, lambda-0 monomial.
    QCoefficient constant_term() const { return coeff(std::vector<int>(vars_.size(), 0), 0); }

    NovikovSeries operator-() const {
        NovikovSeries r(*this);
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    NovikovSeries& operator+=(const NovikovSeries& o) {
        require_compatible(o);
        for (auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    NovikovSeries& operator-=(const NovikovSeries& o) {
        require_compatible(o);
        for (auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend NovikovSeries operator+(NovikovSeries a, const NovikovSeries& b) { return a += b; }
    friend NovikovSeries operator-(NovikovSeries a, const NovikovSeries& b) { return a -= b; }

    friend NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b) {
        a.require_compatible(b);
        NovikovSeries r(a.vars_, a.truncation_);
        for (auto& [ka, ca] : a.terms_) {
            int da = ka.total_degree();
            for (auto& [kb, cb] : b.terms_) {
                if (da + kb.total_degree() > r.truncation_) continue;
                NovikovKey k;
                k.exps.resize(ka.exps.size());
                for (size_t i = 0; i < k.exps.size(); ++i) k.exps[i] = ka.exps[i] + kb.exps[i];
                k.lambda = ka.lambda + kb.lambda;
                r.add_term(k, ca * cb);
            }
        }
        return r;
    }
    NovikovSeries& operator*=(const NovikovSeries& o) { return *this = *this * o; }

    NovikovSeries scaled(const QCoefficient& c) const {
        NovikovSeries r(vars_, truncation_);
        for (auto& [k, v] : terms_) r.add_term(k, v * c);
        return r;
    }

    bool operator==(const NovikovSeries& o) const {
        return vars_ == o.vars_ && truncation_ == o.truncation_ && terms_ == o.terms_;
    }
    bool operator!=(const NovikovSeries& o) const { return !(*this == o); }

    // Truncated exponential; every term must have positive Novikov degree.
    NovikovSeries exp() const {
        for (auto& [k, c] : terms_)
            if (k.total_degree() == 0)
                throw std::domain_error("NovikovSeries::exp: nonzero constant part");
        NovikovSeries result = one(vars_, truncation_);
        NovikovSeries power = one(vars_, truncation_);
        Rational fact = 1;
        for (int j = 1; j <= truncation_; ++j) {
            power *= *this;
            if (power.is_zero()) break;
            fact *= j;
            result += power.scaled(QCoefficient(Rational(1) / fact));
        }
        return result;
    }

    // Truncated logarithm; requires constant term 1.
    NovikovSeries log() const {
        NovikovSeries u = *this - one(vars_, truncation_);
        for (auto& [k, c] : u.terms_)
            if (k.total_degree() == 0)
                throw std::domain_error("NovikovSeries::log: constant term is not 1");
        NovikovSeries result(vars_, truncation_);
        NovikovSeries power = one(vars_, truncation_);
        for (int j = 1; j <= truncation_; ++j) {
            power *= u;
            if (power.is_zero()) break;
            Rational c = Rational((j % 2) ? 1 : -1, j);
            result += power.scaled(QCoefficient(c));
        }
        return result;
    }

    // Divide every exponent by two; used by the half-integer bookkeeping of
    // the vertex-operator expansion. Throws on odd exponents.
    NovikovSeries halved(int new_truncation) const {
        NovikovSeries r(vars_, new_truncation);
        for (auto& [k, c] : terms_) {
            NovikovKey h;
            h.exps.resize(k.exps.size());
            for (size_t i = 0; i < k.exps.size(); ++i) {
                if (k.exps[i] % 2 != 0)
                    throw std::logic_error("NovikovSeries: residual half-integer exponent");
                h.exps[i] = k.exps[i] / 2;
            }
            h.lambda = k.lambda;
            r.add_term(h, c);
        }
        return r;
    }

    // Multiply the coefficient of each monomial by prod_i sign_i^{e_i}.
    NovikovSeries with_edge_signs(const std::vector<int>& s) const {
        if (s.size() != vars_.size()) throw std::domain_error("NovikovSeries: sign arity mismatch");
        NovikovSeries r(vars_, truncation_);
        for (auto& [k, c] : terms_) {
            long flips = 0;
            for (size_t i = 0; i < s.size(); ++i)
                if (s[i] % 2 != 0) flips += k.exps[i];
            r.add_term(k, (flips % 2) ? -c : c);
        }
        return r;
    }

    // Forget the genus grading (set lambda = 1).
    NovikovSeries lambda_collapsed() const {
        NovikovSeries r(vars_, truncation_);
        for (auto& [k, c] : terms_) r.add_term(NovikovKey{k.exps, 0}, c);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (size_t i = 0; i < vars_.size(); ++i)
                if (k.exps[i] != 0) os << "*" << vars_[i] << "^" << k.exps[i];
            if (k.lambda != 0) os << "*L^" << k.lambda;
        }
        return os.str();
    }

private:
    void require_compatible(const NovikovSeries& o) const {
        if (vars_ != o.vars_ || truncation_ != o.truncation_)
            throw std::domain_error("NovikovSeries: incompatible variable sets or truncations");
    }

    std::vector<std::string> vars_;
    int truncation_;
    std::map<NovikovKey, QCoefficient> terms_;
};

}  // namespace toricgw
