#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "partitions.hpp"
#include "qcoefficient.hpp"

namespace toricgw {

namespace detail {

// All partitions eta contained in the diagram of nu.
inline std::vector<Partition> subdiagrams(const Partition& nu) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int row, int prev) -> void {
        out.emplace_back(std::vector<int>(current));
        if (row >= nu.length()) return;
        int cap = std::min(prev, nu.part(row));
        for (int p = cap; p >= 1; --p) {
            current.push_back(p);
            self(self, row + 1, p);
            current.pop_back();
        }
    };
    rec(rec, 0, nu.part(0) == 0 ? 0 : nu.part(0));
    return out;
}

// Skew Schur polynomial s_{nu/eta} evaluated at monomials w^{e_1},...,w^{e_L},
// by expanding over chains of horizontal strips.
inline LaurentPoly skew_schur_monomials(const Partition& nu, const Partition& eta,
                                        const std::vector<int>& exponents) {
    if (!nu.contains(eta)) return LaurentPoly();
    std::map<Partition, LaurentPoly> state;
    state[eta] = LaurentPoly(Rational(1));
    for (int exp : exponents) {
        std::map<Partition, LaurentPoly> next;
        for (auto& [lam, poly] : state) {
            // Horizontal-strip extensions lam -> lam' inside nu.
            std::vector<int> rows;
            auto rec = [&](auto&& self, int i) -> void {
                if (i == nu.length()) {
                    std::vector<int> parts;
                    int added = 0;
                    for (int r = 0; r < nu.length(); ++r) {
                        if (rows[static_cast<size_t>(r)] > 0) parts.push_back(rows[static_cast<size_t>(r)]);
                        added += rows[static_cast<size_t>(r)] - lam.part(r);
                    }
                    Partition lamp(std::move(parts));
                    auto [it, inserted] = next.emplace(lamp, LaurentPoly());
                    it->second += poly * LaurentPoly::monomial(1, exp * added);
                    return;
                }
                int lo = lam.part(i);
                int hi = std::min(nu.part(i), i == 0 ? nu.part(0) : lam.part(i - 1));
                for (int v = lo; v <= hi; ++v) {
                    if (i > 0 && v > rows[static_cast<size_t>(i - 1)]) continue;
                    rows.push_back(v);
                    self(self, i + 1);
                    rows.pop_back();
                }
            };
            rec(rec, 0);
        }
        state = std::move(next);
    }
    auto it = state.find(nu);
    return it == state.end() ? LaurentPoly() : it->second;
}

// s_eta(q^rho) in closed hook form: q^{kappa/4} / prod_cells (q^{h/2} - q^{-h/2}),
// at root order 1 (w = q^{1/2}).
inline QCoefficient principal_hook_form(const Partition& eta) {
    long half_kappa = eta.kappa() / 2;
    LaurentPoly num = LaurentPoly::monomial(1, static_cast<int>(half_kappa));
    LaurentPoly den(Rational(1));
    for (int h : eta.hooks())
        den *= (LaurentPoly::monomial(1, h) - LaurentPoly::monomial(1, -h));
    return QCoefficient(std::move(num), std::move(den), 1);
}

}  // namespace detail

// s_nu evaluated at (q^{shift_1 - 1/2}, ..., q^{shift_L - (2L-1)/2}, q^{-(2L+1)/2}, ...):
// a finite head of L explicit monomials followed by the shifted principal tail,
// the tail summed exactly in hook form. Requires L >= l(shift).
inline QCoefficient schur_shifted_principal(const Partition& nu, const Partition& shift, int head_len) {
    if (head_len < shift.length())
        throw std::domain_error("schur_shifted_principal: head shorter than the shift");
    std::vector<int> head;
    for (int i = 1; i <= head_len; ++i) head.push_back(2 * shift.part(i - 1) - (2 * i - 1));

    QCoefficient total = QCoefficient::zero();
    for (const Partition& eta : detail::subdiagrams(nu)) {
        LaurentPoly skew = detail::skew_schur_monomials(nu, eta, head);
        if (skew.is_zero()) continue;
        QCoefficient tail = detail::principal_hook_form(eta);
        QCoefficient scale = QCoefficient::monomial(1, -2 * head_len * eta.weight());
        total += QCoefficient(std::move(skew), LaurentPoly(Rational(1)), 1) * tail * scale;
    }
    return total;
}

// Hopf link weight W_{mu,nu} = s_mu(q^rho) s_nu(q^{mu+rho}); symmetric, W_{00} = 1.
inline QCoefficient w_hopf(const Partition& mu, const Partition& nu) {
    static std::map<std::pair<Partition, Partition>, QCoefficient> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(mu, nu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QCoefficient value =
        schur_shifted_principal(mu, Partition(), 0) * schur_shifted_principal(nu, mu, mu.length());
    memo.emplace(std::move(key), value);
    return value;
}

// Coefficient of p+_{mu+} p-_{mu-} in the unexponentiated vertex sum:
// sum over |nu+|=|mu+|, |nu-|=|mu-| of chi chi / (z z) q^{(kappa+ tau + kappa-/tau)/2} W.
inline QCoefficient vertex_coefficient(const Partition& mu_plus, const Partition& mu_minus,
                                       const Rational& tau) {
    if (tau == 0) throw std::domain_error("vertex_coefficient: tau must be nonzero");
    Integer a = numerator(tau), b = denominator(tau);
    if (a < 0) a = -a;
    int root = static_cast<int>(std::lcm(std::lcm(Integer(2), a), b));

    Rational zz(mu_plus.z_factor() * mu_minus.z_factor());
    QCoefficient total = QCoefficient::zero(root);
    for (const Partition& nu_plus : enumerate_partitions(mu_plus.weight()))
        for (const Partition& nu_minus : enumerate_partitions(mu_minus.weight())) {
            Integer chi = character(nu_plus, mu_plus) * character(nu_minus, mu_minus);
            if (chi == 0) continue;
            Rational exponent =
                (Rational(nu_plus.kappa()) * tau + Rational(nu_minus.kappa()) / tau) / 2;
            total += QCoefficient(Rational(chi) / zz) * QCoefficient::qpow(exponent, root) *
                     w_hopf(nu_plus, nu_minus).rescaled(root);
        }
    return total;
}

// Formal series indexed by pairs of partitions, the monomial algebra of the
// p+ and p- variables; multiplication merges part multisets.
class PairSeries {
public:
    using Key = std::pair<Partition, Partition>;

    explicit PairSeries(int bound) : bound_(bound) {}

    static PairSeries one(int bound) {
        PairSeries s(bound);
        s.terms_[{Partition(), Partition()}] = QCoefficient::one();
        return s;
    }

    int bound() const { return bound_; }
    const std::map<Key, QCoefficient>& terms() const { return terms_; }

    void add_term(const Key& key, const QCoefficient& c) {
        if (key.first.weight() + key.second.weight() > bound_ || c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    QCoefficient coeff(const Partition& plus, const Partition& minus) const {
        auto it = terms_.find({plus, minus});
        return it == terms_.end() ? QCoefficient::zero() : it->second;
    }

    PairSeries operator*(const PairSeries& o) const {
        PairSeries r(bound_);
        for (auto& [ka, ca] : terms_) {
            int da = ka.first.weight() + ka.second.weight();
            for (auto& [kb, cb] : o.terms_) {
                if (da + kb.first.weight() + kb.second.weight() > bound_) continue;
                r.add_term({merged(ka.first, kb.first), merged(ka.second, kb.second)}, ca * cb);
            }
        }
        return r;
    }

    PairSeries scaled(const Rational& c) const {
        PairSeries r(bound_);
        for (auto& [k, v] : terms_) r.add_term(k, v * QCoefficient(c));
        return r;
    }

    PairSeries operator+(const PairSeries& o) const {
        PairSeries r = *this;
        for (auto& [k, v] : o.terms_) r.add_term(k, v);
        return r;
    }

    PairSeries operator-() const {
        PairSeries r(bound_);
        for (auto& [k, v] : terms_) r.terms_[k] = -v;
        return r;
    }

    // Truncated log; requires unit constant term.
    PairSeries log() const {
        auto it = terms_.find({Partition(), Partition()});
        if (it == terms_.end() || !(it->second == QCoefficient::one()))
            throw std::domain_error("PairSeries::log: constant term is not 1");
        PairSeries u = *this;
        u.terms_.erase({Partition(), Partition()});
        PairSeries result(bound_);
        PairSeries power = one(bound_);
        for (int j = 1; j <= bound_; ++j) {
            power = power * u;
            if (power.terms_.empty()) break;
            result = result + power.scaled(Rational((j % 2) ? 1 : -1, j));
        }
        return result;
    }

    PairSeries exp() const {
        for (auto& [k, c] : terms_)
            if (k.first.empty() && k.second.empty())
                throw std::domain_error("PairSeries::exp: nonzero constant part");
        PairSeries result = one(bound_);
        PairSeries power = one(bound_);
        Rational fact = 1;
        for (int j = 1; j <= bound_; ++j) {
            power = power * *this;
            if (power.terms_.empty()) break;
            fact *= j;
            result = result + power.scaled(Rational(1) / fact);
        }
        return result;
    }

private:
    int bound_;
    std::map<Key, QCoefficient> terms_;
};

// Generating series of vertex coefficients up to total size `bound`.
inline PairSeries vertex_series(const Rational& tau, int bound) {
    PairSeries s = PairSeries::one(bound);
    for (const auto& pair : enumerate_pairs_plus(bound))
        s.add_term({pair.plus, pair.minus}, vertex_coefficient(pair.plus, pair.minus, tau));
    return s;
}

// Connected amplitude G_{mu+,mu-}(tau): coefficient in the truncated log of the
// vertex series. G_{empty,empty} = 0.
inline QCoefficient connected_amplitude(const Partition& mu_plus, const Partition& mu_minus,
                                        const Rational& tau, int bound) {
    if (mu_plus.weight() + mu_minus.weight() > bound)
        throw std::domain_error("connected_amplitude: bound exceeded");
    static std::map<std::pair<Rational, int>, PairSeries> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(tau, bound);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, vertex_series(tau, bound).log()).first;
    return it->second.coeff(mu_plus, mu_minus);
}

}  // namespace toricgw
