#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "novikov.hpp"
#include "partitions.hpp"

namespace toricgw {

// One Heisenberg generator beta_{color, mode}; mode 0 acts as zero and is excluded.
struct BosonIndex {
    int color = 0;
    int mode = 0;

    BosonIndex() = default;
    BosonIndex(int c, int m) : color(c), mode(m) {
        if (m == 0) throw std::domain_error("BosonIndex: mode 0 is excluded");
    }
    auto operator<=>(const BosonIndex&) const = default;
};

namespace detail {

inline bool scalar_is_zero(const Rational& s) { return s == 0; }
inline bool scalar_is_zero(const QCoefficient& s) { return s.is_zero(); }
inline bool scalar_is_zero(const NovikovSeries& s) { return s.is_zero(); }

inline Rational scalar_scaled(const Rational& s, const Rational& c) { return s * c; }
inline QCoefficient scalar_scaled(const QCoefficient& s, const Rational& c) {
    return s * QCoefficient(c);
}
inline NovikovSeries scalar_scaled(const NovikovSeries& s, const Rational& c) {
    return s.scaled(QCoefficient(c));
}

}  // namespace detail

template <class Scalar>
struct BasicBosonFactor {
    BosonIndex index;
    Scalar scalar;
};

// Ordered product of scaled generators; order is semantically significant.
template <class Scalar>
struct BasicBosonWord {
    std::vector<BasicBosonFactor<Scalar>> factors;

    void append(BosonIndex idx, Scalar s) { factors.push_back({idx, std::move(s)}); }

    // beta_{color, mu} (annihilators, weight 1 each).
    void append_annihilators(int color, const Partition& mu, const Scalar& unit) {
        for (int p : mu.parts()) append(BosonIndex(color, p), unit);
    }
    // beta_{color, -mu} (creators, weight 1 each).
    void append_creators(int color, const Partition& mu, const Scalar& unit) {
        for (int p : mu.parts()) append(BosonIndex(color, -p), unit);
    }
};

using BosonWord = BasicBosonWord<NovikovSeries>;
using RationalBosonWord = BasicBosonWord<Rational>;

// Sort modes descending (stable among equal modes): annihilators leftmost.
template <class Scalar>
BasicBosonWord<Scalar> order_abnormally(BasicBosonWord<Scalar> word) {
    std::stable_sort(word.factors.begin(), word.factors.end(),
                     [](const auto& a, const auto& b) { return a.index.mode > b.index.mode; });
    return word;
}

// Normal ordering (modes ascending) kills every vacuum expectation value.
template <class Scalar>
BasicBosonWord<Scalar> order_normally(BasicBosonWord<Scalar> word) {
    std::stable_sort(word.factors.begin(), word.factors.end(),
                     [](const auto& a, const auto& b) { return a.index.mode < b.index.mode; });
    return word;
}

// Element of the k-color bosonic Fock space: finitely supported map from
// per-color mode multisets (one partition per color) to scalars.
template <class Scalar>
class BasicFockVector {
public:
    using Key = std::vector<Partition>;

    explicit BasicFockVector(int colors) : colors_(colors) {
        if (colors < 1) throw std::domain_error("FockVector: need at least one color");
    }

    static BasicFockVector vacuum(int colors, Scalar unit) {
        BasicFockVector v(colors);
        v.terms_.emplace(Key(static_cast<size_t>(colors)), std::move(unit));
        return v;
    }

    int colors() const { return colors_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add_term(const Key& key, const Scalar& s) {
        if (key.size() != static_cast<size_t>(colors_))
            throw std::domain_error("FockVector: key arity mismatch");
        if (detail::scalar_is_zero(s)) return;
        auto [it, inserted] = terms_.emplace(key, s);
        if (!inserted) {
            it->second = it->second + s;
            if (detail::scalar_is_zero(it->second)) terms_.erase(it);
        }
    }

    Scalar vacuum_coefficient(const Scalar& zero) const {
        auto it = terms_.find(Key(static_cast<size_t>(colors_)));
        return it == terms_.end() ? zero : it->second;
    }

    BasicFockVector& operator+=(const BasicFockVector& o) {
        for (auto& [k, s] : o.terms_) add_term(k, s);
        return *this;
    }

    BasicFockVector scaled(const Rational& c) const {
        BasicFockVector r(colors_);
        if (c == 0) return r;
        for (auto& [k, s] : terms_) r.terms_.emplace(k, detail::scalar_scaled(s, c));
        return r;
    }

    bool operator==(const BasicFockVector& o) const {
        return colors_ == o.colors_ && terms_ == o.terms_;
    }

private:
    int colors_;
    std::map<Key, Scalar> terms_;
};

using FockVector = BasicFockVector<NovikovSeries>;
using RationalFockVector = BasicFockVector<Rational>;

// beta_n: multiply by p_{-n} for n < 0, act as n d/dp_n for n > 0.
template <class Scalar>
BasicFockVector<Scalar> apply_beta(const BosonIndex& idx, const BasicFockVector<Scalar>& v) {
    if (idx.color < 0 || idx.color >= v.colors())
        throw std::domain_error("apply_beta: color out of range");
    BasicFockVector<Scalar> out(v.colors());
    size_t c = static_cast<size_t>(idx.color);
    for (auto& [key, s] : v.terms()) {
        if (idx.mode < 0) {
            auto next = key;
            next[c] = next[c].with_part(-idx.mode);
            out.add_term(next, s);
        } else {
            int m = key[c].multiplicity(idx.mode);
            if (m == 0) continue;
            auto next = key;
            next[c] = next[c].without_part(idx.mode);
            out.add_term(next, detail::scalar_scaled(s, Rational(idx.mode) * m));
        }
    }
    return out;
}

// Apply the word right-to-left to the vacuum and read off the vacuum coefficient.
template <class Scalar>
Scalar vev(const BasicBosonWord<Scalar>& word, int colors, const Scalar& zero, const Scalar& unit) {
    auto v = BasicFockVector<Scalar>::vacuum(colors, unit);
    for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
        v = apply_beta(it->index, v);
        if (v.is_zero()) return zero;
        // scale by the factor's own weight
        BasicFockVector<Scalar> scaled(colors);
        for (auto& [k, s] : v.terms()) scaled.add_term(k, s * it->scalar);
        v = std::move(scaled);
    }
    return v.vacuum_coefficient(zero);
}

inline Rational vev(const RationalBosonWord& word, int colors) {
    return vev<Rational>(word, colors, Rational(0), Rational(1));
}

// Hermitian pairing with <p_mu, p_nu> = z_mu delta_{mu,nu}, color by color.
template <class Scalar>
Scalar inner_product(const BasicFockVector<Scalar>& u, const BasicFockVector<Scalar>& v,
                     const Scalar& zero) {
    Scalar acc = zero;
    for (auto& [key, su] : u.terms()) {
        auto it = v.terms().find(key);
        if (it == v.terms().end()) continue;
        Rational z = 1;
        for (const Partition& mu : key) z *= Rational(mu.z_factor());
        acc = acc + detail::scalar_scaled(su * it->second, z);
    }
    return acc;
}

// <exp(sum a_n t^n/n beta_n) exp(sum a_{-n} t^n/n beta_{-n})>, one color,
// truncated at t-degree D. Modes with |n| > D cannot contribute.
inline NovikovSeries vev_exponential_pair(const std::map<int, Rational>& a, int degree_bound) {
    std::vector<std::string> vars{"t"};
    const int D = degree_bound;
    NovikovSeries zero(vars, D);
    NovikovSeries one = NovikovSeries::one(vars, D);

    auto coefficient_series = [&](int n, const Rational& c) {
        NovikovSeries s(vars, D);
        s.add_term(NovikovKey{{n}, 0}, QCoefficient(c / n));
        return s;
    };

    auto apply_sum = [&](bool creators, const FockVector& v) {
        FockVector out(1);
        for (auto& [n, c] : a) {
            if (creators ? (n >= 0) : (n <= 0)) continue;
            int abs_n = n < 0 ? -n : n;
            if (abs_n > D || c == 0) continue;
            auto w = apply_beta(BosonIndex(0, n), v);
            NovikovSeries weight = coefficient_series(abs_n, c);
            for (auto& [k, s] : w.terms()) out.add_term(k, s * weight);
        }
        return out;
    };

    auto exponential = [&](bool creators, FockVector v) {
        FockVector total = v;
        for (int j = 1; j <= D; ++j) {
            v = apply_sum(creators, v).scaled(Rational(1, j));
            if (v.is_zero()) break;
            total += v;
        }
        return total;
    };

    FockVector state = exponential(true, FockVector::vacuum(1, one));
    state = exponential(false, state);
    return state.vacuum_coefficient(zero);
}

}  // namespace toricgw
