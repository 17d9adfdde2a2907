#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "feynman.hpp"
#include "novikov.hpp"
#include "wzw.hpp"

namespace toricgw {

// Cycle data of a smooth toric Fano surface: framing integers s_i, one
// homology class per edge of the moment polygon, and the Mobius coefficients
// expressing the first weight ratio in the torus parameter c.
struct ToricSurface {
    std::string name;
    int k = 0;
    std::vector<int> s;
    std::vector<std::string> variables;        // basis of H_2, Novikov names
    std::vector<std::vector<int>> class_map;   // per edge class, exponents over `variables`
    std::array<long, 4> tau_seed{1, 0, 0, 1};  // tau_1 = (p c + q) / (r c + t)

    void validate() const {
        if (k < 2) throw std::domain_error("ToricSurface: cycle length k must be >= 2");
        if (s.size() != static_cast<size_t>(k))
            throw std::domain_error("ToricSurface: s must have k entries");
        for (int i = 0; i < k; ++i)
            if (s[static_cast<size_t>(i)] <= -2)
                throw std::domain_error("ToricSurface: s_" + std::to_string(i + 1) + " = " +
                                        std::to_string(s[static_cast<size_t>(i)]) +
                                        " violates the adjunction bound s_i > -2");
        if (variables.empty()) throw std::domain_error("ToricSurface: no Novikov variables");
        if (class_map.size() != static_cast<size_t>(k))
            throw std::domain_error("ToricSurface: class_map must have k entries");
        for (auto& row : class_map)
            if (row.size() != variables.size())
                throw std::domain_error("ToricSurface: class_map row arity mismatch");
    }

    // Formal variables of the edge classes t_1, ..., t_k.
    std::vector<std::string> edge_variables() const {
        std::vector<std::string> v;
        for (int i = 1; i <= k; ++i) v.push_back("t" + std::to_string(i));
        return v;
    }
};

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"p2", "p1xp1", "b1", "b2", "b3"};
    return names;
}

inline ToricSurface preset(const std::string& name) {
    ToricSurface m;
    m.name = name;
    if (name == "p2") {
        m.k = 3;
        m.s = {1, 1, 1};
        m.variables = {"t"};
        m.class_map = {{1}, {1}, {1}};
    } else if (name == "p1xp1") {
        m.k = 4;
        m.s = {0, 0, 0, 0};
        m.variables = {"t_F1", "t_F2"};
        m.class_map = {{1, 0}, {0, 1}, {1, 0}, {0, 1}};
    } else if (name == "b1") {
        m.k = 4;
        m.s = {0, -1, 0, 1};
        m.variables = {"t_F", "t_B"};
        m.class_map = {{1, 0}, {0, 1}, {1, 0}, {1, 1}};
    } else if (name == "b2") {
        m.k = 5;
        m.s = {0, -1, -1, -1, 0};
        m.variables = {"t_H", "t_E1", "t_E2"};
        m.class_map = {{1, -1, 0}, {0, 1, 0}, {1, -1, -1}, {0, 0, 1}, {1, 0, -1}};
    } else if (name == "b3") {
        m.k = 6;
        m.s = {-1, -1, -1, -1, -1, -1};
        m.variables = {"t_H", "t_E1", "t_E2", "t_E3"};
        m.class_map = {{1, -1, 0, -1}, {0, 1, 0, 0},  {1, -1, -1, 0},
                       {0, 0, 1, 0},   {1, 0, -1, -1}, {0, 0, 0, 1}};
        m.tau_seed = {0, -1, 1, 0};  // vertex 1 sits on an exceptional divisor
    } else {
        throw std::domain_error("preset: unknown surface '" + name + "'");
    }
    m.validate();
    return m;
}

// Ratios tau_i = u_i^- / u_i^+ of the tangent weights at the fixed points.
struct WeightRatios {
    std::vector<Rational> tau;
};

// Specialize the torus at (theta_1, theta_2) = (1, c) and propagate the first
// ratio around the cycle via 1/(s_i - tau_i); the constraint
// s_i = tau_i + 1/tau_{i+1} is verified exactly before returning.
inline WeightRatios derive_tau(const ToricSurface& surf, const Rational& c) {
    surf.validate();
    Rational seed_den = Rational(surf.tau_seed[2]) * c + Rational(surf.tau_seed[3]);
    if (seed_den == 0)
        throw std::domain_error("derive_tau: weight denominator vanishes at vertex 1");
    Rational tau1 = (Rational(surf.tau_seed[0]) * c + Rational(surf.tau_seed[1])) / seed_den;
    if (tau1 == 0) throw std::domain_error("derive_tau: weight ratio vanishes at vertex 1");

    WeightRatios r;
    r.tau.push_back(tau1);
    for (int i = 0; i + 1 < surf.k; ++i) {
        Rational gap = Rational(surf.s[static_cast<size_t>(i)]) - r.tau.back();
        if (gap == 0)
            throw std::domain_error("derive_tau: weight difference vanishes at vertex " +
                                    std::to_string(i + 2));
        r.tau.push_back(Rational(1) / gap);
    }
    for (int i = 0; i < surf.k; ++i) {
        const Rational& next = r.tau[static_cast<size_t>((i + 1) % surf.k)];
        if (r.tau[static_cast<size_t>(i)] + Rational(1) / next != Rational(surf.s[static_cast<size_t>(i)]))
            throw std::domain_error("derive_tau: cycle constraint fails at vertex " +
                                    std::to_string(i + 1) + " (torus parameter not generic)");
    }
    return r;
}

// Product formula: Z = prod_i sum_{nu_i} q^{kappa s_i / 2} W_{nu_i, nu_{i-1}}
// ((-1)^{s_i} t_i)^{|nu_i|}, truncated at total edge degree D.
inline NovikovSeries z_product(const ToricSurface& surf, int degree_bound) {
    surf.validate();
    const int k = surf.k;
    NovikovSeries result(surf.edge_variables(), degree_bound);

    std::vector<std::vector<Partition>> choices(static_cast<size_t>(k));
    std::vector<const Partition*> nu(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == k) {
            QCoefficient coef = QCoefficient::one();
            std::vector<int> exps(static_cast<size_t>(k));
            for (int j = 0; j < k; ++j) {
                const Partition& cur = *nu[static_cast<size_t>(j)];
                const Partition& prev = *nu[static_cast<size_t>((j - 1 + k) % k)];
                // q^{kappa s/2} = w^{kappa s} at root order 1; kappa is even.
                coef *= QCoefficient::monomial(
                    1, static_cast<int>(cur.kappa()) * surf.s[static_cast<size_t>(j)]);
                coef *= w_hopf(cur, prev);
                exps[static_cast<size_t>(j)] = cur.weight();
            }
            result.add_term(NovikovKey{std::move(exps), 0}, coef);
            return;
        }
        for (int m = 0; m <= remaining; ++m)
            for (const Partition& p : enumerate_partitions(m)) {
                nu[static_cast<size_t>(i)] = &p;
                self(self, i + 1, remaining - m);
            }
    };
    rec(rec, 0, degree_bound);
    return result.with_edge_signs(surf.s);
}

// Localization pipeline: graph sum with vertex weights z z G_{mu+,mu-}(tau_i)
// and edge weights ((-1)^{s_i} t_i)^{d_e}; the genus parameter is absorbed in q.
inline NovikovSeries z_localization(const ToricSurface& surf, const WeightRatios& ratios,
                                    int degree_bound) {
    surf.validate();
    if (ratios.tau.size() != static_cast<size_t>(surf.k))
        throw std::domain_error("z_localization: ratio arity mismatch");
    for (int i = 0; i < surf.k; ++i) {
        const Rational& next = ratios.tau[static_cast<size_t>((i + 1) % surf.k)];
        if (next == 0 ||
            ratios.tau[static_cast<size_t>(i)] + Rational(1) / next !=
                Rational(surf.s[static_cast<size_t>(i)]))
            throw std::domain_error("z_localization: ratios do not satisfy the cycle constraint");
    }

    const int support = 2 * degree_bound;
    WeightTable wt;
    wt.colors = surf.k;
    if (degree_bound > 0)
        for (int color = 0; color < surf.k; ++color) {
            const Rational& tau = ratios.tau[static_cast<size_t>(color)];
            for (const auto& pair : enumerate_pairs_plus(support)) {
                QCoefficient g = connected_amplitude(pair.plus, pair.minus, tau, support);
                if (g.is_zero()) continue;
                wt.set(color, pair.plus, pair.minus,
                       QCoefficient(Rational(pair.plus.z_factor() * pair.minus.z_factor())) * g);
            }
        }
    EdgeRule er{surf.s};
    return partition_function_graphsum(wt, er, surf.edge_variables(), degree_bound,
                                       /*connected_only=*/false, /*genus_grading=*/false);
}

// Polynomial in the basis Novikov variables; exponents may be negative.
struct ClassSeries {
    std::vector<std::string> variables;
    std::map<std::vector<int>, QCoefficient> terms;

    void add_term(const std::vector<int>& exps, const QCoefficient& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(exps, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

// Convert a series over edge variables to basis homology classes.
inline ClassSeries to_class_series(const ToricSurface& surf, const NovikovSeries& edge_series) {
    ClassSeries out;
    out.variables = surf.variables;
    for (auto& [key, c] : edge_series.terms()) {
        std::vector<int> cls(surf.variables.size(), 0);
        for (int i = 0; i < surf.k; ++i)
            for (size_t j = 0; j < cls.size(); ++j)
                cls[j] += key.exps[static_cast<size_t>(i)] * surf.class_map[static_cast<size_t>(i)][j];
        if (key.lambda != 0)
            throw std::domain_error("to_class_series: series carries a genus grading");
        out.add_term(cls, c);
    }
    return out;
}

namespace detail {

// A nonnegative functional phi with phi(class_i) >= 1 for every edge class;
// bounds the edge-degree preimage of each basis class.
inline std::vector<int> positive_class_functional(const ToricSurface& surf) {
    size_t n = surf.variables.size();
    std::vector<int> phi(n, 0);
    for (int cap = 1; cap <= 4; ++cap) {
        auto rec = [&](auto&& self, size_t i) -> bool {
            if (i == n) {
                for (auto& row : surf.class_map) {
                    int v = 0;
                    for (size_t j = 0; j < n; ++j) v += phi[j] * row[j];
                    if (v < 1) return false;
                }
                return true;
            }
            for (int v = 0; v <= cap; ++v) {
                phi[i] = v;
                if (self(self, i + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0)) return phi;
    }
    throw std::domain_error("gv_extract: no positive degree functional for this surface");
}

}  // namespace detail

using GvTable = std::map<std::pair<std::vector<int>, int>, Integer>;

// Resum F = log Z into integer invariants n_d^g via
// F = sum n_d^g (1/m) (w^m - w^{-m})^{2g-2} t^{m d}, eliminating multi-cover
// contributions in increasing degree. Non-integer residues are an error.
// With `negate`, every basis variable is first sent to its negative.
inline GvTable gv_extract(const ToricSurface& surf, int degree_bound, bool negate = true) {
    NovikovSeries z = z_product(surf, degree_bound);
    ClassSeries f = to_class_series(surf, z.log());

    auto phi = detail::positive_class_functional(surf);
    auto phi_of = [&](const std::vector<int>& cls) {
        int v = 0;
        for (size_t j = 0; j < cls.size(); ++j) v += phi[j] * cls[j];
        return v;
    };

    // A class is complete at this truncation when no edge-degree vector beyond
    // the bound can map to it.
    auto complete = [&](const std::vector<int>& cls) {
        int budget = phi_of(cls);
        std::vector<int> e(static_cast<size_t>(surf.k), 0);
        bool ok = true;
        auto rec = [&](auto&& self, int i, int used) -> void {
            if (!ok) return;
            if (i == surf.k) {
                std::vector<int> mapped(cls.size(), 0);
                for (int ci = 0; ci < surf.k; ++ci)
                    for (size_t j = 0; j < cls.size(); ++j)
                        mapped[j] += e[static_cast<size_t>(ci)] * surf.class_map[static_cast<size_t>(ci)][j];
                if (mapped == cls && used > degree_bound) ok = false;
                return;
            }
            for (int v = 0; used + v <= budget; ++v) {
                e[static_cast<size_t>(i)] = v;
                self(self, i + 1, used + v);
            }
        };
        rec(rec, 0, 0);
        return ok;
    };

    std::vector<std::pair<int, std::vector<int>>> ordered;
    for (auto& [cls, c] : f.terms) ordered.push_back({phi_of(cls), cls});
    std::sort(ordered.begin(), ordered.end());

    const QCoefficient sinh1 =
        QCoefficient::monomial(1, 1) - QCoefficient::monomial(1, -1);  // w - w^{-1}
    GvTable table;
    for (auto& [deg, cls] : ordered) {
        if (!complete(cls)) continue;
        QCoefficient r = f.terms.at(cls);
        if (negate) {
            long total = 0;
            for (int v : cls) total += v;
            if (total % 2) r = -r;
        }
        // Subtract multi-cover contributions of proper divisors.
        for (int m = 2;; ++m) {
            std::vector<int> div(cls.size());
            bool integral = true;
            bool nonzero = false;
            for (size_t j = 0; j < cls.size(); ++j) {
                if (cls[j] % m != 0) {
                    integral = false;
                    break;
                }
                div[j] = cls[j] / m;
                if (div[j] != 0) nonzero = true;
            }
            if (phi_of(cls) / m < 1) break;
            if (!integral || !nonzero) continue;
            QCoefficient sinhm =
                QCoefficient::monomial(1, m) - QCoefficient::monomial(1, -m);
            for (auto& [key, n] : table) {
                if (key.first != div) continue;
                int g = key.second;
                QCoefficient cover = QCoefficient(Rational(n, m)) * sinhm.pow(2 * g - 2);
                r -= cover;
            }
        }
        if (r.is_zero()) continue;
        // Peel off one genus at a time: r (w - w^{-1})^2 = sum_g n^g (w-w^{-1})^{2g}.
        QCoefficient p = r * sinh1 * sinh1;
        if (!p.is_polynomial())
            throw std::domain_error("gv_extract: residue is not a BPS polynomial (convention breakage)");
        for (int g = 0; !p.is_zero(); ++g) {
            if (g > 64) throw std::domain_error("gv_extract: genus peeling does not terminate");
            Rational n = p.as_laurent().eval_at_one();
            if (!is_integer(n))
                throw std::domain_error("gv_extract: non-integer invariant (convention breakage)");
            if (n != 0) table[{cls, g}] = to_integer(n);
            p = (p - QCoefficient(n)) / (sinh1 * sinh1);
            if (!p.is_polynomial())
                throw std::domain_error("gv_extract: genus peeling left a non-polynomial remainder");
        }
    }
    return table;
}

}  // namespace toricgw
