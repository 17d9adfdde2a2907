#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "graphs.hpp"
#include "novikov.hpp"

namespace toricgw {

// Vertex weights w_{i,(mu+,mu-)}, finitely supported.
struct WeightTable {
    int colors = 2;
    std::map<std::tuple<int, Partition, Partition>, QCoefficient> weights;

    void set(int color, const Partition& plus, const Partition& minus, QCoefficient w) {
        if (color < 0 || color >= colors) throw std::domain_error("WeightTable: color out of range");
        if (plus.empty() && minus.empty())
            throw std::domain_error("WeightTable: the empty pair carries no weight");
        if (w.is_zero())
            weights.erase({color, plus, minus});
        else
            weights[{color, plus, minus}] = std::move(w);
    }

    const QCoefficient* find(int color, const Partition& plus, const Partition& minus) const {
        auto it = weights.find({color, plus, minus});
        return it == weights.end() ? nullptr : &it->second;
    }
};

// Edge scalar base per class: (-1)^{s_i} t_i. All-zero signs give w_e = t_i^{d_e}.
struct EdgeRule {
    std::vector<int> signs;

    static EdgeRule plain(int colors) { return EdgeRule{std::vector<int>(static_cast<size_t>(colors), 0)}; }
};

namespace detail {

struct FeynmanAtom {
    int color;
    Partition plus, minus;
    QCoefficient scalar;  // w / (z_{mu+} z_{mu-})
    int lambda;           // l(mu+) + l(mu-) - 2
    int half_degree;      // |mu+| + |mu-|, in half-units of t
};

}  // namespace detail

// Z as the abnormally ordered vev of prod_i e^{Y_i}, evaluated by expanding the
// exponentials into atom multisets and evolving each word through Fock space.
// The half-integer t-powers of the vertex operators are tracked in doubled
// exponents and must cancel to integers in the result.
inline NovikovSeries partition_function_vev(const WeightTable& wt, const EdgeRule& er,
                                            const std::vector<std::string>& vars, int degree_bound) {
    const int k = wt.colors;
    if (vars.size() != static_cast<size_t>(k) || er.signs.size() != static_cast<size_t>(k))
        throw std::domain_error("partition_function_vev: arity mismatch");

    std::vector<detail::FeynmanAtom> atoms;
    for (auto& [key, w] : wt.weights) {
        auto& [color, plus, minus] = key;
        detail::FeynmanAtom a;
        a.color = color;
        a.plus = plus;
        a.minus = minus;
        a.scalar = w / QCoefficient(Rational(plus.z_factor() * minus.z_factor()));
        a.lambda = plus.length() + minus.length() - 2;
        a.half_degree = plus.weight() + minus.weight();
        atoms.push_back(std::move(a));
    }

    const int budget = 2 * degree_bound;
    NovikovSeries doubled(vars, budget);

    RationalBosonWord word;
    std::vector<int> exps(static_cast<size_t>(k), 0);
    std::map<std::pair<int, int>, int> mode_delta;  // (color, mode) -> excess
    int imbalance = 0;

    auto bump = [&](int color, int mode, int by) {
        auto& d = mode_delta[{color, mode}];
        if (d != 0) --imbalance;
        d += by;
        if (d != 0) ++imbalance;
    };
    auto push_atom = [&](const detail::FeynmanAtom& a) {
        word.append_annihilators(a.color, a.plus, Rational(1));
        word.append_creators((a.color - 1 + k) % k, a.minus, Rational(1));
        for (int p : a.plus.parts()) bump(a.color, p, 1);
        for (int p : a.minus.parts()) bump((a.color - 1 + k) % k, -p, 1);
        exps[static_cast<size_t>(a.color)] += a.plus.weight();
        exps[static_cast<size_t>((a.color - 1 + k) % k)] += a.minus.weight();
    };
    auto pop_atom = [&](const detail::FeynmanAtom& a) {
        word.factors.resize(word.factors.size() - static_cast<size_t>(a.plus.length() + a.minus.length()));
        for (int p : a.plus.parts()) bump(a.color, p, -1);
        for (int p : a.minus.parts()) bump((a.color - 1 + k) % k, -p, -1);
        exps[static_cast<size_t>(a.color)] -= a.plus.weight();
        exps[static_cast<size_t>((a.color - 1 + k) % k)] -= a.minus.weight();
    };

    auto rec = [&](auto&& self, size_t idx, int used, QCoefficient scalar, int lambda) -> void {
        if (idx == atoms.size()) {
            // Modes must balance per color for a nonvanishing vev.
            if (imbalance != 0) return;
            Rational value = word.factors.empty() ? Rational(1)
                                                  : vev(order_abnormally(word), k);
            if (value == 0) return;
            doubled.add_term(NovikovKey{exps, lambda}, scalar * QCoefficient(value));
            return;
        }
        const auto& a = atoms[idx];
        self(self, idx + 1, used, scalar, lambda);
        int pushed = 0;
        QCoefficient power = scalar;
        for (int n = 1; used + n * a.half_degree <= budget; ++n) {
            push_atom(a);
            ++pushed;
            power = power * a.scalar * QCoefficient(Rational(1, n));
            self(self, idx + 1, used + n * a.half_degree, power, lambda + n * a.lambda);
        }
        for (int i = 0; i < pushed; ++i) pop_atom(a);
    };
    rec(rec, 0, 0, QCoefficient::one(), 0);

    return doubled.halved(degree_bound).with_edge_signs(er.signs);
}

// Z (or F, with connected_only) as the graph sum of Theorem 4.1:
// sum over graphs of lambda^{2g-2} prod w_v prod w_e / (|Aut| prod d_e).
inline NovikovSeries partition_function_graphsum(const WeightTable& wt, const EdgeRule& er,
                                                 const std::vector<std::string>& vars,
                                                 int degree_bound, bool connected_only,
                                                 bool genus_grading = true) {
    const int k = wt.colors;
    if (vars.size() != static_cast<size_t>(k) || er.signs.size() != static_cast<size_t>(k))
        throw std::domain_error("partition_function_graphsum: arity mismatch");

    NovikovSeries result(vars, degree_bound);
    if (!connected_only) result += NovikovSeries::one(vars, degree_bound);  // the empty graph

    std::vector<int> d(static_cast<size_t>(k), 0);
    auto process_degree = [&]() {
        for (auto& [graph, aut] : enumerate_graphs(k, d, connected_only)) {
            auto inv = graph_invariants(graph);
            QCoefficient weight = QCoefficient::one();
            bool supported = true;
            for (auto& [atom, n] : inv.profile.counts) {
                const QCoefficient* w = wt.find(atom.color, atom.plus, atom.minus);
                if (!w) {
                    supported = false;
                    break;
                }
                weight *= w->pow(n);
            }
            if (!supported) continue;
            Integer denom = aut;
            for (auto& e : graph.edges) denom *= e.degree;
            weight *= QCoefficient(Rational(1, denom));
            int lam = genus_grading ? 2 * inv.genus - 2 : 0;
            result.add_term(NovikovKey{d, lam}, weight);
        }
    };
    auto iterate = [&](auto&& self, int i, int remaining) -> void {
        if (i == k) {
            for (int x : d)
                if (x > 0) {
                    process_degree();
                    return;
                }
            return;  // zero vector: only the empty graph, added above
        }
        for (int v = 0; v <= remaining; ++v) {
            d[static_cast<size_t>(i)] = v;
            self(self, i + 1, remaining - v);
        }
    };
    iterate(iterate, 0, degree_bound);

    return result.with_edge_signs(er.signs);
}

// F = log Z; equals the connected graph sum on the same inputs.
inline NovikovSeries free_energy(const NovikovSeries& z) { return z.log(); }

}  // namespace toricgw
