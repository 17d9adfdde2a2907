#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partitions.hpp"

namespace toricgw {

namespace detail {

inline Partition partition_from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    int L = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int j = 0; j < L; ++j) {
        int p = betas[static_cast<size_t>(j)] - (L - 1 - j);
        if (p < 0) throw std::logic_error("partition_from_betas: invalid beta set");
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

inline Integer character_rec(const Partition& nu, const Partition& mu,
                             std::map<std::pair<Partition, Partition>, Integer>& memo) {
    if (nu.empty()) return 1;
    auto key = std::make_pair(nu, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Strip a border strip of the largest part of mu, via beta numbers.
    int r = mu.parts().front();
    Partition rest = mu.without_part(r);
    int L = nu.length();
    std::vector<int> betas(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) betas[static_cast<size_t>(i)] = nu.part(i) + (L - 1 - i);

    Integer total = 0;
    for (int i = 0; i < L; ++i) {
        int b = betas[static_cast<size_t>(i)];
        int target = b - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            int bj = betas[static_cast<size_t>(j)];
            if (bj == target) occupied = true;
            if (bj > target && bj < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> next = betas;
        next[static_cast<size_t>(i)] = target;
        Integer sub = character_rec(partition_from_betas(std::move(next)), rest, memo);
        total += (height % 2) ? -sub : sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

// Irreducible S_n character chi_nu evaluated on the conjugacy class mu,
// by the Murnaghan-Nakayama recursion with a shared memo table.
inline Integer character(const Partition& nu, const Partition& mu) {
    if (nu.weight() != mu.weight())
        throw std::domain_error("character: |nu| != |mu|");
    static std::map<std::pair<Partition, Partition>, Integer> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return detail::character_rec(nu, mu, memo);
}

// sum_mu chi_nu(mu) chi_rho(mu) / z_mu - delta_{nu,rho}; zero by orthogonality.
inline Rational orthogonality_defect(const Partition& nu, const Partition& rho) {
    if (nu.weight() != rho.weight())
        throw std::domain_error("orthogonality_defect: |nu| != |rho|");
    Rational sum = 0;
    for (const Partition& mu : enumerate_partitions(nu.weight()))
        sum += Rational(character(nu, mu) * character(rho, mu), mu.z_factor());
    if (nu == rho) sum -= 1;
    return sum;
}

// (-1)^{|mu| - l(mu)}, the sign of any permutation of cycle type mu.
inline int class_sign(const Partition& mu) {
    return ((mu.weight() - mu.length()) % 2) ? -1 : 1;
}

}  // namespace toricgw
