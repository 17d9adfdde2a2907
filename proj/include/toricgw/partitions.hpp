#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace toricgw {

// Weakly decreasing sequence of positive integers; the empty partition is allowed.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }

    int multiplicity(int k) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
    }

    Partition with_part(int k) const {
        if (k <= 0) throw std::domain_error("Partition: parts must be positive");
        std::vector<int> p = parts_;
        p.insert(std::upper_bound(p.begin(), p.end(), k, std::greater<int>()), k);
        return Partition(std::move(p));
    }

    Partition without_part(int k) const {
        std::vector<int> p = parts_;
        auto it = std::find(p.begin(), p.end(), k);
        if (it == p.end()) throw std::domain_error("Partition: part not present");
        p.erase(it);
        return Partition(std::move(p));
    }

    Partition conjugate() const {
        std::vector<int> cols;
        for (int j = 1; j <= part(0); ++j) {
            int count = 0;
            for (int p : parts_)
                if (p >= j) ++count;
            cols.push_back(count);
        }
        return Partition(std::move(cols));
    }

    // Centralizer order z_mu = prod_k k^{m_k} m_k!.
    Integer z_factor() const {
        Integer z = 1;
        int run = 1;
        for (size_t i = 0; i < parts_.size(); ++i) {
            z *= parts_[i];
            if (i + 1 < parts_.size() && parts_[i + 1] == parts_[i])
                ++run;
            else {
                z *= factorial(run);
                run = 1;
            }
        }
        return z;
    }

    // kappa = sum_j nu_j (nu_j - 2j + 1); always even, antisymmetric under conjugation.
    long kappa() const {
        long k = 0;
        for (int j = 1; j <= length(); ++j) {
            long p = parts_[static_cast<size_t>(j - 1)];
            k += p * (p - 2 * j + 1);
        }
        return k;
    }

    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i)
            if (inner.parts()[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)]) return false;
        return true;
    }

    // Hook lengths of all cells, row-major.
    std::vector<int> hooks() const {
        Partition conj = conjugate();
        std::vector<int> h;
        for (int i = 1; i <= length(); ++i)
            for (int j = 1; j <= part(i - 1); ++j)
                h.push_back(part(i - 1) - j + conj.part(j - 1) - i + 1);
        return h;
    }

    // Merge of two part multisets.
    friend Partition merged(const Partition& a, const Partition& b) {
        std::vector<int> p = a.parts_;
        p.insert(p.end(), b.parts_.begin(), b.parts_.end());
        std::sort(p.begin(), p.end(), std::greater<int>());
        return Partition(std::move(p));
    }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << "]";
        return os.str();
    }

    static Partition parse(const std::string& s) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']')
            throw std::domain_error("Partition: malformed '" + s + "'");
        std::vector<int> parts;
        std::string body = s.substr(1, s.size() - 2);
        std::istringstream is(body);
        std::string item;
        while (std::getline(is, item, ',')) parts.push_back(std::stoi(item));
        return Partition(std::move(parts));
    }

private:
    void validate() const {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
            if (i && parts_[i] > parts_[i - 1])
                throw std::domain_error("Partition: parts must be weakly decreasing");
        }
    }

    std::vector<int> parts_;
};

// All partitions of n, largest-first order: [n], ..., [1,...,1].
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::domain_error("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto ps = enumerate_partitions(m);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

// Ordered pair (mu+, mu-), at most one of which is empty.
struct PartitionPairPlus {
    Partition plus;
    Partition minus;

    PartitionPairPlus(Partition p, Partition m) : plus(std::move(p)), minus(std::move(m)) {
        if (plus.empty() && minus.empty())
            throw std::domain_error("PartitionPairPlus: both partitions empty");
    }

    int total_weight() const { return plus.weight() + minus.weight(); }
    auto operator<=>(const PartitionPairPlus&) const = default;
};

// All pairs with |mu+| + |mu-| <= max_size, excluding the empty pair.
inline std::vector<PartitionPairPlus> enumerate_pairs_plus(int max_size) {
    if (max_size < 1) throw std::domain_error("enumerate_pairs_plus: max_size must be >= 1");
    std::vector<PartitionPairPlus> out;
    for (int total = 1; total <= max_size; ++total)
        for (int a = total; a >= 0; --a)
            for (const Partition& plus : enumerate_partitions(a))
                for (const Partition& minus : enumerate_partitions(total - a))
                    out.emplace_back(plus, minus);
    return out;
}

}  // namespace toricgw
