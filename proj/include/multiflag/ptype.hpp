#ifndef MULTIFLAG_PTYPE_HPP
#define MULTIFLAG_PTYPE_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "model.hpp"

namespace multiflag {

/*
 * An element of the combinatorial index set P_{n,m}: three families of index
 * blocks partitioning {1..m}. I-blocks are coincident-line summands, J-blocks
 * rigid general-position summands, (K, r)-blocks summands carrying moduli.
 * Blocks are stored sorted by minimum element within each family.
 */
struct PType {
    std::vector<std::set<int>> I;
    std::vector<std::set<int>> J;
    std::vector<std::pair<std::set<int>, std::size_t>> K;  // (indices, rank)

    void canonicalize() {
        auto by_min = [](const std::set<int>& a, const std::set<int>& b) {
            return *a.begin() < *b.begin();
        };
        std::sort(I.begin(), I.end(), by_min);
        std::sort(J.begin(), J.end(), by_min);
        std::sort(K.begin(), K.end(),
                  [](const auto& a, const auto& b) { return *a.first.begin() < *b.first.begin(); });
    }

    auto operator<=>(const PType&) const = default;
};

// r(p) = A + sum(|J_b| - 1) + sum(r_c)
inline std::size_t r_of(const PType& p) {
    std::size_t r = p.I.size();
    for (const auto& j : p.J) r += j.size() - 1;
    for (const auto& [k, rk] : p.K) r += rk;
    return r;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/*
 * The three defining conditions: the blocks partition {1..m}, the per-family
 * size bounds hold, and 0 <= r(p) <= n.
 */
inline ValidationReport validate(const PType& p, std::size_t n, std::size_t m) {
    ValidationReport rep;
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        rep.violations.push_back(why);
    };
    std::multiset<int> all;
    for (const auto& b : p.I) {
        if (b.empty()) fail("empty I-block");
        all.insert(b.begin(), b.end());
    }
    for (const auto& b : p.J) {
        if (b.size() < 3) fail("J-block smaller than 3");
        all.insert(b.begin(), b.end());
    }
    for (const auto& [b, r] : p.K) {
        if (!(4 <= r + 2 && r + 2 <= b.size())) fail("K-block violates 4 <= r+2 <= |K|");
        all.insert(b.begin(), b.end());
    }
    std::multiset<int> want;
    for (std::size_t i = 1; i <= m; ++i) want.insert(static_cast<int>(i));
    if (all != want) fail("blocks do not partition {1..m}");
    if (rep.ok && r_of(p) > n) fail("r(p) exceeds n");
    return rep;
}

/*
 * d(K, r) is indecomposable iff r = 1, or r = |K|-1 with |K| >= 3, or
 * 2 <= r <= |K|-2.
 */
inline bool is_indecomposable_dimvec(const DimensionVector& d) {
    const std::size_t k = d.support().size();
    if (d.r == 1) return true;
    if (k >= 3 && d.r == k - 1) return true;
    if (k >= 4 && 2 <= d.r && d.r + 2 <= k) return true;
    return false;
}

/*
 * All elements of P_{n,m}, in a deterministic order: iterate set partitions of
 * {1..m} via restricted growth strings, assign each block to a family (I any
 * size, J size >= 3, K with each rank r in [2, size-2]), filter by r(p) <= n,
 * then sort.
 */
inline std::vector<PType> enumerate_ptypes(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) throw field_error("BadDimension", "need n >= 1, m >= 1");
    std::vector<PType> out;

    std::vector<int> rgs(m, 0);
    auto emit_partition = [&](const std::vector<std::set<int>>& blocks) {
        // per-block choices: 0 = I, 1 = J, 2+k = K with rank 2+k
        struct Choice { int family; std::size_t rank; };
        std::vector<std::vector<Choice>> options(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            options[b].push_back({0, 1});
            if (blocks[b].size() >= 3) options[b].push_back({1, blocks[b].size() - 1});
            if (blocks[b].size() >= 4)
                for (std::size_t r = 2; r + 2 <= blocks[b].size(); ++r)
                    options[b].push_back({2, r});
        }
        std::vector<std::size_t> pick(blocks.size(), 0);
        while (true) {
            PType p;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                const Choice& c = options[b][pick[b]];
                if (c.family == 0) p.I.push_back(blocks[b]);
                else if (c.family == 1) p.J.push_back(blocks[b]);
                else p.K.emplace_back(blocks[b], c.rank);
            }
            if (r_of(p) <= n) {
                p.canonicalize();
                out.push_back(std::move(p));
            }
            std::size_t b = 0;
            while (b < blocks.size() && ++pick[b] == options[b].size()) pick[b++] = 0;
            if (b == blocks.size()) break;
        }
    };

    // restricted growth strings enumerate set partitions exactly once
    while (true) {
        std::vector<std::set<int>> blocks;
        for (std::size_t i = 0; i < m; ++i) {
            if (static_cast<std::size_t>(rgs[i]) == blocks.size()) blocks.emplace_back();
            blocks[static_cast<std::size_t>(rgs[i])].insert(static_cast<int>(i) + 1);
        }
        emit_partition(blocks);

        std::size_t i = m - 1;
        while (i > 0) {
            int maxprefix = 0;
            for (std::size_t j = 0; j < i; ++j) maxprefix = std::max(maxprefix, rgs[j]);
            if (rgs[i] <= maxprefix) { ++rgs[i]; break; }
            rgs[i] = 0;
            --i;
        }
        if (i == 0) break;
        for (std::size_t j = i + 1; j < m; ++j) rgs[j] = 0;
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/*
 * Element of M_a: multiplicities of indecomposable dimension vectors summing
 * to a_{n,m} = (n; 1^m).
 */
struct MultiplicityVector {
    std::size_t n = 0, m = 0;
    std::map<DimensionVector, std::size_t> counts;  // positive counts only
};

inline MultiplicityVector to_multiplicity_vector(const PType& p, std::size_t n, std::size_t m) {
    auto rep = validate(p, n, m);
    if (!rep.ok) throw field_error("InvalidPType", rep.violations.front());
    MultiplicityVector mv;
    mv.n = n;
    mv.m = m;
    for (const auto& b : p.I) mv.counts[DimensionVector::of_support(b, 1, m)] += 1;
    for (const auto& b : p.J) mv.counts[DimensionVector::of_support(b, b.size() - 1, m)] += 1;
    for (const auto& [b, r] : p.K) mv.counts[DimensionVector::of_support(b, r, m)] += 1;
    const std::size_t free = n - r_of(p);
    if (free > 0) mv.counts[DimensionVector::of_support({}, 1, m)] = free;
    return mv;
}

inline PType from_multiplicity_vector(const MultiplicityVector& mv) {
    PType p;
    for (const auto& [d, count] : mv.counts) {
        if (!is_indecomposable_dimvec(d))
            throw field_error("NotRealizable", "key is not an indecomposable dimension vector");
        auto k = d.support();
        if (k.empty()) continue;  // free summands, recovered from r(p)
        if (count != 1)
            throw field_error("NotRealizable", "multiplicity > 1 on a supported dimension vector");
        if (d.r == 1) p.I.push_back(k);
        else if (d.r == k.size() - 1) p.J.push_back(k);
        else p.K.emplace_back(k, d.r);
    }
    p.canonicalize();
    auto rep = validate(p, mv.n, mv.m);
    if (!rep.ok) throw field_error("NotRealizable", rep.violations.front());
    // the free multiplicity must reproduce n - r(p)
    auto it = mv.counts.find(DimensionVector::of_support({}, 1, mv.m));
    const std::size_t free = it == mv.counts.end() ? 0 : it->second;
    if (free != mv.n - r_of(p))
        throw field_error("NotRealizable", "free multiplicity does not match n - r(p)");
    return p;
}

/*
 * F(p, q): direct sum of n - r(p) free summands, then all F(I_a), D(J_b),
 * E(K_c, r_c, q_c), each family in canonical block order. The free copies
 * occupy the leading coordinates.
 */
template <class K>
Configuration<K> build_representative(const PType& p,
                                      const std::vector<std::vector<ProjectivePoint<K>>>& q,
                                      std::size_t n, std::size_t m, const K& like) {
    auto rep = validate(p, n, m);
    if (!rep.ok) throw field_error("InvalidPType", rep.violations.front());
    if (q.size() != p.K.size())
        throw field_error("ModuliShapeMismatch", "one moduli sequence per K-block required");
    PType pc = p;
    pc.canonicalize();
    TupleFlag<K> acc(0, std::vector<std::optional<ProjectivePoint<K>>>(m));
    for (std::size_t i = r_of(pc); i < n; ++i)
        acc = direct_sum(acc, build_F(std::set<int>{}, m, like));
    for (const auto& b : pc.I) acc = direct_sum(acc, build_F(b, m, like));
    for (const auto& b : pc.J) acc = direct_sum(acc, build_D(b, m, like));
    for (std::size_t c = 0; c < pc.K.size(); ++c)
        acc = direct_sum(acc, build_E(pc.K[c].first, pc.K[c].second, q[c], m, like));
    return acc.to_configuration();
}

}  // namespace multiflag

#endif
