#ifndef MULTIFLAG_CENSUS_HPP
#define MULTIFLAG_CENSUS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "equivalence.hpp"

namespace multiflag {

/*
 * Brute-force finite-field oracle: every configuration over F_q, orbits by
 * explicit GL(n, F_q) action, reconciled against the classification pipeline.
 */
struct CensusReport {
    std::size_t n = 0, m = 0;
    std::int64_t q = 0;
    std::size_t total_configurations = 0;
    std::size_t brute_force_orbits = 0;
    std::size_t pipeline_orbits = 0;
    std::size_t burnside_orbits = 0;
    std::map<PType, std::size_t> per_ptype_orbits;
    bool agreement = false;  // partitions coincide element-by-element
};

namespace detail {

// all points of P^{n-1}(F_q), normalized, in lexicographic order
inline std::vector<std::vector<Fp>> projective_points(std::size_t n, std::int64_t q) {
    std::vector<std::vector<Fp>> out;
    // first nonzero coordinate = 1; coordinates before it are 0
    for (std::size_t lead = 0; lead < n; ++lead) {
        const std::size_t tail = n - lead - 1;
        std::vector<std::int64_t> digits(tail, 0);
        while (true) {
            std::vector<Fp> v;
            for (std::size_t i = 0; i < lead; ++i) v.emplace_back(0, q);
            v.emplace_back(1, q);
            for (std::size_t i = 0; i < tail; ++i) v.emplace_back(digits[i], q);
            out.push_back(std::move(v));
            std::size_t i = 0;
            while (i < tail && ++digits[i] == q) digits[i++] = 0;
            if (i == tail) break;
        }
    }
    return out;
}

// all invertible n x n matrices over F_q, built row by row with rank tracking
inline std::vector<Matrix<Fp>> general_linear_group(std::size_t n, std::int64_t q) {
    std::vector<Matrix<Fp>> out;
    std::vector<std::vector<Fp>> rows;
    std::vector<std::int64_t> digits(n, 0);
    auto next_row = [&](std::vector<std::int64_t>& d) {
        std::size_t i = 0;
        while (i < n && ++d[i] == q) d[i++] = 0;
        return i < n;
    };
    std::function<void()> build = [&]() {
        if (rows.size() == n) {
            out.push_back(Matrix<Fp>::from_rows(rows));
            return;
        }
        std::vector<std::int64_t> d(n, 0);
        do {
            std::vector<Fp> row;
            bool zero = true;
            for (std::size_t i = 0; i < n; ++i) {
                row.emplace_back(d[i], q);
                if (d[i] != 0) zero = false;
            }
            if (zero) continue;
            rows.push_back(row);
            if (rank(Matrix<Fp>::from_rows(rows)) == rows.size()) build();
            rows.pop_back();
        } while (next_row(d));
    };
    build();
    return out;
}

}  // namespace detail

inline std::size_t census_budget(std::size_t n, std::size_t m, std::int64_t q) {
    // |GL(n, q)| * configuration count, the elementary-operation scale
    std::size_t gl = 1;
    std::size_t qn = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= static_cast<std::size_t>(q);
    std::size_t sub = 1;
    for (std::size_t i = 0; i < n; ++i) {
        gl *= qn - sub;
        sub *= static_cast<std::size_t>(q);
    }
    std::size_t points = (qn - 1) / static_cast<std::size_t>(q - 1);
    std::size_t configs = 1;
    for (std::size_t i = 0; i < m; ++i) configs *= points;
    return gl * configs;
}

template <class Key>
std::vector<std::size_t> partition_labels(const std::vector<Key>& keys) {
    std::map<Key, std::size_t> ids;
    std::vector<std::size_t> labels;
    for (const auto& k : keys) labels.push_back(ids.emplace(k, ids.size()).first->second);
    return labels;
}

inline CensusReport run_census(std::size_t n, std::size_t m, std::int64_t q,
                               std::size_t budget = 100000000) {
    if (!is_prime(q)) throw field_error("NonPrimeField", "census needs a prime field");
    if (census_budget(n, m, q) > budget)
        throw field_error("BudgetExceeded", "census size exceeds the configured budget");

    CensusReport rep;
    rep.n = n;
    rep.m = m;
    rep.q = q;

    auto points = detail::projective_points(n, q);
    std::map<std::vector<Fp>, std::size_t> point_id;
    for (std::size_t i = 0; i < points.size(); ++i) point_id[points[i]] = i;
    auto group = detail::general_linear_group(n, q);

    // configurations as index tuples into `points`
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) total *= points.size();
    rep.total_configurations = total;

    auto decode = [&](std::size_t code) {
        std::vector<ProjectivePoint<Fp>> lines;
        for (std::size_t i = 0; i < m; ++i) {
            lines.emplace_back(points[code % points.size()]);
            code /= points.size();
        }
        return Configuration<Fp>(n, std::move(lines));
    };

    // brute-force orbit partition by applying every group element
    detail::UnionFind uf(total);
    // precompute the permutation each g induces on projective points
    for (const auto& g : group) {
        std::vector<std::size_t> perm(points.size());
        for (std::size_t i = 0; i < points.size(); ++i)
            perm[i] = point_id[ProjectivePoint<Fp>(g.apply(points[i])).coords()];
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code, image = 0, mult = 1;
            for (std::size_t i = 0; i < m; ++i) {
                image += perm[c % points.size()] * mult;
                c /= points.size();
                mult *= points.size();
            }
            uf.unite(code, image);
        }
    }
    std::vector<std::size_t> brute_labels(total);
    {
        std::map<std::size_t, std::size_t> roots;
        for (std::size_t code = 0; code < total; ++code)
            brute_labels[code] = roots.emplace(uf.find(code), roots.size()).first->second;
        rep.brute_force_orbits = roots.size();
    }

    // Burnside cross-check: average fixed configurations over the group
    {
        std::size_t fixed_sum = 0;
        for (const auto& g : group) {
            std::size_t fixed_points = 0;
            for (const auto& pt : points)
                if (ProjectivePoint<Fp>(g.apply(pt)).coords() == pt) ++fixed_points;
            std::size_t f = 1;
            for (std::size_t i = 0; i < m; ++i) f *= fixed_points;
            fixed_sum += f;
        }
        rep.burnside_orbits = fixed_sum / group.size();
    }

    // pipeline partition: classification key, then equivalence refinement for
    // classes containing non-generic components
    struct PipelineKey {
        PType ptype;
        std::vector<std::pair<bool, std::vector<std::vector<std::int64_t>>>> comps;
        auto operator<=>(const PipelineKey&) const = default;
    };
    std::vector<PipelineKey> keys(total);
    std::vector<bool> has_nongeneric(total, false);
    for (std::size_t code = 0; code < total; ++code) {
        auto recd = classify(decode(code));
        PipelineKey key;
        key.ptype = recd.ptype;
        for (const auto& comp : recd.components) {
            if (comp.kind != ComponentKind::E) continue;
            std::vector<std::vector<std::int64_t>> qs;
            for (const auto& pt : comp.q) {
                std::vector<std::int64_t> raw;
                for (const auto& x : pt.coords()) raw.push_back(x.value());
                qs.push_back(std::move(raw));
            }
            key.comps.emplace_back(comp.generic, std::move(qs));
            if (!comp.generic) has_nongeneric[code] = true;
        }
        keys[code] = std::move(key);
    }
    std::map<PipelineKey, std::vector<std::size_t>> groups;
    for (std::size_t code = 0; code < total; ++code) groups[keys[code]].push_back(code);

    std::vector<std::size_t> pipeline_labels(total);
    std::size_t next_label = 0;
    std::map<PType, std::size_t> per_ptype;
    for (auto& [key, members] : groups) {
        if (!has_nongeneric[members.front()]) {
            for (auto code : members) pipeline_labels[code] = next_label;
            per_ptype[key.ptype] += 1;
            ++next_label;
            continue;
        }
        // refine by the exact equivalence comparator
        std::vector<std::size_t> reps_of;  // member codes representing classes
        for (auto code : members) {
            bool placed = false;
            for (std::size_t cls = 0; cls < reps_of.size(); ++cls) {
                if (equivalent(decode(reps_of[cls]), decode(code)).equivalent) {
                    pipeline_labels[code] = next_label + cls;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                pipeline_labels[code] = next_label + reps_of.size();
                reps_of.push_back(code);
            }
        }
        per_ptype[key.ptype] += reps_of.size();
        next_label += reps_of.size();
    }
    rep.pipeline_orbits = next_label;
    rep.per_ptype_orbits = std::move(per_ptype);

    // element-by-element partition comparison
    rep.agreement = rep.brute_force_orbits == rep.pipeline_orbits &&
                    rep.brute_force_orbits == rep.burnside_orbits;
    if (rep.agreement) {
        std::map<std::size_t, std::size_t> match;
        for (std::size_t code = 0; code < total; ++code) {
            auto [it, fresh] = match.emplace(brute_labels[code], pipeline_labels[code]);
            if (!fresh && it->second != pipeline_labels[code]) {
                rep.agreement = false;
                break;
            }
        }
    }
    return rep;
}

// number of pipeline classes over F_q whose ptype is p
inline std::size_t fibre_census(const PType& p, std::size_t n, std::int64_t q,
                                std::size_t budget = 100000000) {
    std::size_t m = 0;
    for (const auto& b : p.I) m += b.size();
    for (const auto& b : p.J) m += b.size();
    for (const auto& [b, r] : p.K) m += b.size();
    auto rep = validate(p, n, m);
    if (!rep.ok) throw field_error("InvalidPType", rep.violations.front());
    auto census = run_census(n, m, q, budget);
    PType pc = p;
    pc.canonicalize();
    auto it = census.per_ptype_orbits.find(pc);
    return it == census.per_ptype_orbits.end() ? 0 : it->second;
}

}  // namespace multiflag

#endif
