#ifndef MULTIFLAG_INVARIANTS_HPP
#define MULTIFLAG_INVARIANTS_HPP

#include <cassert>
#include <cstdint>
#include <set>
#include <vector>

#include "ptype.hpp"

namespace multiflag {

/*
 * Tits form Q(d) = dim GL(V) - dim Fl_d(V), computed definitionally as
 * r^2 - sum_i d_i (r - d_i) and cross-checked against the closed form
 * (2-m)/2 |d|^2 + ||d||^2 / 2.
 */
inline std::int64_t tits_form(const DimensionVector& d) {
    if (d.r < 1) throw field_error("BadDimensionVector", "size must be >= 1");
    const std::int64_t r = static_cast<std::int64_t>(d.r);
    const std::int64_t m = static_cast<std::int64_t>(d.entries.size());
    std::int64_t q = r * r;
    for (int di : d.entries) q -= static_cast<std::int64_t>(di) * (r - di);
    // closed form, doubled to stay in integers
    std::int64_t norm2 = 0;
    for (int di : d.entries) norm2 += static_cast<std::int64_t>(di) * di + (r - di) * (r - di);
    const std::int64_t twice = (2 - m) * r * r + norm2;
    assert(twice % 2 == 0 && twice / 2 == q);
    (void)twice;
    return q;
}

// Q(d(K, r)) = (r - 1)(r - |K| + 1) + 1
inline std::int64_t tits_form_dkr(std::size_t k_size, std::size_t r) {
    if (r < 1) throw field_error("BadDimensionVector", "rank must be >= 1");
    const std::int64_t rr = static_cast<std::int64_t>(r);
    const std::int64_t kk = static_cast<std::int64_t>(k_size);
    return (rr - 1) * (rr - kk + 1) + 1;
}

// dim O = n r(p) - A - B - C
inline std::int64_t orbit_dimension(const PType& p, std::size_t n, std::size_t m) {
    auto rep = validate(p, n, m);
    if (!rep.ok) throw field_error("InvalidPType", rep.violations.front());
    return static_cast<std::int64_t>(n) * static_cast<std::int64_t>(r_of(p)) -
           static_cast<std::int64_t>(p.I.size() + p.J.size() + p.K.size());
}

/*
 * Dimension of {g in Mat_n : g v_i in K v_i for all i}. Each line contributes
 * the linear conditions phi(g v_i) = 0 over a basis of the annihilator of v_i.
 */
template <class K>
std::size_t endomorphism_dim(const Configuration<K>& config) {
    const std::size_t n = config.n();
    const K like = config.line(0).coords()[0].additive_identity();
    std::vector<std::vector<K>> rows;
    for (const auto& line : config.lines()) {
        // annihilator basis: kernel of the 1 x n matrix with row v_i
        auto ann = kernel_basis(Matrix<K>::from_rows({line.coords()}));
        for (const auto& phi : ann) {
            std::vector<K> row(n * n, like.additive_identity());
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t)
                    row[s * n + t] = phi[s] * line.coords()[t];
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return n * n;  // n = 1: every g stabilizes every line
    return n * n - rank(Matrix<K>::from_rows(rows));
}

struct OpenOrbitResult {
    bool exists = false;
    PType witness;  // valid iff exists
};

/*
 * Open orbit iff n + 1 >= m; witness is the singleton I-partition when
 * n >= m, the single J-block when n + 1 = m.
 */
inline OpenOrbitResult has_open_orbit(std::size_t n, std::size_t m) {
    OpenOrbitResult res;
    if (n + 1 < m) return res;
    res.exists = true;
    std::set<int> all;
    for (std::size_t j = 1; j <= m; ++j) all.insert(static_cast<int>(j));
    if (n >= m) {
        for (int j : all) res.witness.I.push_back({j});
    } else {
        res.witness.J.push_back(all);
    }
    assert(orbit_dimension(res.witness, n, m) ==
           static_cast<std::int64_t>(m) * (static_cast<std::int64_t>(n) - 1));
    return res;
}

// finitely many orbits iff m <= 3
inline bool is_finite_type(std::size_t /*n*/, std::size_t m) { return m <= 3; }

/*
 * Block profile of the stabilizer of a representative of any orbit over p.
 */
struct StabilizerShape {
    std::size_t diagonal_scalars;          // A
    std::vector<std::size_t> j_block_sizes;  // |J_b| - 1 each
    std::vector<std::size_t> k_block_sizes;  // r_c each
    std::size_t free_complement;           // n - r(p)
    std::int64_t group_dimension;          // n^2 - dim O
};

inline StabilizerShape stabilizer_shape(const PType& p, std::size_t n, std::size_t m) {
    auto rep = validate(p, n, m);
    if (!rep.ok) throw field_error("InvalidPType", rep.violations.front());
    StabilizerShape s;
    s.diagonal_scalars = p.I.size();
    for (const auto& j : p.J) s.j_block_sizes.push_back(j.size() - 1);
    for (const auto& [k, r] : p.K) s.k_block_sizes.push_back(r);
    s.free_complement = n - r_of(p);
    s.group_dimension = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n) -
                        orbit_dimension(p, n, m);
    return s;
}

}  // namespace multiflag

#endif
