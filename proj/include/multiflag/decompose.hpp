#ifndef MULTIFLAG_DECOMPOSE_HPP
#define MULTIFLAG_DECOMPOSE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "ptype.hpp"

namespace multiflag {

enum class ComponentKind { F, D, E };

/*
 * One indecomposable summand of a configuration: its index set (1-based),
 * rank, and for E-components the genericity flag and moduli points.
 */
template <class K>
struct Component {
    ComponentKind kind;
    std::set<int> indices;
    std::size_t rank;
    bool generic = true;                   // meaningful for E only
    std::vector<ProjectivePoint<K>> q;     // present iff kind == E and generic
};

template <class K>
struct ClassificationRecord {
    PType ptype;
    std::size_t free_multiplicity;
    std::vector<Component<K>> components;
    std::size_t n, m;
};

namespace detail {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/*
 * Connected components of the linear matroid on the line vectors, via the
 * fundamental-circuit graph over the greedy leftmost basis. Returned as
 * 1-based index sets sorted by minimum element.
 */
template <class K>
std::vector<std::set<int>> matroid_components(const Configuration<K>& config) {
    std::vector<std::vector<K>> vectors;
    for (const auto& l : config.lines()) vectors.push_back(l.coords());
    auto fc = fundamental_circuits(vectors);
    detail::UnionFind uf(config.m());
    for (const auto& c : fc.circuits)
        for (std::size_t b : c.support) uf.unite(c.index, b);
    std::map<std::size_t, std::set<int>> groups;
    for (std::size_t i = 0; i < config.m(); ++i)
        groups[uf.find(i)].insert(static_cast<int>(i) + 1);
    std::vector<std::set<int>> out;
    for (auto& [root, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    return out;
}

namespace detail {

// coordinates of the component's lines in a basis of their span
template <class K>
std::vector<std::vector<K>> restrict_to_span(const Configuration<K>& config,
                                             const std::set<int>& indices) {
    std::vector<std::vector<K>> vectors;
    for (int i : indices) vectors.push_back(config.line(static_cast<std::size_t>(i) - 1).coords());
    auto fc = fundamental_circuits(vectors);
    std::vector<std::vector<K>> basis;
    for (std::size_t b : fc.basis) basis.push_back(vectors[b]);
    auto basis_mat = Matrix<K>::from_columns(basis);
    std::vector<std::vector<K>> out;
    for (const auto& v : vectors) {
        auto x = solve(basis_mat, v);
        if (!x) throw field_error("NotSpanning", "component vector outside its span");
        out.push_back(std::move(*x));
    }
    return out;
}

template <class K>
bool in_general_position(const std::vector<std::vector<K>>& vectors, std::size_t r) {
    // every r-subset of the given vectors independent in K^r
    std::vector<std::size_t> idx(vectors.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<bool> pick(vectors.size(), false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(r), pick.end(), true);
    do {
        std::vector<std::vector<K>> sub;
        for (std::size_t i = 0; i < vectors.size(); ++i)
            if (pick[i]) sub.push_back(vectors[i]);
        if (rank(Matrix<K>::from_columns(sub)) != r) return false;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return true;
}

}  // namespace detail

/*
 * Classify one connected component. The kind follows from (rank, size); for
 * E-components the moduli are extracted by the normal-form map: solve
 * sum lambda_h v_{k_h} = v_{k_{r+1}} over the first r anchors, form g with
 * columns lambda_h v_{k_h}, and read off q^(h) = g^{-1} v_{k_h} for h >= r+2.
 */
template <class K>
Component<K> classify_component(const Configuration<K>& config, const std::set<int>& indices) {
    auto coords = detail::restrict_to_span(config, indices);
    const std::size_t k = indices.size();
    const std::size_t r = coords[0].size();
    Component<K> comp;
    comp.indices = indices;
    comp.rank = r;
    if (r == 1) {
        comp.kind = ComponentKind::F;
        return comp;
    }
    std::vector<std::vector<K>> anchors(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(r + 1));
    if (k == r + 1) {
        comp.kind = ComponentKind::D;
        // forced by connectivity of the component; a failure here is a bug
        if (!detail::in_general_position(anchors, r))
            throw field_error("InternalError", "D-component anchors not in general position");
        return comp;
    }
    comp.kind = ComponentKind::E;
    // general position of the r+1 anchors == first r independent and the
    // expansion of the (r+1)-th has no zero coefficient
    std::vector<std::vector<K>> first_r(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(r));
    auto anchor_mat = Matrix<K>::from_columns(first_r);
    if (rank(anchor_mat) != r) {
        comp.generic = false;
        return comp;
    }
    auto lambda = solve(anchor_mat, coords[r]);
    for (const auto& l : *lambda)
        if (l.is_zero()) {
            comp.generic = false;
            return comp;
        }
    // g has columns lambda_h v_{k_h}; q^(h) = g^{-1} v_{k_h}
    std::vector<std::vector<K>> gcols;
    for (std::size_t h = 0; h < r; ++h) {
        std::vector<K> col = first_r[h];
        for (auto& x : col) x = x * (*lambda)[h];
        gcols.push_back(std::move(col));
    }
    auto g = Matrix<K>::from_columns(gcols);
    for (std::size_t h = r + 1; h < k; ++h) {
        auto x = solve(g, coords[h]);
        comp.q.emplace_back(std::move(*x));
    }
    return comp;
}

template <class K>
ClassificationRecord<K> classify(const Configuration<K>& config) {
    ClassificationRecord<K> rec;
    rec.n = config.n();
    rec.m = config.m();
    std::size_t total_rank = 0;
    for (const auto& part : matroid_components(config)) {
        auto comp = classify_component(config, part);
        total_rank += comp.rank;
        switch (comp.kind) {
            case ComponentKind::F: rec.ptype.I.push_back(comp.indices); break;
            case ComponentKind::D: rec.ptype.J.push_back(comp.indices); break;
            case ComponentKind::E: rec.ptype.K.emplace_back(comp.indices, comp.rank); break;
        }
        rec.components.push_back(std::move(comp));
    }
    rec.ptype.canonicalize();
    rec.free_multiplicity = config.n() - total_rank;
    auto rep = validate(rec.ptype, config.n(), config.m());
    if (!rep.ok) throw field_error("InternalError", "classification produced invalid ptype");
    return rec;
}

/*
 * classify(build_representative(p, q, n)) must reproduce (p, q) exactly.
 */
template <class K>
bool round_trip_check(const PType& p, const std::vector<std::vector<ProjectivePoint<K>>>& q,
                      std::size_t n, std::size_t m, const K& like) {
    auto config = build_representative(p, q, n, m, like);
    auto rec = classify(config);
    PType pc = p;
    pc.canonicalize();
    if (rec.ptype != pc) return false;
    std::size_t c = 0;
    for (const auto& comp : rec.components) {
        if (comp.kind != ComponentKind::E) continue;
        // E-components come back in canonical block order
        std::size_t block = 0;
        while (block < pc.K.size() && pc.K[block].first != comp.indices) ++block;
        if (block == pc.K.size()) return false;
        if (!comp.generic || comp.q != q[block]) return false;
        ++c;
    }
    return c == pc.K.size();
}

}  // namespace multiflag

#endif
