#ifndef MULTIFLAG_EQUIVALENCE_HPP
#define MULTIFLAG_EQUIVALENCE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <type_traits>
#include <vector>

#include "decompose.hpp"

namespace multiflag {

template <class K>
struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Matrix<K>> witness;  // invertible T with T v_i ~ w_i for all i
};

namespace detail {

template <class K>
bool all_nonzero(const std::vector<K>& v) {
    return std::all_of(v.begin(), v.end(), [](const K& x) { return !x.is_zero(); });
}

/*
 * A point of the kernel space accepted by `good`, or nullopt. Over the
 * rationals, points (1, t, t^2, ...) in basis coordinates sweep a curve that
 * meets the complement of any proper closed condition for some small t; over
 * a prime field all coefficient tuples are exhausted.
 */
template <class K, class Pred>
std::optional<std::vector<K>> search_solution(const std::vector<std::vector<K>>& basis,
                                              const K& like, Pred good) {
    if (basis.empty()) return std::nullopt;
    const std::size_t dim = basis[0].size();
    if constexpr (std::is_same_v<K, Fp>) {
        const std::int64_t p = like.prime();
        std::vector<std::int64_t> coeff(basis.size(), 0);
        while (true) {
            std::size_t i = 0;
            while (i < coeff.size() && ++coeff[i] == p) coeff[i++] = 0;
            if (i == coeff.size()) return std::nullopt;
            std::vector<K> v(dim, like.additive_identity());
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (coeff[b] == 0) continue;
                Fp c(coeff[b], p);
                for (std::size_t j = 0; j < dim; ++j) v[j] = v[j] + c * basis[b][j];
            }
            if (good(v)) return v;
        }
    } else {
        if (basis.size() == 1) {
            if (good(basis[0])) return basis[0];
            return std::nullopt;
        }
        const long bound = static_cast<long>(dim * basis.size()) + 16;
        for (long t = 1; t <= bound; ++t) {
            std::vector<K> v(dim, like.additive_identity());
            K scale = like.multiplicative_identity();
            const K tk = like.multiplicative_identity() * K(t);
            for (const auto& b : basis) {
                for (std::size_t j = 0; j < dim; ++j) v[j] = v[j] + scale * b[j];
                scale = scale * tk;
            }
            if (good(v)) return v;
        }
        return std::nullopt;
    }
}

}  // namespace detail

/*
 * Exact diag(GL(n))-orbit membership test with witness. Classification is
 * compared first; within a stratum each matched component yields a
 * homogeneous linear system in scalars (lambda_b per basis line, mu_j per
 * circuit) whose all-nonzero invertible solutions are exactly the component
 * isomorphisms.
 */
template <class K>
EquivalenceResult<K> equivalent(const Configuration<K>& a, const Configuration<K>& b) {
    if (a.n() != b.n() || a.m() != b.m())
        throw field_error("ShapeMismatch", "configurations differ in (n, m)");
    EquivalenceResult<K> result;
    auto ra = classify(a);
    auto rb = classify(b);
    if (ra.ptype != rb.ptype) return result;

    const K like = a.line(0).coords()[0].additive_identity();
    const std::size_t n = a.n();
    std::vector<std::vector<K>> domain_basis, image_basis;

    for (const auto& part : matroid_components(a)) {
        std::vector<std::vector<K>> va, vb;
        for (int i : part) {
            va.push_back(a.line(static_cast<std::size_t>(i) - 1).coords());
            vb.push_back(b.line(static_cast<std::size_t>(i) - 1).coords());
        }
        auto fc = fundamental_circuits(va);
        const std::size_t r = fc.basis.size();
        if (rank(Matrix<K>::from_columns(vb)) != r) return result;
        if (fc.circuits.empty()) {
            // independent lines: any nonzero scaling works
            for (std::size_t t = 0; t < r; ++t) {
                domain_basis.push_back(va[fc.basis[t]]);
                image_basis.push_back(vb[fc.basis[t]]);
            }
            continue;
        }
        std::map<std::size_t, std::size_t> lambda_slot;
        for (std::size_t t = 0; t < fc.basis.size(); ++t) lambda_slot[fc.basis[t]] = t;
        const std::size_t unknowns = r + fc.circuits.size();
        std::vector<std::vector<K>> rows;
        for (std::size_t ci = 0; ci < fc.circuits.size(); ++ci) {
            const auto& c = fc.circuits[ci];
            for (std::size_t coord = 0; coord < n; ++coord) {
                std::vector<K> row(unknowns, like.additive_identity());
                for (std::size_t s = 0; s < c.support.size(); ++s)
                    row[lambda_slot[c.support[s]]] = c.coefficients[s] * vb[c.support[s]][coord];
                row[r + ci] = -vb[c.index][coord];
                rows.push_back(std::move(row));
            }
        }
        auto kernel = kernel_basis(Matrix<K>::from_rows(rows));
        auto good = [&](const std::vector<K>& sol) {
            if (!detail::all_nonzero(sol)) return false;
            std::vector<std::vector<K>> imgs;
            for (std::size_t t = 0; t < r; ++t) {
                std::vector<K> img = vb[fc.basis[t]];
                for (auto& x : img) x = x * sol[t];
                imgs.push_back(std::move(img));
            }
            return rank(Matrix<K>::from_columns(imgs)) == r;
        };
        auto sol = detail::search_solution(kernel, like, good);
        if (!sol) return result;
        for (std::size_t t = 0; t < r; ++t) {
            domain_basis.push_back(va[fc.basis[t]]);
            std::vector<K> img = vb[fc.basis[t]];
            for (auto& x : img) x = x * (*sol)[t];
            image_basis.push_back(std::move(img));
        }
    }

    // extend both sides to full bases with standard vectors (greedy)
    auto extend = [&](std::vector<std::vector<K>>& basis) {
        for (std::size_t e = 0; e < n && basis.size() < n; ++e) {
            std::vector<K> unit(n, like.additive_identity());
            unit[e] = like.multiplicative_identity();
            auto trial = basis;
            trial.push_back(unit);
            if (rank(Matrix<K>::from_columns(trial)) == trial.size()) basis.push_back(std::move(unit));
        }
    };
    extend(domain_basis);
    extend(image_basis);

    // T = image_basis_matrix * domain_basis_matrix^{-1}
    auto dm = Matrix<K>::from_columns(domain_basis);
    auto im = Matrix<K>::from_columns(image_basis);
    Matrix<K> t = im * rref(dm).transform;

    // verify exactly: normalize(T v_i) == w_i for all i
    for (std::size_t i = 0; i < a.m(); ++i)
        if (ProjectivePoint<K>(t.apply(a.line(i).coords())) != b.line(i))
            throw field_error("InternalError", "witness fails verification");
    result.equivalent = true;
    result.witness = std::move(t);
    return result;
}

}  // namespace multiflag

#endif
